#include "doctest.h"
#include "ladder/exact/rfunc.hpp"

#include <random>

using namespace ladder::exact;

namespace {

struct Fixture {
  Symbols syms = make_symbols({"x", "y", "z"});
  MPoly x = MPoly::variable(syms, "x");
  MPoly y = MPoly::variable(syms, "y");
  MPoly z = MPoly::variable(syms, "z");
  MPoly c(long v) const { return MPoly(syms, Rat(v)); }
};

Rat big_rat(std::mt19937_64& rng) {
  // Up to 256-bit numerators.
  mpz_class n = 0;
  int words = 1 + int(rng() % 4);
  for (int i = 0; i < words; ++i) n = (n << 64) + mpz_class(std::to_string(rng()));
  if (rng() % 2) n = -n;
  mpz_class d = 1 + rng() % 1000;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

MPoly random_poly(const Fixture& f, std::mt19937_64& rng, int terms, int maxdeg, bool big) {
  std::vector<MPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < 3; ++v) m.exp[v] = static_cast<std::uint8_t>(rng() % (maxdeg + 1));
    Rat c = big ? big_rat(rng) : rat(long(rng() % 11) - 5, 1 + long(rng() % 3));
    ts.emplace_back(m, c);
  }
  return MPoly(f.syms, ts);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/6") == rat(1, 2));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK(to_string(rat(-6, 4)) == "-3/2");
  CHECK(to_string(Rat(0)) == "0");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
  CHECK_THROWS(parse_rat("1/-2"));
}

TEST_CASE("pochhammer examples") {
  Fixture f;
  CHECK(pochhammer(f.x, 0) == f.c(1));
  CHECK(pochhammer(f.x, 3) == f.x.pow(3) + f.c(3) * f.x.pow(2) + f.c(2) * f.x);
  CHECK(pochhammer(-f.x, 2) == f.x.pow(2) - f.x);
  CHECK(pochhammer(-f.x, 2) == pochhammer(f.x - f.c(1), 2));
}

TEST_CASE("exact division") {
  Fixture f;
  CHECK(exact_div(f.x * f.x - f.c(1), f.x - f.c(1)) == f.x + f.c(1));
  CHECK_THROWS_AS(exact_div(f.x * f.x - f.c(1), f.x + f.c(2)), NotDivisible);
  MPoly a = (f.x + f.y) * (f.x - f.z + f.c(3)) * (f.y * f.z - f.c(2));
  CHECK(exact_div(a, f.x - f.z + f.c(3)) == (f.x + f.y) * (f.y * f.z - f.c(2)));
}

TEST_CASE("even part") {
  Fixture f;
  CHECK(even_part_in(f.x.pow(4) + f.c(2) * f.x.pow(2), 0) == f.x.pow(2) + f.c(2) * f.x);
  CHECK_THROWS_AS(even_part_in(f.x.pow(3), 0), NotEven);
}

TEST_CASE("gcd") {
  Fixture f;
  MPoly g = f.x * f.y + f.z - f.c(1);
  MPoly a = g * (f.x + f.c(2)) * (f.y - f.z);
  MPoly b = g * (f.x * f.x + f.y) * (f.y - f.z);
  MPoly expect = (g * (f.y - f.z)).monic();
  CHECK(gcd(a, b) == expect);
  CHECK(gcd(f.x + f.c(1), f.x + f.c(2)) == f.c(1));
  CHECK(gcd(MPoly(f.syms), f.c(3) * f.x) == f.x);
  // Mixed variable sets.
  CHECK(gcd((f.x + f.c(1)) * f.y, (f.x + f.c(1)) * (f.x - f.c(1))) == f.x + f.c(1));
}

TEST_CASE("rational functions normalize") {
  Fixture f;
  RFunc r(f.c(2) * (f.x * f.x - f.c(1)), f.c(4) * (f.x - f.c(1)));
  CHECK(r.den() == f.c(1));
  CHECK(r.num() == (f.x + f.c(1)) * rat(1, 2));
  RFunc s(f.x, f.x + f.y);
  RFunc t = s + RFunc(f.y, f.x + f.y);
  CHECK(t == RFunc(f.c(1)));
  CHECK((s * RFunc(f.x + f.y, f.x)) == RFunc(f.c(1)));
  CHECK(RFunc(t.num(), t.den()) == t);
  CHECK(s.shifted(0, Rat(1)) == RFunc(f.x + f.c(1), f.x + f.y + f.c(1)));
}

TEST_CASE("serialization round trip") {
  Fixture f;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    MPoly p = random_poly(f, rng, 6, 4, true);
    CHECK(MPoly::parse(f.syms, p.serialize()) == p);
    MPoly d = random_poly(f, rng, 3, 2, false);
    if (d.is_zero()) continue;
    RFunc r(p, d);
    CHECK(RFunc::parse(f.syms, r.serialize()) == r);
  }
  CHECK(MPoly::parse(f.syms, "") == MPoly(f.syms));
  CHECK_THROWS(MPoly::parse(f.syms, "1,2:3"));
  CHECK_THROWS(MPoly::parse(f.syms, "1,2,3"));
}

TEST_CASE("ring axioms on random triples") {
  Fixture f;
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    MPoly a = random_poly(f, rng, 4, 3, true);
    MPoly b = random_poly(f, rng, 4, 3, true);
    MPoly c = random_poly(f, rng, 3, 2, true);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE(a - a == MPoly(f.syms));
  }
}

TEST_CASE("rational function normalization is idempotent and equality is cross-multiplication") {
  Fixture f;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    MPoly g = random_poly(f, rng, 2, 1, false);
    MPoly a = random_poly(f, rng, 3, 2, false), b = random_poly(f, rng, 2, 2, false);
    if (g.is_zero() || b.is_zero()) continue;
    RFunc r(a * g, b * g);
    RFunc r2(r.num(), r.den());
    REQUIRE(r == r2);
    RFunc plain(a, b);
    REQUIRE(r == plain);
    REQUIRE(r.num() * b == a * r.den());
  }
}

TEST_CASE("pochhammer identities") {
  Fixture f;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    unsigned q = rng() % 5, r = rng() % 5;
    MPoly base = f.x + MPoly(f.syms, rat(long(rng() % 7) - 3, 1 + long(rng() % 3)));
    REQUIRE(pochhammer(base, q + r) == pochhammer(base, q) * pochhammer(base + MPoly(f.syms, Rat(q)), r));
  }
  for (unsigned q = 0; q <= 8; ++q) {
    MPoly lhs = pochhammer(-f.x, q);
    MPoly rhs = pochhammer(f.x - f.c(q) + f.c(1), q) * Rat(q % 2 ? -1 : 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("even part inverts squaring") {
  Fixture f;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    MPoly r = random_poly(f, rng, 4, 3, false);
    MPoly p = r.substitute(0, f.x * f.x);
    REQUIRE(even_part_in(p, 0) == r);
  }
}

TEST_CASE("gcd on random products") {
  Fixture f;
  std::mt19937_64 rng(123);
  for (int i = 0; i < 300; ++i) {
    MPoly g = random_poly(f, rng, 2, 2, false);
    MPoly a = random_poly(f, rng, 3, 2, false), b = random_poly(f, rng, 3, 2, false);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    MPoly G = gcd(a * g, b * g);
    REQUIRE(try_exact_div(a * g, G).has_value());
    REQUIRE(try_exact_div(b * g, G).has_value());
    REQUIRE(try_exact_div(G, g).has_value());
    REQUIRE(G == gcd(b * g, a * g));
  }
}
