#include "doctest.h"
#include "ladder/shift/shiftop.hpp"

#include <random>

using namespace ladder::shift;
using ladder::exact::make_symbols;
using ladder::exact::rat;

namespace {

struct Ops {
  Symbols syms = make_symbols({"s", "a"});
  MPoly s = MPoly::variable(syms, "s");
  MPoly a = MPoly::variable(syms, "a");
  MPoly c(long v) const { return MPoly(syms, Rat(v)); }
  ShiftOp T(int m = 1) const { return ShiftOp::single(syms, 0, m, RFunc(c(1))); }
  ShiftOp diag(const RFunc& f) const { return ShiftOp::diagonal(syms, 0, f); }
};

RFunc random_coeff(const Ops& o, std::mt19937_64& rng, bool allow_den) {
  MPoly num = o.s * rat(long(rng() % 7) - 3) + o.a * rat(long(rng() % 5) - 2) + o.c(long(rng() % 9) - 4);
  if (rng() % 2) num = num * (o.s + o.c(long(rng() % 3)));
  if (!allow_den || rng() % 3) return RFunc(num);
  return RFunc(num, o.s + o.c(long(rng() % 5) + 1));
}

ShiftOp random_op(const Ops& o, std::mt19937_64& rng, bool allow_den) {
  ShiftOp r(o.syms, 0);
  for (int t = 0; t < 2; ++t) r += ShiftOp::single(o.syms, 0, int(rng() % 5) - 2, random_coeff(o, rng, allow_den));
  return r;
}

}  // namespace

TEST_CASE("basis-action composition") {
  Ops o;
  ShiftOp S = o.diag(RFunc(o.s));
  std::mt19937_64 rng1(1);
  // In the basis action, s*T e_s = (s+1) e_{s+1} and T*s e_s = s e_{s+1}.
  CHECK(compose(S, o.T()) - compose(o.T(), S) == o.T());
  ShiftOp B = random_op(o, rng1, true);
  CHECK(compose(ShiftOp::identity(o.syms, 0), B) == B);
  CHECK(compose(B, ShiftOp::identity(o.syms, 0)) == B);
  CHECK(commutator(B, B).is_zero());
  CHECK(symmetrizer3(o.T(), o.T(), o.T()) == o.T(3).scaled(Rat(6)));
}

TEST_CASE("reflection and twist") {
  Ops o;
  MPoly center(o.syms, rat(-1, 2));
  ShiftOp up = ShiftOp::single(o.syms, 0, 1, RFunc(o.s - o.a + o.c(1)));
  ShiftOp r = reflect(up, center);
  CHECK(r.terms().begin()->first == -1);
  CHECK(r.coefficient(-1) == RFunc(-o.s - o.a));
  CHECK(reflect(r, center) == up);
  ShiftOp tw = reflect(up, center, Rat(-1));
  CHECK(tw.coefficient(-1) == RFunc(o.s + o.a));
  CHECK(reflect(tw, center, Rat(-1)) == up);
  // Symbolic center.
  ShiftOp r2 = reflect(up, o.a * rat(1, 2));
  CHECK(r2.coefficient(-1) == RFunc(-o.s + o.c(1)));
}

TEST_CASE("to_diagonal errors and rewriting") {
  Ops o;
  CHECK(to_diagonal(ShiftOp(o.syms, 0), {}).is_zero());
  CHECK_THROWS_AS(to_diagonal(o.T(), {}), NotDiagonal);
  std::vector<DiagonalRewrite> rw{{0, MPoly(o.syms, rat(-1, 2)), true, RFunc(o.a)}};
  // (s + 1/2)^2 with s -> centered square -> a
  MPoly nu = o.s + MPoly(o.syms, rat(1, 2));
  CHECK(to_diagonal(o.diag(RFunc(nu * nu)), rw) == o.a);
  CHECK_THROWS_AS(to_diagonal(o.diag(RFunc(nu)), rw), ladder::exact::NotEven);
  CHECK_THROWS_AS(to_diagonal(o.diag(RFunc(o.c(1), o.s)), rw), NotPolynomial);
}

TEST_CASE("json round trip") {
  Ops o;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    ShiftOp A = random_op(o, rng, true);
    CHECK(shiftop_from_json(o.syms, 0, to_json(A)) == A);
  }
}

TEST_CASE("algebra properties on random operators") {
  Ops o;
  std::mt19937_64 rng(424242);
  MPoly center(o.syms, rat(-3, 2));
  for (int i = 0; i < 1000; ++i) {
    ShiftOp A = random_op(o, rng, i % 4 == 0);
    ShiftOp B = random_op(o, rng, false);
    ShiftOp C = random_op(o, rng, false);
    ShiftOp jac = commutator(commutator(A, B), C) + commutator(commutator(B, C), A) + commutator(commutator(C, A), B);
    REQUIRE(jac.is_zero());
    REQUIRE(compose(compose(A, B), C) == compose(A, compose(B, C)));
    REQUIRE(reflect(compose(A, B), center) == compose(reflect(A, center), reflect(B, center)));
    REQUIRE(reflect(compose(A, B), center, Rat(-1)) == compose(reflect(A, center, Rat(-1)), reflect(B, center, Rat(-1))));
    REQUIRE(reflect(reflect(A, center), center) == A);
  }
}
