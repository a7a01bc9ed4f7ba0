#include "doctest.h"
#include "ladder/numerics/checks.hpp"

#include <cmath>

using namespace ladder;
using namespace ladder::numerics;

namespace {

double value(const FnSpec& s, double x) { return eval_fn(s, x).value.real(); }

}  // namespace

TEST_CASE("closed forms at small degree") {
  CHECK(value({Family::JacobiP, 0, 0, 0.7, -0.3}, 0.4) == doctest::Approx(1.0).epsilon(1e-15));
  const double al = 0.7, z = 1.3;
  CHECK(value({Family::LaguerreL, 1, al, 0, 0}, z) == doctest::Approx(1 + al - z).epsilon(1e-14));
  const double x = 0.37;
  CHECK(value({Family::LegendreP, 2, 0, 0, 0}, x) == doctest::Approx((3 * x * x - 1) / 2).epsilon(1e-14));
}

TEST_CASE("agreement with the standard library") {
  for (double nu : {0.0, 0.5, 1.0, 2.75})
    for (double r : {0.2, 1.0, 3.7}) {
      const double got = value({Family::BesselJ, 0, nu, 0, 0}, r);
      CHECK(got == doctest::Approx(std::cyl_bessel_j(nu, r)).epsilon(1e-13));
    }
  for (unsigned n : {0u, 1u, 3u, 5u})
    for (unsigned m : {0u, 2u})
      for (double z : {0.1, 1.5, 4.0}) {
        const double got = value({Family::LaguerreL, double(n), double(m), 0, 0}, z);
        CHECK(got == doctest::Approx(std::assoc_laguerre(n, m, z)).epsilon(1e-13));
      }
  for (unsigned l : {0u, 1u, 4u})
    for (double x : {-0.8, 0.0, 0.6}) CHECK(value({Family::LegendreP, double(l), 0, 0, 0}, x) == doctest::Approx(std::legendre(l, x)).epsilon(1e-13));
}

TEST_CASE("negative integral Bessel order reflects") {
  const double j3 = value({Family::BesselJ, 0, 3, 0, 0}, 1.7);
  CHECK(value({Family::BesselJ, 0, -3, 0, 0}, 1.7) == doctest::Approx(-j3).epsilon(1e-14));
}

TEST_CASE("excluded neighborhoods raise domain errors") {
  CHECK_THROWS_AS(eval_fn({Family::LegendreP, 1.5, 0.3, 0, 0}, 0.97), DomainError);
  CHECK_THROWS_AS(eval_fn({Family::BesselJ, 0, 0.5, 0, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(eval_fn({Family::LegendreP, 1.5, 2.0, 0, 0}, 0.2), DomainError);
}

TEST_CASE("compensated summation keeps small terms") {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value().real() == 1000.0);
}

TEST_CASE("explicit recurrence checks on given points") {
  std::vector<cd> pts{0.2, -0.5, 0.7};
  FnSpec spec{Family::LegendreP, 1.75, 0.4, 0, 0};
  CHECK(check_recurrence(Recurrence::LegendreDPlus, spec, 1, pts, 1e-10).passed);
  CHECK(check_recurrence(Recurrence::LegendreCMinus, spec, 1, pts, 1e-10).passed);
  // A point inside the excluded neighborhood is reported, not thrown.
  CheckResult edge = check_recurrence(Recurrence::LegendreDPlus, spec, 1, {cd(0.99)}, 1e-10);
  CHECK_FALSE(edge.passed);
  CHECK(edge.detail.find("excluded") != std::string::npos);
  FnSpec bessel{Family::BesselJ, 0, 1.3, 0, 0};
  CHECK(check_recurrence(Recurrence::BesselComplexUp, bessel, 1, {cd(0.5, 1.2), cd(-1.0, 0.4)}, 1e-10).passed);
}

TEST_CASE("Wronskian of a dependent pair vanishes and independent pairs factor") {
  FnValue f1 = eval_fn({Family::LegendreP, 1.5, 0.6, 0, 0}, 0.3);
  FnValue f2 = eval_fn({Family::LegendreP, 1.5, -0.6, 0, 0}, 0.3);
  FnValue g1 = eval_fn({Family::LegendreP, 2.2, 0.4, 0, 0}, -0.1);
  FnValue g2 = eval_fn({Family::LegendreP, 2.2, -0.4, 0, 0}, -0.1);
  cd W = wronskian_product(f1, g1, f2, g2);
  cd wx = wronskian(f1, f2), wy = wronskian(g1, g2);
  CHECK(std::abs(W - wx * wx * wy * wy) <= 1e-12 * std::abs(W));
  CHECK(std::abs(W) > 1e-6);
  FnValue dep{f1.value * 3.0, f1.derivative * 3.0};
  CHECK(std::abs(wronskian_product(f1, g1, dep, g2)) <= 1e-14);
  CHECK(std::abs(wronskian(f1, dep)) <= 1e-15);
}

TEST_CASE("every recurrence passes on seeded samples") {
  NumericConfig cfg;
  for (Recurrence id : all_recurrences()) {
    CheckResult r = check_recurrence(id, cfg);
    INFO(r.id << ": " << r.max_residual << " | " << r.detail);
    CHECK(r.passed);
    CHECK(r.points == cfg.points);
  }
}

TEST_CASE("every separated equation passes") {
  NumericConfig cfg;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 1}})
    for (Ode o : all_odes()) {
      CheckResult r = check_ode(o, p, q, cfg);
      INFO(r.id << " at " << p << "/" << q << ": " << r.max_residual << " | " << r.detail);
      CHECK(r.passed);
    }
}

TEST_CASE("composed ladders match the exact multipliers") {
  NumericConfig cfg;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {3, 2}})
    for (SystemId s : {SystemId::Sphere, SystemId::ComplexEuclidean, SystemId::CagedOscillator, SystemId::TTW,
                       SystemId::KeplerDeformed})
      for (bool raise : {true, false}) {
        CheckResult r = check_composition(s, raise, p, q, cfg);
        INFO(r.system << " " << r.id << " at " << p << "/" << q << ": " << r.max_residual << " | " << r.detail);
        CHECK(r.passed);
      }
}

TEST_CASE("suite is deterministic and serializes") {
  NumericConfig cfg;
  cfg.points = 4;
  auto a = run_suite(cfg, {{1, 1}});
  cfg.jobs = 4;
  auto b = run_suite(cfg, {{1, 1}});
  REQUIRE(a.size() == b.size());
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(all_passed(a));
  auto j = to_json(a.front());
  CHECK(j.contains("max_residual"));
  CHECK(j["status"] == "passed");
}
