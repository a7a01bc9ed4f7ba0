#include "doctest.h"
#include "ladder/systems/ladders.hpp"

using namespace ladder;
using namespace ladder::systems;

namespace {

const std::vector<std::pair<int, int>> kPairs{{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};

}  // namespace

TEST_CASE("system names and aliases") {
  for (auto id : all_systems()) CHECK(parse_system(system_name(id)) == id);
  CHECK(parse_system("TTW") == SystemId::TTW);
  CHECK(parse_system("ce") == SystemId::ComplexEuclidean);
  CHECK_THROWS_AS(parse_system("torus"), UnsupportedSystem);
}

TEST_CASE("invalid p, q are rejected") {
  CHECK_THROWS_AS(build_model(SystemId::Sphere, 2, 4), InvalidParameters);
  CHECK_THROWS_AS(build_model(SystemId::TTW, 0, 1), InvalidParameters);
  CHECK_THROWS_AS(build_model(SystemId::TTW, -1, 2), InvalidParameters);
}

TEST_CASE("ladders build and symmetrize for every system") {
  for (auto id : all_systems()) {
    for (auto [p, q] : kPairs) {
      CAPTURE(system_name(id));
      CAPTURE(p);
      CAPTURE(q);
      SystemModel m = build_model(id, p, q);
      CHECK(m.k == exact::rat(p, q));
      LadderPair lp = build_ladders(m);
      CHECK(lp.raise.max_shift() == m.step);
      CHECK(lp.lower.min_shift() == -m.step);
      CHECK_FALSE(lp.checks.empty());
      SymmetricPair sp = symmetrize(m, lp);
      CHECK(sp.L3.max_shift() == m.step);
      CHECK(sp.L3.min_shift() == -m.step);
    }
  }
}

TEST_CASE("gauge leaves the product of the ladders unchanged") {
  for (auto id : {SystemId::Sphere, SystemId::TTW}) {
    SystemModel m = build_model(id, 2, 1);
    LadderPair lp = build_ladders(m);
    ShiftOp raw_up = ShiftOp::single(m.syms, m.index, m.step, lp.raw_raise_action);
    ShiftOp raw_dn = ShiftOp::single(m.syms, m.index, -m.step, lp.raw_lower_action);
    CHECK(compose(lp.raise, lp.lower) == compose(raw_up, raw_dn));
    CHECK(compose(lp.lower, lp.raise) == compose(raw_dn, raw_up));
  }
}

TEST_CASE("separation operator commutes with ladders by a shift of its eigenvalue") {
  SystemModel m = build_model(SystemId::CagedOscillator, 1, 1);
  LadderPair lp = build_ladders(m);
  ShiftOp L1 = m.separation_op();
  ShiftOp mu = m.diag(m.var("mu"));
  CHECK(commutator(L1, lp.raise) == compose(mu, lp.raise).scaled(Rat(-4)));
  CHECK(commutator(L1, lp.lower) == compose(mu, lp.lower).scaled(Rat(4)));
}

TEST_CASE("complex-Euclidean operators act with parity (-1)^(p+q) on even functions") {
  for (auto [p, q] : kPairs) {
    SystemModel m = build_model(SystemId::ComplexEuclidean, p, q);
    SymmetricPair sp = symmetrize(m, build_ladders(m));
    CHECK(polynomial_parity(m, sp.L3) == ((p + q) % 2 ? -1 : 1));
  }
}

TEST_CASE("TTW raise is not polynomial preserving on its own") {
  SystemModel m = build_model(SystemId::TTW, 1, 1);
  LadderPair lp = build_ladders(m);
  CHECK_THROWS(polynomial_parity(m, lp.raise));
}

TEST_CASE("invariant rewrites invert the eigenvalue formulas") {
  for (auto id : all_systems()) {
    SystemModel m = build_model(id, 2, 3);
    MPoly sep = m.var(m.separation);
    CHECK(m.to_invariants(m.separation_value) == sep);
    for (const auto& [name, value] : m.energy_value) {
      CAPTURE(name);
      // Energies linear in the ladder parameter are only reachable through their squares.
      CHECK(m.to_invariants(value * value) == m.var(name).pow(2));
    }
  }
}
