#include "doctest.h"
#include "ladder/reps/reps.hpp"

using namespace ladder;
using namespace ladder::reps;
using exact::rat;

namespace {

RepParams caged_params() { return {{"a1", rat(7, 3)}, {"a2", rat(-5, 4)}, {"mu", rat(3, 5)}}; }
RepParams ttw_params() { return {{"a", rat(5, 7)}, {"b", rat(-2, 9)}, {"omega", rat(4, 3)}}; }

bool check_named(const RepStatus& st, const std::string& name) {
  for (const auto& c : st.checks)
    if (c.name == name) return c.passed;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("caged representation at p = q = 1, M = 3") {
  auto m = systems::build_model(SystemId::CagedOscillator, 1, 1);
  auto rep = build_rep(m, caged_params(), 0, 0, 3);
  CHECK(rep.dimension() == 4);
  CHECK(rep.raise_kills_top);
  CHECK(rep.lower_kills_bottom);
  CHECK(rep.energy == rep.energy_displayed);
  CHECK(rep.spectrum == rep.spectrum_displayed);
  // [L1,L3] = -4 mu L4 as 4x4 matrices
  const auto& o = rep.ops;
  Matrix lhs = o("L1") * o("L3") - o("L3") * o("L1");
  CHECK(lhs == rat(-12, 5) * o("L4"));
  CHECK_FALSE(o("L4").is_zero());
  // Ladders occupy a single off-diagonal.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      if (r != c + 1) CHECK(o("raise")(r, c) == 0);
      if (r + 1 != c) CHECK(o("lower")(r, c) == 0);
    }
}

TEST_CASE("caged representation passes every matrix check for several (p,q)") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    auto report = structure::verify_structure(systems::build_model(SystemId::CagedOscillator, p, q), 4);
    auto rep = build_rep(report.model, report.ops, caged_params(), p - 1, q - 1, 2);
    auto st = check_rep(rep, report);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(st.passed());
    CHECK(check_named(st, "matrix: Casimir"));
  }
}

TEST_CASE("TTW representation at (p,q) = (1,2), M = 2: Casimir matrix vanishes") {
  auto report = structure::verify_structure(systems::build_model(SystemId::TTW, 1, 2), 4);
  auto rep = build_rep(report.model, report.ops, ttw_params(), 0, 1, 2);
  auto st = check_rep(rep, report);
  CHECK(check_named(st, "matrix: Casimir"));
  CHECK(check_named(st, "raise annihilates the top vector"));
  CHECK(check_named(st, "lower annihilates the bottom vector"));
  CHECK(check_named(st, "L2 spectrum (displayed closed form)"));
  CHECK(check_named(st, "energy (energy map)"));
  // The displayed energy carries a+b+2 where the energy map gives k(a+b+1)+1.
  CHECK_FALSE(check_named(st, "energy (displayed closed form)"));
}

TEST_CASE("TTW displayed energy holds at k = 1") {
  auto report = structure::verify_structure(systems::build_model(SystemId::TTW, 1, 1), 4);
  auto rep = build_rep(report.model, report.ops, ttw_params(), 0, 0, 3);
  CHECK(check_rep(rep, report).passed());
}

TEST_CASE("one-dimensional representations") {
  auto m = systems::build_model(SystemId::CagedOscillator, 1, 1);
  auto rep = build_rep(m, caged_params(), 0, 0, 0);
  CHECK(rep.dimension() == 1);
  const auto& o = rep.ops;
  CHECK((o("L1") * o("L3") - o("L3") * o("L1")).is_zero());
  CHECK(o("raise").is_zero());
  CHECK(o("lower").is_zero());
}

TEST_CASE("inadmissible offsets and degenerate parameters are rejected") {
  auto m = systems::build_model(SystemId::TTW, 1, 2);
  CHECK_THROWS_AS(build_rep(m, ttw_params(), 1, 0, 2), InadmissibleOffsets);
  CHECK_THROWS_AS(build_rep(m, ttw_params(), 0, 2, 2), InadmissibleOffsets);
  CHECK_THROWS_AS(build_rep(m, ttw_params(), 0, 0, -1), InadmissibleOffsets);
  CHECK_THROWS_AS(build_rep(systems::build_model(SystemId::Sphere, 1, 1), ttw_params(), 0, 0, 1),
                  systems::UnsupportedSystem);
  // a + b = -2 puts s = 1/2 and s = -1/2 on the grid: L2 = -4k^2 s^2 repeats.
  auto m11 = systems::build_model(SystemId::TTW, 1, 1);
  RepParams sym{{"a", rat(-1, 2)}, {"b", rat(-3, 2)}, {"omega", rat(1)}};
  CHECK_THROWS_AS(build_rep(m11, sym, 0, 0, 1), DegenerateParameters);
  RepParams zero_mu = caged_params();
  zero_mu["mu"] = 0;
  CHECK_THROWS_AS(build_rep(systems::build_model(SystemId::CagedOscillator, 1, 1), zero_mu, 0, 0, 2),
                  DegenerateParameters);
}

TEST_CASE("random parameters are reproducible and spectra serialize") {
  std::mt19937_64 a(11), b(11);
  CHECK(random_params(SystemId::TTW, a) == random_params(SystemId::TTW, b));
  auto m = systems::build_model(SystemId::CagedOscillator, 2, 1);
  auto rep = build_rep(m, caged_params(), 1, 0, 2);
  auto csv = spectrum_csv(rep);
  CHECK(csv.rfind("N,x,eigenvalue\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  auto j = to_json(rep, true);
  CHECK(j["dimension"] == 3);
  CHECK(j["matrices"].contains("raise"));
  CHECK(j["spectrum"].size() == 3);
}
