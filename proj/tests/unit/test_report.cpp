#include "doctest.h"
#include "ladder/report/report.hpp"

using namespace ladder;
using report::Json;
using systems::SystemId;

namespace {

Json caged_report() {
  auto r = structure::verify_structure(systems::build_model(SystemId::CagedOscillator, 1, 1));
  report::Tally t;
  report::tally(r, t);
  Json results = Json::array();
  results.push_back(structure::to_json(r, false));
  Json cfg;
  cfg["tol"] = 1e-10;
  return report::envelope("verify", cfg, results, t);
}

}  // namespace

TEST_CASE("identical reports give an empty diff") {
  Json a = caged_report();
  CHECK(report::diff_reports(a, a).empty());
  CHECK(report::dump(a) == report::dump(caged_report()));
  CHECK(a["summary"]["status"] == "passed");
  CHECK(a["schema_version"] == report::kSchemaVersion);
}

TEST_CASE("a tolerance change stays in the config section") {
  Json a = caged_report(), b = a;
  b["config"]["tol"] = 1e-9;
  auto d = report::diff_reports(a, b);
  REQUIRE(d.size() == 1);
  CHECK(d[0].find("config.tol") != std::string::npos);
}

TEST_CASE("a coefficient change names the polynomial and the term") {
  Json a = caged_report(), b = a;
  auto& P = b["results"][0]["P_polys"];
  const std::string key = P.begin().key();
  P[key] = P[key].get<std::string>() + " + 5*mu^7";
  auto d = report::diff_reports(a, b);
  REQUIRE(d.size() == 1);
  CHECK(d[0].find("caged(1,1)") != std::string::npos);
  CHECK(d[0].find("P_polys." + key) != std::string::npos);
  CHECK(d[0].find("term added [5*mu^7]") != std::string::npos);
}

TEST_CASE("equation status changes are reported by name") {
  Json a = caged_report(), b = a;
  auto& eq = b["results"][0]["equations"][0];
  const std::string name = eq["name"];
  eq["status"] = "failed";
  auto d = report::diff_reports(a, b);
  REQUIRE(d.size() == 1);
  CHECK(d[0].find("equations[" + name + "].status") != std::string::npos);
}

TEST_CASE("schema versions must agree") {
  Json a = caged_report(), b = a;
  b["schema_version"] = report::kSchemaVersion + 1;
  CHECK_THROWS_AS(report::diff_reports(a, b), report::SchemaMismatch);
  b.erase("schema_version");
  CHECK_THROWS_AS(report::diff_reports(a, b), report::SchemaMismatch);
}

TEST_CASE("candidate readings do not fail a tally") {
  auto r = structure::verify_structure(systems::build_model(SystemId::TTW, 1, 1));
  report::Tally t;
  report::tally(r, t);
  CHECK(t.passed());
  auto s = structure::verify_structure(systems::build_model(SystemId::Sphere, 1, 1));
  report::Tally ts;
  report::tally(s, ts);
  CHECK_FALSE(ts.passed());
  CHECK(ts.failed == 2);
}
