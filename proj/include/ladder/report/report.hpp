#pragma once

#include "ladder/numerics/checks.hpp"
#include "ladder/reps/reps.hpp"
#include "ladder/structure/structure.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ladder::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct SchemaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Running count of pass/fail outcomes that decide the exit status.
struct Tally {
  int checks = 0;
  int failed = 0;
  std::vector<std::string> failures;  // "<section>: <check>"
  void add(bool ok, const std::string& what);
  bool passed() const { return failed == 0; }
};

// Structure equations count when they are displayed, corrected, worked
// examples or derived identities. Candidate readings and alternative sign
// conventions are informational and never fail a run.
void tally(const structure::StructureReport& r, Tally& t);
void tally(const reps::RepStatus& s, const std::string& label, Tally& t);
void tally(const std::vector<numerics::CheckResult>& results, Tally& t);

// {schema_version, command, config, results, summary}
Json envelope(const std::string& command, const Json& config, const Json& results, const Tally& t);

// Indented, key-ordered, newline-terminated.
std::string dump(const Json& j);

// Structural diff for regression checks. Array elements are matched by a
// label (name, id, shift or system/p/q) when labels are unique, otherwise by
// position. Polynomial strings that differ are reported term by term.
// Throws SchemaMismatch when schema versions differ or are missing.
std::vector<std::string> diff_reports(const Json& old_report, const Json& new_report);

}  // namespace ladder::report
