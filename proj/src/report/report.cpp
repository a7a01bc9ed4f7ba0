#include "ladder/report/report.hpp"

#include <map>
#include <set>

namespace ladder::report {

void Tally::add(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failed;
    failures.push_back(what);
  }
}

void tally(const structure::StructureReport& r, Tally& t) {
  using structure::EquationKind;
  const std::string where = systems::system_name(r.model.id) + " (" + std::to_string(r.model.p) + "," +
                            std::to_string(r.model.q) + ")";
  auto counts = [](const structure::EquationResult& e) {
    return e.kind != EquationKind::Candidate && e.kind != EquationKind::Convention;
  };
  for (const auto& e : r.equations)
    if (counts(e)) t.add(e.verified, where + ": " + e.name);
  if (r.L5) {
    const auto& d = *r.L5;
    t.add(d.residue_matches_pair, where + ": Q from residues equals Q from the pairing");
    t.add(d.closed_matches, where + ": Q closed form");
    t.add(d.commutator_is_L4, where + ": [L2,L5] = L4");
    t.add(d.polynomial, where + ": L5 preserves polynomials");
    for (const auto& e : d.checks)
      if (counts(e)) t.add(e.verified, where + ": " + e.name);
  }
  if (r.stackel) {
    t.add(r.stackel->P_agree, where + ": transferred P polynomials");
    t.add(r.stackel->inverse_agree, where + ": inverse transfer");
    t.add(r.stackel->energy_verified, where + ": transferred energy formula");
  }
}

void tally(const reps::RepStatus& s, const std::string& label, Tally& t) {
  for (const auto& c : s.checks) t.add(c.passed, label + ": " + c.name);
}

void tally(const std::vector<numerics::CheckResult>& results, Tally& t) {
  for (const auto& c : results) {
    std::string where = c.system.empty() ? c.group : c.group + " " + c.system;
    if (c.p) where += " (" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
    t.add(c.passed, where + ": " + c.id);
  }
}

Json envelope(const std::string& command, const Json& config, const Json& results, const Tally& t) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  Json s;
  s["checks"] = t.checks;
  s["failed"] = t.failed;
  s["status"] = t.passed() ? "passed" : "failed";
  s["failures"] = t.failures;
  j["summary"] = s;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string label_of(const Json& e) {
  if (!e.is_object()) return {};
  if (e.contains("name") && e["name"].is_string()) return e["name"].get<std::string>();
  std::string l;
  if (e.contains("id") && e["id"].is_string()) l = e["id"].get<std::string>();
  if (e.contains("system") && e["system"].is_string()) l += (l.empty() ? "" : " ") + e["system"].get<std::string>();
  if (e.contains("p") && e.contains("q")) l += "(" + e["p"].dump() + "," + e["q"].dump() + ")";
  if (e.contains("command") && e["command"].is_string()) l = e["command"].get<std::string>() + (l.empty() ? "" : " " + l);
  if (!l.empty()) return l;
  if (e.contains("shift")) return "shift=" + e["shift"].dump();
  return {};
}

// Splits "3*x^2 - x + 1/2" into signed terms; parenthesized groups stay whole.
std::vector<std::string> terms_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == ' ' && i + 2 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
      out.push_back(cur);
      cur = s[i + 1] == '-' ? "-" : "";
      i += 2;
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

bool looks_polynomial(const std::string& s) {
  return s.find('*') != std::string::npos || s.find('^') != std::string::npos;
}

void diff_value(const std::string& path, const Json& a, const Json& b, std::vector<std::string>& out);

void diff_object(const std::string& path, const Json& a, const Json& b, std::vector<std::string>& out) {
  std::set<std::string> keys;
  for (auto it = a.begin(); it != a.end(); ++it) keys.insert(it.key());
  for (auto it = b.begin(); it != b.end(); ++it) keys.insert(it.key());
  for (const auto& k : keys) {
    const std::string p = path.empty() ? k : path + "." + k;
    if (!a.contains(k)) out.push_back("+ " + p + ": " + b[k].dump());
    else if (!b.contains(k)) out.push_back("- " + p + ": " + a[k].dump());
    else diff_value(p, a[k], b[k], out);
  }
}

void diff_array(const std::string& path, const Json& a, const Json& b, std::vector<std::string>& out) {
  auto labels = [](const Json& arr) {
    std::vector<std::string> ls;
    std::set<std::string> seen;
    for (const auto& e : arr) {
      std::string l = label_of(e);
      if (l.empty() || !seen.insert(l).second) return std::vector<std::string>{};
      ls.push_back(l);
    }
    return ls;
  };
  std::vector<std::string> la = labels(a), lb = labels(b);
  if ((la.empty() && !a.empty()) || (lb.empty() && !b.empty())) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      if (i >= a.size()) out.push_back("+ " + p + ": " + b[i].dump());
      else if (i >= b.size()) out.push_back("- " + p + ": " + a[i].dump());
      else diff_value(p, a[i], b[i], out);
    }
    return;
  }
  std::map<std::string, std::size_t> ib;
  for (std::size_t i = 0; i < lb.size(); ++i) ib[lb[i]] = i;
  std::set<std::string> in_a(la.begin(), la.end());
  for (std::size_t i = 0; i < la.size(); ++i) {
    const std::string p = path + "[" + la[i] + "]";
    auto it = ib.find(la[i]);
    if (it == ib.end()) out.push_back("- " + p);
    else diff_value(p, a[i], b[it->second], out);
  }
  for (std::size_t i = 0; i < lb.size(); ++i)
    if (!in_a.count(lb[i])) out.push_back("+ " + path + "[" + lb[i] + "]");
}

void diff_value(const std::string& path, const Json& a, const Json& b, std::vector<std::string>& out) {
  if (a == b) return;
  if (a.is_object() && b.is_object()) return diff_object(path, a, b, out);
  if (a.is_array() && b.is_array()) return diff_array(path, a, b, out);
  if (a.is_string() && b.is_string() && looks_polynomial(a.get<std::string>()) &&
      looks_polynomial(b.get<std::string>())) {
    std::vector<std::string> ta = terms_of(a.get<std::string>()), tb = terms_of(b.get<std::string>());
    std::multiset<std::string> sa(ta.begin(), ta.end()), sb(tb.begin(), tb.end());
    std::string line = "~ " + path + ":";
    for (const auto& t : ta)
      if (!sb.count(t)) line += " term removed [" + t + "]";
    for (const auto& t : tb)
      if (!sa.count(t)) line += " term added [" + t + "]";
    out.push_back(line);
    return;
  }
  out.push_back("~ " + path + ": " + a.dump() + " -> " + b.dump());
}

}  // namespace

std::vector<std::string> diff_reports(const Json& old_report, const Json& new_report) {
  auto version = [](const Json& j) -> int {
    if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_number_integer())
      throw SchemaMismatch("report has no schema_version");
    return j["schema_version"].get<int>();
  };
  int va = version(old_report), vb = version(new_report);
  if (va != vb)
    throw SchemaMismatch("schema versions differ: " + std::to_string(va) + " vs " + std::to_string(vb));
  std::vector<std::string> out;
  diff_value("", old_report, new_report, out);
  return out;
}

}  // namespace ladder::report
