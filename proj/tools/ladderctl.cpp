// ladderctl: command-line front end for the exact verifier, the
// representation builder and the numeric checks. Writes one deterministic
// JSON report per invocation.
//
// Exit status: 0 every check passed, 1 some check failed, 2 usage,
// configuration or I/O error.

#include "ladder/report/report.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

namespace {

using namespace ladder;
using report::Json;
using systems::SystemId;

constexpr const char* kOutDirEnv = "LADDERCTL_OUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system = "all";
  int p = 0, q = 0;
  std::string pq;
  double tol = 1e-10;
  double composition_tol = 1e-8;
  int points = 16;
  std::uint64_t seed = 20240607;
  std::string out;
  unsigned jobs = 1;
  bool residuals = false;
  // representations
  int M = 2, p0 = 0, q0 = 0;
  std::map<std::string, std::string> rep_params;
  int random = 0;
  std::string csv;
  bool matrices = false;
  // diff
  std::vector<std::string> files;
  std::string config;  // consumed before parsing
};

const std::vector<std::pair<int, int>> kDefaultPairs{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};

std::vector<std::pair<int, int>> pairs(const Options& o) {
  std::vector<std::pair<int, int>> out;
  if (o.p || o.q) {
    if (!o.p || !o.q) throw UsageError("-p and -q must be given together");
    out.push_back({o.p, o.q});
  } else if (!o.pq.empty()) {
    std::stringstream ss(o.pq);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int p = 0, q = 0;
      char slash = 0;
      std::istringstream is(item);
      if (!(is >> p >> slash >> q) || slash != '/' || !is.eof())
        throw UsageError("--pq expects a comma separated list like 1/1,2/1; got '" + item + "'");
      out.push_back({p, q});
    }
  } else {
    out = kDefaultPairs;
  }
  for (auto [p, q] : out)
    if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
      throw UsageError("p and q must be coprime positive integers; got " + std::to_string(p) + "/" + std::to_string(q));
  return out;
}

std::vector<SystemId> system_list(const std::string& spec, const std::vector<SystemId>& all) {
  if (spec == "all") return all;
  std::vector<SystemId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(systems::parse_system(item));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

Json config_json(const Options& o, const std::vector<std::pair<int, int>>& pq) {
  Json c;
  c["system"] = o.system;
  Json arr = Json::array();
  for (auto [p, q] : pq) arr.push_back({p, q});
  c["pairs"] = arr;
  c["tol"] = o.tol;
  c["composition_tol"] = o.composition_tol;
  c["points"] = o.points;
  c["seed"] = o.seed;
  return c;
}

numerics::NumericConfig numeric_config(const Options& o) {
  numerics::NumericConfig cfg;
  cfg.points = o.points;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  cfg.composition_tol = o.composition_tol;
  cfg.jobs = o.jobs;
  return cfg;
}

// ---- config file: "key = value" lines, '#' comments, keys are long flag names

struct ConfigEntry {
  int line;
  std::string key, value;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<ConfigEntry> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<ConfigEntry> out;
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(n) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError(path + ":" + std::to_string(n) + ": empty key or value");
    out.push_back({n, key, value});
  }
  return out;
}

// Applies each entry to the subcommand by parsing it alone, so errors carry
// the line number. Flags parsed afterwards overwrite these values.
void apply_config(CLI::App& sub, const std::string& path, const std::vector<ConfigEntry>& entries) {
  for (const auto& e : entries) {
    const std::string where = path + ":" + std::to_string(e.line) + ": ";
    if (e.key == "config") throw UsageError(where + "config files cannot include other config files");
    const std::string flag = (e.key.size() == 1 ? "-" : "--") + e.key;
    if (!sub.get_option_no_throw(flag))
      throw UsageError(where + "unknown key '" + e.key + "' for " + sub.get_name());
    std::vector<std::string> args{flag + "=" + e.value};
    if (e.key.size() == 1) args = {e.value, flag};  // reversed order for short options
    try {
      sub.clear();
      sub.parse(args);
    } catch (const CLI::ParseError& err) {
      throw UsageError(where + err.what());
    }
  }
  sub.clear();
}

// ---- output

void emit(const Options& o, const std::string& default_name, const Json& report) {
  std::string path = o.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / (default_name + ".json")).string();
    }
  }
  const std::string text = report::dump(report);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) throw UsageError("cannot write " + path);
  std::cerr << "report written to " << path << "\n";
}

void print_summary(const report::Tally& t) {
  std::cerr << t.checks - t.failed << "/" << t.checks << " checks passed\n";
  for (const auto& f : t.failures) std::cerr << "  failed: " << f << "\n";
}

std::string name_for(const std::string& cmd, const Options& o, const std::vector<std::pair<int, int>>& pq) {
  std::string n = cmd + "-" + o.system;
  if (pq.size() == 1) n += "-" + std::to_string(pq[0].first) + "-" + std::to_string(pq[0].second);
  for (auto& c : n)
    if (c == ',') c = '_';
  return n;
}

// ---- subcommands

// One job per (system, p, q); results keep the job order.
std::vector<structure::StructureReport> verify_all(const std::vector<SystemId>& systems,
                                                   const std::vector<std::pair<int, int>>& pq, unsigned jobs) {
  std::vector<std::pair<SystemId, std::pair<int, int>>> work;
  for (SystemId s : systems)
    for (auto pair : pq) work.push_back({s, pair});
  std::vector<structure::StructureReport> out(work.size());
  shift::parallel_for(work.size(), jobs, [&](std::size_t i) {
    out[i] = structure::verify_structure(systems::build_model(work[i].first, work[i].second.first, work[i].second.second));
  });
  return out;
}

int cmd_verify(const Options& o) {
  auto pq = pairs(o);
  auto systems = system_list(o.system, systems::all_systems());
  Json results = Json::array();
  report::Tally t;
  for (const auto& r : verify_all(systems, pq, o.jobs)) {
    report::tally(r, t);
    results.push_back(structure::to_json(r, o.residuals));
  }
  emit(o, name_for("verify", o, pq), report::envelope("verify", config_json(o, pq), results, t));
  print_summary(t);
  return t.passed() ? 0 : 1;
}

int cmd_stackel(const Options& o) {
  auto pq = pairs(o);
  Json results = Json::array();
  report::Tally t;
  for (auto [p, q] : pq) {
    auto ttw = structure::verify_structure(systems::build_model(SystemId::TTW, p, q), o.jobs);
    auto kepler = structure::stackel_map(ttw, o.jobs);
    report::tally(kepler, t);
    results.push_back(structure::to_json(kepler, o.residuals));
  }
  Options named = o;
  named.system = "kepler";
  emit(o, name_for("stackel", named, pq), report::envelope("stackel", config_json(o, pq), results, t));
  print_summary(t);
  return t.passed() ? 0 : 1;
}

std::vector<std::string> param_names(SystemId id) {
  if (id == SystemId::CagedOscillator) return {"a1", "a2", "mu"};
  if (id == SystemId::TTW) return {"a", "b", "omega"};
  throw UsageError("representations are built for caged and ttw only");
}

// One representation with its checks; degenerate random draws are redrawn.
struct RepRun {
  reps::Representation rep;
  reps::RepStatus status;
};

RepRun run_rep(const systems::SystemModel& m, const structure::StructureReport& report,
               const structure::OpSet<shift::ShiftOp>& ops, const reps::RepParams& params, const Options& o) {
  RepRun r{reps::build_rep(m, ops, params, o.p0, o.q0, o.M), {}};
  r.status = reps::check_rep(r.rep, report);
  return r;
}

void reps_for(SystemId id, int p, int q, const Options& o, std::mt19937_64* rng, Json& results, report::Tally& t,
              std::vector<RepRun>* keep = nullptr) {
  auto m = systems::build_model(id, p, q);
  auto report = structure::verify_structure(m, o.jobs);
  auto ops = reps::model_operators(m);
  std::vector<reps::RepParams> sets;
  if (rng) {
    for (int i = 0; i < o.random; ++i) sets.push_back(reps::random_params(id, *rng));
  } else {
    reps::RepParams params;
    for (const auto& name : param_names(id)) {
      auto it = o.rep_params.find(name);
      if (it == o.rep_params.end() || it->second.empty()) throw UsageError("missing --" + name);
      try {
        params[name] = exact::parse_rat(it->second);
      } catch (const std::exception&) {
        throw UsageError("--" + name + " expects a rational like -3/4; got '" + it->second + "'");
      }
    }
    sets.push_back(params);
  }
  for (auto params : sets) {
    RepRun run;
    for (int attempt = 0;; ++attempt) {
      try {
        run = run_rep(m, report, ops, params, o);
        break;
      } catch (const reps::DegenerateParameters&) {
        if (!rng || attempt >= 50) throw;
        params = reps::random_params(id, *rng);
      }
    }
    const std::string label = systems::system_name(id) + " (" + std::to_string(p) + "," + std::to_string(q) +
                              ") M=" + std::to_string(o.M);
    report::tally(run.status, label, t);
    Json entry;
    entry["representation"] = reps::to_json(run.rep, o.matrices);
    entry["checks"] = reps::to_json(run.status);
    results.push_back(entry);
    if (keep) keep->push_back(std::move(run));
  }
}

int cmd_rep(const Options& o) {
  auto pq = pairs(o.p || o.q || !o.pq.empty() ? o : [&] {
    Options one = o;
    one.p = one.q = 1;
    return one;
  }());
  auto systems = system_list(o.system, {SystemId::CagedOscillator, SystemId::TTW});
  if (o.M < 0) throw UsageError("-M must be nonnegative");
  if (o.random < 0) throw UsageError("--random must be nonnegative");
  std::mt19937_64 rng(o.seed);
  Json results = Json::array();
  report::Tally t;
  std::vector<RepRun> kept;
  for (SystemId s : systems)
    for (auto [p, q] : pq) reps_for(s, p, q, o, o.random > 0 ? &rng : nullptr, results, t, &kept);

  if (!o.csv.empty()) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::string path = o.csv;
      if (kept.size() > 1) {
        std::filesystem::path fp(o.csv);
        path = (fp.parent_path() / (fp.stem().string() + "-" + std::to_string(i + 1) + fp.extension().string())).string();
      }
      std::ofstream f(path, std::ios::binary);
      if (!(f << reps::spectrum_csv(kept[i].rep))) throw UsageError("cannot write " + path);
    }
  }
  Json cfg = config_json(o, pq);
  cfg["M"] = o.M;
  cfg["p0"] = o.p0;
  cfg["q0"] = o.q0;
  if (o.random > 0) cfg["random"] = o.random;
  else
    for (const auto& [k, v] : o.rep_params)
      if (!v.empty()) cfg["params"][k] = v;
  emit(o, name_for("rep", o, pq), report::envelope("rep", cfg, results, t));
  print_summary(t);
  return t.passed() ? 0 : 1;
}

int cmd_numeric(const Options& o) {
  auto pq = pairs(o);
  auto results = numerics::run_suite(numeric_config(o), pq);
  report::Tally t;
  report::tally(results, t);
  Options named = o;
  named.system = "all";
  emit(o, name_for("numeric", named, pq), report::envelope("numeric", config_json(o, pq), numerics::to_json(results), t));
  print_summary(t);
  return t.passed() ? 0 : 1;
}

int cmd_run(const Options& o) {
  auto pq = pairs(o);
  auto systems = system_list(o.system, systems::all_systems());
  report::Tally t;
  Json sections;
  Json structure_results = Json::array(), stackel_results = Json::array(), rep_results = Json::array();
  for (const auto& r : verify_all(systems, pq, o.jobs)) {
    report::tally(r, t);
    structure_results.push_back(structure::to_json(r, o.residuals));
    if (r.model.id == SystemId::TTW) {
      auto kepler = structure::stackel_map(r, o.jobs);
      report::tally(kepler, t);
      stackel_results.push_back(structure::to_json(kepler, o.residuals));
    }
  }
  Options ro = o;
  if (ro.random <= 0) ro.random = 5;
  std::mt19937_64 rng(o.seed);
  for (SystemId s : systems)
    if (s == SystemId::CagedOscillator || s == SystemId::TTW)
      for (auto [p, q] : pq) reps_for(s, p, q, ro, &rng, rep_results, t);
  auto numeric = numerics::run_suite(numeric_config(o), pq);
  report::tally(numeric, t);
  sections["structure"] = structure_results;
  sections["stackel"] = stackel_results;
  sections["representations"] = rep_results;
  sections["numeric"] = numerics::to_json(numeric);
  Json cfg = config_json(o, pq);
  cfg["M"] = o.M;
  cfg["random"] = ro.random;
  emit(o, name_for("run", o, pq), report::envelope("run", cfg, sections, t));
  print_summary(t);
  return t.passed() ? 0 : 1;
}

Json load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_diff(const Options& o) {
  if (o.files.size() != 2) throw UsageError("diff expects two report files");
  std::vector<std::string> lines;
  try {
    lines = report::diff_reports(load(o.files[0]), load(o.files[1]));
  } catch (const report::SchemaMismatch& e) {
    throw UsageError(std::string("schema mismatch: ") + e.what());
  }
  for (const auto& l : lines) std::cout << l << "\n";
  return lines.empty() ? 0 : 1;
}

// ---- option wiring

void common(CLI::App& sub, Options& o, bool numeric) {
  sub.add_option("--config", o.config, "key = value file; command-line flags win");
  sub.add_option("--system", o.system, "system id, comma list or 'all'");
  sub.add_option("-p", o.p, "numerator of k = p/q");
  sub.add_option("-q", o.q, "denominator of k = p/q");
  sub.add_option("--pq", o.pq, "list of pairs such as 1/1,2/1 (default: the seven standard pairs)");
  sub.add_option("--out", o.out, std::string("report path (default: $") + kOutDirEnv + " or stdout)");
  sub.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sub.add_option("--seed", o.seed, "random seed");
  sub.add_flag("--residuals", o.residuals, "include nonzero residual operators in the report");
  if (numeric) {
    sub.add_option("--tol", o.tol, "relative tolerance for recurrences and equations")->check(CLI::PositiveNumber);
    sub.add_option("--composition-tol", o.composition_tol, "relative tolerance for composed chains")
        ->check(CLI::PositiveNumber);
    sub.add_option("--points", o.points, "sample points per check")->check(CLI::Range(1, 100000));
  }
}

void rep_options(CLI::App& sub, Options& o) {
  sub.add_option("-M", o.M, "top index of the grid (dimension M+1)");
  sub.add_option("--p0", o.p0, "boundary offset p0");
  sub.add_option("--q0", o.q0, "boundary offset q0");
  for (const char* name : {"a1", "a2", "mu", "a", "b", "omega"})
    sub.add_option(std::string("--") + name, o.rep_params[name], "rational parameter");
  sub.add_option("--random", o.random, "number of random rational parameter sets");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact ladder and structure-equation verifier for 2D superintegrable systems"};
  app.require_subcommand(1);
  app.add_option("--config", o.config, "key = value file; command-line flags win");

  auto* verify = app.add_subcommand("verify", "verify structure equations, Casimir and L5 exactly");
  common(*verify, o, false);
  auto* rep = app.add_subcommand("rep", "build finite-dimensional representations and check them");
  common(*rep, o, false);
  rep_options(*rep, o);
  rep->add_option("--csv", o.csv, "write the spectrum table as CSV");
  rep->add_flag("--matrices", o.matrices, "include operator matrices in the report");
  auto* numeric = app.add_subcommand("numeric", "numeric recurrence, equation and composition checks");
  common(*numeric, o, true);
  auto* stackel = app.add_subcommand("stackel", "transfer TTW structure to the Kepler model");
  common(*stackel, o, false);
  auto* run = app.add_subcommand("run", "every check in one report");
  common(*run, o, true);
  rep_options(*run, o);
  auto* diff = app.add_subcommand("diff", "structural diff of two reports");
  diff->add_option("files", o.files, "old and new report")->expected(2);

  try {
    // The config file is applied to the chosen subcommand before the flags.
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string cfg;
    CLI::App* chosen = nullptr;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) cfg = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0) cfg = args[i].substr(9);
      else if (!chosen)
        for (CLI::App* s : app.get_subcommands({}))
          if (s->get_name() == args[i]) chosen = s;
    }
    if (!cfg.empty() && chosen) apply_config(*chosen, cfg, read_config(cfg));
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*rep) return cmd_rep(o);
    if (*numeric) return cmd_numeric(o);
    if (*stackel) return cmd_stackel(o);
    if (*run) return cmd_run(o);
    if (*diff) return cmd_diff(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // unsupported system, inadmissible offsets, degenerate parameters
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
