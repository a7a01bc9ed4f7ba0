#include "ladder/reps/reps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ladder::reps {

using exact::MPoly;
using exact::rat;
using exact::RFunc;
using shift::ShiftOp;

namespace {

const std::vector<std::string>& parameter_names(SystemId id) {
  static const std::vector<std::string> caged{"a1", "a2", "mu"};
  static const std::vector<std::string> ttw{"a", "b", "omega"};
  if (id == SystemId::CagedOscillator) return caged;
  if (id == SystemId::TTW) return ttw;
  throw systems::UnsupportedSystem("representations are built for the caged oscillator and TTW models");
}

Rat value_of(const MPoly& poly) { return poly.constant_value(); }

// Instantiates every parameter and u, leaving the index symbol.
ShiftOp instantiate(const SystemModel& m, const ShiftOp& op, const RepParams& params, const Rat& u) {
  ShiftOp r = op.evaluated(m.sym("u"), u);
  for (const auto& [name, value] : params) r = r.evaluated(m.sym(name), value);
  return r;
}

MPoly instantiate(const SystemModel& m, const MPoly& poly, const RepParams& params, const Rat& u) {
  MPoly r = poly.evaluate(m.sym("u"), u);
  for (const auto& [name, value] : params) r = r.evaluate(m.sym(name), value);
  return r;
}

Rat coefficient_at(const SystemModel& m, const RFunc& c, const Rat& x) {
  try {
    RFunc v = c.evaluate(m.index, x);
    return value_of(v.num()) / value_of(v.den());
  } catch (const std::exception& e) {
    throw DegenerateParameters("operator coefficient has a pole at grid point " + exact::to_string(x) + ": " +
                               e.what());
  }
}

Matrix grid_matrix(const SystemModel& m, const std::vector<Rat>& grid, const ShiftOp& op) {
  const std::size_t n = grid.size();
  Matrix r(n);
  if (n == 0) return r;
  const int step = m.step;
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& [shift, c] : op.terms()) {
      if (shift % step != 0) throw DegenerateParameters("operator term at shift " + std::to_string(shift) +
                                                        " does not move along the grid");
      long row = static_cast<long>(col) + shift / step;
      if (row < 0 || row >= static_cast<long>(n)) continue;
      r(static_cast<std::size_t>(row), col) = coefficient_at(m, c, grid[col]);
    }
  }
  return r;
}

}  // namespace

OpSet<ShiftOp> model_operators(const SystemModel& model) {
  auto lp = systems::build_ladders(model);
  auto sym = systems::symmetrize(model, lp);
  auto products = structure::derive_products(model, lp);
  auto P = structure::extract_P(model, products);
  return structure::operator_set(model, lp, sym, P);
}

Representation build_rep(const SystemModel& m, const OpSet<ShiftOp>& ops, const RepParams& params, int p0, int q0,
                         int M) {
  const auto& names = parameter_names(m.id);
  if (p0 < 0 || p0 >= m.p || q0 < 0 || q0 >= m.q)
    throw InadmissibleOffsets("offsets must satisfy 0 <= p0 < p and 0 <= q0 < q (got p0 = " + std::to_string(p0) +
                              ", q0 = " + std::to_string(q0) + ")");
  if (M < 0) throw InadmissibleOffsets("M must be nonnegative");
  for (const auto& n : names)
    if (!params.count(n)) throw std::invalid_argument("missing parameter " + n);
  for (const auto& [n, v] : params)
    if (std::find(names.begin(), names.end(), n) == names.end())
      throw std::invalid_argument("unknown parameter " + n + " for " + systems::system_name(m.id));

  Representation rep;
  rep.id = m.id;
  rep.p = m.p;
  rep.q = m.q;
  rep.params = params;
  rep.p0 = p0;
  rep.q0 = q0;
  rep.N0 = 0;
  rep.N1 = M;
  rep.separation = m.separation;
  const Rat k = m.k, q = Rat(m.q), p = Rat(m.p), Mr = Rat(M), P0 = Rat(p0), Q0 = Rat(q0);

  // Top point: the raising coefficient's zero (t+1)_q or (n+a+b+1)_q at offset q0.
  // Bottom point: the lowering coefficient's zero (u - k n + 1)_p at offset p0.
  Rat top, h;
  if (m.id == SystemId::CagedOscillator) {
    top = -1 - Q0;
  } else {
    h = (params.at("a") + params.at("b") + 1) / 2;
    top = -h - Q0;
  }
  Rat bottom = top - Mr * q;
  rep.offset = bottom;
  rep.u = m.id == SystemId::CagedOscillator ? Rat(k * bottom - 1 - P0) : Rat(k * (bottom - h) - 1 - P0);
  for (int N = 0; N <= M; ++N) rep.grid.push_back(bottom + Rat(N) * q);

  if (m.id == SystemId::CagedOscillator) {
    Rat mu = params.at("mu"), a1 = params.at("a1"), a2 = params.at("a2");
    rep.energy_displayed = 2 * Mr * p * q * mu - 2 * mu * (p * (a1 - Q0) + q * (a2 - P0));
    rep.energy_derived = rep.energy_displayed;
    for (int N = 0; N <= M; ++N)
      rep.spectrum_displayed.push_back(4 * mu * p * q * Rat(M - N) - 2 * mu * p * (a1 - 2 * Q0 - 1));
    // Displayed conditions: u - k(t0 + N0 q) + 1 = -p0 and t0 + N1 q + 1 = -q0, with t_N = t0 + N q.
    bool ok = rep.u - k * rep.grid.front() + 1 == -P0 && rep.grid.back() + 1 == -Q0;
    rep.notes.push_back(std::string("displayed boundary conditions ") + (ok ? "agree" : "disagree") +
                        " with the zeros of the ladder coefficients");
  } else {
    Rat om = params.at("omega"), a = params.at("a"), b = params.at("b");
    rep.energy_displayed = 2 * om * (2 * p * Mr + a + b + 2 * k * Q0 + 2 * P0 + 2);
    rep.energy_derived = 2 * om * (2 * p * Mr + k * (a + b + 1) + 2 * k * Q0 + 2 * P0 + 1);
    for (int N = 0; N <= M; ++N) {
      Rat v = Rat(M - N) * q + h + Q0;
      rep.spectrum_displayed.push_back(-4 * k * k * v * v);
    }
    bool ok = rep.u + k * (-rep.grid.front() + h) + 1 == -P0 && rep.grid.back() + h == -Q0;
    rep.notes.push_back(std::string("displayed boundary conditions ") + (ok ? "agree" : "disagree") +
                        " with the zeros of the ladder coefficients");
    if (rep.energy_displayed != rep.energy_derived)
      rep.notes.push_back("displayed energy 2omega(2pM+a+b+2kq0+2p0+2) differs from the energy map value "
                          "2omega(2pM+k(a+b+1)+2kq0+2p0+1); they agree only for k = 1");
  }

  auto [name, value] = m.energy_value.front();
  rep.energy = value_of(instantiate(m, value, params, rep.u));

  std::map<std::string, ShiftOp> inst;
  for (const auto& [n, op] : ops.all()) inst.emplace(n, instantiate(m, op, params, rep.u));

  const ShiftOp& raise = inst.at("raise");
  const ShiftOp& lower = inst.at("lower");
  rep.raise_kills_top = coefficient_at(m, raise.coefficient(m.step), rep.grid.back()) == 0;
  rep.lower_kills_bottom = coefficient_at(m, lower.coefficient(-m.step), rep.grid.front()) == 0;

  // Irreducibility: ladders nonzero inside the grid, simple spectrum.
  for (std::size_t i = 0; i + 1 < rep.grid.size(); ++i) {
    if (coefficient_at(m, raise.coefficient(m.step), rep.grid[i]) == 0)
      throw DegenerateParameters("raising coefficient vanishes inside the grid at " + exact::to_string(rep.grid[i]));
    if (coefficient_at(m, lower.coefficient(-m.step), rep.grid[i + 1]) == 0)
      throw DegenerateParameters("lowering coefficient vanishes inside the grid at " +
                                 exact::to_string(rep.grid[i + 1]));
  }
  const ShiftOp& sep = inst.at(m.separation);
  std::set<Rat> seen;
  for (const auto& x : rep.grid) {
    Rat ev = coefficient_at(m, sep.coefficient(0), x);
    if (!seen.insert(ev).second) throw DegenerateParameters("repeated eigenvalue " + exact::to_string(ev));
    rep.spectrum.push_back(ev);
  }

  for (const auto& [n, op] : inst) rep.ops.set(n, grid_matrix(m, rep.grid, op));
  return rep;
}

Representation build_rep(const SystemModel& model, const RepParams& params, int p0, int q0, int M) {
  return build_rep(model, model_operators(model), params, p0, q0, M);
}

Matrix to_matrix(const Representation& rep, const ShiftOp& op) {
  SystemModel m = systems::build_model(rep.id, rep.p, rep.q);
  return grid_matrix(m, rep.grid, instantiate(m, op, rep.params, rep.u));
}

bool RepStatus::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

RepStatus check_rep(const Representation& rep, const StructureReport& report) {
  RepStatus st;
  auto add = [&](std::string name, bool ok, std::string detail) {
    st.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  if (report.model.id != rep.id || report.model.p != rep.p || report.model.q != rep.q) {
    add("report matches representation", false, "structure report is for a different system or (p,q)");
    return st;
  }
  add("energy (displayed closed form)", rep.energy == rep.energy_displayed,
      "model " + exact::to_string(rep.energy) + ", displayed " + exact::to_string(rep.energy_displayed));
  add("energy (energy map)", rep.energy == rep.energy_derived,
      "model " + exact::to_string(rep.energy) + ", closed form " + exact::to_string(rep.energy_derived));
  add(rep.separation + " spectrum (displayed closed form)", rep.spectrum == rep.spectrum_displayed, "");

  const std::size_t n = rep.dimension();
  const Matrix& raise = rep.ops("raise");
  const Matrix& lower = rep.ops("lower");
  bool top_zero = true, bottom_zero = true;
  for (const auto& v : raise.column(n - 1)) top_zero = top_zero && v == 0;
  for (const auto& v : lower.column(0)) bottom_zero = bottom_zero && v == 0;
  add("raise annihilates the top vector", rep.raise_kills_top && top_zero,
      rep.raise_kills_top ? "" : "raising coefficient at the top point is nonzero");
  add("lower annihilates the bottom vector", rep.lower_kills_bottom && bottom_zero,
      rep.lower_kills_bottom ? "" : "lowering coefficient at the bottom point is nonzero");
  add(rep.separation + " matrix is diagonal", rep.ops(rep.separation).is_diagonal(), "");

  auto specs = structure::equation_specs(report.model);
  for (const auto& e : report.equations) {
    if (!e.verified) continue;
    auto it = std::find_if(specs.begin(), specs.end(), [&](const auto& s) { return s.name == e.name; });
    if (it == specs.end()) continue;
    try {
      Matrix r = it->matrix_residual(rep.ops);
      add("matrix: " + e.name, r.is_zero(), r.is_zero() ? "" : "nonzero residual");
    } catch (const std::exception& ex) {
      add("matrix: " + e.name, false, ex.what());
    }
  }
  return st;
}

RepParams random_params(SystemId id, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13);
  auto draw = [&](bool nonzero) {
    for (;;) {
      Rat r = rat(num(rng), den(rng));
      // Non-integral values keep the grid clear of accidental zeros and poles.
      if (exact::is_integer(r) || (nonzero && r == 0)) continue;
      return r;
    }
  };
  RepParams out;
  for (const auto& name : parameter_names(id)) out[name] = draw(true);
  return out;
}

nlohmann::ordered_json to_json(const Representation& rep, bool include_matrices) {
  nlohmann::ordered_json j;
  j["system"] = systems::system_name(rep.id);
  j["p"] = rep.p;
  j["q"] = rep.q;
  nlohmann::ordered_json params;
  for (const auto& [n, v] : rep.params) params[n] = exact::to_string(v);
  j["parameters"] = params;
  j["p0"] = rep.p0;
  j["q0"] = rep.q0;
  j["N0"] = rep.N0;
  j["N1"] = rep.N1;
  j["dimension"] = rep.dimension();
  j["offset"] = exact::to_string(rep.offset);
  j["u"] = exact::to_string(rep.u);
  j["energy"] = exact::to_string(rep.energy);
  j["energy_displayed"] = exact::to_string(rep.energy_displayed);
  j["energy_derived"] = exact::to_string(rep.energy_derived);
  nlohmann::ordered_json spec = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    spec.push_back({{"N", rep.N0 + static_cast<int>(i)},
                    {"x", exact::to_string(rep.grid[i])},
                    {"eigenvalue", exact::to_string(rep.spectrum[i])},
                    {"displayed", exact::to_string(rep.spectrum_displayed[i])}});
  j["spectrum_operator"] = rep.separation;
  j["spectrum"] = spec;
  j["boundary"] = {{"raise_kills_top", rep.raise_kills_top}, {"lower_kills_bottom", rep.lower_kills_bottom}};
  if (include_matrices) {
    nlohmann::ordered_json mats;
    for (const auto& [n, mtx] : rep.ops.all()) mats[n] = mtx.to_string();
    j["matrices"] = mats;
  }
  j["notes"] = rep.notes;
  return j;
}

nlohmann::ordered_json to_json(const RepStatus& status) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : status.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "passed" : "failed";
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string spectrum_csv(const Representation& rep) {
  std::ostringstream os;
  os << "N,x,eigenvalue\n";
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    os << rep.N0 + static_cast<int>(i) << ',' << exact::to_string(rep.grid[i]) << ','
       << exact::to_string(rep.spectrum[i]) << '\n';
  return os.str();
}

}  // namespace ladder::reps
