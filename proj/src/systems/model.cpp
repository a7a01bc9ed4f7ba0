#include "ladder/systems/model.hpp"

#include <numeric>

namespace ladder::systems {

using exact::rat;

const std::vector<SystemId>& all_systems() {
  static const std::vector<SystemId> ids{SystemId::Sphere, SystemId::ComplexEuclidean, SystemId::CagedOscillator,
                                         SystemId::TTW, SystemId::KeplerDeformed};
  return ids;
}

std::string system_name(SystemId id) {
  switch (id) {
    case SystemId::Sphere: return "sphere";
    case SystemId::ComplexEuclidean: return "complex-euclidean";
    case SystemId::CagedOscillator: return "caged";
    case SystemId::TTW: return "ttw";
    case SystemId::KeplerDeformed: return "kepler";
  }
  throw UnsupportedSystem("unknown system id");
}

SystemId parse_system(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "sphere" || s == "s2") return SystemId::Sphere;
  if (s == "complex-euclidean" || s == "ce" || s == "complexeuclidean") return SystemId::ComplexEuclidean;
  if (s == "caged" || s == "cagedoscillator" || s == "caged-oscillator") return SystemId::CagedOscillator;
  if (s == "ttw") return SystemId::TTW;
  if (s == "kepler" || s == "keplerdeformed" || s == "kepler-deformed") return SystemId::KeplerDeformed;
  throw UnsupportedSystem("unsupported system id '" + std::string(name) + "'");
}

MPoly SystemModel::to_invariants(const MPoly& coefficient) const {
  return shift::rewrite_polynomial(coefficient, rewrites);
}

MPoly SystemModel::to_invariants(const ShiftOp& diagonal) const { return shift::to_diagonal(diagonal, rewrites); }

MPoly SystemModel::from_invariants_poly(const MPoly& poly) const {
  MPoly r = poly;
  r.adopt(syms);
  r = r.substitute(sym(separation), separation_value);
  for (const auto& [name, value] : energy_value) r = r.substitute(sym(name), value);
  return r;
}

nlohmann::ordered_json SystemModel::summary() const {
  nlohmann::ordered_json j;
  j["system"] = system_name(id);
  j["p"] = p;
  j["q"] = q;
  j["k"] = exact::to_string(k);
  j["symbols"] = syms->names();
  j["index"] = syms->name(index);
  j["parameters"] = parameters;
  j["invariants"] = invariants;
  j["ladder_step"] = step;
  if (has_reflection) {
    j["reflection_center"] = center.to_string();
    j["reflection_twist"] = exact::to_string(twist);
  }
  j[separation + "_eigenvalue"] = separation_value.to_string();
  for (const auto& [name, value] : energy_value) j[name + "_value"] = value.to_string();
  if (id == SystemId::CagedOscillator) {
    // lambda_x + lambda_y from the separated equations, for comparison with the displayed energy map.
    MPoly mu = var("mu");
    MPoly shift = var("a1") * Rat(p) + constant(p) + var("a2") * Rat(q) + constant(q);
    j["separation_energy_value"] = (mu * Rat(-2) * (var("u") * Rat(2 * q) + shift)).to_string();
  }
  return j;
}

namespace {

void check_pq(int p, int q) {
  if (p <= 0 || q <= 0) throw InvalidParameters("p and q must be positive integers");
  if (std::gcd(p, q) != 1) throw InvalidParameters("p and q must be coprime");
  if (p > 12 || q > 12) throw InvalidParameters("p and q above 12 are not supported");
}

SystemModel sphere(int p, int q) {
  SystemModel m;
  m.p = p;
  m.q = q;
  m.k = rat(p, q);
  m.syms = exact::make_symbols({"N", "n", "a", "H", "L2"});
  m.index = 0;
  m.parameters = {"n", "a"};
  m.invariants = {"H", "L2"};
  m.separation = "L2";
  const Rat k = m.k;
  MPoly N = m.var("N"), n = m.var("n");
  MPoly half = m.constant(rat(1, 2));
  m.center = -half;
  m.centered = N + half;
  // Rational gauges only reach reflect(raise) = (-1)^p lower.
  m.twist = Rat(p % 2 ? -1 : 1);
  m.twist_step = q;
  m.step = q;
  m.separation_value = (N + half).pow(2) * Rat(-k * k);
  m.energy_value = {{"H", -(n * (n + m.constant(1)))}};
  MPoly L2 = m.var("L2"), H = m.var("H");
  m.rewrites = {{m.index, -half, true, RFunc(L2 * Rat(-1 / (k * k)))},
                {m.sym("n"), -half, true, RFunc(m.constant(rat(1, 4)) - H)}};
  return m;
}

SystemModel complex_euclidean(int p, int q) {
  SystemModel m;
  m.p = p;
  m.q = q;
  m.k = rat(p, q);
  m.syms = exact::make_symbols({"Omega", "beta", "H", "L2"});
  m.index = 0;
  m.parameters = {"beta"};
  m.invariants = {"H", "L2"};
  m.separation = "L2";
  MPoly W = m.var("Omega"), beta = m.var("beta");
  m.center = m.constant(0);
  m.centered = W;
  m.twist = Rat((p + q) % 2 ? -1 : 1);
  m.twist_step = p;
  m.step = p;
  m.separation_value = W * W;
  m.energy_value = {{"H", -(beta * beta)}};
  m.rewrites = {{m.index, m.constant(0), true, RFunc(m.var("L2"))},
                {m.sym("beta"), m.constant(0), true, RFunc(-m.var("H"))}};
  m.notes.push_back(
      "the one-variable model names its operators Phi+/-, but they are the symmetrized combinations; "
      "they are treated as L3 and L4 here");
  return m;
}

SystemModel caged(int p, int q) {
  SystemModel m;
  m.p = p;
  m.q = q;
  m.k = rat(p, q);
  m.syms = exact::make_symbols({"t", "u", "a1", "a2", "mu", "E", "L1"});
  m.index = 0;
  m.parameters = {"u", "a1", "a2", "mu"};
  m.invariants = {"E", "L1"};
  m.separation = "L1";
  m.has_reflection = false;
  m.center = m.constant(0);
  m.centered = m.constant(1);
  m.step = q;
  MPoly t = m.var("t"), mu = m.var("mu"), a1 = m.var("a1"), a2 = m.var("a2"), u = m.var("u");
  MPoly one = m.constant(1);
  MPoly mu1 = mu * Rat(p);
  m.separation_value = mu1 * Rat(-2) * (t * Rat(2) + a1 + one);
  MPoly shift = a1 * Rat(p) + m.constant(p) + a2 * Rat(q) + m.constant(q);
  m.energy_value = {{"E", mu * Rat(-2) * (u * Rat(q) + shift)}};
  // t = -(L1 + 2 mu1 (a1+1)) / (4 mu1), u = -(E + 2 mu (p a1 + p + q a2 + q)) / (2 mu q)
  m.rewrites = {{m.index, m.constant(0), false,
                 RFunc(-(m.var("L1") + mu1 * Rat(2) * (a1 + one)), mu1 * Rat(4))},
                {m.sym("u"), m.constant(0), false, RFunc(-(m.var("E") + mu * Rat(2) * shift), mu * Rat(2 * q))}};
  m.notes.push_back(
      "the model section writes [L2,Phi+] = -4pq mu Phi+; the diagonal operator of the model is L1, so the "
      "identity is checked against L1");
  m.notes.push_back(
      "the displayed replacements for u and n in P1/P2 carry the wrong sign relative to the eigenvalue "
      "formulas; the inverse of the eigenvalue formulas is used");
  return m;
}

// TTW and its Stackel image share the same difference operators.
SystemModel ttw_like(int p, int q, bool kepler) {
  SystemModel m;
  m.p = p;
  m.q = q;
  m.k = rat(p, q);
  const std::string w = kepler ? "w" : "omega";
  m.syms = kepler ? exact::make_symbols({"s", "u", "a", "b", "w", "Z", "Hp", "L2"})
                  : exact::make_symbols({"s", "u", "a", "b", "omega", "E", "L2"});
  m.index = 0;
  m.parameters = {"u", "a", "b", w};
  m.invariants = kepler ? std::vector<std::string>{"Z", "Hp", "L2"} : std::vector<std::string>{"E", "L2"};
  m.separation = "L2";
  const Rat k = m.k;
  MPoly s = m.var("s"), u = m.var("u"), a = m.var("a"), b = m.var("b"), om = m.var(w);
  MPoly one = m.constant(1);
  m.center = m.constant(0);
  m.centered = s * Rat(2);
  m.step = q;
  m.separation_value = s * s * Rat(-4 * k * k);
  MPoly level = u * Rat(2) + one + (a + b + one) * k;  // E = -2 omega * level
  MPoly ucenter = -(one + (a + b + one) * k) * rat(1, 2);
  DiagonalRewrite srw{m.index, m.constant(0), true, RFunc(m.var("L2") * Rat(-1 / (4 * k * k)))};
  if (!kepler) {
    m.energy_value = {{"E", om * Rat(-2) * level}};
    m.rewrites = {srw, {m.sym("u"), ucenter, true, RFunc(m.var("E").pow(2), om.pow(2) * Rat(16))}};
    m.notes.push_back(
        "the displayed replacement u -> -2 - (H + 2 omega k(a+b+1))/(4 omega) does not invert the energy "
        "formula; u = -(E + 2 omega (1 + k(a+b+1)))/(4 omega) is used");
  } else {
    // w is the image of omega: w^2 = 4 Hp, and Z = E/4.
    m.energy_value = {{"Z", om * rat(-1, 2) * level}, {"Hp", om * om * rat(1, 4)}};
    m.rewrites = {srw,
                  {m.sym("w"), m.constant(0), true, RFunc(m.var("Hp") * Rat(4))},
                  {m.sym("u"), ucenter, true, RFunc(m.var("Z").pow(2), m.var("Hp") * Rat(4))}};
    m.notes.push_back("Stackel image of the TTW model: omega^2 -> 4 Hp, E -> 4 Z; w stands for omega with w^2 = 4 Hp");
  }
  return m;
}

}  // namespace

SystemModel build_model(SystemId id, int p, int q) {
  check_pq(p, q);
  SystemModel m;
  switch (id) {
    case SystemId::Sphere: m = sphere(p, q); break;
    case SystemId::ComplexEuclidean: m = complex_euclidean(p, q); break;
    case SystemId::CagedOscillator: m = caged(p, q); break;
    case SystemId::TTW: m = ttw_like(p, q, false); break;
    case SystemId::KeplerDeformed: m = ttw_like(p, q, true); break;
  }
  m.id = id;
  m.p = p;
  m.q = q;
  m.k = exact::rat(p, q);
  return m;
}

}  // namespace ladder::systems
