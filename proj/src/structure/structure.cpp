#include "ladder/structure/structure.hpp"

#include <mutex>

namespace ladder::structure {

using exact::pochhammer;
using exact::rat;
using systems::SystemId;

namespace {

MPoly diagonal_part(const ShiftOp& op, const std::string& what) {
  if (op.terms().size() > 1 || (!op.is_zero() && op.terms().begin()->first != 0))
    throw OracleMismatch(what + " is not diagonal");
  RFunc c = op.coefficient(0);
  if (!c.is_polynomial()) throw OracleMismatch(what + " has a non-polynomial multiplier");
  return c.as_polynomial();
}

void expect(const MPoly& computed, const MPoly& oracle, const std::string& what) {
  if (!(computed == oracle))
    throw OracleMismatch(what + ": composition gives " + computed.to_string() + ", closed form gives " +
                         oracle.to_string());
}

Rat sign_pow(int e) { return Rat(e % 2 ? -1 : 1); }

}  // namespace

const MPoly& PPolys::get(const std::string& name) const {
  for (const auto& [n, poly] : polys)
    if (n == name) return poly;
  throw std::out_of_range("no product polynomial named '" + name + "'");
}

Products derive_products(const SystemModel& m, const LadderPair& lp) {
  Products pr;
  pr.raise_lower = diagonal_part(compose(lp.raise, lp.lower), "raise o lower");
  pr.lower_raise = diagonal_part(compose(lp.lower, lp.raise), "lower o raise");
  const int p = m.p, q = m.q;
  const Rat k = m.k;
  MPoly one = m.constant(1);
  const std::size_t x = m.index;
  switch (m.id) {
    case SystemId::Sphere: {
      MPoly N = m.var("N"), n = m.var("n"), a = m.var("a");
      MPoly knu = (N + m.constant(rat(1, 2))) * k;
      MPoly F1 = pochhammer(a - N, q) * pochhammer(-N - a, q) * pochhammer(-n - knu, p) *
                 pochhammer(n - knu + one, p) * sign_pow(q);
      MPoly F2 = pochhammer(N - a + one, q) * pochhammer(N + a + one, q) * pochhammer(-n + knu, p) *
                 pochhammer(n + knu + one, p) * sign_pow(q);
      expect(pr.raise_lower, F1, "F1");
      expect(pr.lower_raise, F2, "F2");
      if (!(F1.substitute(x, -N - one) == F2)) throw OracleMismatch("F1(n,-N-1) differs from F2(n,N)");
      pr.raise_lower_name = "F1";
      pr.lower_raise_name = "F2";
      pr.checks.push_back("F1, F2 agree with their Pochhammer closed forms and F1(n,-N-1) = F2(n,N)");
      break;
    }
    case SystemId::ComplexEuclidean: {
      MPoly b2p = m.var("beta").pow(2 * p);
      expect(pr.raise_lower, b2p, "Phi+ Phi-");
      expect(pr.lower_raise, b2p, "Phi- Phi+");
      pr.raise_lower_name = "Phi+Phi-";
      pr.lower_raise_name = "Phi-Phi+";
      pr.checks.push_back("both ladder products equal beta^(2p)");
      break;
    }
    case SystemId::CagedOscillator: {
      MPoly t = m.var("t"), u = m.var("u"), a1 = m.var("a1"), a2 = m.var("a2"), mu = m.var("mu");
      MPoly pre = (mu * mu * Rat(-16 * p * p)).pow(q) * (mu * mu * Rat(-16 * q * q)).pow(p);
      MPoly Phi1 = pre * pochhammer(t - m.constant(q) + one, q) * pochhammer(-u + (t - m.constant(q)) * k - a2, p) *
                   pochhammer(-t - a1, q) * pochhammer(u - t * k + one, p);
      MPoly Phi2 = pre * pochhammer(-t - m.constant(q) - a1, q) * pochhammer(u - (t + m.constant(q)) * k + one, p) *
                   pochhammer(t + one, q) * pochhammer(-u + t * k - a2, p);
      expect(pr.raise_lower, Phi1, "Phi1");
      expect(pr.lower_raise, Phi2, "Phi2");
      pr.raise_lower_name = "Phi1";
      pr.lower_raise_name = "Phi2";
      pr.checks.push_back("Phi1 and Phi2 agree with the four-Pochhammer closed forms");
      break;
    }
    case SystemId::TTW:
    case SystemId::KeplerDeformed: {
      const std::string wname = m.id == SystemId::TTW ? "omega" : "w";
      MPoly s = m.var("s"), u = m.var("u"), a = m.var("a"), b = m.var("b"), w = m.var(wname);
      MPoly n = s - (a + b + one) * rat(1, 2);
      MPoly xi = m.constant(Rat(1u << (2 * q))) * sign_pow(p) * w.pow(2 * p) * pochhammer(n + one, q) *
                 pochhammer(n + a + one, q) * pochhammer(n + b + one, q) * pochhammer(n + a + b + one, q) *
                 pochhammer(-u + n * k, p) * pochhammer(u + (n + a + b + one) * k + one, p);
      expect(pr.lower_raise, xi, "xi");
      expect(pr.raise_lower, xi.shifted(x, Rat(-q)), "eta");
      pr.raise_lower_name = "eta";
      pr.lower_raise_name = "xi";
      pr.checks.push_back("xi agrees with its closed form and eta_n = xi_(n-q)");
      break;
    }
  }
  return pr;
}

PPolys extract_P(const SystemModel& m, const Products& pr) {
  PPolys out;
  auto add = [&](const std::string& name, const MPoly& value) {
    MPoly inv = m.to_invariants(value);
    if (!(m.from_invariants_poly(inv) == value))
      throw OracleMismatch(name + " does not survive the round trip through the invariants");
    out.polys.emplace_back(name, inv);
  };
  switch (m.id) {
    case SystemId::Sphere: {
      add("P+", pr.raise_lower + pr.lower_raise);
      add("P-", exact::exact_div(pr.raise_lower - pr.lower_raise, m.centered));
      out.checks.push_back("F1 + F2 and (F1 - F2)/(N + 1/2) are polynomials in H and L2");
      break;
    }
    case SystemId::ComplexEuclidean:
      add("Phi+Phi-", pr.raise_lower);
      out.checks.push_back("Phi+ Phi- = (-H)^p with H = -beta^2");
      break;
    case SystemId::CagedOscillator: {
      add("P1", pr.raise_lower);
      add("P2", pr.lower_raise);
      out.checks.push_back("Phi1 and Phi2 are polynomials P1(H,L1), P2(H,L1)");
      // The displayed replacements put n -> (L1 - 2mu1(a1+1))/(4mu1) and
      // u -> (H + 2mu(...))/(2mu q); compare the result with P1.
      const Rat p = Rat(m.p), q = Rat(m.q);
      MPoly mu = m.var("mu"), a1 = m.var("a1"), a2 = m.var("a2"), one = m.constant(1);
      MPoly shift = a1 * p + m.constant(p) + a2 * q + m.constant(q);
      RFunc n_disp(m.var("L1") - mu * Rat(2 * p) * (a1 + one), mu * Rat(4 * p));
      RFunc u_disp(m.var("E") + mu * Rat(2) * shift, mu * Rat(2 * q));
      RFunc disp = exact::substitute(exact::substitute(pr.raise_lower, m.index, n_disp), m.sym("u"), u_disp);
      if (!(disp == RFunc(out.polys[0].second)))
        out.notes.push_back(
            "with the displayed replacements for n and u, the four-Pochhammer product does not reproduce P1; the "
            "inverted eigenvalue formulas are used");
      break;
    }
    case SystemId::TTW:
    case SystemId::KeplerDeformed: {
      add("P+", pr.lower_raise + pr.raise_lower);
      MPoly minus = exact::exact_div(pr.raise_lower - pr.lower_raise, m.centered);
      add("P-", minus);
      add("P-def", -minus);
      const std::string energy = m.id == SystemId::TTW ? "E" : "Z";
      for (const auto& [name, poly] : out.polys)
        if (!exact::is_even_in(poly, m.sym(energy)))
          throw OracleMismatch(name + " is not even in " + energy);
      out.checks.push_back("P+ and P- are polynomials in " + energy + "^2, L2 and the remaining parameters");
      out.notes.push_back(
          "P- is taken as (eta - xi)/(2n+a+b+1) so that the displayed relations hold; the displayed definition "
          "(xi - eta)/(2n+a+b+1) is kept as P-def and checked separately");
      break;
    }
  }
  return out;
}

OpSet<ShiftOp> operator_set(const SystemModel& m, const LadderPair& lp, const SymmetricPair& sym, const PPolys& P) {
  OpSet<ShiftOp> ops;
  ops.set("I", m.identity());
  ops.set(m.separation, m.separation_op());
  ops.set("L3", sym.L3);
  ops.set("L4", sym.L4);
  ops.set("raise", lp.raise);
  ops.set("lower", lp.lower);
  for (const auto& [name, poly] : P.polys) ops.set(name, m.from_invariants(poly));
  for (const auto& [name, value] : m.energy_value) ops.set(name, m.diag(value));
  if (m.id == SystemId::CagedOscillator) ops.set("mu", m.diag(m.var("mu")));
  return ops;
}

std::vector<EquationResult> evaluate_equations(const std::vector<EquationSpec>& specs, const OpSet<ShiftOp>& ops,
                                               unsigned jobs) {
  std::vector<EquationResult> out(specs.size());
  shift::parallel_for(specs.size(), jobs, [&](std::size_t i) {
    const EquationSpec& e = specs[i];
    EquationResult r{e.name, e.display, e.note, e.kind, ShiftOp(), false};
    try {
      r.residual = e.exact_residual(ops);
      r.verified = r.residual.is_zero();
    } catch (const std::exception& ex) {
      r.note += (r.note.empty() ? "" : "; ") + std::string("evaluation failed: ") + ex.what();
    }
    out[i] = std::move(r);
  });
  return out;
}

const EquationResult* StructureReport::find(const std::string& name) const {
  for (const auto& e : equations)
    if (e.name == name) return &e;
  return nullptr;
}

bool StructureReport::verified(EquationKind kind) const {
  for (const auto& e : equations)
    if (e.kind == kind && !e.verified) return false;
  return true;
}

bool StructureReport::casimir_verified() const {
  const EquationResult* c = find("Casimir");
  return c && c->verified;
}

StructureReport verify_structure(const SystemModel& m, unsigned jobs) {
  StructureReport r;
  r.model = m;
  r.ladders = systems::build_ladders(m);
  r.sym = systems::symmetrize(m, r.ladders);
  r.products = derive_products(m, r.ladders);
  r.P = extract_P(m, r.products);
  r.ops = operator_set(m, r.ladders, r.sym, r.P);
  r.equations = evaluate_equations(equation_specs(m), r.ops, jobs);
  r.notes = m.notes;
  r.notes.insert(r.notes.end(), r.ladders.notes.begin(), r.ladders.notes.end());
  r.notes.insert(r.notes.end(), r.P.notes.begin(), r.P.notes.end());
  if (m.id == SystemId::TTW) r.L5 = build_L5(r);
  return r;
}

}  // namespace ladder::structure
