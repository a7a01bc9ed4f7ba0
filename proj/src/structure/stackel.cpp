#include "ladder/structure/structure.hpp"

namespace ladder::structure {

using exact::rat;
using systems::SystemId;

namespace {

// TTW (s,u,a,b,omega,E,L2) -> Kepler (s,u,a,b,w,Z,Hp,L2): E -> 4Z, omega -> w,
// then even powers of w -> 4Hp.
MPoly forward(const MPoly& poly, const SystemModel& km) {
  std::vector<MPoly> images{km.var("s"), km.var("u"), km.var("a"), km.var("b"),
                            km.var("w"), km.var("Z") * Rat(4), km.var("L2")};
  MPoly mapped = exact::remap(poly, km.syms, images);
  shift::DiagonalRewrite w2{km.sym("w"), km.constant(0), true, RFunc(km.var("Hp") * Rat(4))};
  return shift::rewrite_polynomial(mapped, {w2});
}

// Kepler -> TTW: Z -> E/4, Hp -> omega^2/4.
MPoly inverse(const MPoly& poly, const SystemModel& tm) {
  std::vector<MPoly> images{tm.var("s"),          tm.var("u"),
                            tm.var("a"),          tm.var("b"),
                            tm.var("omega"),      tm.var("E") * rat(1, 4),
                            tm.var("omega").pow(2) * rat(1, 4), tm.var("L2")};
  return exact::remap(poly, tm.syms, images);
}

}  // namespace

StructureReport stackel_map(const StructureReport& ttw, unsigned jobs) {
  if (ttw.model.id != SystemId::TTW) throw systems::UnsupportedSystem("the Stackel map starts from a TTW report");
  const SystemModel km = systems::build_model(SystemId::KeplerDeformed, ttw.model.p, ttw.model.q);
  StructureReport r;
  r.model = km;
  r.ladders = systems::build_ladders(km);
  r.sym = systems::symmetrize(km, r.ladders);
  r.products = derive_products(km, r.ladders);
  PPolys direct = extract_P(km, r.products);

  StackelData sd;
  sd.P_agree = true;
  sd.inverse_agree = true;
  PPolys mapped;
  for (const auto& [name, poly] : ttw.P.polys) {
    MPoly image = forward(poly, km);
    mapped.polys.emplace_back(name, image);
    if (!(image == direct.get(name))) sd.P_agree = false;
    if (!(inverse(image, ttw.model) == poly)) sd.inverse_agree = false;
  }
  mapped.checks.push_back("P-polynomials obtained from the TTW report by omega^2 -> 4H', H -> 4Z");
  mapped.notes = direct.notes;
  r.P = mapped;
  r.ops = operator_set(km, r.ladders, r.sym, r.P);
  r.equations = evaluate_equations(equation_specs(km), r.ops, jobs);

  // H' = Z^2 / (2(m+nk)+1+(a+b+1)k)^2 with u = m + nk.
  MPoly one = km.constant(1);
  MPoly level = km.var("u") * Rat(2) + one + (km.var("a") + km.var("b") + one) * km.k;
  RFunc energy(km.from_invariants_poly(km.var("Z").pow(2)), level.pow(2));
  sd.energy_verified = energy == RFunc(km.from_invariants_poly(km.var("Hp")));
  sd.energy_formula = "H' = Z^2/(2(m+nk)+1+(a+b+1)k)^2, k = " + exact::to_string(km.k);
  r.stackel = sd;

  r.notes = km.notes;
  r.notes.insert(r.notes.end(), r.P.notes.begin(), r.P.notes.end());
  if (!sd.P_agree) r.notes.push_back("substituted P-polynomials differ from the ones derived in the Kepler model");
  return r;
}

}  // namespace ladder::structure
