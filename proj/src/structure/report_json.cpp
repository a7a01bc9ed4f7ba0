#include "ladder/structure/structure.hpp"

namespace ladder::structure {

namespace {

nlohmann::ordered_json equation_json(const EquationResult& e, bool include_residuals) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["display"] = e.display;
  j["kind"] = kind_name(e.kind);
  j["status"] = e.verified ? "verified" : "failed";
  if (e.verified) j["residual"] = "0";
  else if (include_residuals) j["residual"] = shift::to_json(e.residual);
  else j["residual"] = "nonzero";
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const StructureReport& r, bool include_residuals) {
  nlohmann::ordered_json j;
  j["system"] = systems::system_name(r.model.id);
  j["p"] = r.model.p;
  j["q"] = r.model.q;
  j["model"] = r.model.summary();

  nlohmann::ordered_json lad;
  lad["raise_action"] = r.ladders.raise_action.to_string();
  lad["lower_action"] = r.ladders.lower_action.to_string();
  lad["raw_raise_action"] = r.ladders.raw_raise_action.to_string();
  lad["raw_lower_action"] = r.ladders.raw_lower_action.to_string();
  lad["gauge"] = r.ladders.gauge.to_string();
  lad["checks"] = r.ladders.checks;
  lad["symmetrization_checks"] = r.sym.checks;
  j["ladders"] = lad;

  nlohmann::ordered_json prod;
  prod[r.products.raise_lower_name] = r.products.raise_lower.to_string();
  prod[r.products.lower_raise_name] = r.products.lower_raise.to_string();
  prod["checks"] = r.products.checks;
  j["products"] = prod;

  nlohmann::ordered_json P = nlohmann::ordered_json::object();
  for (const auto& [name, poly] : r.P.polys) P[name] = poly.to_string();
  j["P_polys"] = P;

  nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
  for (const auto& e : r.equations) eqs.push_back(equation_json(e, include_residuals));
  j["equations"] = eqs;

  nlohmann::ordered_json cas;
  const EquationResult* c = r.find("Casimir");
  cas["display"] = c ? c->display : "";
  cas["status"] = c && c->verified ? "verified" : "failed";
  for (const auto& e : r.equations)
    if (e.name.rfind("Casimir ", 0) == 0 && e.kind != EquationKind::Displayed)
      cas["alternatives"][e.name] = e.verified ? "verified" : "failed";
  j["casimir"] = cas;

  if (r.L5) {
    const L5Data& d = *r.L5;
    nlohmann::ordered_json l;
    l["parity_case"] = d.parity_case;
    l["Q_residue"] = d.Q_residue.to_string();
    l["Q_pairing"] = d.Q_pair.to_string();
    l["Q_closed"] = d.Q_closed.to_string();
    l["residue_matches_pairing"] = d.residue_matches_pair;
    l["closed_form_matches"] = d.closed_matches;
    if (d.closed_ratio) l["closed_over_residue"] = exact::to_string(*d.closed_ratio);
    l["beta"] = d.beta.to_string();
    l["commutator_L2_L5_is_L4"] = d.commutator_is_L4;
    l["polynomial"] = d.polynomial;
    nlohmann::ordered_json ch = nlohmann::ordered_json::array();
    for (const auto& e : d.checks) ch.push_back(equation_json(e, include_residuals));
    l["relations"] = ch;
    l["notes"] = d.notes;
    j["L5"] = l;
  }
  if (r.stackel) {
    nlohmann::ordered_json s;
    s["P_polys_agree"] = r.stackel->P_agree;
    s["inverse_map_agrees"] = r.stackel->inverse_agree;
    s["energy_formula"] = r.stackel->energy_formula;
    s["energy_verified"] = r.stackel->energy_verified;
    j["stackel"] = s;
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace ladder::structure
