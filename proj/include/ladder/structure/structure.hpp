#pragma once

#include "ladder/structure/equations.hpp"
#include "ladder/systems/ladders.hpp"

#include <optional>

#include "json.hpp"

namespace ladder::structure {

using systems::LadderPair;
using systems::SymmetricPair;

struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleNotRemovable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagonal multipliers of the two ladder products, each compared with an
// independent Pochhammer closed form.
struct Products {
  MPoly raise_lower;  // raise o lower (lower applied first)
  MPoly lower_raise;  // lower o raise
  std::string raise_lower_name, lower_raise_name;
  std::vector<std::string> checks;
};
Products derive_products(const SystemModel& model, const LadderPair& ladders);

// Product polynomials in the invariants: P+/P- (sphere, TTW, Kepler), P1/P2
// (caged) or the single product (-H)^p of the complex-Euclidean family.
struct PPolys {
  std::vector<std::pair<std::string, MPoly>> polys;
  std::vector<std::string> checks, notes;
  const MPoly& get(const std::string& name) const;
};
PPolys extract_P(const SystemModel& model, const Products& products);

struct EquationResult {
  std::string name, display, note;
  EquationKind kind = EquationKind::Displayed;
  ShiftOp residual;
  bool verified = false;
};

struct L5Data {
  std::string parity_case;
  MPoly Q_residue, Q_pair, Q_closed;  // polynomials in the energy, omega, a, b
  bool residue_matches_pair = false;
  bool closed_matches = false;
  std::optional<Rat> closed_ratio;  // Q_closed / Q_pair when constant
  RFunc beta;
  ShiftOp L5;
  bool commutator_is_L4 = false;
  bool polynomial = false;
  std::vector<EquationResult> checks;  // extra relations (k = 1)
  std::vector<std::string> notes;
  bool consistent() const { return residue_matches_pair && closed_matches && commutator_is_L4 && polynomial; }
};

struct StackelData {
  bool P_agree = false;        // substituted TTW polynomials equal the directly derived ones
  bool inverse_agree = false;  // mapping back reproduces the TTW polynomials
  std::string energy_formula;
  bool energy_verified = false;
};

struct StructureReport {
  SystemModel model;
  LadderPair ladders;
  SymmetricPair sym;
  Products products;
  PPolys P;
  OpSet<ShiftOp> ops;
  std::vector<EquationResult> equations;
  std::optional<L5Data> L5;
  std::optional<StackelData> stackel;
  std::vector<std::string> notes;

  const EquationResult* find(const std::string& name) const;
  bool verified(EquationKind kind) const;  // all equations of that kind verified
  bool all_displayed_verified() const { return verified(EquationKind::Displayed); }
  bool casimir_verified() const;
};

// Model operators L2 (or L1), L3, L4, raise, lower, the identity, diagonal
// P operators rebuilt from the invariant polynomials, and scalar symbols.
OpSet<ShiftOp> operator_set(const SystemModel& model, const LadderPair& ladders, const SymmetricPair& sym,
                            const PPolys& P);

std::vector<EquationResult> evaluate_equations(const std::vector<EquationSpec>& specs, const OpSet<ShiftOp>& ops,
                                               unsigned jobs = 1);

StructureReport verify_structure(const SystemModel& model, unsigned jobs = 1);

// TTW-type models only. Records mismatches in the returned data; call
// require_consistent to turn them into exceptions.
L5Data build_L5(const StructureReport& report);
void require_consistent(const L5Data& data);

// Kepler report obtained from a TTW report by omega^2 -> 4H', E -> 4Z.
StructureReport stackel_map(const StructureReport& ttw, unsigned jobs = 1);

nlohmann::ordered_json to_json(const StructureReport& report, bool include_residuals = true);

}  // namespace ladder::structure
