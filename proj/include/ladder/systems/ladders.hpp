#pragma once

#include "ladder/systems/model.hpp"

namespace ladder::systems {

// Raising and lowering operators of a model. The raw actions are the
// eigenbasis multipliers produced by the factor recurrences; the model
// operators may differ from them by a diagonal gauge (a conjugation), which
// leaves every product and structure relation unchanged.
struct LadderPair {
  ShiftOp raise;
  ShiftOp lower;
  MPoly raise_action;  // coefficient of `raise` at shift +step
  MPoly lower_action;  // coefficient of `lower` at shift -step
  MPoly raw_raise_action;
  MPoly raw_lower_action;
  RFunc gauge;  // raise_action / raw_raise_action; lower picks up the inverse, shifted
  std::vector<std::string> checks;  // verifications performed at construction
  std::vector<std::string> notes;
};

// Composes the factor recurrences one step at a time and compares with the
// closed-form actions; throws ConstructionMismatch on any disagreement.
LadderPair build_ladders(const SystemModel& model);

struct SymmetricPair {
  ShiftOp L3;
  ShiftOp L4;
  std::vector<std::string> checks;
};

// L3 = raise + lower, L4 = (raise - lower)/centered index, with the twist of
// the complex-Euclidean family and no division for the caged oscillator.
// Certifies reflection invariance and, where the model claims it, that the
// operators map polynomials in the squared centered index to polynomials of a
// fixed parity (throws exact::NotEven / exact::NotDivisible otherwise).
SymmetricPair symmetrize(const SystemModel& model, const LadderPair& ladders);

// Parity of the image of polynomials of a given parity under the transposed
// action: +1 even, -1 odd. Throws NotDivisible if a denominator survives and
// NotEven if the image has no definite parity. Tested on centered^(2j) (or
// centered^(2j+1) for input_parity -1), j <= max_power.
int polynomial_parity(const SystemModel& model, const ShiftOp& op, int max_power = 3, int input_parity = 1);

}  // namespace ladder::systems
