#pragma once

#include "ladder/shift/shiftop.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ladder::systems {

using exact::MPoly;
using exact::Rat;
using exact::RFunc;
using exact::Symbols;
using shift::DiagonalRewrite;
using shift::ShiftOp;

enum class SystemId { Sphere, ComplexEuclidean, CagedOscillator, TTW, KeplerDeformed };

struct UnsupportedSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConstructionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<SystemId>& all_systems();
std::string system_name(SystemId id);  // "sphere", "complex-euclidean", "caged", "ttw", "kepler"
SystemId parse_system(std::string_view name);

// One-variable difference model of a system at fixed k = p/q.
//
// Every operator acts on the delta basis e_x of a single index symbol x. The
// other symbols are parameters; the energy-carrying parameter (n, beta or u)
// is tied to the energy by `energy_value`. Invariant symbols (H or E, L2 or
// L1, and for the Kepler model Z and Hp) are only used for polynomials
// produced by `to_invariants`.
struct SystemModel {
  SystemId id = SystemId::Sphere;
  int p = 1, q = 1;
  Rat k{1};
  Symbols syms;
  std::size_t index = 0;
  std::vector<std::string> parameters;
  std::vector<std::string> invariants;  // energy symbol(s) first, separation symbol last
  std::string separation;               // "L2" or "L1"
  MPoly center;                         // reflection x -> 2*center - x
  MPoly centered;                       // divisor used for the odd combination (x - center, scaled)
  Rat twist{1};
  int twist_step = 1;
  int step = 1;  // ladder shift: q, or p for the complex-Euclidean family
  bool has_reflection = true;
  MPoly separation_value;                        // eigenvalue of the separation symmetry
  std::vector<std::pair<std::string, MPoly>> energy_value;  // invariant name -> value in model symbols
  std::vector<DiagonalRewrite> rewrites;
  std::vector<std::string> notes;

  MPoly var(std::string_view name) const { return MPoly::variable(syms, name); }
  MPoly constant(const Rat& c) const { return MPoly(syms, c); }
  std::size_t sym(std::string_view name) const { return syms->index(name); }
  ShiftOp diag(const RFunc& c) const { return ShiftOp::diagonal(syms, index, c); }
  ShiftOp identity() const { return ShiftOp::identity(syms, index); }
  ShiftOp zero() const { return ShiftOp(syms, index); }
  ShiftOp separation_op() const { return diag(separation_value); }

  // Diagonal coefficient -> polynomial in the invariants and parameters.
  MPoly to_invariants(const ShiftOp& diagonal) const;
  MPoly to_invariants(const MPoly& coefficient) const;
  // Inverse direction: replaces each invariant by its model value.
  MPoly from_invariants_poly(const MPoly& poly) const;
  ShiftOp from_invariants(const MPoly& poly) const { return diag(from_invariants_poly(poly)); }

  nlohmann::ordered_json summary() const;
};

SystemModel build_model(SystemId id, int p, int q);

}  // namespace ladder::systems
