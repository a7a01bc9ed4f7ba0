#pragma once

#include "ladder/exact/matrix.hpp"
#include "ladder/systems/model.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace ladder::structure {

using exact::Matrix;
using exact::MPoly;
using exact::Rat;
using exact::RFunc;
using shift::ShiftOp;
using systems::SystemModel;

// Named operators of one realization: difference operators or matrices.
// Scalars that are symbols in the exact model (mu, H) enter as diagonal ops.
template <class T>
class OpSet {
 public:
  void set(const std::string& name, T op) { ops_.insert_or_assign(name, std::move(op)); }
  bool has(const std::string& name) const { return ops_.count(name) != 0; }
  const T& operator()(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) throw std::out_of_range("operator '" + name + "' is not available");
    return it->second;
  }
  const std::map<std::string, T>& all() const { return ops_; }

 private:
  std::map<std::string, T> ops_;
};

template <class T>
T comm(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, ShiftOp>) return shift::commutator(a, b);
  else return a * b - b * a;
}

template <class T>
T acomm(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, ShiftOp>) return shift::anticommutator(a, b);
  else return a * b + b * a;
}

template <class T>
T sym3(const T& a, const T& b, const T& c) {
  if constexpr (std::is_same_v<T, ShiftOp>) return shift::symmetrizer3(a, b, c);
  else return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
}

template <class T>
T pow_op(const T& a, unsigned e) {
  T r = a;
  for (unsigned i = 1; i < e; ++i) r = r * a;
  return r;
}

enum class EquationKind {
  Displayed,   // as printed for the system
  Corrected,   // consistent replacement for a displayed form that fails
  Candidate,   // alternative reading of an ambiguous displayed term
  Convention,  // displayed form under a sign convention the engine does not adopt
  Example,     // worked example at a specific (p, q)
  Derived      // supporting identity not printed as such
};
std::string kind_name(EquationKind k);

// An identity lhs = rhs, stored as the residual lhs - rhs so both the exact
// and the matrix realization evaluate the same expression.
struct EquationSpec {
  std::string name;
  std::string display;
  EquationKind kind = EquationKind::Displayed;
  std::string note;
  std::vector<std::string> needs;
  std::function<ShiftOp(const OpSet<ShiftOp>&)> exact_residual;
  std::function<Matrix(const OpSet<Matrix>&)> matrix_residual;
};

template <class F>
EquationSpec make_equation(std::string name, std::string display, EquationKind kind, std::vector<std::string> needs,
                           F residual, std::string note = {}) {
  return {std::move(name), std::move(display), kind,     std::move(note),
          std::move(needs), residual,           residual};
}

// Structure equations of the model's system at its (p, q), including the
// worked examples that apply to that (p, q).
std::vector<EquationSpec> equation_specs(const SystemModel& model);

}  // namespace ladder::structure
