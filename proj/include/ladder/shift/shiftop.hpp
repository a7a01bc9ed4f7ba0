#pragma once

#include "ladder/exact/rfunc.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ladder::shift {

using exact::MPoly;
using exact::Rat;
using exact::RFunc;
using exact::Symbols;

struct NotDiagonal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SymbolMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Difference operator in one index symbol s, acting on the delta basis by
//   O e_s = sum_m c_m(s) e_{s+m}.
// Products follow operator order on that basis: (A*B) e_s = A(B e_s).
class ShiftOp {
 public:
  ShiftOp() = default;  // empty placeholder without a symbol table
  ShiftOp(Symbols syms, std::size_t index) : syms_(std::move(syms)), index_(index) {}

  static ShiftOp diagonal(const Symbols& syms, std::size_t index, const RFunc& c);
  static ShiftOp single(const Symbols& syms, std::size_t index, int shift, const RFunc& c);
  static ShiftOp identity(const Symbols& syms, std::size_t index);

  const Symbols& symbols() const { return syms_; }
  std::size_t index() const { return index_; }
  const std::map<int, RFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RFunc coefficient(int shift) const;
  int max_shift() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int min_shift() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  ShiftOp operator-() const;
  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(const Rat& c, const ShiftOp& a) { return a.scaled(c); }
  friend bool operator==(const ShiftOp& a, const ShiftOp& b);

  ShiftOp scaled(const Rat& c) const;
  // Multiplies every coefficient by a function of the parameters only.
  ShiftOp scaled(const RFunc& c) const;
  // Each c_m(s) becomes c_m(s)/d(s): the operator composed with the diagonal
  // operator 1/d on the right.
  ShiftOp right_divided(const RFunc& d) const;
  // Substitutes a parameter symbol (never the index).
  ShiftOp substituted(std::size_t var, const RFunc& value) const;
  ShiftOp evaluated(std::size_t var, const Rat& value) const;

  std::string to_string() const;

 private:
  void check_compat(const ShiftOp& o) const;
  friend ShiftOp compose(const ShiftOp& a, const ShiftOp& b);
  Symbols syms_;
  std::size_t index_;
  std::map<int, RFunc> terms_;
};

ShiftOp compose(const ShiftOp& a, const ShiftOp& b);
inline ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) { return compose(a, b); }
ShiftOp power(const ShiftOp& a, unsigned e);

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b);
ShiftOp anticommutator(const ShiftOp& a, const ShiftOp& b);
// Sum over the six orderings of a, b, c.
ShiftOp symmetrizer3(const ShiftOp& a, const ShiftOp& b, const ShiftOp& c);

// Conjugation by the reflection s -> 2*center - s, optionally combined with a
// sign character: the term at shift m moves to -m, its coefficient is
// evaluated at the reflected index and multiplied by twist^(m/step).
// Involutive and multiplicative.
ShiftOp reflect(const ShiftOp& a, const MPoly& center, const Rat& twist = Rat(1), int step = 1);

// Action on functions f(s): (A f)(s) = sum_m twist^(m/step) c_m(s) f(s+m).
// This is the transpose of the basis action; used to certify that operators
// map polynomials to polynomials.
RFunc apply_transpose(const ShiftOp& a, const RFunc& f, const Rat& twist = Rat(1), int step = 1);

// One step of rewriting a diagonal coefficient into symmetry eigenvalues:
// symbol -> symbol + center; if even, require evenness and pass to the
// square; finally replace the symbol (or its square) by `value`.
struct DiagonalRewrite {
  std::size_t symbol;
  MPoly center;
  bool even = true;
  RFunc value;
};

MPoly to_diagonal(const ShiftOp& a, const std::vector<DiagonalRewrite>& rewrites);
MPoly rewrite_polynomial(const MPoly& p, const std::vector<DiagonalRewrite>& rewrites);

nlohmann::ordered_json to_json(const ShiftOp& a);
ShiftOp shiftop_from_json(const Symbols& syms, std::size_t index, const nlohmann::ordered_json& j);

// Applies `fn` to independent items in parallel (bounded by `jobs`), keeping
// output order.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace ladder::shift
