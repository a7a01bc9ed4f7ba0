#pragma once

#include "ladder/exact/mpoly.hpp"

namespace ladder::exact {

// Reduced ratio of polynomials. After construction gcd(num, den) = 1 and the
// leading coefficient of den is 1, so equal functions compare equal term by
// term.
class RFunc {
 public:
  RFunc() = default;
  RFunc(const MPoly& p) : num_(p), den_(p.symbols(), Rat(1)) {}  // NOLINT: polynomials embed
  RFunc(MPoly num, MPoly den);                                  // normalizes; throws on zero den
  RFunc(const Symbols& syms, const Rat& c) : num_(syms, c), den_(syms, Rat(1)) {}

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const Symbols& symbols() const { return num_.symbols() ? num_.symbols() : den_.symbols(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  MPoly as_polynomial() const;  // throws if den is not constant

  RFunc operator-() const;
  friend RFunc operator+(const RFunc& a, const RFunc& b);
  friend RFunc operator-(const RFunc& a, const RFunc& b);
  friend RFunc operator*(const RFunc& a, const RFunc& b);
  friend RFunc operator/(const RFunc& a, const RFunc& b);
  friend RFunc operator*(const RFunc& a, const Rat& c);
  RFunc& operator+=(const RFunc& o) { return *this = *this + o; }
  RFunc& operator-=(const RFunc& o) { return *this = *this - o; }
  RFunc& operator*=(const RFunc& o) { return *this = *this * o; }
  friend bool operator==(const RFunc& a, const RFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RFunc shifted(std::size_t var, const Rat& delta) const;
  RFunc substitute(std::size_t var, const MPoly& value) const;
  RFunc evaluate(std::size_t var, const Rat& value) const;  // throws if den vanishes
  RFunc scaled_variable(std::size_t var, const Rat& c) const;

  std::string to_string() const;
  // "num" or "num / den" in the polynomial term-list format, den in "( )".
  std::string serialize() const;
  static RFunc parse(const Symbols& syms, std::string_view text);

  void adopt(const Symbols& s) {
    num_.adopt(s);
    den_.adopt(s);
  }

 private:
  struct Trusted {};
  RFunc(MPoly num, MPoly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  MPoly num_;
  MPoly den_{nullptr, Rat(1)};
};

// Replaces `var` by a rational function.
RFunc substitute(const MPoly& p, std::size_t var, const RFunc& value);
RFunc substitute(const RFunc& f, std::size_t var, const RFunc& value);

}  // namespace ladder::exact
