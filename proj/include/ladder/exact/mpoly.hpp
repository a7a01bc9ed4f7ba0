#pragma once

#include "ladder/exact/rat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ladder::exact {

inline constexpr std::size_t kMaxSymbols = 12;

// Ordered, immutable list of symbol names. One table is shared by every
// polynomial of a computation so that exponent vectors line up.
class SymbolTable {
 public:
  explicit SymbolTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if unknown

 private:
  std::vector<std::string> names_;
};

using Symbols = std::shared_ptr<const SymbolTable>;

Symbols make_symbols(std::vector<std::string> names);
bool same_symbols(const Symbols& a, const Symbols& b);

struct Monomial {
  std::array<std::uint8_t, kMaxSymbols> exp{};
  std::uint16_t degree = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  bool divides(const Monomial& other) const;
};

// Graded lexicographic order in the fixed symbol order: total degree first,
// then the earlier symbol with the larger exponent wins.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEven : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted in decreasing
// graded-lex order with no zero coefficients. A default-constructed value is
// the zero polynomial without a symbol table; constants may also omit it and
// adopt the table of whatever they are combined with.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;
  explicit MPoly(Symbols syms) : syms_(std::move(syms)) {}
  MPoly(Symbols syms, const Rat& c);
  MPoly(Symbols syms, std::vector<Term> terms);  // canonicalizes

  static MPoly variable(const Symbols& syms, std::size_t index);
  static MPoly variable(const Symbols& syms, std::string_view name);

  const Symbols& symbols() const { return syms_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws if not constant
  Rat constant_term() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  std::vector<std::size_t> variables() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;

  // var -> var + delta
  MPoly shifted(std::size_t var, const Rat& delta) const;
  // var -> value
  MPoly substitute(std::size_t var, const MPoly& value) const;
  MPoly evaluate(std::size_t var, const Rat& value) const;
  // var -> c * var
  MPoly scaled_variable(std::size_t var, const Rat& c) const;

  // Coefficients as a polynomial in one variable: result[d] multiplies var^d.
  std::vector<MPoly> coefficients_in(std::size_t var) const;
  static MPoly from_coefficients(const Symbols& syms, std::size_t var, const std::vector<MPoly>& coeffs);
  // Groups terms by their exponents in the given variables; the key keeps only
  // those exponents, the value holds the remaining factor.
  std::map<std::vector<int>, MPoly> collect(const std::vector<std::size_t>& vars) const;

  MPoly monic() const;  // leading coefficient 1 (zero stays zero)

  // Human-readable, e.g. "3/4*s^2*a - 1".
  std::string to_string() const;
  // Canonical term list "e1,e2,...:n/d; ..." (empty string for zero).
  std::string serialize() const;
  static MPoly parse(const Symbols& syms, std::string_view text);

  // Adopts the symbol table of `other` when this value has none.
  void adopt(const Symbols& other);

 private:
  // Trusts that terms are already canonical.
  static MPoly raw(Symbols syms, std::vector<Term> terms) {
    MPoly r(std::move(syms));
    r.terms_ = std::move(terms);
    return r;
  }
  void check_compat(const MPoly& o);
  Symbols syms_;
  std::vector<Term> terms_;
};

std::optional<MPoly> try_exact_div(const MPoly& a, const MPoly& b);
MPoly exact_div(const MPoly& a, const MPoly& b);  // throws NotDivisible

// Greatest common divisor, normalized to be monic. gcd(0,0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

// (base)(base+1)...(base+length-1)
MPoly pochhammer(const MPoly& base, unsigned length);

// For p even in `var`, returns r with r(var^2) = p(var): exponents of `var`
// are halved, so in the result the symbol stands for its own square.
MPoly even_part_in(const MPoly& p, std::size_t var);
bool is_even_in(const MPoly& p, std::size_t var);
bool is_odd_in(const MPoly& p, std::size_t var);

// Rewrites p into another symbol table: symbol i of p's table is replaced by
// images[i], which must all live over `target`.
MPoly remap(const MPoly& p, const Symbols& target, const std::vector<MPoly>& images);

}  // namespace ladder::exact
