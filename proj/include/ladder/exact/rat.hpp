#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ladder::exact {

// Arbitrary-precision rational. GMP keeps values reduced with a positive
// denominator, and zero is stored as 0/1.
using Rat = mpq_class;

// Parses "n" or "n/d" with an optional sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

// "n" for integers, otherwise "n/d".
std::string to_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exponent);

// Canonicalized n/d; the two-argument mpq_class constructor does not reduce.
inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace ladder::exact
