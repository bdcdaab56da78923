#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homalg {

/// Exact rational scalars. All coefficients in the library live in Q.
using Rational = mpq_class;

// mpq_class(n, d) does not reduce; use this when n/d may share a factor.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace homalg
