#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nf {

/// Arbitrary-precision rational. gmpxx keeps every value reduced with a
/// positive denominator, so `==` is structural equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& r);

/// Accepts "a", "-a", "a/b" with b > 0 after sign handling. Throws
/// nf::ParseError on anything else.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace nf
