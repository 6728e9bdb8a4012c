#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nf/rational.hpp"

namespace nf {

/// Dense univariate polynomial over Q. Coefficient i multiplies t^i; the
/// highest stored coefficient is never zero, so the zero polynomial is the
/// empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  /// t - root
  static UniPoly linear_root(const Rational& root);
  /// c * t^k
  static UniPoly monomial(int k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<int> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i, zero past the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& b) { return a *= b; }
  friend UniPoly operator*(const Rational& a, UniPoly b) { return b *= a; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws nf::DomainError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// a / b where b is known to divide a. Throws nf::InternalError otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Multiplies by the lcm of denominators and divides by the gcd of
/// numerators; the result has coprime integer coefficients and a positive
/// leading coefficient.
UniPoly primitive_part(const UniPoly& f);

std::string to_string(const UniPoly& f, std::string_view var = "x");

}  // namespace nf
