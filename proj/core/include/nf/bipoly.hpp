#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nf/rational.hpp"
#include "nf/unipoly.hpp"

namespace nf {

enum class Var { X, Y };

/// Exponent pair of x^x_exp * y^y_exp.
struct Monomial {
  int x_exp = 0;
  int y_exp = 0;

  int total() const { return x_exp + y_exp; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic, x before y, descending: x^2 > xy > y^2 > x > y > 1.
/// This is the printing order and the column order of every coefficient
/// matrix assembled from polynomials.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.x_exp > b.x_exp;
  }
};

/// The names printed (and parsed) for the two variables.
struct VarNames {
  std::string x = "x";
  std::string y = "y";

  static VarNames polynomial() { return {}; }
  static VarNames operators() { return {"Dx", "Dy"}; }
};

/// Sparse bivariate polynomial over Q. No stored coefficient is zero.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  BiPoly() = default;
  /// Drops zero coefficients.
  explicit BiPoly(TermMap terms);

  static BiPoly constant(const Rational& c);
  static BiPoly variable(Var v);
  static BiPoly monomial(Monomial m, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; nullopt stands for minus infinity (zero polynomial).
  std::optional<int> degree() const;
  /// Degree in one variable; nullopt for the zero polynomial.
  std::optional<int> degree_in(Var v) const;
  Rational coefficient(Monomial m) const;

  Rational evaluate(const Rational& x, const Rational& y) const;

  /// Coefficient of y^k, as a polynomial in x.
  UniPoly y_coefficient(int k) const;
  /// f(x0, y) as a polynomial in y.
  UniPoly restrict_x(const Rational& x0) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Rational& rhs);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& b) { return a *= b; }
  friend BiPoly operator*(const Rational& a, BiPoly b) { return b *= a; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// A bivariate form: every term has total degree `degree()`. The degree is
/// carried explicitly so that, for instance, the form x keeps degree 1 when
/// read as a binary form with a zero y coefficient.
class HomForm {
 public:
  /// Throws nf::DomainError if `f` is zero or has a term of another degree.
  HomForm(BiPoly f, int degree);

  const BiPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  /// Coefficients of x^d, x^(d-1) y, ..., y^d.
  std::vector<Rational> coefficients() const;

  friend bool operator==(const HomForm&, const HomForm&) = default;

 private:
  BiPoly poly_;
  int degree_;
};

/// Top-degree homogeneous part. Throws nf::DomainError("no leading form")
/// for the zero polynomial.
HomForm leading_form(const BiPoly& f);

/// order-th partial derivative in `v`.
BiPoly differentiate(const BiPoly& f, Var v, unsigned order = 1);

/// Applies symbol(dx, dy) to h as a constant-coefficient differential
/// operator.
BiPoly apply_differential(const BiPoly& symbol, const BiPoly& h);

/// x -> a*x + b*y + e, y -> c*x + d*y + f.
struct LinearChange {
  Rational a = 1, b = 0, c = 0, d = 1;
  Rational e = 0, f = 0;

  static LinearChange shift(const Rational& dx, const Rational& dy) {
    return {1, 0, 0, 1, dx, dy};
  }
  Rational determinant() const { return a * d - b * c; }
};

/// Substitutes the change into f. Throws nf::DomainError("non-invertible
/// change") when the linear part is singular.
BiPoly compose_linear(const BiPoly& f, const LinearChange& change);

/// Canonical rendering, e.g. "x^2*y - 1/2*y + 3"; "0" for the zero polynomial.
std::string to_string(const BiPoly& f, const VarNames& names = {});

}  // namespace nf
