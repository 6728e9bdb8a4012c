#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nf/bipoly.hpp"
#include "nf/rational.hpp"

namespace nf {

/// Exponent (l1, l2) of exp(l1*x + l2*y).
struct Exponent {
  Rational x;
  Rational y;

  friend auto operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = cmp(a.x, b.x); c != 0) return c <=> 0;
    return cmp(a.y, b.y) <=> 0;
  }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Constant-coefficient operator symbol(Dx, Dy).
struct PDEOperator {
  BiPoly symbol;
};

/// Finite sum of h(x, y) * exp(l1*x + l2*y) with pairwise distinct
/// exponents and nonzero polynomial parts.
class PolyExpFunction {
 public:
  using TermMap = std::map<Exponent, BiPoly>;

  PolyExpFunction() = default;
  /// Merges nothing; drops zero parts.
  explicit PolyExpFunction(TermMap terms);
  static PolyExpFunction term(const BiPoly& h, const Exponent& lambda);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyExpFunction& operator+=(const PolyExpFunction& rhs);
  PolyExpFunction& operator*=(const Rational& c);
  friend PolyExpFunction operator+(PolyExpFunction a, const PolyExpFunction& b) { return a += b; }
  friend PolyExpFunction operator*(const Rational& c, PolyExpFunction a) { return a *= c; }
  friend bool operator==(const PolyExpFunction&, const PolyExpFunction&) = default;

 private:
  TermMap terms_;
};

/// P(x + l1, y + l2). With it, P(D)(h e^{l.}) = (shift_symbol(P, l)(D) h) e^{l.}.
BiPoly shift_symbol(const BiPoly& symbol, const Exponent& lambda);

/// Applies the operator through the exponential-shift identity.
PolyExpFunction apply(const PDEOperator& op, const PolyExpFunction& u);

/// First partial derivative by the product rule, term by term.
PolyExpFunction differentiate(const PolyExpFunction& u, Var v);

/// Applies the operator by repeated product-rule differentiation; shares no
/// code with shift_symbol.
PolyExpFunction apply_direct(const PDEOperator& op, const PolyExpFunction& u);

/// True iff both operators annihilate u (checked with apply_direct).
bool verify(const BiPoly& p, const BiPoly& q, const PolyExpFunction& u);

/// One function h * e^{l.} per dual-basis polynomial h at every
/// characteristic root l of (p, q); deg(p)*deg(q) functions in total.
/// Throws nf::DomainError("basis restricted to rational characteristic
/// roots") when a root is irrational or non-real, and
/// nf::DomainError("characteristic roots at infinity") when the leading
/// forms of p and q share a zero.
std::vector<PolyExpFunction> solution_basis(const BiPoly& p, const BiPoly& q);

/// e.g. "(x - y)*exp(x + y)"; "0" for the zero function.
std::string to_string(const PolyExpFunction& u);

}  // namespace nf
