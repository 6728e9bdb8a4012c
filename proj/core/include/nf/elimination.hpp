#pragma once

#include <cstddef>
#include <vector>

#include "nf/bipoly.hpp"
#include "nf/linalg.hpp"
#include "nf/rational.hpp"
#include "nf/unipoly.hpp"

namespace nf {

/// Closed rational interval [lo, hi]. lo == hi marks an exactly known root.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, positive degree
  int multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

struct RationalRoot {
  Rational value;
  int multiplicity;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Sylvester matrix of p and q read as polynomials in y over Q[x].
/// Rows of p come first (deg_y q of them), coefficients from the highest
/// power of y down, each row shifted one column right.
Matrix<UniPoly> sylvester_matrix_y(const BiPoly& p, const BiPoly& q);

/// Sylvester matrix of two binary forms with the same layout; coefficient
/// order is x^d, x^(d-1) y, ..., y^d.
Matrix<Rational> sylvester_matrix_forms(const HomForm& f, const HomForm& g);

/// Res_y(p, q) as a polynomial in x, by Bareiss elimination on the
/// Sylvester matrix. Both inputs need positive degree in y; otherwise
/// throws nf::DomainError("degenerate elimination direction").
UniPoly resultant_wrt_y(const BiPoly& p, const BiPoly& q);

/// Classical resultant of two binary forms. Zero exactly when they share a
/// nontrivial common zero.
Rational resultant_of_forms(const HomForm& f, const HomForm& g);

/// Res_y extended to inputs of y-degree zero with the usual convention
/// Res(a, g) = a^deg_y(g). Used to eliminate y when one curve is a union of
/// vertical lines.
UniPoly eliminant(const BiPoly& p, const BiPoly& q);

/// gcd of the coefficients of f viewed as a polynomial in y.
UniPoly content_in_y(const BiPoly& f);

/// True when p and q share a factor of positive total degree.
bool have_common_factor(const BiPoly& p, const BiPoly& q);

/// Monic gcd. Throws nf::DomainError when both inputs are zero.
UniPoly gcd_univariate(const UniPoly& a, const UniPoly& b);

/// Yun's algorithm. Factors are monic, pairwise coprime and listed by
/// increasing multiplicity; the product of factor^multiplicity equals r up
/// to a constant. Throws nf::DomainError for the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& r);

/// r / gcd(r, r'), monic.
UniPoly squarefree_part(const UniPoly& r);

/// All rational roots in increasing order with their multiplicities.
std::vector<RationalRoot> rational_roots(const UniPoly& r);

std::vector<UniPoly> sturm_sequence(const UniPoly& f);
/// Sign changes of the sequence at t, zeros skipped.
int sign_variations(const std::vector<UniPoly>& sequence, const Rational& t);
/// 1 + max |a_i| / |a_n|; every complex root has modulus strictly below it.
Rational cauchy_bound(const UniPoly& f);

/// One pairwise-disjoint interval per distinct real root, in increasing
/// order. Each holds exactly one root and has width at most `max_width`.
/// Throws nf::DomainError("requires squarefree input") otherwise.
std::vector<Interval> isolate_real_roots(const UniPoly& r,
                                         const Rational& max_width = Rational(1, 1024));

}  // namespace nf
