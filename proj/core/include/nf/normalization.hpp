#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nf/bipoly.hpp"
#include "nf/linalg.hpp"
#include "nf/rational.hpp"
#include "nf/solver.hpp"

namespace nf {

enum class MultiplierStrategy { ShiftedMonomial };

std::string to_string(MultiplierStrategy s);
/// Throws nf::DomainError for an unknown name.
MultiplierStrategy parse_strategy(const std::string& name);

/// The multipliers for p (degree m-1 each, m of them) and for q (degree n-1
/// each, n of them). With shifted monomials, each family is
/// {(x-s)^a (y-t)^b : a+b = d} about its base point; a family of degree 0 is
/// {1} and has no base point.
struct MultiplierFamily {
  MultiplierStrategy strategy = MultiplierStrategy::ShiftedMonomial;
  std::vector<BiPoly> for_p;
  std::vector<BiPoly> for_q;
  std::optional<ExactPoint> base_p;
  std::optional<ExactPoint> base_q;

  /// Assembles the family without validating it against any system.
  static MultiplierFamily shifted_monomial(int degree_p_side, std::optional<ExactPoint> base_p,
                                           int degree_q_side, std::optional<ExactPoint> base_q);
};

/// {(x-s)^a (y-t)^b : a+b = degree}, a descending.
std::vector<BiPoly> shifted_monomials(int degree, const ExactPoint& base);

/// Integer points in the search order (0,0), (1,0), (0,1), (-1,0), (0,-1),
/// (2,0), (1,1), ...: rings of growing |s|+|t|, counterclockwise from the
/// positive x axis.
std::vector<ExactPoint> spiral_points(std::size_t count);

/// Shifted-monomial family whose base points are the first spiral points
/// off the partner curve (q(s,t) != 0 for the p side, p(s',t') != 0 for the
/// q side) and distinct from each other. Throws nf::DomainError when the
/// leading forms of p and q share a nontrivial zero or a degree is zero.
MultiplierFamily build_multipliers(const BiPoly& p, const BiPoly& q,
                                   MultiplierStrategy strategy = MultiplierStrategy::ShiftedMonomial);

/// N+1 equations of total degree N = n+m-1.
struct NormalSystem {
  std::vector<BiPoly> equations;
  int degree = 0;
  /// Row i holds the coefficients of the leading form of equation i in the
  /// graded-lex order x^N, x^(N-1) y, ..., y^N.
  Matrix<Rational> leading_matrix;
  MultiplierFamily family;
};

/// psi*p for psi in for_p, then phi*q for phi in for_q.
NormalSystem build_normal_system(const BiPoly& p, const BiPoly& q, const MultiplierFamily& family);

/// Builds the leading matrix of an arbitrary list of equations; throws
/// nf::DomainError unless there are N+1 of them, all of degree N.
Matrix<Rational> leading_matrix(const std::vector<BiPoly>& equations, int degree);

struct NormalityVerdict {
  bool is_normal = false;
  Rational certificate;  // det of the leading matrix
};

NormalityVerdict check_normality(const NormalSystem& system);
NormalityVerdict check_normality(const Matrix<Rational>& leading);

struct PreservationReport {
  bool preserved = false;
  /// Base points where every equation of the normal system vanishes but
  /// (p, q) does not.
  std::vector<ExactPoint> spurious;
  /// Rational solutions whose multiplicity changed: (point, original, normal).
  struct Mismatch {
    ExactPoint point;
    int original;
    int normal;
  };
  std::vector<Mismatch> multiplicity_mismatches;
};

/// Whether the normal system has exactly the solutions of (p, q), with the
/// same multiplicities at every rational solution.
PreservationReport check_preservation(const BiPoly& p, const BiPoly& q, const NormalSystem& system);

}  // namespace nf
