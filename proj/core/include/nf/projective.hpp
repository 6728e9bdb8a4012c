#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "nf/bipoly.hpp"
#include "nf/linalg.hpp"
#include "nf/rational.hpp"

namespace nf {

/// Homogeneous polynomial in X, Y, Z.
class TriForm {
 public:
  using Exponents = std::array<int, 3>;
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  /// Throws nf::DomainError if `terms` mixes total degrees or is empty.
  TriForm(TermMap terms, int degree);

  const TermMap& terms() const { return terms_; }
  int degree() const { return degree_; }

  friend bool operator==(const TriForm&, const TriForm&) = default;

 private:
  TermMap terms_;
  int degree_;
};

/// Pads each term x^i y^j with Z^(d-i-j), d = degree(f). Throws
/// nf::DomainError for the zero polynomial.
TriForm homogenize(const BiPoly& f);
/// Sets Z = 1.
BiPoly dehomogenize(const TriForm& f);

/// Homogeneous coordinates [X:Y:Z]; never all zero.
using ProjectivePoint = std::array<Rational, 3>;

/// Scales to (x, y, 1) when Z != 0, otherwise so the first nonzero
/// coordinate is 1. Throws nf::DomainError for the zero triple.
ProjectivePoint normalize(const ProjectivePoint& p);

/// An invertible 3x3 rational matrix acting on homogeneous coordinates:
/// new = M * old. The new affine chart is Z_new = 1, so the row
/// (M20, M21, M22) names the line that becomes the line at infinity.
class ProjectiveMap {
 public:
  using Entries = std::array<std::array<Rational, 3>, 3>;

  /// Throws nf::DomainError("non-invertible map") for a singular matrix.
  explicit ProjectiveMap(const Entries& matrix);

  static ProjectiveMap identity();
  /// Fixes X and Y and sends Z to Z + a X + b Y.
  static ProjectiveMap infinity_shift(const Rational& a, const Rational& b);

  const Entries& matrix() const { return matrix_; }
  const Entries& inverse_matrix() const { return inverse_; }
  ProjectiveMap inverse() const;
  bool is_identity() const;

  friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  Entries matrix_;
  Entries inverse_;
};

enum class Direction { Forward, Inverse };

/// Exact action of the map (or its inverse) followed by normalize().
ProjectivePoint map_point(const ProjectivePoint& point, const ProjectiveMap& map,
                          Direction direction = Direction::Forward);

/// The polynomial whose zero set, in the new chart, is the image of f's
/// zero set: homogenize, substitute the inverse map, set the new Z to 1.
/// Throws nf::DomainError("curve contains chosen line at infinity") when
/// the degree would drop.
BiPoly transform_chart(const BiPoly& f, const ProjectiveMap& map);

struct ChartChoice {
  ProjectiveMap map;
  BiPoly p;
  BiPoly q;
  Rational leading_resultant;  // resultant of the leading forms of p, q; nonzero
};

struct ChartSearchOptions {
  /// Largest max(|a|, |b|) tried for Z -> Z + aX + bY.
  int budget = 10;
  /// Extra acceptance test on a candidate that already has coprime leading
  /// forms. Empty means accept.
  std::function<bool(const ChartChoice&)> accept;
};

/// Candidate (a, b) pairs in search order: by increasing max(|a|, |b|),
/// lexicographic within each shell, starting at (0, 0).
std::vector<std::array<int, 2>> chart_candidates(int budget);

/// First chart in candidate order whose transformed pair has leading forms
/// without a common nontrivial zero. Throws nf::DomainError("solution set
/// not finite") for inputs sharing a factor and nf::DomainError("no chart
/// found in search budget") when the candidates run out.
ChartChoice choose_generic_chart(const BiPoly& p, const BiPoly& q,
                                 const ChartSearchOptions& options = {});

}  // namespace nf
