#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "nf/bipoly.hpp"
#include "nf/elimination.hpp"
#include "nf/projective.hpp"
#include "nf/rational.hpp"

namespace nf {

struct ExactPoint {
  Rational x;
  Rational y;

  friend auto operator<=>(const ExactPoint& a, const ExactPoint& b) {
    if (auto c = cmp(a.x, b.x); c != 0) return c <=> 0;
    return cmp(a.y, b.y) <=> 0;
  }
  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

enum class FiberStatus {
  /// Eliminant factor of multiplicity 1: one simple point over each root.
  Simple,
  /// Factor of higher multiplicity; the fiber is assumed to hold one point.
  AssumedSimple,
  /// Rational x with an irrational common y-root.
  IrrationalFiber,
};

/// A real solution with irrational x, or irrational y over a rational x,
/// located by isolating intervals in the solving chart.
struct BoxedPoint {
  Interval x;
  std::size_t factor = 0;  // index into SolutionSet::factors
  FiberStatus status = FiberStatus::Simple;
  /// Isolating interval of y within the fiber; IrrationalFiber only.
  std::optional<Interval> y;
};

struct Solution {
  std::variant<ExactPoint, BoxedPoint> location;
  /// nullopt when unresolved.
  std::optional<int> multiplicity;
  /// Multiplicity of x as an eliminant root, recorded when the solution is
  /// alone in its fiber (so the two counts must agree).
  std::optional<int> eliminant_multiplicity;
  /// Dual-space dimension; exact points only.
  std::optional<int> dual_dimension;

  bool is_exact() const { return std::holds_alternative<ExactPoint>(location); }
  const ExactPoint& point() const { return std::get<ExactPoint>(location); }
};

/// Makes an exact solution, checking p = q = 0 at the point. Throws
/// nf::InternalError if it is not a common zero.
Solution make_exact_solution(const BiPoly& p, const BiPoly& q, const ExactPoint& z, int multiplicity,
                             std::optional<int> eliminant_multiplicity, int dual_dimension);

/// A solution of the solving chart that lies on the original line at
/// infinity.
struct EscapedSolution {
  ProjectivePoint point;  // original coordinates, normalized
  int multiplicity = 0;
  std::optional<int> eliminant_multiplicity;
  int dual_dimension = 0;
};

struct SolutionSet {
  int bezout = 0;
  ProjectiveMap chart = ProjectiveMap::identity();
  BiPoly chart_p;  // p, q in the solving chart
  BiPoly chart_q;
  UniPoly eliminant;
  std::vector<SquarefreeFactor> factors;
  /// Exact points are in original coordinates, sorted by (x, y); boxed
  /// points follow, located in the solving chart.
  std::vector<Solution> solutions;
  std::vector<EscapedSolution> escaped;
  int nonreal_distinct = 0;
  int nonreal_multiplicity = 0;
  bool nonreal_resolved = true;
  /// Distinct solutions in the solving chart (escaped and non-real included).
  int distinct_count = 0;
  /// Sum of multiplicities in the solving chart; nullopt while any fiber is
  /// unresolved.
  std::optional<int> multiplicity_sum;

  std::vector<ExactPoint> exact_points() const;
};

struct SolveOptions {
  int chart_budget = 10;
  Rational isolation_width = Rational(1, 1024);
  /// Prefer a chart where every rational eliminant root carries a single
  /// solution, so eliminant and intersection multiplicities can be compared
  /// point by point. Falls back to the first generic chart.
  bool separate_fibers = false;
};

/// Solves p = q = 0. Throws nf::DomainError("solution set not finite") when
/// p and q share a factor.
SolutionSet solve(const BiPoly& p, const BiPoly& q, const SolveOptions& options = {});

/// Same, in a caller-chosen chart. Throws nf::DomainError("chart is not
/// generic") when the transformed leading forms share a zero.
SolutionSet solve_in_chart(const BiPoly& p, const BiPoly& q, const ProjectiveMap& chart,
                           const SolveOptions& options = {});

struct LocalStructure {
  int dimension = 0;
  /// Canonical basis (reduced echelon form in graded-lex order), listed by
  /// increasing leading monomial; always starts with the constant 1.
  std::vector<BiPoly> dual_basis;
};

/// Space of polynomials h with P(dx + z1, dy + z2) h = 0 for every P in
/// `system`, grown degree by degree until it stops growing. Throws
/// nf::DomainError("not a common zero") and, past `cap`, "multiplicity
/// overflow".
LocalStructure dual_space(std::span<const BiPoly> system, const ExactPoint& z, int cap);

/// Intersection multiplicity of p and q at z and the matching dual basis;
/// the degree cap is deg(p) * deg(q).
LocalStructure local_multiplicity(const BiPoly& p, const BiPoly& q, const ExactPoint& z);

struct MultiplicityCheck {
  ExactPoint point;  // solving-chart coordinates
  int eliminant = 0;
  int dual = 0;
  bool agree() const { return eliminant == dual; }
};

struct AuditReport {
  int bezout = 0;
  int distinct = 0;
  bool distinct_within_bound = false;
  std::optional<int> multiplicity_sum;
  /// nullopt when the sum is partial and the check does not apply.
  std::optional<bool> multiplicity_sum_matches;
  std::vector<MultiplicityCheck> checks;

  bool passed() const;
};

AuditReport audit(const SolutionSet& set);

}  // namespace nf
