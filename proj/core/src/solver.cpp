#include "nf/solver.hpp"

#include <algorithm>
#include <map>

#include "nf/error.hpp"
#include "nf/linalg.hpp"

namespace nf {

Solution make_exact_solution(const BiPoly& p, const BiPoly& q, const ExactPoint& z, int multiplicity,
                             std::optional<int> eliminant_multiplicity, int dual_dimension) {
  if (p.evaluate(z.x, z.y) != 0 || q.evaluate(z.x, z.y) != 0) {
    throw InternalError("reported solution (" + to_string(z.x) + ", " + to_string(z.y) +
                        ") is not a common zero");
  }
  return Solution{z, multiplicity, eliminant_multiplicity, dual_dimension};
}

std::vector<ExactPoint> SolutionSet::exact_points() const {
  std::vector<ExactPoint> out;
  for (const auto& s : solutions) {
    if (s.is_exact()) out.push_back(s.point());
  }
  return out;
}

namespace {

std::vector<Monomial> monomials_up_to(int k) {
  std::vector<Monomial> out;
  for (int t = k; t >= 0; --t) {
    for (int i = t; i >= 0; --i) out.push_back({i, t - i});
  }
  return out;
}

LocalStructure dual_space_at_degree(std::span<const BiPoly> operators, int k) {
  const auto columns = monomials_up_to(k);
  std::vector<std::vector<BiPoly>> images(operators.size());
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  for (std::size_t op = 0; op < operators.size(); ++op) {
    for (const auto& mono : columns) {
      images[op].push_back(apply_differential(operators[op], BiPoly::monomial(mono)));
      for (const auto& [m, c] : images[op].back().terms()) row_of.try_emplace({op, m}, row_of.size());
    }
  }
  Matrix<Rational> constraints(row_of.size(), columns.size());
  for (std::size_t op = 0; op < operators.size(); ++op) {
    for (std::size_t col = 0; col < columns.size(); ++col) {
      for (const auto& [m, c] : images[op][col].terms()) constraints(row_of.at({op, m}), col) = c;
    }
  }
  LocalStructure out;
  const auto kernel = nullspace(constraints);
  out.dimension = static_cast<int>(kernel.size());
  // Echelon rows come out with the largest leading monomial first.
  for (auto it = kernel.rbegin(); it != kernel.rend(); ++it) {
    BiPoly h;
    for (std::size_t col = 0; col < columns.size(); ++col) h += BiPoly::monomial(columns[col], (*it)[col]);
    out.dual_basis.push_back(std::move(h));
  }
  return out;
}

}  // namespace

LocalStructure dual_space(std::span<const BiPoly> system, const ExactPoint& z, int cap) {
  std::vector<BiPoly> shifted;
  for (const auto& poly : system) {
    if (poly.evaluate(z.x, z.y) != 0) throw DomainError("not a common zero");
    shifted.push_back(compose_linear(poly, LinearChange::shift(z.x, z.y)));
  }
  LocalStructure current = dual_space_at_degree(shifted, 0);
  for (int k = 0; k < std::max(cap, 1); ++k) {
    LocalStructure next = dual_space_at_degree(shifted, k + 1);
    if (next.dimension == current.dimension) return current;
    current = std::move(next);
  }
  throw DomainError("multiplicity overflow");
}

LocalStructure local_multiplicity(const BiPoly& p, const BiPoly& q, const ExactPoint& z) {
  const BiPoly system[] = {p, q};
  const int cap = p.degree().value_or(0) * q.degree().value_or(0);
  return dual_space(system, z, cap);
}

namespace {

// Fiber of the solving-chart system over a rational eliminant root.
struct Fiber {
  UniPoly common;  // squarefree gcd of p(x0, y) and q(x0, y)
  std::vector<Rational> rational_y;
};

Fiber resolve_fiber(const BiPoly& p, const BiPoly& q, const Rational& x0) {
  const UniPoly fp = p.restrict_x(x0), fq = q.restrict_x(x0);
  if (fp.is_zero() && fq.is_zero()) throw InternalError("both curves contain a vertical line");
  const UniPoly g = fp.is_zero() ? fq.monic() : fq.is_zero() ? fp.monic() : gcd_univariate(fp, fq);
  if (g.degree().value_or(0) == 0) throw InternalError("eliminant root without a common fiber root");
  Fiber fiber{squarefree_part(g), {}};
  for (const auto& r : rational_roots(fiber.common)) fiber.rational_y.push_back(r.value);
  return fiber;
}

// Both leading y-coefficients vanishing at a root of `factor` would make the
// eliminant root an artefact of the projection.
bool leading_coefficients_clear(const BiPoly& p, const BiPoly& q, const UniPoly& factor) {
  const UniPoly lp = p.y_coefficient(p.degree_in(Var::Y).value_or(0));
  const UniPoly lq = q.y_coefficient(q.degree_in(Var::Y).value_or(0));
  const UniPoly shared = gcd_univariate(gcd_univariate(factor, lp), lq);
  return shared.degree().value_or(0) == 0;
}

}  // namespace

SolutionSet solve_in_chart(const BiPoly& p, const BiPoly& q, const ProjectiveMap& chart,
                           const SolveOptions& options) {
  if (p.is_zero() || q.is_zero() || have_common_factor(p, q)) throw DomainError("solution set not finite");
  SolutionSet set;
  set.bezout = *p.degree() * *q.degree();
  set.chart = chart;
  set.chart_p = transform_chart(p, chart);
  set.chart_q = transform_chart(q, chart);
  const BiPoly& cp = set.chart_p;
  const BiPoly& cq = set.chart_q;
  if (resultant_of_forms(leading_form(cp), leading_form(cq)) == 0) {
    throw DomainError("chart is not generic");
  }
  set.eliminant = eliminant(cp, cq);
  set.factors = squarefree_decomposition(set.eliminant);

  struct ChartPoint {
    ExactPoint z;
    int multiplicity;
    std::optional<int> eliminant_multiplicity;
    int dual;
  };
  std::vector<ChartPoint> exact;
  std::vector<Solution> boxed;
  bool resolved = true;

  for (std::size_t id = 0; id < set.factors.size(); ++id) {
    const auto& [factor, mult] = set.factors[id];
    UniPoly rest = factor;
    for (const auto& root : rational_roots(factor)) {
      const Rational& x0 = root.value;
      rest = exact_div(rest, UniPoly::linear_root(x0));
      const Fiber fiber = resolve_fiber(cp, cq, x0);
      const bool single = *fiber.common.degree() == 1;
      int known = 0;
      for (const auto& y0 : fiber.rational_y) {
        const ExactPoint z{x0, y0};
        const int dual = local_multiplicity(cp, cq, z).dimension;
        known += dual;
        if (single) {
          exact.push_back({z, mult, mult, dual});
        } else {
          exact.push_back({z, dual, std::nullopt, dual});
        }
      }
      const int irrational = *fiber.common.degree() - static_cast<int>(fiber.rational_y.size());
      if (irrational > 0) {
        // The fiber's multiplicities add up to the eliminant multiplicity,
        // and each point counts at least once.
        UniPoly irr = fiber.common;
        for (const auto& y0 : fiber.rational_y) irr = exact_div(irr, UniPoly::linear_root(y0));
        const bool forced = mult - known == irrational;
        const auto ys = isolate_real_roots(irr, options.isolation_width);
        for (const auto& iv : ys) {
          boxed.push_back(Solution{BoxedPoint{{x0, x0}, id, FiberStatus::IrrationalFiber, iv},
                                   forced ? std::optional<int>(1) : std::nullopt, std::nullopt, std::nullopt});
        }
        const int nonreal = irrational - static_cast<int>(ys.size());
        set.nonreal_distinct += nonreal;
        if (forced) {
          set.nonreal_multiplicity += nonreal;
        } else {
          resolved = false;
          if (nonreal > 0) set.nonreal_resolved = false;
        }
      }
    }
    if (rest.degree().value_or(0) == 0) continue;
    const bool simple = mult == 1 && leading_coefficients_clear(cp, cq, rest);
    const auto intervals = isolate_real_roots(rest, options.isolation_width);
    for (const auto& iv : intervals) {
      boxed.push_back(Solution{
          BoxedPoint{iv, id, simple ? FiberStatus::Simple : FiberStatus::AssumedSimple, std::nullopt}, mult,
          mult, std::nullopt});
    }
    const int nonreal = *rest.degree() - static_cast<int>(intervals.size());
    set.nonreal_distinct += nonreal;
    set.nonreal_multiplicity += nonreal * mult;
    if (!simple) {
      resolved = false;
      if (nonreal > 0) set.nonreal_resolved = false;
    }
  }

  int sum = 0;
  for (const auto& cpnt : exact) {
    sum += cpnt.multiplicity;
    const ProjectivePoint original = map_point({cpnt.z.x, cpnt.z.y, 1}, chart, Direction::Inverse);
    if (original[2] == 0) {
      set.escaped.push_back({original, cpnt.multiplicity, cpnt.eliminant_multiplicity, cpnt.dual});
    } else {
      set.solutions.push_back(make_exact_solution(p, q, {original[0], original[1]}, cpnt.multiplicity,
                                                  cpnt.eliminant_multiplicity, cpnt.dual));
    }
  }
  for (const auto& b : boxed) sum += b.multiplicity.value_or(0);
  sum += set.nonreal_multiplicity;

  std::sort(set.solutions.begin(), set.solutions.end(),
            [](const Solution& a, const Solution& b) { return a.point() < b.point(); });
  std::sort(set.escaped.begin(), set.escaped.end(),
            [](const EscapedSolution& a, const EscapedSolution& b) {
              for (int i = 0; i < 3; ++i) {
                if (a.point[i] != b.point[i]) return a.point[i] < b.point[i];
              }
              return false;
            });
  std::stable_sort(boxed.begin(), boxed.end(), [](const Solution& a, const Solution& b) {
    return std::get<BoxedPoint>(a.location).x.lo < std::get<BoxedPoint>(b.location).x.lo;
  });
  set.solutions.insert(set.solutions.end(), boxed.begin(), boxed.end());

  set.distinct_count = static_cast<int>(exact.size() + boxed.size()) + set.nonreal_distinct;
  if (resolved) set.multiplicity_sum = sum;
  return set;
}

namespace {

bool fibers_separated(const ChartChoice& choice) {
  const UniPoly elim = eliminant(choice.p, choice.q);
  for (const auto& [factor, mult] : squarefree_decomposition(elim)) {
    if (mult == 1) continue;
    for (const auto& root : rational_roots(factor)) {
      if (*resolve_fiber(choice.p, choice.q, root.value).common.degree() != 1) return false;
    }
  }
  return true;
}

}  // namespace

SolutionSet solve(const BiPoly& p, const BiPoly& q, const SolveOptions& options) {
  ChartSearchOptions search;
  search.budget = options.chart_budget;
  if (options.separate_fibers) {
    search.accept = fibers_separated;
    try {
      return solve_in_chart(p, q, choose_generic_chart(p, q, search).map, options);
    } catch (const DomainError& e) {
      if (std::string(e.what()) != "no chart found in search budget") throw;
    }
    search.accept = nullptr;
  }
  return solve_in_chart(p, q, choose_generic_chart(p, q, search).map, options);
}

bool AuditReport::passed() const {
  if (!distinct_within_bound) return false;
  if (multiplicity_sum_matches.has_value() && !*multiplicity_sum_matches) return false;
  return std::all_of(checks.begin(), checks.end(), [](const MultiplicityCheck& c) { return c.agree(); });
}

AuditReport audit(const SolutionSet& set) {
  AuditReport report;
  report.bezout = set.bezout;
  report.distinct = set.distinct_count;
  report.distinct_within_bound = set.distinct_count <= set.bezout;
  report.multiplicity_sum = set.multiplicity_sum;
  if (set.multiplicity_sum) report.multiplicity_sum_matches = *set.multiplicity_sum == set.bezout;

  const auto& chart = set.chart;
  auto chart_coordinates = [&](const ProjectivePoint& original) {
    const ProjectivePoint image = map_point(original, chart, Direction::Forward);
    return ExactPoint{image[0], image[1]};
  };
  for (const auto& s : set.solutions) {
    if (!s.is_exact() || !s.eliminant_multiplicity) continue;
    report.checks.push_back(
        {chart_coordinates({s.point().x, s.point().y, 1}), *s.eliminant_multiplicity, *s.dual_dimension});
  }
  for (const auto& e : set.escaped) {
    if (!e.eliminant_multiplicity) continue;
    report.checks.push_back({chart_coordinates(e.point), *e.eliminant_multiplicity, e.dual_dimension});
  }
  return report;
}

}  // namespace nf
