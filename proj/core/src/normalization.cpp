#include "nf/normalization.hpp"

#include <algorithm>

#include "nf/elimination.hpp"
#include "nf/error.hpp"

namespace nf {

std::string to_string(MultiplierStrategy s) {
  switch (s) {
    case MultiplierStrategy::ShiftedMonomial: return "shifted_monomial";
  }
  return "unknown";
}

MultiplierStrategy parse_strategy(const std::string& name) {
  if (name == "shifted_monomial") return MultiplierStrategy::ShiftedMonomial;
  throw DomainError("unknown multiplier strategy '" + name + "'");
}

std::vector<BiPoly> shifted_monomials(int degree, const ExactPoint& base) {
  const BiPoly dx = BiPoly::variable(Var::X) - BiPoly::constant(base.x);
  const BiPoly dy = BiPoly::variable(Var::Y) - BiPoly::constant(base.y);
  std::vector<BiPoly> out;
  for (int a = degree; a >= 0; --a) {
    out.push_back(pow(dx, static_cast<unsigned>(a)) * pow(dy, static_cast<unsigned>(degree - a)));
  }
  return out;
}

MultiplierFamily MultiplierFamily::shifted_monomial(int degree_p_side, std::optional<ExactPoint> base_p,
                                                    int degree_q_side, std::optional<ExactPoint> base_q) {
  auto side = [](int degree, const std::optional<ExactPoint>& base) {
    if (degree == 0) return std::vector<BiPoly>{BiPoly::constant(1)};
    if (!base) throw DomainError("a shifted-monomial family of positive degree needs a base point");
    return shifted_monomials(degree, *base);
  };
  MultiplierFamily family;
  family.for_p = side(degree_p_side, base_p);
  family.for_q = side(degree_q_side, base_q);
  if (degree_p_side > 0) family.base_p = base_p;
  if (degree_q_side > 0) family.base_q = base_q;
  return family;
}

namespace {

std::vector<ExactPoint> spiral_ring(int r) {
  if (r == 0) return {{0, 0}};
  std::vector<ExactPoint> ring;
  for (int i = 0; i < r; ++i) ring.push_back({r - i, i});
  for (int i = 0; i < r; ++i) ring.push_back({-i, r - i});
  for (int i = 0; i < r; ++i) ring.push_back({-r + i, -i});
  for (int i = 0; i < r; ++i) ring.push_back({i, -r + i});
  return ring;
}

template <typename Pred>
ExactPoint first_spiral_point(Pred admissible) {
  // Only finitely many integer points can fail the predicates used here.
  for (int r = 0;; ++r) {
    for (const auto& pt : spiral_ring(r)) {
      if (admissible(pt)) return pt;
    }
  }
}

}  // namespace

std::vector<ExactPoint> spiral_points(std::size_t count) {
  std::vector<ExactPoint> out;
  for (int r = 0; out.size() < count; ++r) {
    for (const auto& pt : spiral_ring(r)) {
      if (out.size() == count) break;
      out.push_back(pt);
    }
  }
  return out;
}

MultiplierFamily build_multipliers(const BiPoly& p, const BiPoly& q, MultiplierStrategy strategy) {
  if (strategy != MultiplierStrategy::ShiftedMonomial) throw DomainError("unsupported strategy");
  const int n = p.degree().value_or(0), m = q.degree().value_or(0);
  if (n < 1 || m < 1) throw DomainError("multipliers need deg p >= 1 and deg q >= 1");
  if (resultant_of_forms(leading_form(p), leading_form(q)) == 0) {
    throw DomainError("leading forms share a nontrivial zero; change chart first");
  }
  std::optional<ExactPoint> base_p, base_q;
  if (m > 1) {
    base_p = first_spiral_point([&](const ExactPoint& z) { return q.evaluate(z.x, z.y) != 0; });
  }
  if (n > 1) {
    base_q = first_spiral_point([&](const ExactPoint& z) {
      return p.evaluate(z.x, z.y) != 0 && (!base_p || z != *base_p);
    });
  }
  return MultiplierFamily::shifted_monomial(m - 1, base_p, n - 1, base_q);
}

Matrix<Rational> leading_matrix(const std::vector<BiPoly>& equations, int degree) {
  if (degree < 0 || equations.size() != static_cast<std::size_t>(degree) + 1) {
    throw DomainError("a normal system of degree N needs exactly N+1 equations");
  }
  const auto size = static_cast<std::size_t>(degree) + 1;
  Matrix<Rational> m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    if (equations[r].degree() != degree) {
      throw DomainError("equation " + std::to_string(r + 1) + " does not have total degree " +
                        std::to_string(degree));
    }
    for (const auto& [mono, c] : equations[r].terms()) {
      if (mono.total() == degree) m(r, static_cast<std::size_t>(mono.y_exp)) = c;
    }
  }
  return m;
}

NormalSystem build_normal_system(const BiPoly& p, const BiPoly& q, const MultiplierFamily& family) {
  NormalSystem ns;
  ns.family = family;
  ns.degree = p.degree().value_or(0) + q.degree().value_or(0) - 1;
  for (const auto& psi : family.for_p) ns.equations.push_back(psi * p);
  for (const auto& phi : family.for_q) ns.equations.push_back(phi * q);
  ns.leading_matrix = leading_matrix(ns.equations, ns.degree);
  return ns;
}

NormalityVerdict check_normality(const Matrix<Rational>& leading) {
  NormalityVerdict v;
  v.certificate = determinant(leading);
  v.is_normal = v.certificate != 0;
  return v;
}

NormalityVerdict check_normality(const NormalSystem& system) {
  return check_normality(system.leading_matrix);
}

PreservationReport check_preservation(const BiPoly& p, const BiPoly& q, const NormalSystem& system) {
  PreservationReport report;
  // Off the base points some multiplier of each family is nonzero, so the
  // normal system vanishes exactly where p and q do.
  std::vector<ExactPoint> candidates;
  if (system.family.base_p) candidates.push_back(*system.family.base_p);
  if (system.family.base_q && system.family.base_q != system.family.base_p) {
    candidates.push_back(*system.family.base_q);
  }
  for (const auto& z : candidates) {
    const bool normal_zero = std::all_of(system.equations.begin(), system.equations.end(),
                                         [&](const BiPoly& e) { return e.evaluate(z.x, z.y) == 0; });
    const bool true_zero = p.evaluate(z.x, z.y) == 0 && q.evaluate(z.x, z.y) == 0;
    if (normal_zero && !true_zero) report.spurious.push_back(z);
  }

  const SolutionSet solutions = solve(p, q);
  const int cap = system.degree * system.degree + 1;
  for (const auto& s : solutions.solutions) {
    if (!s.is_exact()) continue;
    const int normal = dual_space(system.equations, s.point(), cap).dimension;
    if (normal != *s.multiplicity) report.multiplicity_mismatches.push_back({s.point(), *s.multiplicity, normal});
  }
  report.preserved = report.spurious.empty() && report.multiplicity_mismatches.empty();
  return report;
}

}  // namespace nf
