#pragma once

// Independent reference computations for tests. Nothing here calls the
// elimination or linear-algebra code under test.

#include <algorithm>
#include <random>
#include <vector>

#include "nf/bipoly.hpp"
#include "nf/solver.hpp"
#include "nf/unipoly.hpp"

namespace nf::testing {

/// Laplace expansion along the first row.
template <typename T>
T cofactor_determinant(const std::vector<std::vector<T>>& m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T det{};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * cofactor_determinant(minor, one);
    if (c % 2 == 0) {
      det = det + term;
    } else {
      det = det - term;
    }
  }
  return det;
}

/// Coefficient of y^k read straight off the term map.
inline UniPoly y_coefficient_oracle(const BiPoly& f, int k) {
  UniPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.y_exp == k) out += UniPoly::monomial(m.x_exp, c);
  }
  return out;
}

inline int y_degree_oracle(const BiPoly& f) {
  int d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.y_exp);
  return d;
}

/// Res_y by cofactor expansion of a freshly assembled Sylvester matrix.
inline UniPoly resultant_y_oracle(const BiPoly& p, const BiPoly& q) {
  const int dp = y_degree_oracle(p), dq = y_degree_oracle(q);
  const auto n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<UniPoly>> s(n, std::vector<UniPoly>(n));
  for (int r = 0; r < dq; ++r) {
    for (int k = 0; k <= dp; ++k) s[r][r + k] = y_coefficient_oracle(p, dp - k);
  }
  for (int r = 0; r < dp; ++r) {
    for (int k = 0; k <= dq; ++k) s[dq + r][r + k] = y_coefficient_oracle(q, dq - k);
  }
  return cofactor_determinant(s, UniPoly::constant(1));
}

/// Resultant of the binary forms of degrees n and m given by their terms.
inline Rational forms_resultant_oracle(const BiPoly& f, int n, const BiPoly& g, int m) {
  const auto size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int r = 0; r < m; ++r) {
    for (const auto& [mono, c] : f.terms()) s[r][r + mono.y_exp] = c;
  }
  for (int r = 0; r < n; ++r) {
    for (const auto& [mono, c] : g.terms()) s[m + r][r + mono.y_exp] = c;
  }
  return cofactor_determinant(s, Rational(1));
}

/// Dense random polynomial of exact total degree `degree`, integer
/// coefficients in [-range, range].
inline BiPoly random_poly(std::mt19937& rng, int degree, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  for (;;) {
    BiPoly f;
    for (int t = 0; t <= degree; ++t) {
      for (int i = 0; i <= t; ++i) f += BiPoly::monomial({i, t - i}, coeff(rng));
    }
    if (f.degree() == degree) return f;
  }
}

inline BiPoly random_poly_up_to(std::mt19937& rng, int max_degree, int range = 5) {
  return random_poly(rng, std::uniform_int_distribution<int>(1, max_degree)(rng), range);
}

/// a*x + b*y + c, stored so multiplicities can be computed by hand.
struct Line {
  Rational a, b, c;
  BiPoly poly() const {
    return a * BiPoly::variable(Var::X) + b * BiPoly::variable(Var::Y) + BiPoly::constant(c);
  }
  bool through(const ExactPoint& z) const { return a * z.x + b * z.y + c == 0; }
};

/// Product of lines raised to powers.
struct LineProduct {
  std::vector<std::pair<Line, int>> factors;

  BiPoly poly() const {
    BiPoly out = BiPoly::constant(1);
    for (const auto& [l, e] : factors) out *= pow(l.poly(), static_cast<unsigned>(e));
    return out;
  }
};

/// Random line through an integer point in [-2,2]^2 with a direction
/// drawn from a small set, so that intersections collide often.
inline Line random_line(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  for (;;) {
    const int a = small(rng), b = small(rng);
    if (a == 0 && b == 0) continue;
    const int px = small(rng), py = small(rng);
    return {a, b, -(a * px + b * py)};
  }
}

/// Intersection multiplicity of two products of pairwise distinct lines:
/// distinct lines meet transversally, so the local count is the sum of
/// exponent products over pairs through the point.
inline int line_product_multiplicity(const LineProduct& p, const LineProduct& q, const ExactPoint& z) {
  int total = 0;
  for (const auto& [lp, ep] : p.factors) {
    if (!lp.through(z)) continue;
    for (const auto& [lq, eq] : q.factors) {
      if (lq.through(z)) total += ep * eq;
    }
  }
  return total;
}

/// Same line up to scaling.
inline bool same_line(const Line& l, const Line& m) {
  return l.a * m.b == l.b * m.a && l.a * m.c == l.c * m.a && l.b * m.c == l.c * m.b;
}

inline bool parallel(const Line& l, const Line& m) { return l.a * m.b == l.b * m.a; }

/// All pairwise intersection points of a p-line and a q-line.
inline std::vector<ExactPoint> line_intersections(const LineProduct& p, const LineProduct& q) {
  std::vector<ExactPoint> out;
  for (const auto& [l, e1] : p.factors) {
    for (const auto& [m, e2] : q.factors) {
      const Rational det = l.a * m.b - l.b * m.a;
      if (det == 0) continue;
      ExactPoint z{(l.b * m.c - l.c * m.b) / det, (l.c * m.a - l.a * m.c) / det};
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random pair of line products with degrees <= max_degree in which no p
/// line is parallel to a q line (so no common points at infinity and no
/// common factor).
inline std::pair<LineProduct, LineProduct> random_line_system(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  for (;;) {
    LineProduct p, q;
    auto fill = [&](LineProduct& lp, int d) {
      while (d > 0) {
        const Line l = random_line(rng);
        bool dup = false;
        for (auto& [existing, e] : lp.factors) {
          if (same_line(existing, l)) {
            dup = true;
            ++e;
          }
        }
        if (!dup) lp.factors.push_back({l, 1});
        --d;
      }
    };
    fill(p, deg(rng));
    fill(q, deg(rng));
    bool ok = true;
    for (const auto& [l, e1] : p.factors) {
      for (const auto& [m, e2] : q.factors) ok = ok && !parallel(l, m);
    }
    if (ok) return {p, q};
  }
}

}  // namespace nf::testing
