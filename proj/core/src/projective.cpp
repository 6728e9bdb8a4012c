#include "nf/projective.hpp"

#include <cstdlib>
#include <vector>

#include "nf/elimination.hpp"
#include "nf/error.hpp"

namespace nf {

TriForm::TriForm(TermMap terms, int degree) : terms_(std::move(terms)), degree_(degree) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (terms_.empty()) throw DomainError("zero form");
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] + e[2] != degree_) throw DomainError("form is not homogeneous");
  }
}

TriForm homogenize(const BiPoly& f) {
  if (f.is_zero()) throw DomainError("cannot homogenize the zero polynomial");
  const int d = *f.degree();
  TriForm::TermMap terms;
  for (const auto& [m, c] : f.terms()) terms.emplace(TriForm::Exponents{m.x_exp, m.y_exp, d - m.total()}, c);
  return TriForm(std::move(terms), d);
}

BiPoly dehomogenize(const TriForm& f) {
  BiPoly out;
  for (const auto& [e, c] : f.terms()) out += BiPoly::monomial({e[0], e[1]}, c);
  return out;
}

ProjectivePoint normalize(const ProjectivePoint& p) {
  std::size_t anchor = 2;
  if (p[2] == 0) {
    anchor = p[0] != 0 ? 0 : 1;
    if (p[anchor] == 0) throw DomainError("zero triple is not a projective point");
  }
  const Rational scale = 1 / p[anchor];
  return {p[0] * scale, p[1] * scale, p[2] * scale};
}

namespace {

using Entries = ProjectiveMap::Entries;

Rational det3(const Entries& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Entries invert3(const Entries& m) {
  const Rational det = det3(m);
  if (det == 0) throw DomainError("non-invertible map");
  Entries inv;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // Cofactor of (c, r), i.e. the adjugate entry (r, c).
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      inv[r][c] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) / det;
    }
  }
  return inv;
}

ProjectivePoint apply(const Entries& m, const ProjectivePoint& p) {
  ProjectivePoint out;
  for (int r = 0; r < 3; ++r) out[r] = m[r][0] * p[0] + m[r][1] * p[1] + m[r][2] * p[2];
  return out;
}

}  // namespace

ProjectiveMap::ProjectiveMap(const Entries& matrix) : matrix_(matrix), inverse_(invert3(matrix)) {}

ProjectiveMap ProjectiveMap::identity() {
  return ProjectiveMap(Entries{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

ProjectiveMap ProjectiveMap::infinity_shift(const Rational& a, const Rational& b) {
  return ProjectiveMap(Entries{{{1, 0, 0}, {0, 1, 0}, {a, b, 1}}});
}

ProjectiveMap ProjectiveMap::inverse() const { return ProjectiveMap(inverse_); }

bool ProjectiveMap::is_identity() const { return *this == identity(); }

ProjectivePoint map_point(const ProjectivePoint& point, const ProjectiveMap& map,
                          Direction direction) {
  if (point[0] == 0 && point[1] == 0 && point[2] == 0) {
    throw DomainError("zero triple is not a projective point");
  }
  const auto& m = direction == Direction::Forward ? map.matrix() : map.inverse_matrix();
  return normalize(apply(m, point));
}

BiPoly transform_chart(const BiPoly& f, const ProjectiveMap& map) {
  const TriForm form = homogenize(f);
  const auto& inv = map.inverse_matrix();
  // Old coordinates as affine-linear polynomials in the new chart (Z' = 1).
  std::array<BiPoly, 3> old;
  for (int r = 0; r < 3; ++r) {
    old[r] = inv[r][0] * BiPoly::variable(Var::X) + inv[r][1] * BiPoly::variable(Var::Y) +
             BiPoly::constant(inv[r][2]);
  }
  const int d = form.degree();
  std::array<std::vector<BiPoly>, 3> powers;
  for (int r = 0; r < 3; ++r) {
    powers[r].push_back(BiPoly::constant(1));
    for (int k = 1; k <= d; ++k) powers[r].push_back(powers[r].back() * old[r]);
  }
  BiPoly out;
  for (const auto& [e, c] : form.terms()) {
    out += c * (powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                powers[2][static_cast<std::size_t>(e[2])]);
  }
  if (out.degree() != f.degree()) throw DomainError("curve contains chosen line at infinity");
  return out;
}

std::vector<std::array<int, 2>> chart_candidates(int budget) {
  std::vector<std::array<int, 2>> out{{0, 0}};
  for (int shell = 1; shell <= budget; ++shell) {
    for (int a = -shell; a <= shell; ++a) {
      for (int b = -shell; b <= shell; ++b) {
        if (std::max(std::abs(a), std::abs(b)) == shell) out.push_back({a, b});
      }
    }
  }
  return out;
}

ChartChoice choose_generic_chart(const BiPoly& p, const BiPoly& q, const ChartSearchOptions& options) {
  if (p.is_zero() || q.is_zero() || have_common_factor(p, q)) {
    throw DomainError("solution set not finite");
  }
  for (const auto& [a, b] : chart_candidates(options.budget)) {
    const ProjectiveMap map = ProjectiveMap::infinity_shift(a, b);
    BiPoly tp, tq;
    try {
      tp = transform_chart(p, map);
      tq = transform_chart(q, map);
    } catch (const DomainError&) {
      continue;
    }
    const Rational res = resultant_of_forms(leading_form(tp), leading_form(tq));
    if (res == 0) continue;
    ChartChoice choice{map, std::move(tp), std::move(tq), res};
    if (!options.accept || options.accept(choice)) return choice;
  }
  throw DomainError("no chart found in search budget");
}

}  // namespace nf
