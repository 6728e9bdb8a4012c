#include "nf/elimination.hpp"

#include <algorithm>

#include "nf/error.hpp"

namespace nf {

Matrix<UniPoly> sylvester_matrix_y(const BiPoly& p, const BiPoly& q) {
  const int dp = p.degree_in(Var::Y).value_or(0);
  const int dq = q.degree_in(Var::Y).value_or(0);
  const auto size = static_cast<std::size_t>(dp + dq);
  Matrix<UniPoly> m(size, size);
  for (int r = 0; r < dq; ++r) {
    for (int k = 0; k <= dp; ++k) {
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = p.y_coefficient(dp - k);
    }
  }
  for (int r = 0; r < dp; ++r) {
    for (int k = 0; k <= dq; ++k) {
      m(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r + k)) = q.y_coefficient(dq - k);
    }
  }
  return m;
}

Matrix<Rational> sylvester_matrix_forms(const HomForm& f, const HomForm& g) {
  const int n = f.degree(), m = g.degree();
  const auto fc = f.coefficients(), gc = g.coefficients();
  const auto size = static_cast<std::size_t>(n + m);
  Matrix<Rational> s(size, size);
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = fc[static_cast<std::size_t>(k)];
  }
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(m + r), static_cast<std::size_t>(r + k)) = gc[static_cast<std::size_t>(k)];
  }
  return s;
}

UniPoly resultant_wrt_y(const BiPoly& p, const BiPoly& q) {
  if (p.degree_in(Var::Y).value_or(0) == 0 || q.degree_in(Var::Y).value_or(0) == 0) {
    throw DomainError("degenerate elimination direction");
  }
  return determinant(sylvester_matrix_y(p, q));
}

Rational resultant_of_forms(const HomForm& f, const HomForm& g) {
  return determinant(sylvester_matrix_forms(f, g));
}

UniPoly eliminant(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("solution set not finite");
  const int dp = *p.degree_in(Var::Y);
  const int dq = *q.degree_in(Var::Y);
  if (dp > 0 && dq > 0) return resultant_wrt_y(p, q);
  if (dp == 0 && dq == 0) return UniPoly::constant(1);
  if (dp == 0) return pow(p.y_coefficient(0), static_cast<unsigned>(dq));
  return pow(q.y_coefficient(0), static_cast<unsigned>(dp));
}

UniPoly content_in_y(const BiPoly& f) {
  UniPoly g;
  const int dy = f.degree_in(Var::Y).value_or(0);
  for (int k = 0; k <= dy; ++k) {
    const UniPoly c = f.y_coefficient(k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_univariate(g, c);
  }
  return g;
}

bool have_common_factor(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return true;
  if (gcd_univariate(content_in_y(p), content_in_y(q)).degree().value_or(0) > 0) return true;
  if (*p.degree_in(Var::Y) > 0 && *q.degree_in(Var::Y) > 0) return resultant_wrt_y(p, q).is_zero();
  return false;
}

UniPoly gcd_univariate(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& r) {
  if (r.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (*r.degree() == 0) return out;
  const UniPoly dr = r.derivative();
  const UniPoly a0 = gcd_univariate(r, dr);
  UniPoly b = exact_div(r, a0);
  UniPoly c = exact_div(dr, a0);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree().value_or(0) > 0; ++i) {
    const UniPoly a = gcd_univariate(b, d);
    if (a.degree().value_or(0) > 0) out.push_back({a, i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& r) {
  if (r.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  return exact_div(r, gcd_univariate(r, r.derivative())).monic();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f};
  if (f.is_zero()) return seq;
  UniPoly next = f.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -divmod(seq[seq.size() - 2], seq.back()).second;
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& sequence, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& s : sequence) {
    const int sg = sgn(s.evaluate(t));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

Rational cauchy_bound(const UniPoly& f) {
  const auto& c = f.coefficients();
  Rational best = 0;
  const Rational lead = abs(f.leading());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) best = std::max(best, Rational(abs(c[i]) / lead));
  return 1 + best;
}

namespace {

class Isolator {
 public:
  Isolator(const UniPoly& f, Rational max_width)
      : f_(f), seq_(sturm_sequence(f)), max_width_(std::move(max_width)) {}

  std::vector<Interval> run() {
    const Rational bound = cauchy_bound(f_);
    split(-bound, bound, variations(-bound), variations(bound));
    separate();
    return std::move(found_);
  }

 private:
  int variations(const Rational& t) const { return sign_variations(seq_, t); }

  // Roots in the open interval (lo, hi); f(lo) and f(hi) are nonzero.
  void split(const Rational& lo, const Rational& hi, int v_lo, int v_hi) {
    const int count = v_lo - v_hi;
    if (count == 0) return;
    if (count == 1 && hi - lo <= max_width_) {
      found_.push_back({lo, hi});
      return;
    }
    const Rational mid = (lo + hi) / 2;
    if (f_.evaluate(mid) != 0) {
      const int v_mid = variations(mid);
      split(lo, mid, v_lo, v_mid);
      split(mid, hi, v_mid, v_hi);
      return;
    }
    // mid is a root: fence it off with a dyadic neighbourhood holding no other root.
    Rational delta = (hi - lo) / 4;
    for (;;) {
      const Rational a = mid - delta, b = mid + delta;
      if (f_.evaluate(a) != 0 && f_.evaluate(b) != 0) {
        const int va = variations(a), vb = variations(b);
        if (va - vb == 1) {
          split(lo, a, v_lo, va);
          found_.push_back({mid, mid});
          split(b, hi, vb, v_hi);
          return;
        }
      }
      delta /= 2;
    }
  }

  // Narrow intervals that touch a neighbour until all are disjoint.
  void separate() {
    for (std::size_t i = 0; i + 1 < found_.size(); ++i) {
      while (found_[i].hi >= found_[i + 1].lo) {
        Interval& cur = found_[i];
        const Rational mid = (cur.lo + cur.hi) / 2;
        if (f_.evaluate(mid) == 0) {
          cur = {mid, mid};
        } else if (variations(cur.lo) - variations(mid) >= 1) {
          cur.hi = mid;
        } else {
          cur.lo = mid;
        }
      }
    }
  }

  const UniPoly& f_;
  std::vector<UniPoly> seq_;
  Rational max_width_;
  std::vector<Interval> found_;
};

}  // namespace

std::vector<Interval> isolate_real_roots(const UniPoly& r, const Rational& max_width) {
  if (r.is_zero()) throw DomainError("requires squarefree input");
  if (*r.degree() == 0) return {};
  if (gcd_univariate(r, r.derivative()).degree().value_or(0) > 0) {
    throw DomainError("requires squarefree input");
  }
  if (max_width <= 0) throw DomainError("isolation width must be positive");
  return Isolator(r, max_width).run();
}

std::vector<RationalRoot> rational_roots(const UniPoly& r) {
  std::vector<RationalRoot> out;
  for (const auto& [factor, mult] : squarefree_decomposition(r)) {
    const UniPoly integral = primitive_part(factor);
    const Integer lead = integral.leading().get_num();
    // A rational root c/d in lowest terms has d | lead, so lead*root is an
    // integer; intervals narrower than 1/lead contain at most one candidate.
    const Rational width(1, 2 * lead);
    for (const auto& iv : isolate_real_roots(factor, std::min(width, Rational(1, 1024)))) {
      if (iv.lo == iv.hi) {
        out.push_back({iv.lo, mult});
        continue;
      }
      Rational lo_scaled = iv.lo * lead, hi_scaled = iv.hi * lead;
      Integer first, last;
      mpz_cdiv_q(first.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
      for (Integer c = first; c <= last; ++c) {
        Rational candidate(c, lead);
        candidate.canonicalize();
        if (divmod(factor, UniPoly::linear_root(candidate)).second.is_zero()) {
          out.push_back({candidate, mult});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace nf
