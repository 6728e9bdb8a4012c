#include "nf/bipoly.hpp"

#include <algorithm>

#include "nf/error.hpp"

namespace nf {

BiPoly::BiPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BiPoly BiPoly::constant(const Rational& c) { return monomial({0, 0}, c); }

BiPoly BiPoly::variable(Var v) {
  return monomial(v == Var::X ? Monomial{1, 0} : Monomial{0, 1});
}

BiPoly BiPoly::monomial(Monomial m, const Rational& c) {
  BiPoly out;
  if (c != 0) out.terms_.emplace(m, c);
  return out;
}

std::optional<int> BiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order puts the highest total degree first.
  return terms_.begin()->first.total();
}

std::optional<int> BiPoly::degree_in(Var v) const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::X ? m.x_exp : m.y_exp);
  return d;
}

Rational BiPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) acc += c * power(x, m.x_exp) * power(y, m.y_exp);
  return acc;
}

UniPoly BiPoly::y_coefficient(int k) const {
  std::vector<Rational> out;
  for (const auto& [m, c] : terms_) {
    if (m.y_exp != k) continue;
    if (out.size() <= static_cast<std::size_t>(m.x_exp)) out.resize(static_cast<std::size_t>(m.x_exp) + 1);
    out[static_cast<std::size_t>(m.x_exp)] += c;
  }
  return UniPoly(std::move(out));
}

UniPoly BiPoly::restrict_x(const Rational& x0) const {
  std::vector<Rational> out;
  for (const auto& [m, c] : terms_) {
    if (out.size() <= static_cast<std::size_t>(m.y_exp)) out.resize(static_cast<std::size_t>(m.y_exp) + 1);
    out[static_cast<std::size_t>(m.y_exp)] += c * power(x0, m.x_exp);
  }
  return UniPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) continue;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) { return *this += -rhs; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m{ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp};
      out.terms_[m] += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = BiPoly::constant(1);
  BiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

HomForm::HomForm(BiPoly f, int degree) : poly_(std::move(f)), degree_(degree) {
  if (poly_.is_zero()) throw DomainError("zero form");
  for (const auto& [m, c] : poly_.terms()) {
    if (m.total() != degree_) throw DomainError("form is not homogeneous of the stated degree");
  }
}

std::vector<Rational> HomForm::coefficients() const {
  std::vector<Rational> out(static_cast<std::size_t>(degree_) + 1);
  for (const auto& [m, c] : poly_.terms()) out[static_cast<std::size_t>(m.y_exp)] = c;
  return out;
}

HomForm leading_form(const BiPoly& f) {
  if (f.is_zero()) throw DomainError("no leading form");
  const int d = *f.degree();
  BiPoly::TermMap top;
  for (const auto& [m, c] : f.terms()) {
    if (m.total() == d) top.emplace(m, c);
  }
  return HomForm(BiPoly(std::move(top)), d);
}

BiPoly differentiate(const BiPoly& f, Var v, unsigned order) {
  BiPoly::TermMap out;
  const int k = static_cast<int>(order);
  for (const auto& [m, c] : f.terms()) {
    const int e = v == Var::X ? m.x_exp : m.y_exp;
    if (e < k) continue;
    Rational coeff = c;
    for (int i = 0; i < k; ++i) coeff *= e - i;
    Monomial dm = m;
    (v == Var::X ? dm.x_exp : dm.y_exp) -= k;
    out.emplace(dm, coeff);
  }
  return BiPoly(std::move(out));
}

BiPoly apply_differential(const BiPoly& symbol, const BiPoly& h) {
  BiPoly out;
  for (const auto& [m, c] : symbol.terms()) {
    out += c * differentiate(differentiate(h, Var::X, static_cast<unsigned>(m.x_exp)), Var::Y,
                             static_cast<unsigned>(m.y_exp));
  }
  return out;
}

BiPoly compose_linear(const BiPoly& f, const LinearChange& change) {
  if (change.determinant() == 0) throw DomainError("non-invertible change");
  const BiPoly x = BiPoly::variable(Var::X), y = BiPoly::variable(Var::Y);
  const BiPoly new_x = change.a * x + change.b * y + BiPoly::constant(change.e);
  const BiPoly new_y = change.c * x + change.d * y + BiPoly::constant(change.f);

  const int max_x = f.degree_in(Var::X).value_or(0);
  const int max_y = f.degree_in(Var::Y).value_or(0);
  std::vector<BiPoly> px{BiPoly::constant(1)}, py{BiPoly::constant(1)};
  for (int i = 1; i <= max_x; ++i) px.push_back(px.back() * new_x);
  for (int i = 1; i <= max_y; ++i) py.push_back(py.back() * new_y);

  BiPoly out;
  for (const auto& [m, c] : f.terms()) {
    out += c * (px[static_cast<std::size_t>(m.x_exp)] * py[static_cast<std::size_t>(m.y_exp)]);
  }
  return out;
}

namespace {

std::string render_monomial(const Monomial& m, const VarNames& names) {
  std::string out;
  auto append = [&](const std::string& var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  append(names.x, m.x_exp);
  append(names.y, m.y_exp);
  return out;
}

}  // namespace

std::string to_string(const BiPoly& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = render_monomial(m, names);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace nf
