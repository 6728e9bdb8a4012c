#include "nf/pde.hpp"

#include "nf/elimination.hpp"
#include "nf/error.hpp"
#include "nf/solver.hpp"

namespace nf {

PolyExpFunction::PolyExpFunction(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

PolyExpFunction PolyExpFunction::term(const BiPoly& h, const Exponent& lambda) {
  return PolyExpFunction(TermMap{{lambda, h}});
}

PolyExpFunction& PolyExpFunction::operator+=(const PolyExpFunction& rhs) {
  for (const auto& [lambda, h] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(lambda, h);
    if (inserted) continue;
    it->second += h;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

PolyExpFunction& PolyExpFunction::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, h] : terms_) h *= c;
  return *this;
}

BiPoly shift_symbol(const BiPoly& symbol, const Exponent& lambda) {
  return compose_linear(symbol, LinearChange::shift(lambda.x, lambda.y));
}

PolyExpFunction apply(const PDEOperator& op, const PolyExpFunction& u) {
  PolyExpFunction out;
  for (const auto& [lambda, h] : u.terms()) {
    out += PolyExpFunction::term(apply_differential(shift_symbol(op.symbol, lambda), h), lambda);
  }
  return out;
}

PolyExpFunction differentiate(const PolyExpFunction& u, Var v) {
  PolyExpFunction out;
  for (const auto& [lambda, h] : u.terms()) {
    const Rational& rate = v == Var::X ? lambda.x : lambda.y;
    out += PolyExpFunction::term(differentiate(h, v) + rate * h, lambda);
  }
  return out;
}

PolyExpFunction apply_direct(const PDEOperator& op, const PolyExpFunction& u) {
  PolyExpFunction out;
  for (const auto& [m, c] : op.symbol.terms()) {
    PolyExpFunction d = u;
    for (int i = 0; i < m.x_exp; ++i) d = differentiate(d, Var::X);
    for (int j = 0; j < m.y_exp; ++j) d = differentiate(d, Var::Y);
    out += c * d;
  }
  return out;
}

bool verify(const BiPoly& p, const BiPoly& q, const PolyExpFunction& u) {
  return apply_direct({p}, u).is_zero() && apply_direct({q}, u).is_zero();
}

std::vector<PolyExpFunction> solution_basis(const BiPoly& p, const BiPoly& q) {
  const SolutionSet set = solve(p, q);
  if (!set.escaped.empty() || !set.chart.is_identity()) {
    throw DomainError("characteristic roots at infinity");
  }
  if (set.nonreal_distinct > 0) throw DomainError("basis restricted to rational characteristic roots");
  std::vector<PolyExpFunction> basis;
  for (const auto& s : set.solutions) {
    if (!s.is_exact()) throw DomainError("basis restricted to rational characteristic roots");
    const Exponent lambda{s.point().x, s.point().y};
    for (const auto& h : local_multiplicity(p, q, s.point()).dual_basis) {
      PolyExpFunction u = PolyExpFunction::term(h, lambda);
      if (!verify(p, q, u)) throw InternalError("emitted basis function fails verification: " + to_string(u));
      basis.push_back(std::move(u));
    }
  }
  if (static_cast<int>(basis.size()) != set.bezout) {
    throw InternalError("basis size " + std::to_string(basis.size()) + " differs from the Bezout number " +
                        std::to_string(set.bezout));
  }
  return basis;
}

std::string to_string(const PolyExpFunction& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, h] : u.terms()) {
    if (!out.empty()) out += " + ";
    if (lambda.x == 0 && lambda.y == 0) {
      out += to_string(h);
      continue;
    }
    const BiPoly rate = lambda.x * BiPoly::variable(Var::X) + lambda.y * BiPoly::variable(Var::Y);
    const std::string e = "exp(" + to_string(rate) + ")";
    if (h == BiPoly::constant(1)) {
      out += e;
    } else if (h == BiPoly::constant(-1)) {
      out += "-" + e;
    } else if (h.terms().size() == 1) {
      out += to_string(h) + "*" + e;
    } else {
      out += "(" + to_string(h) + ")*" + e;
    }
  }
  return out;
}

}  // namespace nf
