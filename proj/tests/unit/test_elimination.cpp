#include <doctest.h>

#include <random>

#include "nf/elimination.hpp"
#include "nf/error.hpp"
#include "nf/parse.hpp"
#include "oracles.hpp"

using namespace nf;
using namespace nf::testing;

namespace {

BiPoly P(const char* text) { return parse_polynomial(text); }
UniPoly U(const char* text) { return parse_polynomial(text).y_coefficient(0); }  // text in x only
HomForm F(const char* text) { return leading_form(P(text)); }

}  // namespace

TEST_CASE("resultant_wrt_y fixtures match the cofactor oracle") {
  struct Case {
    const char* p;
    const char* q;
    const char* expected;
  };
  const Case cases[] = {
      {"x^2 + y^2 - 1", "x - y", "2*x^2 - 1"},
      {"x*y - 1", "x + y - 2", "x^2 - 2*x + 1"},
      {"x^2 + y^2 - 5", "x*y - 2", "x^4 - 5*x^2 + 4"},
  };
  for (const auto& c : cases) {
    const UniPoly oracle = resultant_y_oracle(P(c.p), P(c.q));
    CHECK(oracle == U(c.expected));
    CHECK(resultant_wrt_y(P(c.p), P(c.q)) == oracle);
  }
}

TEST_CASE("resultant_wrt_y rejects inputs without y") {
  CHECK_THROWS_WITH_AS(resultant_wrt_y(P("x - 1"), P("y")), "degenerate elimination direction", DomainError);
}

TEST_CASE("eliminant extends the resultant to y-free inputs") {
  CHECK(eliminant(P("x - 1"), P("y^2 + x")) == U("x^2 - 2*x + 1"));
  CHECK(eliminant(P("y - 1"), P("x - 3")) == U("x - 3"));
}

TEST_CASE("resultant_of_forms fixtures") {
  CHECK(forms_resultant_oracle(P("x*y"), 2, P("x + y"), 1) == -1);
  CHECK(resultant_of_forms(F("x*y"), F("x + y")) == -1);
  CHECK(resultant_of_forms(F("x^2"), F("y^2")) == 1);
  CHECK(resultant_of_forms(F("x*y"), F("x")) == 0);
  CHECK_THROWS_AS(HomForm(BiPoly(), 2), DomainError);
}

TEST_CASE("resultant_of_forms vanishes exactly on shared factors") {
  // Shared linear factor built in; the oracle confirms the zero.
  CHECK(resultant_of_forms(F("(x - 2*y)*(x + y)"), F("(x - 2*y)*y")) == 0);
  CHECK(forms_resultant_oracle(P("x^2 - x*y - 2*y^2"), 2, P("x*y - 2*y^2"), 2) == 0);
  CHECK(resultant_of_forms(F("(x - 2*y)*(x + y)"), F("(x - 3*y)*y")) != 0);
}

TEST_CASE("Bezout degree law on random systems") {
  std::mt19937 rng(42);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 100; ++trial) {
    const BiPoly p = random_poly_up_to(rng, 4), q = random_poly_up_to(rng, 4);
    if (resultant_of_forms(leading_form(p), leading_form(q)) == 0) continue;
    ++tested;
    CHECK(eliminant(p, q).degree() == *p.degree() * *q.degree());
  }
  CHECK(tested >= 90);
}

TEST_CASE("Bareiss agrees with cofactor expansion on random small systems") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const BiPoly p = random_poly_up_to(rng, 3), q = random_poly_up_to(rng, 2);
    if (p.degree_in(Var::Y).value_or(0) == 0 || q.degree_in(Var::Y).value_or(0) == 0) continue;
    CHECK(resultant_wrt_y(p, q) == resultant_y_oracle(p, q));
  }
}

TEST_CASE("resultant is multiplicative up to sign") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const BiPoly p = random_poly_up_to(rng, 2), q1 = random_poly_up_to(rng, 2), q2 = random_poly_up_to(rng, 2);
    if (p.degree_in(Var::Y).value_or(0) == 0 || q1.degree_in(Var::Y).value_or(0) == 0 ||
        q2.degree_in(Var::Y).value_or(0) == 0) {
      continue;
    }
    const UniPoly lhs = resultant_wrt_y(p, q1 * q2);
    const UniPoly rhs = resultant_wrt_y(p, q1) * resultant_wrt_y(p, q2);
    CHECK((lhs == rhs || lhs == -rhs));
  }
}

TEST_CASE("gcd_univariate") {
  CHECK(gcd_univariate(U("x - 1"), U("x - 1")) == U("x - 1"));
  CHECK(gcd_univariate(U("x^2 - 1"), U("x - 1")) == U("x - 1"));
  // Fibers of (xy - 1, x + y - 2) over x = 1.
  CHECK(gcd_univariate(P("x*y - 1").restrict_x(1), P("x + y - 2").restrict_x(1)) == U("x - 1"));
  CHECK(gcd_univariate(U("2*x + 4"), UniPoly()) == U("x + 2"));
  CHECK_THROWS_AS(gcd_univariate(UniPoly(), UniPoly()), DomainError);
}

TEST_CASE("squarefree_decomposition") {
  CHECK(squarefree_decomposition(U("(x - 1)^2")) == std::vector<SquarefreeFactor>{{U("x - 1"), 2}});
  CHECK(squarefree_decomposition(U("x^4 - 5*x^2 + 4")) ==
        std::vector<SquarefreeFactor>{{U("x^4 - 5*x^2 + 4"), 1}});
  CHECK(squarefree_decomposition(U("x")) == std::vector<SquarefreeFactor>{{U("x"), 1}});
  CHECK(squarefree_decomposition(U("3")).empty());
  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), DomainError);
}

TEST_CASE("squarefree decomposition reconstructs and factors are coprime") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3), e(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    UniPoly r = UniPoly::constant(c(rng) == 0 ? 2 : 3);
    for (int k = 0; k < 3; ++k) {
      const UniPoly base({c(rng), c(rng), 1});
      r *= pow(base, static_cast<unsigned>(e(rng)));
    }
    const auto factors = squarefree_decomposition(r);
    UniPoly product = UniPoly::constant(1);
    for (const auto& [f, m] : factors) product *= pow(f, static_cast<unsigned>(m));
    CHECK(product == r.monic());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      CHECK(gcd_univariate(factors[i].factor, factors[i].factor.derivative()).degree() == 0);
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        CHECK(gcd_univariate(factors[i].factor, factors[j].factor).degree() == 0);
      }
    }
    // Multiplicities of rational roots agree with the decomposition.
    for (const auto& root : rational_roots(r)) {
      int from_factors = 0;
      for (const auto& [f, m] : factors) {
        if (f.evaluate(root.value) == 0) from_factors = m;
      }
      CHECK(root.multiplicity == from_factors);
    }
  }
}

TEST_CASE("rational_roots") {
  CHECK(rational_roots(U("x^4 - 5*x^2 + 4")) ==
        std::vector<RationalRoot>{{-2, 1}, {-1, 1}, {1, 1}, {2, 1}});
  CHECK(rational_roots(U("x^2 - 2*x + 1")) == std::vector<RationalRoot>{{1, 2}});
  CHECK(rational_roots(U("x^2 + 1")).empty());
  CHECK(rational_roots(U("(6*x - 5)*(x^2 - 2)*x^3")) ==
        std::vector<RationalRoot>{{0, 3}, {Rational(5, 6), 1}});
  CHECK(rational_roots(U("(35*x + 12)^2*(7*x - 100)")) ==
        std::vector<RationalRoot>{{Rational(-12, 35), 2}, {Rational(100, 7), 1}});
}

TEST_CASE("isolate_real_roots") {
  const auto sqrt2 = isolate_real_roots(U("x^2 - 2"));
  REQUIRE(sqrt2.size() == 2);
  CHECK(sqrt2[0].lo >= -2);
  CHECK(sqrt2[0].hi <= -1);
  CHECK(sqrt2[1].lo >= 1);
  CHECK(sqrt2[1].hi <= 2);
  for (const auto& iv : sqrt2) {
    CHECK(iv.width() <= Rational(1, 1024));
    CHECK(sgn(iv.lo * iv.lo - 2) != sgn(iv.hi * iv.hi - 2));
  }
  const auto half = isolate_real_roots(U("x - 1/2"));
  REQUIRE(half.size() == 1);
  CHECK(half[0].contains(Rational(1, 2)));
  CHECK(isolate_real_roots(U("x^2 + 1")).empty());
  CHECK_THROWS_WITH_AS(isolate_real_roots(U("(x - 1)^2")), "requires squarefree input", DomainError);
}

TEST_CASE("isolating intervals are disjoint, narrow and match the Sturm count") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-5, 5);
  const Rational width(1, 64);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < 6; ++i) coeffs.push_back(c(rng));
    coeffs.push_back(c(rng) == 0 ? 1 : 2);
    UniPoly f(coeffs);
    // Throw in some exact rational roots.
    if (trial % 3 == 0) f *= UniPoly({0, 1}) * UniPoly({-1, 2});
    const UniPoly g = squarefree_part(f);
    const auto ivs = isolate_real_roots(g, width);
    const auto seq = sturm_sequence(g);
    const Rational b = cauchy_bound(g);
    CHECK(static_cast<int>(ivs.size()) == sign_variations(seq, -b) - sign_variations(seq, b));
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      CHECK(ivs[i].width() <= width);
      if (i + 1 < ivs.size()) CHECK(ivs[i].hi < ivs[i + 1].lo);
      if (ivs[i].lo == ivs[i].hi) {
        CHECK(g.evaluate(ivs[i].lo) == 0);
      } else {
        CHECK(sign_variations(seq, ivs[i].lo) - sign_variations(seq, ivs[i].hi) == 1);
      }
    }
  }
}
