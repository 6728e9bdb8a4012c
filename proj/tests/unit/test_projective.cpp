#include <doctest.h>

#include <random>

#include "nf/elimination.hpp"
#include "nf/error.hpp"
#include "nf/json.hpp"
#include "nf/parse.hpp"
#include "nf/projective.hpp"
#include "oracles.hpp"

using namespace nf;
using namespace nf::testing;

namespace {

BiPoly P(const char* text) { return parse_polynomial(text); }

ProjectivePoint affine(const Rational& x, const Rational& y) { return {x, y, 1}; }

}  // namespace

TEST_CASE("homogenize fixtures") {
  const TriForm f = homogenize(P("x*y - 1"));
  CHECK(f.degree() == 2);
  CHECK(f.terms() == TriForm::TermMap{{{1, 1, 0}, 1}, {{0, 0, 2}, -1}});
  CHECK(homogenize(P("x + y - 2")).terms() ==
        TriForm::TermMap{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, -2}});
  CHECK(homogenize(P("x^2")).terms() == TriForm::TermMap{{{2, 0, 0}, 1}});
  CHECK_THROWS_AS(homogenize(BiPoly()), DomainError);
}

TEST_CASE("dehomogenize inverts homogenize") {
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    const BiPoly f = random_poly_up_to(rng, 4);
    if (f.is_zero()) continue;
    CHECK(dehomogenize(homogenize(f)) == f);
  }
}

TEST_CASE("transform_chart fixtures") {
  const ProjectiveMap m = ProjectiveMap::infinity_shift(1, 1);
  CHECK(transform_chart(P("x*y - 1"), m) == P("-x^2 - x*y - y^2 + 2*x + 2*y - 1"));
  CHECK(transform_chart(P("x*y - x"), m) == P("x^2 + 2*x*y - x"));
  CHECK(transform_chart(P("x*y - x"), ProjectiveMap::identity()) == P("x*y - x"));
  // X + Y + Z is the new line at infinity itself.
  CHECK_THROWS_WITH_AS(transform_chart(P("x + y + 1"), m), "curve contains chosen line at infinity",
                       DomainError);
}

TEST_CASE("map_point fixtures") {
  const ProjectiveMap m = ProjectiveMap::infinity_shift(1, 1);
  CHECK(map_point({1, 1, 1}, m) == affine(Rational(1, 3), Rational(1, 3)));
  CHECK(map_point({1, 0, 0}, m) == affine(1, 0));
  CHECK(map_point({0, 1, 0}, m) == affine(0, 1));
  CHECK(map_point({3, 4, 1}, ProjectiveMap::identity()) == affine(3, 4));
  CHECK(map_point({2, 4, 0}, ProjectiveMap::identity()) == ProjectivePoint{1, 2, 0});
  CHECK_THROWS_AS(normalize({0, 0, 0}), DomainError);
}

TEST_CASE("map_point round-trips through the inverse") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int i = 0; i < 100; ++i) {
    const ProjectiveMap m = ProjectiveMap::infinity_shift(c(rng), c(rng));
    ProjectivePoint pt{c(rng), c(rng), c(rng)};
    if (pt == ProjectivePoint{0, 0, 0}) continue;
    pt = normalize(pt);
    CHECK(map_point(map_point(pt, m), m, Direction::Inverse) == pt);
    CHECK(map_point(pt, m.inverse()) == map_point(pt, m, Direction::Inverse));
  }
}

TEST_CASE("non-invertible map is rejected") {
  ProjectiveMap::Entries e{};
  e[0] = {1, 0, 0};
  e[1] = {2, 0, 0};
  e[2] = {0, 0, 1};
  CHECK_THROWS_WITH_AS(ProjectiveMap{e}, "non-invertible map", DomainError);
}

TEST_CASE("transform_chart preserves degree and moves zeros with the map") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 60; ++i) {
    // A product of lines through known points so zeros are available.
    const Line l1 = random_line(rng), l2 = random_line(rng);
    const BiPoly f = l1.poly() * l2.poly();
    const ProjectiveMap m = ProjectiveMap::infinity_shift(c(rng), c(rng));
    BiPoly g;
    try {
      g = transform_chart(f, m);
    } catch (const DomainError&) {
      continue;
    }
    CHECK(g.degree() == f.degree());
    // Any affine zero of f not on the new infinity line lands on a zero of g.
    for (int t = -3; t <= 3; ++t) {
      ExactPoint z;
      if (l1.b != 0) {
        z = {t, -(l1.a * t + l1.c) / l1.b};
      } else {
        z = {-l1.c / l1.a, t};
      }
      const ProjectivePoint image = map_point(affine(z.x, z.y), m);
      if (image[2] == 0) continue;
      CHECK(g.evaluate(image[0], image[1]) == 0);
    }
  }
}

TEST_CASE("chart_candidates order") {
  const auto c = chart_candidates(1);
  REQUIRE(c.size() == 9);
  CHECK(c[0] == std::array<int, 2>{0, 0});
  CHECK(c[1] == std::array<int, 2>{-1, -1});
  CHECK(c.back() == std::array<int, 2>{1, 1});
  CHECK(chart_candidates(3).size() == 49);
}

TEST_CASE("choose_generic_chart fixtures") {
  const ChartChoice f2 = choose_generic_chart(P("x^2 + y^2 - 5"), P("x*y - 2"));
  CHECK(f2.map.is_identity());
  CHECK(f2.leading_resultant != 0);
  CHECK(choose_generic_chart(P("x - 1"), P("y - 1")).map.is_identity());

  const BiPoly p = P("x*y - 1"), q = P("x*y - x");
  CHECK(resultant_of_forms(leading_form(p), leading_form(q)) == 0);
  const ChartChoice chosen = choose_generic_chart(p, q);
  CHECK_FALSE(chosen.map.is_identity());
  CHECK(chosen.leading_resultant == resultant_of_forms(leading_form(chosen.p), leading_form(chosen.q)));
  CHECK(chosen.leading_resultant != 0);

  // The X + Y + Z chart is acceptable as well; check it directly.
  const ProjectiveMap m = ProjectiveMap::infinity_shift(1, 1);
  const BiPoly tp = transform_chart(p, m), tq = transform_chart(q, m);
  CHECK(resultant_of_forms(leading_form(tp), leading_form(tq)) != 0);
  // Line values of the three intersection points are all nonzero there.
  for (const ProjectivePoint& pt : {ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0},
                                    ProjectivePoint{1, 1, 1}}) {
    CHECK(pt[0] + pt[1] + pt[2] != 0);
  }
}

TEST_CASE("choose_generic_chart errors") {
  CHECK_THROWS_WITH_AS(choose_generic_chart(P("x*y - 1"), P("x*y - 1")), "solution set not finite",
                       DomainError);
  CHECK_THROWS_WITH_AS(choose_generic_chart(P("(x - 1)*y"), P("(x - 1)*(y + 2)")),
                       "solution set not finite", DomainError);
  ChartSearchOptions never;
  never.budget = 2;
  never.accept = [](const ChartChoice&) { return false; };
  CHECK_THROWS_WITH_AS(choose_generic_chart(P("x"), P("y"), never), "no chart found in search budget",
                       DomainError);
}

TEST_CASE("projective map JSON round-trip") {
  const ProjectiveMap m = ProjectiveMap::infinity_shift(-1, 2);
  const auto j = json::projective_map(m);
  CHECK(j.dump() == R"([["1","0","0"],["0","1","0"],["-1","2","1"]])");
  CHECK(json::to_projective_map(j) == m);
  CHECK_THROWS_AS(json::to_projective_map(json::Json::parse("[[1,2]]")), ParseError);
}
