#include "nf/json.hpp"

#include "nf/error.hpp"

namespace nf::json {

Json rational(const Rational& r) { return to_string(r); }

Rational to_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string", 1);
}

Json projective_map(const ProjectiveMap& map) {
  Json rows = Json::array();
  for (const auto& row : map.matrix()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

ProjectiveMap to_projective_map(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("projective map must be a 3x3 array", 1);
  ProjectiveMap::Entries m;
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw ParseError("projective map must be a 3x3 array", 1);
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = to_rational(j[r][c]);
  }
  return ProjectiveMap(m);
}

Json interval(const Interval& iv) { return Json{{"lo", rational(iv.lo)}, {"hi", rational(iv.hi)}}; }

Json projective_point(const ProjectivePoint& p) {
  return Json::array({rational(p[0]), rational(p[1]), rational(p[2])});
}

namespace {

const char* fiber_name(FiberStatus s) {
  switch (s) {
    case FiberStatus::Simple: return "simple";
    case FiberStatus::AssumedSimple: return "assumed simple fiber";
    case FiberStatus::IrrationalFiber: return "irrational fiber";
  }
  return "unknown";
}

Json multiplicity(const std::optional<int>& m) {
  if (m) return *m;
  return "unresolved";
}

}  // namespace

Json solution_set(const SolutionSet& set) {
  Json solutions = Json::array();
  for (const auto& s : set.solutions) {
    if (s.is_exact()) {
      solutions.push_back(
          {{"x", rational(s.point().x)}, {"y", rational(s.point().y)}, {"mult", multiplicity(s.multiplicity)}});
      continue;
    }
    const auto& b = std::get<BoxedPoint>(s.location);
    Json entry{{"x", interval(b.x)}};
    if (b.y) entry["y"] = interval(*b.y);
    entry["factor"] = b.factor;
    entry["fiber"] = fiber_name(b.status);
    entry["mult"] = multiplicity(s.multiplicity);
    solutions.push_back(std::move(entry));
  }
  Json escaped = Json::array();
  for (const auto& e : set.escaped) {
    escaped.push_back({{"point", projective_point(e.point)}, {"mult", e.multiplicity}});
  }
  Json out;
  out["bezout"] = set.bezout;
  out["chart"] = projective_map(set.chart);
  out["solutions"] = std::move(solutions);
  out["distinct"] = set.distinct_count;
  out["mult_sum"] = set.multiplicity_sum ? Json(*set.multiplicity_sum) : Json("partial");
  out["escaped"] = std::move(escaped);
  out["eliminant"] = to_string(set.eliminant);
  out["nonreal"] = set.nonreal_distinct;
  return out;
}

Json audit_report(const AuditReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"x", rational(c.point.x)},
                      {"y", rational(c.point.y)},
                      {"eliminant_mult", c.eliminant},
                      {"dual_dim", c.dual},
                      {"agree", c.agree()}});
  }
  Json out;
  out["pass"] = report.passed();
  out["bezout"] = report.bezout;
  out["distinct"] = report.distinct;
  out["distinct_within_bound"] = report.distinct_within_bound;
  out["mult_sum"] = report.multiplicity_sum ? Json(*report.multiplicity_sum) : Json("partial");
  out["mult_sum_matches"] =
      report.multiplicity_sum_matches ? Json(*report.multiplicity_sum_matches) : Json("not applicable");
  out["multiplicity_checks"] = std::move(checks);
  return out;
}

Json normal_system(const NormalSystem& system, const NormalityVerdict& verdict,
                   const PreservationReport& preservation) {
  Json equations = Json::array();
  for (const auto& e : system.equations) equations.push_back(to_string(e));
  auto base = [](const std::optional<ExactPoint>& z) -> Json {
    if (!z) return nullptr;
    return Json::array({rational(z->x), rational(z->y)});
  };
  Json spurious = Json::array();
  for (const auto& z : preservation.spurious) spurious.push_back(Json::array({rational(z.x), rational(z.y)}));
  Json out;
  out["equations"] = std::move(equations);
  out["N"] = system.degree;
  out["certificate"] = rational(verdict.certificate);
  out["normal"] = verdict.is_normal;
  out["strategy"] = to_string(system.family.strategy);
  out["base_points"] = {{"p", base(system.family.base_p)}, {"q", base(system.family.base_q)}};
  out["preserved"] = preservation.preserved;
  out["spurious"] = std::move(spurious);
  return out;
}

Json solution_basis(const std::vector<PolyExpFunction>& basis) {
  Json functions = Json::array();
  for (const auto& u : basis) functions.push_back(to_string(u));
  Json out;
  out["basis"] = std::move(functions);
  out["count"] = basis.size();
  return out;
}

}  // namespace nf::json
