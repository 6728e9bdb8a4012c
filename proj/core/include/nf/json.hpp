#pragma once

#include <nlohmann/json.hpp>

#include "nf/elimination.hpp"
#include "nf/normalization.hpp"
#include "nf/pde.hpp"
#include "nf/projective.hpp"
#include "nf/solver.hpp"

// Wire formats. Rationals are always strings ("a" or "a/b") so no JSON
// consumer loses precision; key order is fixed so output is byte-stable.
namespace nf::json {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
/// Accepts a string "a/b" or an integer. Throws nf::ParseError otherwise.
Rational to_rational(const Json& j);

/// [["1","0","0"],["0","1","0"],["0","0","1"]]
Json projective_map(const ProjectiveMap& map);
/// Throws nf::ParseError on a malformed matrix, nf::DomainError if singular.
ProjectiveMap to_projective_map(const Json& j);

/// {"lo":"a/b","hi":"c/d"}
Json interval(const Interval& iv);
Json projective_point(const ProjectivePoint& p);

/// {"bezout":4,"chart":[...],"solutions":[{"x":"1","y":"2","mult":1},...],
///  "distinct":4,"mult_sum":4,"escaped":[...],"eliminant":"...","nonreal":0}
Json solution_set(const SolutionSet& set);
Json audit_report(const AuditReport& report);
Json normal_system(const NormalSystem& system, const NormalityVerdict& verdict,
                   const PreservationReport& preservation);
Json solution_basis(const std::vector<PolyExpFunction>& basis);

}  // namespace nf::json
