#pragma once

#include "ehrhart/audit.hpp"
#include "ehrhart/ehrhart_profile.hpp"
#include "ehrhart/lattice_polytope.hpp"
#include "ehrhart/roots.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ehrhart {

/// Polytope input document: {"name": string, "vertices": [[int,...],...]}.
/// Coordinates must be exact integers (arbitrary size, numbers or strings).
struct NamedPolytope {
    std::string name;
    LatticePolytope polytope;
};
NamedPolytope read_polytope_json(std::istream& in);
NamedPolytope read_polytope_file(const std::string& path);
nlohmann::json polytope_to_json(const std::string& name, const LatticePolytope& P);

/// Profile wire format: {"d": int, "c": ["p/q",...], "a": [...], "delta": [...]},
/// rationals as exact "p/q" strings. Round-trips losslessly.
nlohmann::json profile_to_json(const EhrhartProfile& profile);
EhrhartProfile profile_from_json(const nlohmann::json& j);

/// Report wire format: list of {"id", "holds", "slack", "note"}.
nlohmann::json audit_report_to_json(const AuditReport& report);

/// Root report: real roots as exact interval endpoints plus float midpoint
/// and multiplicity, complex roots as [re, im, residual] triples.
nlohmann::json root_report_to_json(const RootReport& report);

}  // namespace ehrhart
