#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/reflexive.hpp"
#include "ehrhart/roots.hpp"

namespace ehrhart {

using Json = nlohmann::ordered_json;

/// Malformed family spec or polytope JSON. `where` is a character offset
/// for family specs and a JSON path (e.g. "/vertices/3") for documents.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::string where)
        : std::invalid_argument(message + " at " + where), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// cube:N | cross:N | pn:N | qn:N | bipyramid(SPEC) | product(SPEC,SPEC) | dilate(SPEC,K)
LatticePolytope parse_family_spec(std::string_view spec);

/// {"dimension": n, "vertices": [[...]], "halfspaces": [{"normal": [...], "rhs": m}],
///  "family": {"tag": "...", "params": {...}}}
/// Vertices and halfspaces may be omitted when the family tag determines the
/// polytope; when given alongside a tag they must match it.
LatticePolytope polytope_from_json(const Json& doc);
Json polytope_to_json(const LatticePolytope& polytope);

/// {"dimension": n, "coefficients": ["p/q", ...]}, index 0 first.
Json ehrhart_to_json(const EhrhartPolynomial& ehr);
EhrhartPolynomial ehrhart_from_json(const Json& doc);

/// Fixed-point decimal with `digits` places; never "-0.000...".
std::string format_decimal(double value, int digits = 12);

Json roots_to_json(const RootSet& roots);
Json wills_to_json(const WillsVerdict& verdict);
Json inequality_to_json(const InequalityVerdict& verdict);
Json reflexivity_to_json(const ReflexivityReport& report);

} // namespace ehrhart
