#include "ehrhart/reflexive.hpp"

#include <algorithm>

namespace ehrhart {

namespace {

void require_interior(const LatticePolytope& polytope, const char* what) {
    if (!polytope.halfspaces()) {
        throw HypothesisError(std::string(what) + ": polytope has no halfspace representation");
    }
    if (!origin_interior(polytope)) {
        throw HypothesisError(std::string(what) + ": origin is not in the interior");
    }
}

Rational coefficient_target(const EhrhartPolynomial& ehr, const Integer& l) {
    return Rational(Integer(static_cast<unsigned long>(ehr.dimension())), 2 * l) * ehr.volume();
}

bool all_primitive(const std::vector<IntVector>& vertices) {
    return std::all_of(vertices.begin(), vertices.end(), [](const IntVector& v) {
        return std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }) && is_primitive(v);
    });
}

} // namespace

LReflexivity is_l_reflexive(const LatticePolytope& polytope) {
    if (!polytope.halfspaces()) {
        throw std::invalid_argument("is_l_reflexive: polytope has no halfspace representation");
    }
    if (!origin_interior(polytope) || !all_primitive(extreme_vertices(polytope))) return {};
    const auto& hs = *polytope.halfspaces();
    const Integer& l = hs.front().rhs;
    if (!std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.rhs == l; })) return {};
    return {true, l};
}

ReflexivityReport reflexivity_equivalence(const LatticePolytope& polytope, const EhrhartPolynomial& ehr) {
    require_interior(polytope, "reflexivity_equivalence");
    if (ehr.dimension() != polytope.dimension()) {
        throw std::invalid_argument("reflexivity_equivalence: Ehrhart polynomial dimension mismatch");
    }
    ReflexivityReport report;
    report.index_l = index(polytope);

    const auto reflexive = is_l_reflexive(polytope);
    report.def_check = reflexive.reflexive && *reflexive.l == report.index_l;

    const PolarResult polar = polar_scaled(polytope, report.index_l);
    report.polar_check = polar.is_lattice;
    report.polar_vertices_primitive =
        polar.is_lattice && std::all_of(polar.vertices.begin(), polar.vertices.end(), [](const RationalVector& v) {
            IntVector coords;
            for (const auto& x : v) coords.push_back(x.numerator());
            return is_primitive(coords);
        });

    report.coefficient_lhs = ehr.coefficient(ehr.dimension() - 1);
    report.coefficient_rhs = coefficient_target(ehr, report.index_l);
    report.coefficient_check = report.coefficient_lhs == report.coefficient_rhs;

    report.vertices_primitive = all_primitive(extreme_vertices(polytope));
    const auto& hs = *polytope.halfspaces();
    report.uniform_rhs =
        std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.rhs == report.index_l; });

    report.agree = report.def_check == report.polar_check && report.polar_check == report.coefficient_check;
    return report;
}

RootLineVerdict root_line_consequence(const LatticePolytope& polytope, const EhrhartPolynomial& ehr,
                                           const RootSet& roots, double tol) {
    require_interior(polytope, "root_line_consequence");
    RootLineVerdict verdict;
    verdict.index_l = index(polytope);
    verdict.hypothesis = common_real_part(roots, Rational(Integer(1), 2 * verdict.index_l), tol);
    verdict.consequence =
        ehr.coefficient(ehr.dimension() - 1) == coefficient_target(ehr, verdict.index_l);
    verdict.holds = !verdict.hypothesis || verdict.consequence;
    return verdict;
}

} // namespace ehrhart
