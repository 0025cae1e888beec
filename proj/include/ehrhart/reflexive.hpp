#pragma once

#include <optional>
#include <stdexcept>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/roots.hpp"

namespace ehrhart {

/// An input fails a precondition of the statement being checked (for
/// example the origin is not interior), as opposed to the statement
/// itself failing.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct LReflexivity {
    bool reflexive = false;
    /// The common facet right-hand side, when reflexive.
    std::optional<Integer> l;
};

/// Origin interior, primitive vertices, and every facet at lattice
/// distance l. Vertices are taken from extreme_vertices(), so generator
/// lists with interior points are fine. Requires halfspaces.
LReflexivity is_l_reflexive(const LatticePolytope& polytope);

struct ReflexivityReport {
    Integer index_l;
    /// Definition: origin interior, primitive vertices, all l_i = l.
    bool def_check = false;
    /// l P^* is a lattice polytope.
    bool polar_check = false;
    /// lE_{n-1} = n / (2l) vol, exactly.
    bool coefficient_check = false;
    bool agree = false;

    Rational coefficient_lhs;
    Rational coefficient_rhs;

    /// Components reported separately so disagreements can be attributed.
    bool vertices_primitive = false;
    bool uniform_rhs = false;
    /// l P^* is a lattice polytope whose vertices are primitive.
    bool polar_vertices_primitive = false;
};

/// Evaluates the three conditions independently at l = index(P).
/// Throws HypothesisError when the origin is not interior or facets are
/// missing.
ReflexivityReport reflexivity_equivalence(const LatticePolytope& polytope, const EhrhartPolynomial& ehr);

struct RootLineVerdict {
    Integer index_l;
    /// All roots have real part -1/(2l) within tol.
    bool hypothesis = false;
    /// lE_{n-1} = n / (2l) vol, exactly.
    bool consequence = false;
    /// hypothesis implies consequence.
    bool holds = false;
};

RootLineVerdict root_line_consequence(const LatticePolytope& polytope, const EhrhartPolynomial& ehr,
                                           const RootSet& roots, double tol = 1e-7);

} // namespace ehrhart
