#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// normal . x <= rhs, with a primitive nonzero normal.
struct Halfspace {
    IntVector normal;
    Integer rhs;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

enum class FamilyKind { Generic, Cube, Crosspolytope, PnFamily, QnFamily, Product, Bipyramid };

std::string to_string(FamilyKind kind);

class LatticePolytope;

/// Names the construction a polytope came from, so counters can use a
/// membership rule instead of a facet description. `scale` accumulates
/// dilations applied after construction.
struct FamilyTag {
    FamilyKind kind = FamilyKind::Generic;
    unsigned n = 0;
    Integer scale = 1;
    /// Product: the two factors. Bipyramid: the base.
    std::vector<std::shared_ptr<const LatticePolytope>> parts;

    friend bool operator==(const FamilyTag& lhs, const FamilyTag& rhs);
};

/// Integer vertex list plus an optional irredundant facet description.
/// Family constructors may list generator points that are not vertices.
class LatticePolytope {
public:
    /// Validates: nonempty vertices of the right length; every halfspace
    /// has a primitive normal, holds at every vertex and is tight at one.
    LatticePolytope(std::size_t dimension, std::vector<IntVector> vertices,
                    std::optional<std::vector<Halfspace>> halfspaces = std::nullopt,
                    FamilyTag family = {});

    std::size_t dimension() const { return dimension_; }
    const std::vector<IntVector>& vertices() const { return vertices_; }
    const std::optional<std::vector<Halfspace>>& halfspaces() const { return halfspaces_; }
    const FamilyTag& family() const { return family_; }

    /// Largest absolute coordinate over the vertex list.
    Integer max_abs_coordinate() const;

    friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

private:
    std::size_t dimension_;
    std::vector<IntVector> vertices_;
    std::optional<std::vector<Halfspace>> halfspaces_;
    FamilyTag family_;
};

/// [-1,1]^n.
LatticePolytope cube(unsigned n);
/// conv{+-e_1, ..., +-e_n}.
LatticePolytope crosspolytope(unsigned n);
/// conv{C_{n-1} x {0}, C*_{n-1} x {-1, 1}}: generator list only.
LatticePolytope pn_family(unsigned n);
/// conv{C_{n-1} x {0}, +-e_n}: generator list only.
LatticePolytope qn_family(unsigned n);
/// conv{base x {0}, +-e_{n+1}}; the base must contain the origin.
LatticePolytope bipyramid(const LatticePolytope& base);
LatticePolytope product(const LatticePolytope& first, const LatticePolytope& second);
/// Requires k >= 1.
LatticePolytope dilate(const LatticePolytope& polytope, const Integer& k);

/// Convex hull of planar integer points, counterclockwise from the
/// lowest-leftmost vertex, with one primitive-normal halfspace per edge.
/// Collinear or fewer than three points are rejected.
LatticePolytope hull2d(std::span<const IntVector> points);

/// gcd of the absolute coordinates equals 1. The zero vector is rejected.
bool is_primitive(std::span<const Integer> v);

/// Primitive vector in the direction of v.
IntVector primitive_part(std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// All facet right-hand sides are positive. Requires halfspaces.
bool origin_interior(const LatticePolytope& polytope);

/// lcm of the facet right-hand sides. Requires halfspaces with the origin
/// strictly inside.
Integer index(const LatticePolytope& polytope);

/// Entries of the vertex list at which the tight facet normals have full
/// rank, i.e. the actual vertices. Requires halfspaces.
std::vector<IntVector> extreme_vertices(const LatticePolytope& polytope);

struct PolarResult {
    bool is_lattice = false;
    /// l * u_i / l_i per facet, in facet order, not deduplicated.
    std::vector<RationalVector> vertices;
};

/// Vertices of l P^*. Requires halfspaces with the origin inside.
PolarResult polar_scaled(const LatticePolytope& polytope, const Integer& l);

} // namespace ehrhart
