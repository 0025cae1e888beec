#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ehrhart/polytope.hpp"

using namespace ehrhart;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::set<IntVector> as_set(const std::vector<IntVector>& vs) { return {vs.begin(), vs.end()}; }

IntVector negated(const IntVector& v) {
    IntVector out;
    for (const auto& c : v) out.push_back(-c);
    return out;
}

} // namespace

TEST_CASE("cube and crosspolytope constructors") {
    const auto c = cube(3);
    CHECK(c.dimension() == 3);
    CHECK(c.vertices().size() == 8);
    REQUIRE(c.halfspaces());
    CHECK(c.halfspaces()->size() == 6);
    CHECK(c.family().kind == FamilyKind::Cube);

    const auto x = crosspolytope(3);
    CHECK(x.vertices().size() == 6);
    REQUIRE(x.halfspaces());
    CHECK(x.halfspaces()->size() == 8);
    for (const auto& h : *x.halfspaces()) CHECK(h.rhs == 1);
    CHECK_THROWS(cube(0));
    CHECK_THROWS(crosspolytope(0));
}

TEST_CASE("P_n and Q_n generators are centrally symmetric") {
    for (unsigned n = 2; n <= 7; ++n) {
        for (const auto& p : {pn_family(n), qn_family(n)}) {
            const auto vs = as_set(p.vertices());
            for (const auto& v : p.vertices()) CHECK(vs.count(negated(v)) == 1);
        }
    }
    CHECK(pn_family(3).vertices().size() == 12);
    CHECK(qn_family(3).vertices().size() == 6);
    CHECK_THROWS(pn_family(1));
    CHECK_THROWS(qn_family(1));
}

TEST_CASE("halfspace validation") {
    const std::vector<IntVector> square{iv({-1, -1}), iv({-1, 1}), iv({1, -1}), iv({1, 1})};
    // Not primitive.
    CHECK_THROWS(LatticePolytope(2, square, std::vector<Halfspace>{{iv({2, 0}), 2}}));
    // Violated by a vertex.
    CHECK_THROWS(LatticePolytope(2, square, std::vector<Halfspace>{{iv({1, 0}), 0}}));
    // Valid but not supporting.
    CHECK_THROWS(LatticePolytope(2, square, std::vector<Halfspace>{{iv({1, 0}), 5}}));
    // Wrong dimensions.
    CHECK_THROWS(LatticePolytope(3, square));
    CHECK_THROWS(LatticePolytope(2, std::vector<IntVector>{}));
    CHECK_NOTHROW(LatticePolytope(2, square, std::vector<Halfspace>{{iv({1, 0}), 1}}));
}

TEST_CASE("hull2d orders vertices counterclockwise with outward normals") {
    const std::vector<IntVector> pts{iv({2, -1}), iv({-1, 2}), iv({-1, -1}), iv({0, 0}), iv({1, 0})};
    const auto t = hull2d(pts);
    REQUIRE(t.vertices().size() == 3);
    CHECK(t.vertices()[0] == iv({-1, -1}));
    CHECK(t.vertices()[1] == iv({2, -1}));
    CHECK(t.vertices()[2] == iv({-1, 2}));
    REQUIRE(t.halfspaces());
    const std::vector<Halfspace> expected{{iv({0, -1}), 1}, {iv({1, 1}), 1}, {iv({-1, 0}), 1}};
    CHECK(*t.halfspaces() == expected);

    CHECK_THROWS(hull2d(std::vector<IntVector>{iv({0, 0}), iv({1, 1}), iv({2, 2})}));
    CHECK_THROWS(hull2d(std::vector<IntVector>{iv({0, 0}), iv({1, 1})}));
}

TEST_CASE("primitive vectors and dot products") {
    CHECK(is_primitive(iv({2, 3})));
    CHECK_FALSE(is_primitive(iv({2, 4})));
    CHECK(is_primitive(iv({0, -1})));
    CHECK_THROWS(is_primitive(iv({0, 0})));
    CHECK(primitive_part(iv({-4, 6})) == iv({-2, 3}));
    CHECK(dot(iv({1, 2, 3}), iv({4, -5, 6})) == 12);
}

TEST_CASE("index is the lcm of right-hand sides") {
    CHECK(index(cube(4)) == 1);
    CHECK(index(dilate(cube(2), 2)) == 2);
    const auto diamond = hull2d(std::vector<IntVector>{iv({1, 0}), iv({0, 2}), iv({-1, 0}), iv({0, -2})});
    CHECK(index(diamond) == 2);
    const auto shifted = hull2d(std::vector<IntVector>{iv({0, 0}), iv({1, 0}), iv({0, 1})});
    CHECK_FALSE(origin_interior(shifted));
    CHECK_THROWS_AS(index(shifted), std::domain_error);
    const auto mixed = hull2d(std::vector<IntVector>{iv({-1, -1}), iv({3, -1}), iv({-1, 2})});
    REQUIRE(mixed.halfspaces());
    std::vector<Integer> rhs;
    for (const auto& h : *mixed.halfspaces()) rhs.push_back(h.rhs);
    std::sort(rhs.begin(), rhs.end());
    CHECK(rhs == std::vector<Integer>{1, 1, 5});
    CHECK(index(mixed) == 5);
}

TEST_CASE("polar of the cube is the crosspolytope") {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto polar = polar_scaled(cube(n), 1);
        CHECK(polar.is_lattice);
        std::set<std::vector<Rational>> got(polar.vertices.begin(), polar.vertices.end());
        std::set<std::vector<Rational>> want;
        const auto cross = crosspolytope(n);
        for (const auto& v : cross.vertices()) want.insert(std::vector<Rational>(v.begin(), v.end()));
        CHECK(got == want);
    }
}

TEST_CASE("bipolar identity on the cube") {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto polar = polar_scaled(cube(n), 1);
        std::vector<IntVector> pts;
        for (const auto& v : polar.vertices) {
            IntVector w;
            for (const auto& c : v) w.push_back(c.numerator());
            pts.push_back(w);
        }
        const auto back = polar_scaled(crosspolytope(n), 1);
        std::set<std::vector<Rational>> got(back.vertices.begin(), back.vertices.end());
        std::set<std::vector<Rational>> want;
        const auto c = cube(n);
        for (const auto& v : c.vertices()) want.insert(std::vector<Rational>(v.begin(), v.end()));
        CHECK(got == want);
        CHECK(as_set(crosspolytope(n).vertices()) == as_set(pts));
    }
}

TEST_CASE("polar of the diamond at l = 1 is not a lattice polytope") {
    const auto diamond = hull2d(std::vector<IntVector>{iv({1, 0}), iv({0, 2}), iv({-1, 0}), iv({0, -2})});
    const auto polar = polar_scaled(diamond, 1);
    CHECK_FALSE(polar.is_lattice);
    std::set<std::vector<Rational>> got(polar.vertices.begin(), polar.vertices.end());
    const Rational h(Integer(1), Integer(2));
    const std::set<std::vector<Rational>> want{{1, h}, {1, -h}, {-1, h}, {-1, -h}};
    CHECK(got == want);
    CHECK(polar_scaled(diamond, 2).is_lattice);
}

TEST_CASE("dilate scales vertices, right-hand sides and the family tag") {
    const auto d = dilate(cube(2), 3);
    CHECK(as_set(d.vertices()) == as_set({iv({-3, -3}), iv({-3, 3}), iv({3, -3}), iv({3, 3})}));
    for (const auto& h : *d.halfspaces()) CHECK(h.rhs == 3);
    CHECK(d.family().scale == 3);
    CHECK(dilate(d, 2).family().scale == 6);
    CHECK(d.max_abs_coordinate() == 3);
    CHECK_THROWS(dilate(cube(2), 0));
}

TEST_CASE("product concatenates vertices and lifts halfspaces") {
    const auto p = product(cube(2), crosspolytope(1));
    CHECK(p.dimension() == 3);
    CHECK(p.vertices().size() == 8);
    REQUIRE(p.halfspaces());
    CHECK(p.halfspaces()->size() == 6);
    CHECK(p.family().kind == FamilyKind::Product);
    const auto q = product(pn_family(3), cube(1));
    CHECK_FALSE(q.halfspaces());
    CHECK(q.vertices().size() == 24);
}

TEST_CASE("extreme vertices drop non-vertex generators") {
    const std::vector<IntVector> pts{iv({-1, -1}), iv({1, -1}), iv({1, 1}), iv({-1, 1})};
    std::vector<IntVector> with_mid = pts;
    with_mid.push_back(iv({0, 1}));
    const LatticePolytope p(2, with_mid, cube(2).halfspaces());
    CHECK(as_set(extreme_vertices(p)) == as_set(pts));
}

TEST_CASE("family tags compare deeply") {
    CHECK(product(cube(2), cube(1)) == product(cube(2), cube(1)));
    CHECK_FALSE(product(cube(2), cube(1)).family() == product(cube(1), cube(2)).family());
    CHECK(to_string(FamilyKind::PnFamily) == "pn");
    CHECK(to_string(FamilyKind::Crosspolytope) == "cross");
}

TEST_CASE("random polygons: hull vertices satisfy every halfspace with one tight") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-6, 6);
    int built = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<IntVector> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(iv({d(rng), d(rng)}));
        try {
            const auto p = hull2d(pts);
            ++built;
            for (const auto& q : pts)
                for (const auto& h : *p.halfspaces()) CHECK(dot(h.normal, q) <= h.rhs);
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(built > 150);
}
