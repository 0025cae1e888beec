#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrhart {

namespace {

IntVector unit_vector(std::size_t dimension, std::size_t axis, long sign) {
    IntVector v(dimension, Integer(0));
    v[axis] = sign;
    return v;
}

// All {-1, 1}^n sign vectors in lexicographic order (-1 before 1).
std::vector<IntVector> sign_vectors(unsigned n) {
    std::vector<IntVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IntVector v(n);
        for (unsigned i = 0; i < n; ++i) {
            v[i] = (mask >> (n - 1 - i)) & 1U ? 1 : -1;
        }
        out.push_back(std::move(v));
    }
    return out;
}

IntVector lift(const IntVector& v, std::size_t before, std::size_t after) {
    IntVector out(before, Integer(0));
    out.insert(out.end(), v.begin(), v.end());
    out.resize(before + v.size() + after, Integer(0));
    return out;
}

IntVector with_height(const IntVector& v, long height) {
    IntVector out = v;
    out.emplace_back(height);
    return out;
}

void require_halfspaces(const LatticePolytope& p, const char* what) {
    if (!p.halfspaces()) {
        throw std::invalid_argument(std::string(what) + ": polytope has no halfspace representation");
    }
}

// Rank of a set of integer row vectors over Q.
std::size_t rank(std::vector<std::vector<Rational>> rows, std::size_t columns) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            const Rational factor = rows[i][col] / rows[r][col];
            for (std::size_t c = col; c < columns; ++c) rows[i][c] -= factor * rows[r][c];
        }
        ++r;
    }
    return r;
}

} // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Generic: return "generic";
    case FamilyKind::Cube: return "cube";
    case FamilyKind::Crosspolytope: return "cross";
    case FamilyKind::PnFamily: return "pn";
    case FamilyKind::QnFamily: return "qn";
    case FamilyKind::Product: return "product";
    case FamilyKind::Bipyramid: return "bipyramid";
    }
    return "generic";
}

bool operator==(const FamilyTag& lhs, const FamilyTag& rhs) {
    if (lhs.kind != rhs.kind || lhs.n != rhs.n || lhs.scale != rhs.scale ||
        lhs.parts.size() != rhs.parts.size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.parts.size(); ++i) {
        if (!(*lhs.parts[i] == *rhs.parts[i])) return false;
    }
    return true;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

bool is_primitive(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
    return g == 1;
}

IntVector primitive_part(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
    IntVector out(v.begin(), v.end());
    for (auto& x : out) x /= g;
    return out;
}

LatticePolytope::LatticePolytope(std::size_t dimension, std::vector<IntVector> vertices,
                                 std::optional<std::vector<Halfspace>> halfspaces, FamilyTag family)
    : dimension_(dimension), vertices_(std::move(vertices)), halfspaces_(std::move(halfspaces)),
      family_(std::move(family)) {
    if (dimension_ == 0) throw std::invalid_argument("polytope dimension must be >= 1");
    if (vertices_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].size() != dimension_) {
            throw std::invalid_argument("vertex " + std::to_string(i) + " has " +
                                        std::to_string(vertices_[i].size()) +
                                        " coordinates, expected " + std::to_string(dimension_));
        }
    }
    if (family_.scale < 1) throw std::invalid_argument("family scale must be >= 1");
    if (!halfspaces_) return;
    for (std::size_t h = 0; h < halfspaces_->size(); ++h) {
        const Halfspace& hs = (*halfspaces_)[h];
        const std::string label = "halfspace " + std::to_string(h);
        if (hs.normal.size() != dimension_) {
            throw std::invalid_argument(label + " has wrong normal length");
        }
        if (std::all_of(hs.normal.begin(), hs.normal.end(), [](const Integer& x) { return x == 0; })) {
            throw std::invalid_argument(label + " has a zero normal");
        }
        if (!is_primitive(hs.normal)) throw std::invalid_argument(label + " normal is not primitive");
        bool tight = false;
        for (const auto& v : vertices_) {
            const Integer value = dot(hs.normal, v);
            if (value > hs.rhs) throw std::invalid_argument(label + " is violated by a vertex");
            tight = tight || value == hs.rhs;
        }
        if (!tight) throw std::invalid_argument(label + " is not tight at any vertex");
    }
}

Integer LatticePolytope::max_abs_coordinate() const {
    Integer best = 0;
    for (const auto& v : vertices_) {
        for (const auto& x : v) best = std::max<Integer>(best, ::abs(x));
    }
    return best;
}

LatticePolytope cube(unsigned n) {
    if (n == 0) throw std::invalid_argument("cube: dimension must be >= 1");
    std::vector<Halfspace> hs;
    for (unsigned i = 0; i < n; ++i) {
        hs.push_back({unit_vector(n, i, 1), 1});
        hs.push_back({unit_vector(n, i, -1), 1});
    }
    return LatticePolytope(n, sign_vectors(n), std::move(hs), {FamilyKind::Cube, n, 1, {}});
}

LatticePolytope crosspolytope(unsigned n) {
    if (n == 0) throw std::invalid_argument("crosspolytope: dimension must be >= 1");
    std::vector<IntVector> vertices;
    for (unsigned i = 0; i < n; ++i) {
        vertices.push_back(unit_vector(n, i, 1));
        vertices.push_back(unit_vector(n, i, -1));
    }
    std::vector<Halfspace> hs;
    for (auto& s : sign_vectors(n)) hs.push_back({std::move(s), 1});
    return LatticePolytope(n, std::move(vertices), std::move(hs),
                           {FamilyKind::Crosspolytope, n, 1, {}});
}

LatticePolytope pn_family(unsigned n) {
    if (n < 2) throw std::invalid_argument("pn_family: dimension must be >= 2");
    std::vector<IntVector> vertices;
    const auto base = cube(n - 1);
    const auto cross = crosspolytope(n - 1);
    for (const auto& v : base.vertices()) vertices.push_back(with_height(v, 0));
    for (const auto& v : cross.vertices()) {
        vertices.push_back(with_height(v, -1));
        vertices.push_back(with_height(v, 1));
    }
    return LatticePolytope(n, std::move(vertices), std::nullopt, {FamilyKind::PnFamily, n, 1, {}});
}

LatticePolytope qn_family(unsigned n) {
    if (n < 2) throw std::invalid_argument("qn_family: dimension must be >= 2");
    std::vector<IntVector> vertices;
    const auto base = cube(n - 1);
    for (const auto& v : base.vertices()) vertices.push_back(with_height(v, 0));
    vertices.push_back(unit_vector(n, n - 1, 1));
    vertices.push_back(unit_vector(n, n - 1, -1));
    return LatticePolytope(n, std::move(vertices), std::nullopt, {FamilyKind::QnFamily, n, 1, {}});
}

LatticePolytope bipyramid(const LatticePolytope& base) {
    const std::size_t n = base.dimension() + 1;
    std::vector<IntVector> vertices;
    for (const auto& v : base.vertices()) vertices.push_back(with_height(v, 0));
    vertices.push_back(unit_vector(n, n - 1, 1));
    vertices.push_back(unit_vector(n, n - 1, -1));
    FamilyTag tag{FamilyKind::Bipyramid, static_cast<unsigned>(n), 1,
                  {std::make_shared<const LatticePolytope>(base)}};
    return LatticePolytope(n, std::move(vertices), std::nullopt, std::move(tag));
}

LatticePolytope product(const LatticePolytope& first, const LatticePolytope& second) {
    const std::size_t p = first.dimension();
    const std::size_t q = second.dimension();
    std::vector<IntVector> vertices;
    vertices.reserve(first.vertices().size() * second.vertices().size());
    for (const auto& v : first.vertices()) {
        for (const auto& w : second.vertices()) {
            IntVector joined = v;
            joined.insert(joined.end(), w.begin(), w.end());
            vertices.push_back(std::move(joined));
        }
    }
    std::optional<std::vector<Halfspace>> hs;
    if (first.halfspaces() && second.halfspaces()) {
        hs.emplace();
        for (const auto& h : *first.halfspaces()) hs->push_back({lift(h.normal, 0, q), h.rhs});
        for (const auto& h : *second.halfspaces()) hs->push_back({lift(h.normal, p, 0), h.rhs});
    }
    FamilyTag tag{FamilyKind::Product, static_cast<unsigned>(p + q), 1,
                  {std::make_shared<const LatticePolytope>(first),
                   std::make_shared<const LatticePolytope>(second)}};
    return LatticePolytope(p + q, std::move(vertices), std::move(hs), std::move(tag));
}

LatticePolytope dilate(const LatticePolytope& polytope, const Integer& k) {
    if (k < 1) throw std::invalid_argument("dilate: factor must be >= 1");
    std::vector<IntVector> vertices = polytope.vertices();
    for (auto& v : vertices) {
        for (auto& x : v) x *= k;
    }
    std::optional<std::vector<Halfspace>> hs = polytope.halfspaces();
    if (hs) {
        for (auto& h : *hs) h.rhs *= k;
    }
    FamilyTag tag = polytope.family();
    tag.scale *= k;
    return LatticePolytope(polytope.dimension(), std::move(vertices), std::move(hs), std::move(tag));
}

LatticePolytope hull2d(std::span<const IntVector> points) {
    for (const auto& p : points) {
        if (p.size() != 2) throw std::invalid_argument("hull2d: points must have two coordinates");
    }
    std::vector<IntVector> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw std::invalid_argument("hull2d: need at least three distinct points");

    auto cross = [](const IntVector& o, const IntVector& a, const IntVector& b) {
        return Integer((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
    };

    // Andrew's monotone chain; collinear points are dropped.
    std::vector<IntVector> hull(2 * pts.size());
    std::size_t count = 0;
    for (const auto& p : pts) {
        while (count >= 2 && cross(hull[count - 2], hull[count - 1], p) <= 0) --count;
        hull[count++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = count + 1; i-- > 0;) {
        while (count >= lower && cross(hull[count - 2], hull[count - 1], pts[i]) <= 0) --count;
        hull[count++] = pts[i];
    }
    hull.resize(count - 1);
    if (hull.size() < 3) throw std::invalid_argument("hull2d: points are collinear");

    // Start at the lowest, then leftmost vertex.
    auto lowest = std::min_element(hull.begin(), hull.end(), [](const IntVector& a, const IntVector& b) {
        return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
    });
    std::rotate(hull.begin(), lowest, hull.end());

    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const IntVector& a = hull[i];
        const IntVector& b = hull[(i + 1) % hull.size()];
        const IntVector normal = primitive_part(IntVector{b[1] - a[1], a[0] - b[0]});
        hs.push_back({normal, dot(normal, a)});
    }
    return LatticePolytope(2, std::move(hull), std::move(hs));
}

bool origin_interior(const LatticePolytope& polytope) {
    require_halfspaces(polytope, "origin_interior");
    const auto& hs = *polytope.halfspaces();
    return !hs.empty() && std::all_of(hs.begin(), hs.end(), [](const Halfspace& h) { return h.rhs >= 1; });
}

Integer index(const LatticePolytope& polytope) {
    require_halfspaces(polytope, "index");
    if (!origin_interior(polytope)) {
        throw std::domain_error("index: origin is not in the interior");
    }
    Integer l = 1;
    for (const auto& h : *polytope.halfspaces()) l = lcm(l, h.rhs);
    return l;
}

std::vector<IntVector> extreme_vertices(const LatticePolytope& polytope) {
    require_halfspaces(polytope, "extreme_vertices");
    const std::size_t n = polytope.dimension();
    std::vector<IntVector> out;
    for (const auto& v : polytope.vertices()) {
        std::vector<RationalVector> tight;
        for (const auto& h : *polytope.halfspaces()) {
            if (dot(h.normal, v) == h.rhs) {
                tight.emplace_back(h.normal.begin(), h.normal.end());
            }
        }
        if (tight.size() >= n && rank(std::move(tight), n) == n) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolarResult polar_scaled(const LatticePolytope& polytope, const Integer& l) {
    require_halfspaces(polytope, "polar_scaled");
    if (!origin_interior(polytope)) {
        throw std::domain_error("polar_scaled: origin is not in the interior");
    }
    PolarResult result;
    result.is_lattice = true;
    for (const auto& h : *polytope.halfspaces()) {
        RationalVector point;
        for (const auto& x : h.normal) {
            point.push_back(Rational(l * x, h.rhs));
            result.is_lattice = result.is_lattice && point.back().is_integer();
        }
        result.vertices.push_back(std::move(point));
    }
    return result;
}

} // namespace ehrhart
