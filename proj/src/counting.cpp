#include "ehrhart/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ehrhart {

namespace {

// Membership in multiplier * P for the polytope it was built from.
using ScaledPredicate = std::function<bool(std::span<const std::int64_t>, std::int64_t)>;

constexpr std::int64_t kMaxRadius = std::int64_t{1} << 40;

std::int64_t to_int64(const Integer& value, const char* what) {
    if (!value.fits_slong_p()) {
        throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
    }
    return value.get_si();
}

unsigned long to_ulong(const Integer& value, const char* what) {
    if (!value.fits_ulong_p()) {
        throw std::out_of_range(std::string(what) + " does not fit in an unsigned long");
    }
    return value.get_ui();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::out_of_range("oracle: coordinate arithmetic overflows 64 bits");
    }
    return out;
}

std::int64_t magnitude(std::int64_t x) { return x < 0 ? -x : x; }

ScaledPredicate build_predicate(const LatticePolytope& polytope) {
    const FamilyTag& tag = polytope.family();
    const std::int64_t scale = to_int64(tag.scale, "family scale");
    const std::size_t n = polytope.dimension();

    switch (tag.kind) {
    case FamilyKind::Cube:
        return [scale](std::span<const std::int64_t> x, std::int64_t m) {
            const std::int64_t r = m * scale;
            return std::all_of(x.begin(), x.end(), [r](std::int64_t v) { return magnitude(v) <= r; });
        };
    case FamilyKind::Crosspolytope:
        return [scale](std::span<const std::int64_t> x, std::int64_t m) {
            const std::int64_t r = m * scale;
            std::int64_t sum = 0;
            for (auto v : x) {
                sum += magnitude(v);
                if (sum > r) return false;
            }
            return true;
        };
    case FamilyKind::PnFamily:
        return [scale, n](std::span<const std::int64_t> x, std::int64_t m) {
            const std::int64_t r = m * scale;
            const std::int64_t height = magnitude(x[n - 1]);
            if (height > r) return false;
            const std::int64_t cube_radius = r - height;
            std::int64_t deficiency = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                deficiency += std::max<std::int64_t>(magnitude(x[i]) - cube_radius, 0);
                if (deficiency > height) return false;
            }
            return true;
        };
    case FamilyKind::QnFamily:
        return [scale, n](std::span<const std::int64_t> x, std::int64_t m) {
            const std::int64_t r = m * scale;
            const std::int64_t height = magnitude(x[n - 1]);
            if (height > r) return false;
            const std::int64_t cube_radius = r - height;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                if (magnitude(x[i]) > cube_radius) return false;
            }
            return true;
        };
    case FamilyKind::Bipyramid: {
        ScaledPredicate base = build_predicate(*tag.parts.at(0));
        return [scale, n, base](std::span<const std::int64_t> x, std::int64_t m) {
            const std::int64_t r = m * scale;
            const std::int64_t height = magnitude(x[n - 1]);
            if (height > r) return false;
            return base(x.first(n - 1), r - height);
        };
    }
    case FamilyKind::Product: {
        ScaledPredicate first = build_predicate(*tag.parts.at(0));
        ScaledPredicate second = build_predicate(*tag.parts.at(1));
        const std::size_t split = tag.parts[0]->dimension();
        return [scale, split, first, second](std::span<const std::int64_t> x, std::int64_t m) {
            const std::int64_t r = m * scale;
            return first(x.first(split), r) && second(x.subspan(split), r);
        };
    }
    case FamilyKind::Generic:
        break;
    }

    if (!polytope.halfspaces()) {
        throw std::invalid_argument(
            "oracle_for: generic polytope needs a halfspace representation to be counted");
    }
    struct Row {
        std::vector<std::int64_t> normal;
        std::int64_t rhs;
        std::int64_t norm_sq;
    };
    std::vector<Row> rows;
    for (const auto& h : *polytope.halfspaces()) {
        Row row{{}, to_int64(h.rhs, "facet right-hand side"), 0};
        for (const auto& u : h.normal) {
            row.normal.push_back(to_int64(u, "facet normal"));
            row.norm_sq += row.normal.back() * row.normal.back();
        }
        rows.push_back(std::move(row));
    }
    // Longer normals cut off more of the box; test them first.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.norm_sq > b.norm_sq; });
    return [rows = std::move(rows)](std::span<const std::int64_t> x, std::int64_t m) {
        for (const auto& row : rows) {
            std::int64_t value = 0;
            for (std::size_t i = 0; i < x.size(); ++i) value += row.normal[i] * x[i];
            if (value > row.rhs * m) return false;
        }
        return true;
    };
}

// Bound on |u . x| over the scan box, used to rule out overflow up front.
void check_dot_range(const LatticePolytope& polytope, std::int64_t radius) {
    if (!polytope.halfspaces()) return;
    for (const auto& h : *polytope.halfspaces()) {
        std::int64_t l1 = 0;
        for (const auto& u : h.normal) l1 += magnitude(to_int64(u, "facet normal"));
        checked_mul(l1, radius);
        checked_mul(magnitude(to_int64(h.rhs, "facet right-hand side")), radius + 1);
    }
    for (const auto& part : polytope.family().parts) check_dot_range(*part, radius);
}

Integer scan_range(const MembershipOracle& oracle, std::int64_t first_lo, std::int64_t first_hi) {
    const std::size_t n = oracle.dimension;
    const std::int64_t r = oracle.bounding_radius;
    std::vector<std::int64_t> point(n, -r);
    std::uint64_t count = 0;
    for (std::int64_t head = first_lo; head <= first_hi; ++head) {
        std::fill(point.begin(), point.end(), -r);
        point[0] = head;
        bool exhausted = false;
        while (!exhausted) {
            if (oracle.contains(point)) ++count;
            exhausted = true;
            for (std::size_t axis = n; axis-- > 1;) {
                if (point[axis] < r) {
                    ++point[axis];
                    exhausted = false;
                    break;
                }
                point[axis] = -r;
            }
        }
    }
    return Integer(static_cast<unsigned long>(count));
}

} // namespace

MembershipOracle oracle_for(const LatticePolytope& polytope, unsigned long dilation) {
    const std::int64_t m = to_int64(Integer(dilation), "dilation");
    const Integer radius = polytope.max_abs_coordinate() * Integer(dilation);
    if (radius > Integer(static_cast<long>(kMaxRadius))) {
        throw std::out_of_range("oracle_for: bounding radius " + radius.get_str() + " is too large to scan");
    }
    const std::int64_t r = radius.get_si();
    check_dot_range(polytope, r);
    ScaledPredicate predicate = build_predicate(polytope);
    return MembershipOracle{
        polytope.dimension(),
        [predicate = std::move(predicate), m](std::span<const std::int64_t> x) { return predicate(x, m); },
        r};
}

Integer box_points(const MembershipOracle& oracle) {
    return pow(Integer(2 * oracle.bounding_radius + 1), oracle.dimension);
}

Integer count_box_scan(const MembershipOracle& oracle, const ScanOptions& options) {
    if (oracle.dimension == 0) throw std::invalid_argument("count_box_scan: zero dimension");
    if (options.max_box_points && box_points(oracle) > *options.max_box_points) {
        throw std::length_error("box scan of " + box_points(oracle).get_str() +
                                " points exceeds the budget of " + options.max_box_points->get_str() +
                                "; use a family counter or raise --max-box-points");
    }
    const std::int64_t r = oracle.bounding_radius;
    const std::int64_t width = 2 * r + 1;
    const std::int64_t workers = std::clamp<std::int64_t>(options.threads, 1, width);
    if (workers == 1) return scan_range(oracle, -r, r);

    std::vector<Integer> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t lo = -r + width * w / workers;
        const std::int64_t hi = -r + width * (w + 1) / workers - 1;
        pool.emplace_back([&oracle, &partial, w, lo, hi] {
            partial[static_cast<std::size_t>(w)] = scan_range(oracle, lo, hi);
        });
    }
    for (auto& t : pool) t.join();
    Integer total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

Integer count_qn_closed(unsigned n, unsigned long k) {
    if (n < 2) throw std::invalid_argument("count_qn_closed: n must be >= 2");
    Integer total = pow(Integer(2 * k + 1), n - 1);
    Integer layers = 0;
    for (unsigned long j = 0; j < k; ++j) layers += pow(Integer(2 * j + 1), n - 1);
    return total + 2 * layers;
}

Integer count_minkowski_dp(unsigned m, unsigned long a, unsigned long b) {
    if (m == 0) throw std::invalid_argument("count_minkowski_dp: m must be >= 1");
    // ways[d]: vectors over the processed coordinates with total deficiency d.
    std::vector<Integer> ways(b + 1, Integer(0));
    ways[0] = 1;
    const Integer core = 2 * a + 1;
    for (unsigned coord = 0; coord < m; ++coord) {
        std::vector<Integer> next(b + 1, Integer(0));
        for (unsigned long spent = 0; spent <= b; ++spent) {
            if (ways[spent] == 0) continue;
            next[spent] += ways[spent] * core;
            for (unsigned long d = 1; spent + d <= b; ++d) next[spent + d] += 2 * ways[spent];
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

Integer count_pn_sliced(unsigned n, unsigned long k) {
    if (n < 2) throw std::invalid_argument("count_pn_sliced: n must be >= 2");
    Integer total = count_minkowski_dp(n - 1, k, 0);
    for (unsigned long j = 1; j <= k; ++j) total += 2 * count_minkowski_dp(n - 1, k - j, j);
    return total;
}

Integer count_product(const Counter& first, const Counter& second, unsigned long k) {
    return first(k) * second(k);
}

Counter box_scan_counter(const LatticePolytope& polytope, ScanOptions options) {
    return [polytope, options](unsigned long k) {
        return count_box_scan(oracle_for(polytope, k), options);
    };
}

Counter family_counter(const LatticePolytope& polytope, ScanOptions options) {
    const FamilyTag& tag = polytope.family();
    const unsigned long scale = to_ulong(tag.scale, "family scale");
    const unsigned n = tag.n;
    switch (tag.kind) {
    case FamilyKind::Cube:
        return [n, scale](unsigned long k) { return pow(Integer(2 * scale * k + 1), n); };
    case FamilyKind::Crosspolytope:
        return [n, scale](unsigned long k) { return count_minkowski_dp(n, 0, scale * k); };
    case FamilyKind::PnFamily:
        return [n, scale](unsigned long k) { return count_pn_sliced(n, scale * k); };
    case FamilyKind::QnFamily:
        return [n, scale](unsigned long k) { return count_qn_closed(n, scale * k); };
    case FamilyKind::Product: {
        Counter first = family_counter(*tag.parts.at(0), options);
        Counter second = family_counter(*tag.parts.at(1), options);
        return [first, second, scale](unsigned long k) { return count_product(first, second, scale * k); };
    }
    case FamilyKind::Bipyramid:
    case FamilyKind::Generic:
        break;
    }
    return box_scan_counter(polytope, options);
}

} // namespace ehrhart
