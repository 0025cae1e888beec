#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "ehrhart/polytope.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Membership predicate for the integer points of one (dilated) polytope.
/// Every point with a coordinate beyond `bounding_radius` in absolute value
/// is outside.
struct MembershipOracle {
    std::size_t dimension = 0;
    std::function<bool(std::span<const std::int64_t>)> contains;
    std::int64_t bounding_radius = 0;
};

/// Membership in dilation * P. Family tags take precedence over facets:
///   cube        max |x_i| <= r
///   cross       sum |x_i| <= r
///   P_n         height j: |j| <= r and sum_i max(|x_i| - (r - |j|), 0) <= |j|
///   Q_n         height j: |j| <= r and max |x_i| <= r - |j|
///   bipyramid   height j: |j| <= r and x in (r - |j|) * base
///   product     conjunction of the factor oracles
/// and otherwise every u_i . x <= r * l_i, tested largest normals first.
/// Dilation 0 yields the origin-only oracle. Generic polytopes without
/// facets are rejected, as are coordinates too large for 64-bit scanning.
MembershipOracle oracle_for(const LatticePolytope& polytope, unsigned long dilation = 1);

struct ScanOptions {
    unsigned threads = 1;
    /// Refuse scans whose bounding box holds more points than this.
    std::optional<Integer> max_box_points;
};

/// (2 * radius + 1)^dimension.
Integer box_points(const MembershipOracle& oracle);

/// Counts the predicate over the bounding box. The first coordinate is
/// split across workers; partial counts are summed in worker order.
/// Throws std::length_error when the box exceeds options.max_box_points.
Integer count_box_scan(const MembershipOracle& oracle, const ScanOptions& options = {});

/// (2k+1)^{n-1} + 2 sum_{j=0}^{k-1} (2j+1)^{n-1}: points of k Q_n.
Integer count_qn_closed(unsigned n, unsigned long k);

/// Points of k P_n, summing the height slices (k-|j|) C_{n-1} + |j| C*_{n-1}.
Integer count_pn_sliced(unsigned n, unsigned long k);

/// Integer x in Z^m with sum_i max(|x_i| - a, 0) <= b, i.e. the points of
/// a C_m + b C*_m. Dynamic program over coordinates on the spent deficiency
/// budget, O(m b^2).
Integer count_minkowski_dp(unsigned m, unsigned long a, unsigned long b);

/// k -> LE(k P).
using Counter = std::function<Integer(unsigned long)>;

Integer count_product(const Counter& first, const Counter& second, unsigned long k);

/// Box scan of oracle_for(polytope, k).
Counter box_scan_counter(const LatticePolytope& polytope, ScanOptions options = {});

/// Fastest exact counter available for the polytope: closed forms and the
/// slice/DP counters for tagged families, products of factor counters,
/// and the guarded box scan otherwise.
Counter family_counter(const LatticePolytope& polytope, ScanOptions options = {});

} // namespace ehrhart
