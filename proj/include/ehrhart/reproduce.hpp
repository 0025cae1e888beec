#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

struct ReproductionRow {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct ReproductionOptions {
    unsigned threads = 1;
    std::uint64_t seed = 20120710;
    unsigned random_polygons = 60;
    double root_tol = 1e-7;
};

/// The triangle conv{(-1,-1), (-1,2), (2,-1)}.
LatticePolytope exceptional_triangle();

/// Random polygons with the origin strictly inside: hulls of 3..7 points
/// drawn uniformly from [-4,4]^2, resampled until the origin is interior.
std::vector<LatticePolytope> random_origin_polygons(std::uint64_t seed, unsigned count);

/// Recomputes every published number and characterization, one row each.
std::vector<ReproductionRow> reproduce_results(const ReproductionOptions& options = {});

} // namespace ehrhart
