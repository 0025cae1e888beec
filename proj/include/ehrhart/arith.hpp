#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ehrhart/polynomial.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Bernoulli number B_j with B_1 = -1/2, the convention under which
///   sum_{j=0}^{k-1} j^i = 1/(i+1) * sum_{j=1}^{i+1} binom(i+1, j) B_{i-j+1} k^j.
/// The B_1 = +1/2 convention belongs to sums running 1..k and would shift
/// every bipyramid coefficient computed from the formula above.
///
/// Computed from sum_{m=0}^{j} binom(j+1, m) B_m = 0 and memoized in a
/// process-wide table guarded by a mutex.
Rational bernoulli(std::size_t j);

/// sum_{j=0}^{k-1} j^i evaluated through the Faulhaber closed form.
Rational faulhaber_sum(std::size_t i, const Integer& k);

/// The Faulhaber closed form as a polynomial in k.
Polynomial faulhaber_polynomial(std::size_t i);

/// binom(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Elementary symmetric polynomial sigma_j(values); sigma_0 = 1.
/// Throws std::invalid_argument when j exceeds the number of values.
Rational elementary_symmetric(std::span<const Rational> values, std::size_t j);

using InterpolationPoint = std::pair<Rational, Rational>;

/// Unique polynomial of degree < points.size() through all points
/// (Newton divided differences, exact). Duplicate abscissae are rejected.
Polynomial interpolate(std::span<const InterpolationPoint> points);

/// q with q(t) = p(t + c).
Polynomial poly_shift(const Polynomial& p, const Rational& c);

struct BernoulliBounds {
    Rational lower;
    Rational upper;
};

/// Rational enclosure of
///   2 (2j)! / (2 pi)^{2j}  <  |B_{2j}|  <  2 (2j)! / (2 pi)^{2j} / (1 - 2^{1-2j})
/// with pi replaced by the endpoint of [3.14159265358979, 3.14159265358980]
/// that moves each bound outward. Requires j >= 1.
BernoulliBounds bernoulli_magnitude_bounds(std::size_t j);

} // namespace ehrhart
