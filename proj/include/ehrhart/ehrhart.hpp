#pragma once

#include <cstddef>

#include "ehrhart/counting.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// LE(kP) = sum_i lE_i(P) k^i for an n-dimensional lattice polytope.
/// Construction checks degree n, lE_0 = 1 and a positive volume lE_n.
class EhrhartPolynomial {
public:
    EhrhartPolynomial(std::size_t dimension, Polynomial poly);

    std::size_t dimension() const { return dimension_; }
    const Polynomial& polynomial() const { return poly_; }
    /// lE_i; zero past the dimension.
    Rational coefficient(std::size_t i) const { return poly_.coefficient(i); }
    const Rational& volume() const { return poly_.leading(); }
    /// LE(kP).
    Rational operator()(const Rational& k) const { return poly_(k); }

    friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;

private:
    std::size_t dimension_;
    Polynomial poly_;
};

/// Interpolates counter(k) at k = 0..n. A wrong degree or lE_0 != 1 means
/// the counter is broken and raises std::logic_error.
EhrhartPolynomial ehrhart_of(const LatticePolytope& polytope, const Counter& counter);
EhrhartPolynomial ehrhart_of(std::size_t dimension, const Counter& counter);

/// lE_j(P x Q) = sum_i lE_i(P) lE_{j-i}(Q).
EhrhartPolynomial product_coefficients(const EhrhartPolynomial& first, const EhrhartPolynomial& second);

/// Closed-form coefficients of the bipyramid Q_n over the (n-1)-cube:
///   lE_i = binom(n-1, i) 2^i
///        + (2/n) sum_{j=i-1}^{n-1} binom(n, j+1) 2^j binom(j+1, i) B_{j-i+1}
/// for i >= 1, lE_0 = 1.
EhrhartPolynomial qn_coefficients(unsigned n);

/// lE_1(Q_n) = 2(n-1) + (4 - 2^n) B_{n-1}.
Rational qn_first_coefficient(unsigned n);

struct GrowthCheck {
    /// (-1)^k lE_1(Q_{2k+1})
    Rational value;
    Rational lower;
    Rational upper;
    bool holds = false;
};

/// With n = 2k+1,
///   (-1)^k lE_1(Q_n) = (-1)^k 4k + (2^{2k+1} - 4) |B_{2k}|,
/// and |B_{2k}| is replaced by the rational enclosure from
/// bernoulli_magnitude_bounds(k). holds iff lower < value < upper.
/// Requires k >= 2.
GrowthCheck qn_growth_check(unsigned k);

/// lE_1 of a lattice polygon as half the sum of the lattice lengths of its
/// edges. Only dimension 2 is supported.
Rational second_coefficient_from_facets(const LatticePolytope& polytope);

} // namespace ehrhart
