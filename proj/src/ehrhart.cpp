#include "ehrhart/ehrhart.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "ehrhart/arith.hpp"

namespace ehrhart {

EhrhartPolynomial::EhrhartPolynomial(std::size_t dimension, Polynomial poly)
    : dimension_(dimension), poly_(std::move(poly)) {
    if (poly_.is_zero() || poly_.degree() != dimension_) {
        throw std::logic_error("Ehrhart polynomial of a " + std::to_string(dimension_) +
                               "-dimensional polytope must have degree " + std::to_string(dimension_) +
                               ", got " + poly_.to_string());
    }
    if (poly_.coefficient(0) != Rational(1)) {
        throw std::logic_error("Ehrhart polynomial must have constant term 1, got " +
                               poly_.coefficient(0).to_string());
    }
    if (poly_.leading().sign() <= 0) {
        throw std::logic_error("Ehrhart polynomial must have positive leading coefficient");
    }
}

EhrhartPolynomial ehrhart_of(std::size_t dimension, const Counter& counter) {
    std::vector<InterpolationPoint> points;
    points.reserve(dimension + 1);
    for (std::size_t k = 0; k <= dimension; ++k) {
        points.emplace_back(Rational(k), Rational(counter(k)));
    }
    return EhrhartPolynomial(dimension, interpolate(points));
}

EhrhartPolynomial ehrhart_of(const LatticePolytope& polytope, const Counter& counter) {
    return ehrhart_of(polytope.dimension(), counter);
}

EhrhartPolynomial product_coefficients(const EhrhartPolynomial& first, const EhrhartPolynomial& second) {
    return EhrhartPolynomial(first.dimension() + second.dimension(),
                             first.polynomial() * second.polynomial());
}

EhrhartPolynomial qn_coefficients(unsigned n) {
    if (n < 2) throw std::invalid_argument("qn_coefficients: n must be >= 2");
    std::vector<Rational> coeffs(n + 1);
    coeffs[0] = 1;
    const Rational two_over_n(Integer(2), Integer(n));
    for (unsigned i = 1; i <= n; ++i) {
        Rational sum;
        for (unsigned j = i - 1; j <= n - 1; ++j) {
            sum += Rational(Integer(binomial(n, j + 1) * pow(Integer(2), j) * binomial(j + 1, i))) *
                   bernoulli(j - i + 1);
        }
        coeffs[i] = Rational(Integer(binomial(n - 1, i) * pow(Integer(2), i))) + two_over_n * sum;
    }
    return EhrhartPolynomial(n, Polynomial(std::move(coeffs)));
}

Rational qn_first_coefficient(unsigned n) {
    if (n < 2) throw std::invalid_argument("qn_first_coefficient: n must be >= 2");
    return Rational(2 * (n - 1)) + Rational(Integer(Integer(4) - pow(Integer(2), n))) * bernoulli(n - 1);
}

GrowthCheck qn_growth_check(unsigned k) {
    if (k < 2) throw std::invalid_argument("qn_growth_check: k must be >= 2");
    const unsigned n = 2 * k + 1;
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational linear = sign * Rational(4 * k);
    const Rational weight(Integer(pow(Integer(2), 2 * k + 1) - 4));
    const BernoulliBounds bounds = bernoulli_magnitude_bounds(k);

    GrowthCheck check;
    check.value = sign * qn_first_coefficient(n);
    check.lower = linear + weight * bounds.lower;
    check.upper = linear + weight * bounds.upper;
    check.holds = check.lower < check.value && check.value < check.upper;
    return check;
}

Rational second_coefficient_from_facets(const LatticePolytope& polytope) {
    if (polytope.dimension() != 2) {
        throw std::invalid_argument("second_coefficient_from_facets: only polygons are supported, got dimension " +
                                    std::to_string(polytope.dimension()));
    }
    if (!polytope.halfspaces()) {
        throw std::invalid_argument("second_coefficient_from_facets: polygon has no edge description");
    }
    // Each edge lies on exactly one facet line; its endpoints are the extreme
    // vertices tight there.
    const auto vertices = extreme_vertices(polytope);
    Integer total = 0;
    for (const auto& h : *polytope.halfspaces()) {
        std::vector<const IntVector*> ends;
        for (const auto& v : vertices) {
            if (dot(h.normal, v) == h.rhs) ends.push_back(&v);
        }
        if (ends.size() != 2) {
            throw std::invalid_argument("second_coefficient_from_facets: halfspace is not an edge");
        }
        const Integer dx = (*ends[0])[0] - (*ends[1])[0];
        const Integer dy = (*ends[0])[1] - (*ends[1])[1];
        total += gcd(dx, dy);
    }
    return Rational(total, Integer(2));
}

} // namespace ehrhart
