#include "ehrhart/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace ehrhart {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

} // namespace

Rational bernoulli(std::size_t j) {
    std::lock_guard lock(bernoulli_mutex);
    while (bernoulli_table.size() <= j) {
        const std::size_t next = bernoulli_table.size();
        Rational sum;
        for (std::size_t m = 0; m < next; ++m) {
            sum += Rational(binomial(next + 1, m)) * bernoulli_table[m];
        }
        bernoulli_table.push_back(-sum / Rational(next + 1));
    }
    return bernoulli_table[j];
}

Polynomial faulhaber_polynomial(std::size_t i) {
    std::vector<Rational> coeffs(i + 2);
    const Rational scale(Integer(1), Integer(static_cast<unsigned long>(i + 1)));
    for (std::size_t j = 1; j <= i + 1; ++j) {
        coeffs[j] = scale * Rational(binomial(i + 1, j)) * bernoulli(i - j + 1);
    }
    return Polynomial(std::move(coeffs));
}

Rational faulhaber_sum(std::size_t i, const Integer& k) {
    return faulhaber_polynomial(i)(Rational(k));
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Rational elementary_symmetric(std::span<const Rational> values, std::size_t j) {
    if (j > values.size()) {
        throw std::invalid_argument("elementary_symmetric: index " + std::to_string(j) +
                                    " exceeds " + std::to_string(values.size()) + " values");
    }
    // sigma[d] after processing a prefix; coefficients of prod (1 + x_i z).
    std::vector<Rational> sigma(j + 1);
    sigma[0] = 1;
    for (const auto& x : values) {
        for (std::size_t d = j; d >= 1; --d) {
            sigma[d] += sigma[d - 1] * x;
        }
    }
    return sigma[j];
}

Polynomial interpolate(std::span<const InterpolationPoint> points) {
    if (points.empty()) {
        throw std::invalid_argument("interpolate: no points");
    }
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            points[i].first.to_string());
            }
        }
    }

    std::vector<Rational> table(n);
    for (std::size_t i = 0; i < n; ++i) table[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            table[i] = (table[i] - table[i - 1]) / (points[i].first - points[i - level].first);
        }
    }

    // Horner over the Newton basis.
    Polynomial result = Polynomial::constant(table[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        result *= Polynomial::linear_factor(points[i].first);
        result += Polynomial::constant(table[i]);
    }
    return result;
}

Polynomial poly_shift(const Polynomial& p, const Rational& c) {
    Polynomial result;
    const Polynomial step = Polynomial::linear_factor(-c);
    auto coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        result *= step;
        result += Polynomial::constant(coeffs[i]);
    }
    return result;
}

BernoulliBounds bernoulli_magnitude_bounds(std::size_t j) {
    if (j == 0) {
        throw std::invalid_argument("bernoulli_magnitude_bounds: j must be >= 1");
    }
    const Integer pi_scale = pow(Integer(10), 14);
    const Rational pi_low(Integer("314159265358979"), pi_scale);
    const Rational pi_high(Integer("314159265358980"), pi_scale);

    const unsigned long even = 2 * static_cast<unsigned long>(j);
    const Rational numerator = Rational(2) * Rational(factorial(even));
    const Rational lower = numerator / pow(Rational(2) * pi_high, even);
    const Rational at_low_pi = numerator / pow(Rational(2) * pi_low, even);
    const Rational correction = Rational(1) - Rational(Integer(1), pow(Integer(2), even - 1));
    return {lower, at_low_pi / correction};
}

} // namespace ehrhart
