#include <doctest.h>

#include <random>
#include <vector>

#include "ehrhart/arith.hpp"
#include "oracles.hpp"

using namespace ehrhart;

namespace {

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

} // namespace

TEST_CASE("bernoulli numbers with B_1 = -1/2") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == frac(-1, 2));
    CHECK(bernoulli(2) == frac(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == frac(-1, 30));
    CHECK(bernoulli(8) == frac(-1, 30));
    CHECK(bernoulli(12) == frac(-691, 2730));
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa table") {
    const auto table = oracle::bernoulli_table(31);
    for (std::size_t j = 0; j < table.size(); ++j) {
        CAPTURE(j);
        CHECK(bernoulli(j).raw() == table[j]);
    }
}

TEST_CASE("faulhaber sums match direct summation") {
    CHECK(faulhaber_sum(2, Integer(4)) == 14);
    CHECK(faulhaber_sum(0, Integer(5)) == 5);
    CHECK(faulhaber_sum(3, Integer(0)) == 0);
    for (std::size_t i = 0; i <= 8; ++i) {
        Integer direct = 0;
        for (long k = 0; k <= 12; ++k) {
            CAPTURE(i);
            CAPTURE(k);
            CHECK(faulhaber_sum(i, Integer(k)) == Rational(direct));
            CHECK(faulhaber_polynomial(i)(Rational(k)) == Rational(direct));
            direct += pow(Integer(k), i);
        }
    }
}

TEST_CASE("binomial agrees with Pascal's triangle") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    const auto t = oracle::pascal(41);
    for (unsigned long n = 0; n < t.size(); ++n)
        for (unsigned long k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
}

TEST_CASE("elementary symmetric polynomials") {
    const std::vector<Rational> v{1, 2, 3};
    CHECK(elementary_symmetric(v, 0) == 1);
    CHECK(elementary_symmetric(v, 1) == 6);
    CHECK(elementary_symmetric(v, 2) == 11);
    CHECK(elementary_symmetric(v, 3) == 6);
    CHECK_THROWS_AS(elementary_symmetric(v, 4), std::invalid_argument);

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> xs;
        for (int i = 0; i < 6; ++i) xs.push_back(frac(d(rng), 1 + trial % 4));
        for (std::size_t j = 0; j <= xs.size(); ++j) {
            Rational brute;
            for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != j) continue;
                Rational term = 1;
                for (std::size_t i = 0; i < xs.size(); ++i)
                    if (mask >> i & 1) term *= xs[i];
                brute += term;
            }
            CHECK(elementary_symmetric(xs, j) == brute);
        }
    }
}

TEST_CASE("interpolation recovers the polynomial") {
    const std::vector<InterpolationPoint> pts{{0, 1}, {1, 3}, {2, 7}};
    CHECK(interpolate(pts) == Polynomial({1, 1, 1}));
    const std::vector<InterpolationPoint> dup{{0, 1}, {0, 2}};
    CHECK_THROWS(interpolate(dup));

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c;
        for (int i = 0; i <= trial % 7; ++i) c.push_back(frac(d(rng), 1 + i));
        const Polynomial p(c);
        std::vector<InterpolationPoint> samples;
        for (long x = 0; x <= static_cast<long>(c.size()); ++x) samples.emplace_back(Rational(x * 3 - 4), p(Rational(x * 3 - 4)));
        CHECK(interpolate(samples) == p);
    }
}

TEST_CASE("poly_shift evaluates at translated points") {
    const Polynomial p({1, 0, 2, -1});
    const Rational c = frac(-1, 2);
    const Polynomial q = poly_shift(p, c);
    for (long t = -5; t <= 5; ++t) CHECK(q(Rational(t)) == p(Rational(t) + c));
    CHECK(poly_shift(Polynomial({0, 1}), 3) == Polynomial({3, 1}));
}

TEST_CASE("bernoulli magnitude bounds bracket |B_2j|") {
    for (std::size_t j = 1; j <= 20; ++j) {
        const auto b = bernoulli_magnitude_bounds(j);
        const Rational value = abs(bernoulli(2 * j));
        CAPTURE(j);
        CHECK(b.lower < value);
        CHECK(value < b.upper);
    }
}

TEST_CASE("polynomial arithmetic and division") {
    const Polynomial a({-1, 0, 1}); // t^2 - 1
    const Polynomial b({1, 1});     // t + 1
    const auto [q, r] = divide(a, b);
    CHECK(q == Polynomial({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, Polynomial({1, 2, 1})) == b);
    CHECK(a.derivative() == Polynomial({0, 2}));
    CHECK(Polynomial::linear_factor(3) == Polynomial({-3, 1}));
    CHECK(Polynomial({2, 4}).monic() == Polynomial({frac(1, 2), 1}));
    CHECK(Polynomial({1, 0, 0}).degree() == 0);
    CHECK(Polynomial().degree() == 0);
    CHECK(Polynomial({1, frac(-3, 2), 2}).to_string() == "1 - 3/2*k + 2*k^2");
    CHECK_THROWS(divide(a, Polynomial()));
}

TEST_CASE("square-free factorization of (t+1)^3 (t-2)") {
    const Polynomial cube_part = Polynomial({1, 1}) * Polynomial({1, 1}) * Polynomial({1, 1});
    const Polynomial p = cube_part * Polynomial({-2, 1});
    const auto factors = squarefree_factorization(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == Polynomial({-2, 1}));
    CHECK(factors[0].second == 1);
    CHECK(factors[1].first == Polynomial({1, 1}));
    CHECK(factors[1].second == 3);
}
