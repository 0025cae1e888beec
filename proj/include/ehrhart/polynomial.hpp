#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Dense univariate polynomial over the rationals. Index i of the
/// coefficient list is the coefficient of t^i; trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& value);
    static Polynomial monomial(const Rational& coefficient, std::size_t power);
    /// t - root
    static Polynomial linear_factor(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    /// 0 for constants, including the zero polynomial.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    /// Coefficient of t^power; zero past the degree.
    Rational coefficient(std::size_t power) const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;
    long double evaluate(long double t) const;

    Polynomial derivative() const;
    /// Divides by the leading coefficient; the zero polynomial is rejected.
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(char variable = 'k') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Square-free factorization (Yun): returns pairs (factor, multiplicity)
/// with monic, pairwise coprime, square-free factors.
std::vector<std::pair<Polynomial, std::size_t>> squarefree_factorization(const Polynomial& p);

std::ostream& operator<<(std::ostream& out, const Polynomial& p);

} // namespace ehrhart
