#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ehrhart {

/// Arbitrary-precision integer.
using Integer = mpz_class;

Integer pow(const Integer& base, unsigned long exponent);
Integer parse_integer(std::string_view text);

/// Exact fraction. Always canonical: the denominator is positive and
/// coprime to the numerator.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral T>
    Rational(T value) : value_(static_cast<unsigned long>(value)) {}

    Rational(const Integer& value) : value_(value) {}

    // Unevaluated gmpxx integer expressions such as a * b.
    template <class Expr>
    Rational(const __gmp_expr<mpz_t, Expr>& value) : value_(Integer(value)) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "p", "-p" and "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

Rational pow(const Rational& base, unsigned long exponent);
Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& out, const Rational& value);

} // namespace ehrhart
