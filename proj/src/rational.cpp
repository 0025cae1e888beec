#include "ehrhart/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ehrhart {

Integer pow(const Integer& base, unsigned long exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        }
    }
    std::string owned(text.front() == '+' ? text.substr(1) : text);
    return Integer(owned, 10);
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

long double Rational::to_long_double() const {
    // Scale so that both parts fit comfortably in a double before dividing.
    const long num_bits = static_cast<long>(mpz_sizeinbase(value_.get_num_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(value_.get_den_mpz_t(), 2));
    if (num_bits < 900 && den_bits < 900) {
        return static_cast<long double>(value_.get_num().get_d()) /
               static_cast<long double>(value_.get_den().get_d());
    }
    return static_cast<long double>(value_.get_d());
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& base, unsigned long exponent) {
    return Rational(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& out, const Rational& value) {
    return out << value.to_string();
}

} // namespace ehrhart
