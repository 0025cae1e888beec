#include "ehrhart/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ehrhart {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = coefficient;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, 1}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw std::domain_error("zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

long double Polynomial::evaluate(long double t) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + it->to_long_double();
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(i);
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    const Rational lead = leading();
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c /= lead;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

std::string Polynomial::to_string(char variable) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) out << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) out << "-";
        first = false;
        const Rational mag = abs(c);
        if (i == 0 || mag != Rational(1)) {
            out << mag;
            if (i > 0) out << '*';
        }
        if (i >= 1) out << variable;
        if (i >= 2) out << '^' << i;
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    Polynomial remainder = dividend;
    if (remainder.is_zero() || remainder.degree() < divisor.degree()) {
        return {Polynomial(), remainder};
    }
    std::vector<Rational> quotient(dividend.degree() - divisor.degree() + 1);
    const Rational& lead = divisor.leading();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
        const std::size_t shift = remainder.degree() - divisor.degree();
        const Rational factor = remainder.leading() / lead;
        quotient[shift] = factor;
        remainder -= Polynomial::monomial(factor, shift) * divisor;
    }
    return {Polynomial(std::move(quotient)), remainder};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<Polynomial, std::size_t>> squarefree_factorization(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::domain_error("square-free factorization of the zero polynomial");
    }
    std::vector<std::pair<Polynomial, std::size_t>> factors;
    if (p.degree() == 0) return factors;

    const Polynomial f = p.monic();
    const Polynomial df = f.derivative();
    Polynomial a = gcd(f, df);
    Polynomial b = divide(f, a).first;
    Polynomial c = divide(df, a).first;
    Polynomial d = c - b.derivative();
    for (std::size_t multiplicity = 1; b.degree() > 0; ++multiplicity) {
        a = gcd(b, d);
        if (a.degree() > 0) factors.emplace_back(a, multiplicity);
        b = divide(b, a).first;
        c = divide(d, a).first;
        d = c - b.derivative();
    }
    return factors;
}

std::ostream& operator<<(std::ostream& out, const Polynomial& p) { return out << p.to_string(); }

} // namespace ehrhart
