#include "ehrhart/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ehrhart/arith.hpp"

namespace ehrhart {

namespace {

using Complex = std::complex<long double>;

Complex horner(const std::vector<long double>& coeffs, Complex z) {
    Complex acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<long double> to_long_double(const Polynomial& p) {
    std::vector<long double> out;
    for (const auto& c : p.coefficients()) out.push_back(c.to_long_double());
    return out;
}

// Roots of a monic square-free polynomial.
std::vector<Complex> aberth(const Polynomial& monic) {
    const std::size_t d = monic.degree();
    const auto coeffs = to_long_double(monic);
    if (d == 1) return {Complex(-coeffs[0], 0)};

    std::vector<long double> dcoeffs;
    for (std::size_t i = 1; i <= d; ++i) dcoeffs.push_back(coeffs[i] * static_cast<long double>(i));

    // Fujiwara bound on the root moduli.
    long double radius = 0;
    for (std::size_t i = 0; i < d; ++i) {
        long double term = std::pow(std::fabs(coeffs[i]), 1.0L / static_cast<long double>(d - i));
        if (i == 0) term = std::pow(std::fabs(coeffs[0]) / 2, 1.0L / static_cast<long double>(d));
        radius = std::max(radius, term);
    }
    radius = std::max(2 * radius, 1.0L);

    const long double center = -coeffs[d - 1] / static_cast<long double>(d);
    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                      static_cast<long double>(d) + 0.4L;
        z[k] = Complex(center, 0) + std::polar(radius / 2, angle);
    }

    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0;
        for (std::size_t k = 0; k < d; ++k) {
            const Complex value = horner(coeffs, z[k]);
            if (value == Complex(0)) continue;
            const Complex ratio = value / horner(dcoeffs, z[k]);
            Complex repulsion = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != k) repulsion += 1.0L / (z[k] - z[j]);
            }
            const Complex step = ratio / (1.0L - ratio * repulsion);
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / (1 + std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
    }

    for (auto& root : z) {
        for (int polish = 0; polish < 3; ++polish) {
            const Complex slope = horner(dcoeffs, root);
            if (slope == Complex(0)) break;
            root -= horner(coeffs, root) / slope;
        }
    }
    return z;
}

// Real coefficients: make the set exactly conjugation-closed.
void symmetrize(std::vector<Complex>& roots) {
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const long double scale = 1 + std::abs(roots[i]);
        if (std::fabs(roots[i].imag()) <= 1e-12L * scale) {
            roots[i] = Complex(roots[i].real(), 0);
            continue;
        }
        std::size_t best = roots.size();
        long double best_gap = 0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            const long double gap = std::abs(roots[j] - std::conj(roots[i]));
            if (best == roots.size() || gap < best_gap) {
                best = j;
                best_gap = gap;
            }
        }
        if (best == roots.size()) continue;
        used[best] = true;
        const Complex mean = (roots[i] + std::conj(roots[best])) / 2.0L;
        roots[i] = mean;
        roots[best] = std::conj(mean);
    }
}

} // namespace

RootSet find_roots(const Polynomial& p) {
    if (p.is_zero() || p.degree() == 0) {
        throw std::invalid_argument("find_roots: polynomial must have degree >= 1");
    }
    std::vector<Complex> all;
    for (const auto& [factor, multiplicity] : squarefree_factorization(p)) {
        const auto roots = aberth(factor);
        for (std::size_t m = 0; m < multiplicity; ++m) all.insert(all.end(), roots.begin(), roots.end());
    }
    symmetrize(all);

    const auto monic = to_long_double(p.monic());
    RootSet out;
    out.source_degree = p.degree();
    for (const auto& z : all) {
        out.residual_bound = std::max(out.residual_bound, static_cast<double>(std::abs(horner(monic, z))));
        // Avoid printing -0.
        const double re = z.real() == 0 ? 0.0 : static_cast<double>(z.real());
        const double im = z.imag() == 0 ? 0.0 : static_cast<double>(z.imag());
        out.roots.emplace_back(re, im);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

bool common_real_part(const RootSet& roots, const Rational& target, double tol) {
    const double expected = -target.to_double();
    return std::all_of(roots.roots.begin(), roots.roots.end(),
                       [&](const auto& z) { return std::fabs(z.real() - expected) <= tol; });
}

std::optional<double> detect_common_real_part(const RootSet& roots, double tol) {
    if (roots.roots.empty()) return std::nullopt;
    double mean = 0;
    for (const auto& z : roots.roots) mean += z.real();
    mean /= static_cast<double>(roots.roots.size());
    for (const auto& z : roots.roots) {
        if (std::fabs(z.real() - mean) > tol) return std::nullopt;
    }
    return mean;
}

std::size_t nonreal_pair_count(const RootSet& roots, double tol) {
    std::size_t upper = 0;
    for (const auto& z : roots.roots) {
        if (z.imag() > tol) ++upper;
    }
    return upper;
}

bool parity_necessary_check(const EhrhartPolynomial& ehr, const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("parity_necessary_check: a must be positive");
    const Polynomial shifted = poly_shift(ehr.polynomial(), -(Rational(1) / a));
    const std::size_t n = ehr.dimension();
    const auto coeffs = shifted.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if ((i + n) % 2 == 1 && !coeffs[i].is_zero()) return false;
    }
    return true;
}

bool braun_disc_check(const RootSet& roots, std::size_t n, double tol) {
    const double radius = static_cast<double>(n) * (static_cast<double>(n) - 0.5);
    return std::all_of(roots.roots.begin(), roots.roots.end(), [&](const auto& z) {
        return std::abs(z + std::complex<double>(0.5, 0)) <= radius + tol;
    });
}

std::vector<std::size_t> WillsVerdict::violated_indices() const {
    std::vector<std::size_t> out;
    for (const auto& entry : per_index) {
        if (!entry.holds) out.push_back(entry.i);
    }
    return out;
}

WillsVerdict wills_check(const EhrhartPolynomial& ehr) {
    WillsVerdict verdict;
    verdict.dimension = ehr.dimension();
    verdict.overall = true;
    for (std::size_t i = 0; i <= ehr.dimension(); ++i) {
        WillsIndex entry;
        entry.i = i;
        entry.coefficient = ehr.coefficient(i);
        entry.bound = Rational(pow(Integer(2), i) * binomial(ehr.dimension(), i));
        entry.holds = entry.coefficient <= entry.bound;
        verdict.overall = verdict.overall && entry.holds;
        verdict.per_index.push_back(std::move(entry));
    }
    return verdict;
}

namespace {

InequalityVerdict compare(Rational lhs, Rational rhs) {
    InequalityVerdict v;
    v.holds = lhs <= rhs;
    v.is_equality = lhs == rhs;
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
}

void require_positive(const Rational& a, const char* what) {
    if (a.sign() <= 0) throw std::invalid_argument(std::string(what) + ": a must be positive");
}

} // namespace

InequalityVerdict root_line_ratio_check(const EhrhartPolynomial& ehr, const Rational& a, std::size_t s,
                                    std::size_t t) {
    require_positive(a, "root_line_ratio_check");
    const std::size_t n = ehr.dimension();
    if (!(s < t && t <= n)) {
        throw std::invalid_argument("root_line_ratio_check: need 0 <= s < t <= n");
    }
    const Rational denom = ehr.coefficient(s);
    if (denom.is_zero()) {
        throw std::domain_error("root_line_ratio_check: lE_" + std::to_string(s) + " is zero");
    }
    const Rational lhs = ehr.coefficient(t) / denom;
    const Rational rhs = pow(a, t - s) * Rational(binomial(n, t), binomial(n, s));
    return compare(lhs, rhs);
}

InequalityVerdict root_line_volume_bound(const EhrhartPolynomial& ehr, const Rational& a) {
    require_positive(a, "root_line_volume_bound");
    const std::size_t n = ehr.dimension();
    return compare(ehr.volume(), pow(a / (a + Rational(1)), n) * ehr(Rational(1)));
}

InequalityVerdict root_line_upper_bound(const EhrhartPolynomial& ehr, const Rational& a) {
    require_positive(a, "root_line_upper_bound");
    const std::size_t n = ehr.dimension();
    if (n < 2) throw std::invalid_argument("root_line_upper_bound: dimension must be >= 2");
    const Rational a1 = a + Rational(1);
    const Rational base = pow(a1, n - 2);
    const Rational rhs = base * (a + Rational(2)) / pow(a, n - 1) * ehr.volume() + base;
    return compare(ehr(Rational(1)), rhs);
}

bool gamma_sum_identity_check(const EhrhartPolynomial& ehr) {
    const std::size_t n = ehr.dimension();
    if (n == 0) throw std::invalid_argument("gamma_sum_identity_check: degree must be >= 1");
    const Polynomial monic = ehr.polynomial().monic();
    // monic = prod (k + gamma_i), so the k^{n-1} coefficient is sum gamma_i.
    const Rational gamma_sum = monic.coefficient(n - 1);
    return ehr.coefficient(n - 1) / ehr.volume() == gamma_sum;
}

} // namespace ehrhart
