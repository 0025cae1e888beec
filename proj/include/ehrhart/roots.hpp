#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

struct RootSet {
    /// With multiplicity, sorted by real then imaginary part.
    std::vector<std::complex<double>> roots;
    /// max |p(z)| over the returned roots for the monic normalization of p.
    double residual_bound = 0;
    std::size_t source_degree = 0;
};

/// All complex roots. Repeated roots are split off exactly with a rational
/// square-free factorization first; each square-free factor is solved by
/// Aberth iteration in long double and polished by Newton steps.
/// Deterministic. Constant (including zero) polynomials are rejected.
RootSet find_roots(const Polynomial& p);

/// Every root has real part within tol of -target.
bool common_real_part(const RootSet& roots, const Rational& target, double tol = 1e-7);

/// The shared real part when all roots agree within tol.
std::optional<double> detect_common_real_part(const RootSet& roots, double tol = 1e-7);

/// Conjugate pairs with |imaginary part| > tol.
std::size_t nonreal_pair_count(const RootSet& roots, double tol = 1e-7);

/// Exact necessary condition for all roots lying on Re = -1/a: the shifted
/// polynomial q(t) = LE(t - 1/a) has the parity of its degree,
/// q(-t) = (-1)^n q(t). Does not imply the root condition.
bool parity_necessary_check(const EhrhartPolynomial& ehr, const Rational& a);

/// |z + 1/2| <= n (n - 1/2) + tol for every root.
bool braun_disc_check(const RootSet& roots, std::size_t n, double tol = 1e-9);

struct WillsIndex {
    std::size_t i = 0;
    Rational coefficient;
    /// 2^i binom(n, i)
    Rational bound;
    bool holds = false;
};

struct WillsVerdict {
    std::size_t dimension = 0;
    std::vector<WillsIndex> per_index;
    bool overall = false;

    std::vector<std::size_t> violated_indices() const;
};

/// lE_i(P) <= lE_i(C_n) for i = 0..n, compared exactly.
WillsVerdict wills_check(const EhrhartPolynomial& ehr);

struct InequalityVerdict {
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool is_equality = false;
};

/// lE_t / lE_s <= a^{t-s} binom(n, t) / binom(n, s) for 0 <= s < t <= n.
/// The root hypothesis is not verified here. lE_s = 0 raises
/// std::domain_error.
InequalityVerdict root_line_ratio_check(const EhrhartPolynomial& ehr, const Rational& a, std::size_t s,
                                    std::size_t t);

/// vol(P) <= (a / (a + 1))^n LE(P).
InequalityVerdict root_line_volume_bound(const EhrhartPolynomial& ehr, const Rational& a);

/// LE(P) <= (a+1)^{n-2} (a+2) / a^{n-1} vol(P) + (a+1)^{n-2}. Requires n >= 2.
InequalityVerdict root_line_upper_bound(const EhrhartPolynomial& ehr, const Rational& a);

/// lE_{n-1} / lE_n equals the sum of the negated roots, read off the
/// monic normalization by Vieta. Exact.
bool gamma_sum_identity_check(const EhrhartPolynomial& ehr);

} // namespace ehrhart
