#ifndef RSIEGEL_THETA_HPP
#define RSIEGEL_THETA_HPP

// log Gamma for complex arguments and the Riemann-Siegel angle
// theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi.

#include <cmath>
#include <complex>
#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "exactcoeff.hpp"
#include "numeric.hpp"

namespace rsiegel {

inline constexpr double theta_series_t_min = 10.0;

enum class ThetaRoute { series, reference };

template <class Real>
struct ThetaValue {
    Real t;
    Real theta;
    ThetaRoute route;
    Real error_estimate;
};

namespace detail {

// B_{2k} / (2k (2k-1)) for k = 1..count, converted once per type.
template <class Real>
const std::vector<Real>& stirling_coefficients()
{
    static const std::vector<Real> coeffs = [] {
        constexpr int count = 90;
        const auto b = bernoulli_numbers(count);
        std::vector<Real> out;
        out.reserve(count);
        for (int k = 1; k <= count; ++k) {
            out.push_back(to_real<Real>(b[static_cast<std::size_t>(2 * k)] / Rational(2 * k * (2 * k - 1))));
        }
        return out;
    }();
    return coeffs;
}

template <class Real>
Real stirling_radius()
{
    return Real(std::max(15.0, 0.25 * precision_bits<Real>()));
}

inline void require_series_t(double t, const char* what)
{
    if (!(t >= theta_series_t_min)) {
        throw domain_error(std::string(what) + ": the asymptotic series needs t >= 10");
    }
}

}  // namespace detail

/// log Gamma(z). Stirling's series after shifting Re z past a precision
/// dependent radius; the shift is undone with a sum of principal logs, so the
/// result is analytic (and its imaginary part continuous) on Re z > 0 and
/// equals the real log Gamma on the positive axis. For Re z < 0 the value is
/// some logarithm of Gamma(z).
template <class Real>
complex_t<Real> log_gamma(const complex_t<Real>& z)
{
    using std::abs;
    using std::ceil;
    using std::log;
    using std::round;
    using C = complex_t<Real>;
    if (z.imag() == 0 && z.real() <= 0 && round(z.real()) == z.real()) {
        throw pole_error("log_gamma: pole at a non-positive integer");
    }
    const Real radius = detail::stirling_radius<Real>();
    int shift = 0;
    if (z.real() < radius) {
        shift = static_cast<int>(to_double(ceil(radius - z.real())));
    }
    std::vector<C> logs;
    logs.reserve(static_cast<std::size_t>(shift));
    for (int j = 0; j < shift; ++j) {
        logs.push_back(log(z + C(Real(j))));
    }
    const C w = z + C(Real(shift));

    const Real eps = epsilon<Real>();
    const C inv = C(Real(1)) / w;
    const C inv2 = inv * inv;
    C power = inv;
    C series(0);
    for (const Real& c : detail::stirling_coefficients<Real>()) {
        const C term = c * power;
        series += term;
        if (abs(term) <= eps * Real(1e-2)) {
            break;
        }
        power *= inv2;
    }
    const C base = (w - C(Real(0.5))) * log(w) - w + C(log(2 * pi<Real>()) / 2);
    return base + series - pairwise_sum(logs);
}

template <class Real>
Real log_gamma(const Real& x)
{
    return log_gamma(complex_t<Real>(x)).real();
}

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
template <class Real>
ThetaValue<Real> theta_reference(const Real& t)
{
    using std::abs;
    using std::log;
    if (!(t > 0)) {
        throw domain_error("theta_reference: t must be positive");
    }
    const complex_t<Real> z(Real(0.25), t / 2);
    const Real th = log_gamma(z).imag() - t / 2 * log(pi<Real>());
    const Real err = Real(16) * epsilon<Real>() * (abs(th) + t * abs(log(t)) + 1);
    return {t, th, ThetaRoute::reference, err};
}

/// Coefficient c_n of the n-th theta correction c_n t^(1-2n), i.e.
/// F_n / (8 n (2n-1) 2^(2n-1)).
inline Rational theta_correction_coefficient(int n)
{
    if (n < 1) {
        throw domain_error("theta_correction_coefficient: n must be >= 1");
    }
    const auto f = fn_numbers(n);
    return f[static_cast<std::size_t>(n)] / (8 * n * (2 * n - 1)) / Rational(BigInt(1) << (2 * n - 1));
}

/// Coefficient of t^(-2n) in omega and in the log |Gamma(1/4 + it/2)| series:
/// E_n / (8 n 4^n).
inline Rational omega_coefficient(int n)
{
    if (n < 1) {
        throw domain_error("omega_coefficient: n must be >= 1");
    }
    const auto e = euler_secant_numbers(n);
    return e[static_cast<std::size_t>(n)] / (8 * n) / Rational(BigInt(1) << (2 * n));
}

namespace detail {

// sum_{n=1}^{terms} coeff(n) t^(base - 2n) and |coeff(terms+1) t^(base-2(terms+1))|.
template <class Real, class Coeff>
std::pair<Real, Real> inverse_power_sum(const Real& t, int terms, int base, Coeff coeff)
{
    using std::abs;
    using std::pow;
    Real sum = 0;
    for (int n = terms; n >= 1; --n) {
        sum += to_real<Real>(coeff(n)) * pow(t, base - 2 * n);
    }
    const Real next = abs(to_real<Real>(coeff(terms + 1)) * pow(t, base - 2 * (terms + 1)));
    return {sum, next};
}

}  // namespace detail

/// theta(t) from the asymptotic series with `terms` corrections.
template <class Real>
ThetaValue<Real> theta_series(const Real& t, int terms)
{
    using std::log;
    detail::require_series_t(to_double(t), "theta_series");
    if (terms < 1 || terms > 10) {
        throw domain_error("theta_series: terms must lie in [1, 10]");
    }
    const auto [corr, next] = detail::inverse_power_sum(t, terms, 1, theta_correction_coefficient);
    const Real main = t / 2 * log(t / (2 * pi<Real>())) - t / 2 - pi<Real>() / 8;
    return {t, main + corr, ThetaRoute::series, next};
}

/// log |Gamma(1/4 + it/2)| from its asymptotic series.
template <class Real>
Real log_abs_gamma_series(const Real& t, int terms)
{
    using std::log;
    detail::require_series_t(to_double(t), "log_abs_gamma_series");
    if (terms < 0) {
        throw domain_error("log_abs_gamma_series: negative term count");
    }
    const Real sum = terms == 0 ? Real(0) : detail::inverse_power_sum(t, terms, 0, omega_coefficient).first;
    return -pi<Real>() / 4 * t - log(t / 2) / 4 + log(2 * pi<Real>()) / 2 + sum;
}

/// omega(t) = (1/8) sum E_n/n (2t)^(-2n), truncated after `terms` terms.
template <class Real>
Real omega(const Real& t, int terms)
{
    detail::require_series_t(to_double(t), "omega");
    if (terms < 0) {
        throw domain_error("omega: negative term count");
    }
    return terms == 0 ? Real(0) : detail::inverse_power_sum(t, terms, 0, omega_coefficient).first;
}

}  // namespace rsiegel

#endif
