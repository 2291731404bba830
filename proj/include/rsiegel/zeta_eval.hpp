#ifndef RSIEGEL_ZETA_EVAL_HPP
#define RSIEGEL_ZETA_EVAL_HPP

// Z(t) and zeta on the critical line by the Riemann-Siegel formula, the
// vertical-strip variant, and an independent high-precision zeta built on
// Borwein's accelerated alternating series.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "exactcoeff.hpp"
#include "numeric.hpp"
#include "psifun.hpp"
#include "theta.hpp"

namespace rsiegel {

inline constexpr int max_correction_terms = 5;

// How m is chosen when sqrt(t/2pi) is exactly an integer.
enum class BoundaryRule {
    floor,  // m = eta (the plain floor)
    left,   // m = eta - 1, the limit from below
};

struct RSConfig {
    int correction_terms = max_correction_terms;
    int precision_bits = 53;
    BoundaryRule boundary_rule = BoundaryRule::floor;
    ThetaRoute theta_route = ThetaRoute::reference;
};

template <class Real>
struct RSBreakdown {
    Real t;
    std::int64_t m;
    Real delta;
    Real theta;
    Real main_sum;
    Real remainder;
    Real z;
    Real error_estimate;
};

namespace detail {

// C_0..C_5 as (order, value) pairs in Real. C_5 only feeds the error estimate.
template <class Real>
const std::array<std::vector<std::pair<int, Real>>, max_correction_terms + 1>& cn_real()
{
    static const auto tables = [] {
        std::array<std::vector<std::pair<int, Real>>, max_correction_terms + 1> out;
        for (int n = 0; n <= max_correction_terms; ++n) {
            const DerivativeCombo table = cn_table(n);
            for (const auto& [k, c] : table.entries()) {
                out[static_cast<std::size_t>(n)].emplace_back(k, to_real<Real>(c.re));
            }
        }
        return out;
    }();
    return tables;
}

template <class Real>
std::int64_t rs_m(const Real& t, BoundaryRule rule)
{
    using std::floor;
    using std::sqrt;
    const Real eta = sqrt(t / (2 * pi<Real>()));
    auto m = static_cast<std::int64_t>(to_double(floor(eta)));
    if (rule == BoundaryRule::left && Real(m) == eta && m > 1) {
        --m;
    }
    return m;
}

template <class Real>
Real contract(const std::vector<std::pair<int, Real>>& combo, const std::vector<Real>& derivs)
{
    Real s = 0;
    for (const auto& [k, c] : combo) {
        s += c * derivs[static_cast<std::size_t>(k)];
    }
    return s;
}

// Propagated derivative error of a contraction.
template <class Real>
Real contract_error(const std::vector<std::pair<int, Real>>& combo, const std::vector<Real>& errors)
{
    using std::abs;
    Real s = 0;
    for (const auto& [k, c] : combo) {
        s += abs(c) * errors[static_cast<std::size_t>(k)];
    }
    return s;
}

}  // namespace detail

/// Z(t) = e^{i theta} zeta(1/2 + it) by the Riemann-Siegel formula with
/// cfg.correction_terms terms C_0.. of the remainder series.
template <class Real = double>
RSBreakdown<Real> z_function(const Real& t, const RSConfig& cfg = {})
{
    using std::abs;
    using std::cos;
    using std::log;
    using std::pow;
    using std::sqrt;
    if (!(t >= 2 * pi<Real>())) {
        throw domain_error("z_function: t must be at least 2 pi");
    }
    if (cfg.correction_terms < 0 || cfg.correction_terms > max_correction_terms) {
        throw domain_error("z_function: correction_terms must lie in [0, 5]");
    }
    const std::int64_t m = detail::rs_m(t, cfg.boundary_rule);
    const Real delta = sqrt(t) - (Real(m) + Real(0.5)) * sqrt(2 * pi<Real>());
    const Real th = (cfg.theta_route == ThetaRoute::series && t >= Real(theta_series_t_min))
                        ? theta_series(t, 4).theta
                        : theta_reference(t).theta;

    std::vector<Real> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (std::int64_t n = 1; n <= m; ++n) {
        const Real rn(static_cast<double>(n));
        terms.push_back(cos(th - t * log(rn)) / sqrt(rn));
    }
    const Real main = 2 * pairwise_sum(terms);

    const int k_used = cfg.correction_terms;
    const auto fd = f_derivatives(delta, 3 * k_used);
    const auto& tables = detail::cn_real<Real>();
    Real remainder = 0;
    Real deriv_err = 0;
    Real scale = 1;
    Real last = 0;
    const Real inv_sqrt_t = 1 / sqrt(t);
    for (int k = 0; k < k_used; ++k) {
        const auto& table = tables[static_cast<std::size_t>(k)];
        last = detail::contract(table, fd.values);
        remainder += last * scale;
        deriv_err += detail::contract_error(table, fd.order_errors) * scale;
        scale *= inv_sqrt_t;
    }
    // C_k holds only derivatives of the parity of k, so the first omitted
    // term vanishes with the odd (or even) derivatives of F. The last used
    // coefficient one order further down stands in for the next term of its
    // parity.
    const Real next = abs(detail::contract(tables[static_cast<std::size_t>(k_used)], fd.values)) * scale +
                      abs(last) * scale * inv_sqrt_t;

    const Real sign = (m % 2 == 1) ? Real(1) : Real(-1);
    const Real amp = pow(t / (2 * pi<Real>()), Real(-0.25));
    const Real z = main + sign * amp * remainder;
    const Real err = amp * (next + deriv_err) + Real(m) * 8 * epsilon<Real>() * (1 + abs(th));
    return {t, m, delta, th, main, remainder, z, err};
}

/// zeta(1/2 + it) = e^{-i theta} Z(t).
template <class Real = double>
complex_t<Real> zeta_critical(const Real& t, const RSConfig& cfg = {})
{
    using std::cos;
    using std::sin;
    const auto b = z_function(t, cfg);
    return complex_t<Real>(cos(b.theta), -sin(b.theta)) * b.z;
}

/// The angle vartheta(s) of the strip formula, on the branch that vanishes
/// at s = 1/2 (log_gamma is analytic on Re > 0, which covers 0 < Re s < 1).
template <class Real>
complex_t<Real> vartheta(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::log;
    const C half(Real(0.5));
    const C i(Real(0), Real(1));
    const C inner = (C(Real(0.25)) - s / C(Real(2))) * C(log(pi<Real>())) +
                    half * (log_gamma(s / C(Real(2))) - log_gamma((C(Real(1)) - s) / C(Real(2))));
    return -i * inner;
}

/// zeta(s) for 0 <= Re s <= 1, Im s >= 2 pi, from the strip form of the
/// formula with the tables A_0..A_{n_terms-1} at sigma = Re s.
template <class Real = double>
complex_t<Real> zeta_strip(const complex_t<Real>& s, int n_terms = max_correction_terms)
{
    using C = complex_t<Real>;
    using std::cos;
    using std::exp;
    using std::log;
    using std::pow;
    using std::sqrt;
    const Real sigma = s.real();
    const Real t = s.imag();
    if (!(sigma >= 0 && sigma <= 1) || !(t >= 2 * pi<Real>())) {
        throw domain_error("zeta_strip: need 0 <= Re s <= 1 and Im s >= 2 pi");
    }
    if (n_terms < 1 || n_terms > max_correction_terms) {
        throw domain_error("zeta_strip: n_terms must lie in [1, 5]");
    }
    const C i(Real(0), Real(1));
    const C th = vartheta(s);
    const std::int64_t m = detail::rs_m(t, BoundaryRule::floor);
    const Real delta = sqrt(t) - (Real(m) + Real(0.5)) * sqrt(2 * pi<Real>());

    std::vector<C> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (std::int64_t l = 1; l <= m; ++l) {
        const Real rl(static_cast<double>(l));
        terms.push_back(cos(th + i * (s - C(Real(0.5))) * C(log(rl))) / C(sqrt(rl)));
    }
    const C main = C(Real(2)) * pairwise_sum(terms);

    const Rational sigma_q = exact_rational(sigma);
    const auto fd = f_derivatives(delta, 3 * (n_terms - 1));
    C series(0);
    Real scale = 1;
    const Real inv_tau = 1 / sqrt(t);
    for (int k = 0; k < n_terms; ++k) {
        C ak(0);
        const DerivativeCombo table = an_table(k, sigma_q);
        for (const auto& [order, c] : table.entries()) {
            ak += C(to_real<Real>(c.re), to_real<Real>(c.im)) * fd.values[static_cast<std::size_t>(order)];
        }
        series += ak * scale;
        scale *= inv_tau;
    }

    const Real sign = (m % 2 == 1) ? Real(1) : Real(-1);
    const Real amp = pow(t / (2 * pi<Real>()), (sigma - 1) / 2);
    const C phase = exp(i * (C(t / 2 * log(t / (2 * pi<Real>())) - t / 2 - pi<Real>() / 8) - th));
    const C e_theta_zeta = main + C(sign * amp) * phase * series;
    return exp(-i * th) * e_theta_zeta;
}

// ---------------------------------------------------------------------------
// Oracle

inline constexpr double oracle_target = 1e-20;

template <class Real>
struct OracleZ {
    Real value;
    Real residual;  // Im(e^{i theta} zeta), zero in exact arithmetic
};

namespace detail {

// Number of Borwein terms n with 2 Gamma(sigma)(1 + |t|/sigma) / ((3+sqrt 8)^n |Gamma(s)|) <= target.
template <class Real>
int borwein_terms(const complex_t<Real>& s, double target)
{
    using std::log;
    using std::sqrt;
    const double sigma = to_double(s.real());
    const double t = std::abs(to_double(s.imag()));
    const double lg_sigma = std::lgamma(sigma);
    const double lg_s = to_double(log_gamma(convert<double>(s)).real());
    const double log_bound0 = std::log(2.0) + lg_sigma - lg_s + std::log1p(t / sigma);
    const double rate = std::log(3.0 + std::sqrt(8.0));
    const double n = (log_bound0 - std::log(target)) / rate;
    return std::max(8, static_cast<int>(std::ceil(n)) + 2);
}

// eta(s) with n Borwein terms.
template <class Real>
complex_t<Real> borwein_eta(const complex_t<Real>& s, int n)
{
    using C = complex_t<Real>;
    using std::exp;
    using std::log;
    std::vector<Real> d(static_cast<std::size_t>(n) + 1);
    Real u = 1;
    Real acc = 1;
    d[0] = acc;
    for (int i = 0; i < n; ++i) {
        u *= Real(4) * Real(n + i) * Real(n - i) / (Real(2 * i + 1) * Real(2 * i + 2));
        acc += u;
        d[static_cast<std::size_t>(i) + 1] = acc;
    }
    const Real dn = d[static_cast<std::size_t>(n)];
    std::vector<C> terms(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Real w = (k % 2 == 0 ? Real(1) : Real(-1)) * (d[static_cast<std::size_t>(k)] - dn) / dn;
        terms[static_cast<std::size_t>(k)] = w * exp(-s * C(log(Real(k + 1))));
    }
    return -pairwise_sum(terms);
}

template <class Real>
void require_oracle_precision(int n)
{
    // The reduction loses about log2(n) bits on top of the working precision.
    const double rounding = 4.0 * n * std::ldexp(1.0, -precision_bits<Real>());
    if (rounding > oracle_target / 10) {
        throw precision_error("oracle: working precision too low for a 1e-20 result");
    }
}

}  // namespace detail

/// eta(s) = sum (-1)^(n-1) n^-s for Re s > 0, absolute error <= 1e-20.
template <class Real>
complex_t<Real> oracle_eta(const complex_t<Real>& s)
{
    if (!(s.real() > 0)) {
        throw domain_error("oracle_eta: Re s must be positive");
    }
    const int n = detail::borwein_terms(s, oracle_target / 10);
    detail::require_oracle_precision<Real>(n);
    return detail::borwein_eta(s, n);
}

/// zeta(s) = eta(s) / (1 - 2^(1-s)) for Re s > 0, s != 1.
template <class Real>
complex_t<Real> oracle_zeta(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::abs;
    using std::exp;
    using std::log;
    if (!(s.real() > 0)) {
        throw domain_error("oracle_zeta: Re s must be positive");
    }
    if (s == C(Real(1))) {
        throw pole_error("oracle_zeta: pole at s = 1");
    }
    const C denom = C(Real(1)) - exp((C(Real(1)) - s) * C(log(Real(2))));
    const double dmag = to_double(abs(denom));
    if (dmag < 1e-6) {
        throw domain_error("oracle_zeta: 1 - 2^(1-s) vanishes here");
    }
    const int n = detail::borwein_terms(s, oracle_target * std::min(1.0, dmag) / 10);
    detail::require_oracle_precision<Real>(n);
    return detail::borwein_eta(s, n) / denom;
}

/// zeta(s) anywhere except s = 1: oracle_zeta for Re s > 0 and the
/// functional equation pi^(-s/2) Gamma(s/2) zeta(s) = pi^(-(1-s)/2) Gamma((1-s)/2) zeta(1-s)
/// otherwise.
template <class Real>
complex_t<Real> oracle_zeta_continued(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::exp;
    using std::log;
    if (s.real() > 0) {
        return oracle_zeta(s);
    }
    const C one(Real(1));
    const C two(Real(2));
    const C r = one - s;
    const C lpi(log(pi<Real>()));
    const C log_ratio = (s - C(Real(0.5))) * lpi + log_gamma(r / two) - log_gamma(s / two);
    return exp(log_ratio) * oracle_zeta(r);
}

/// Z(t) from the oracle, with the imaginary part of e^{i theta} zeta(1/2 + it) as a self check.
template <class Real>
OracleZ<Real> oracle_z(const Real& t)
{
    using C = complex_t<Real>;
    using std::cos;
    using std::sin;
    const Real th = theta_reference(t).theta;
    const C v = C(cos(th), sin(th)) * oracle_zeta(C(Real(0.5), t));
    return {v.real(), v.imag()};
}

}  // namespace rsiegel

#endif
