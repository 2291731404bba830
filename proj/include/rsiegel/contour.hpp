#ifndef RSIEGEL_CONTOUR_HPP
#define RSIEGEL_CONTOUR_HPP

// Trapezoid quadrature along straight lines through the strip 0 < Re x < 1,
// tilted by 45 degrees so that the Gaussian factor of each integrand decays
// like exp(-pi v^2) along the path. Covers Phi(u), Phi(tau, u), the moment
// integrals, and the integral representation f(s) of zeta with its checks.

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "theta.hpp"
#include "zeta_eval.hpp"

namespace rsiegel {

// 0↖1, 0↙1 and 0↘1: the three supported path directions.
enum class Path {
    up_left,     // e^{3 pi i/4}, for exp(-pi i x^2) integrands
    down_left,   // e^{-3 pi i/4}, for exp(+pi i x^2)
    down_right,  // e^{-pi i/4}, for exp(-pi i x^2)
};

template <class Real>
complex_t<Real> path_direction(Path p)
{
    using std::sqrt;
    const Real h = sqrt(Real(2)) / 2;
    switch (p) {
    case Path::up_left:
        return {-h, h};
    case Path::down_left:
        return {-h, -h};
    case Path::down_right:
        return {h, -h};
    }
    return {};
}

template <class Real>
struct ContourSpec {
    Real crossing = Real(0.5);
    Path path = Path::up_left;
    Real half_length = Real(6);
    Real step = Real(0.05);
    Real pole_guard = Real(0.25);
};

template <class Real>
struct QuadratureResult {
    complex_t<Real> value;
    Real error_estimate;  // |I_h - I_{h/2}| plus the truncation estimate
    Real truncation;
    bool truncation_warning = false;  // truncation estimate above 1e-10
};

inline constexpr double truncation_warning_level = 1e-10;

namespace detail {

template <class Real>
void check_spec(const ContourSpec<Real>& spec, Path required, const char* what)
{
    if (!(spec.crossing > 0 && spec.crossing < 1)) {
        throw domain_error(std::string(what) + ": crossing must lie in (0, 1)");
    }
    if (spec.path != required) {
        throw domain_error(std::string(what) + ": unsupported path direction for this integrand");
    }
    if (!(spec.step > 0) || !(spec.half_length > spec.step)) {
        throw domain_error(std::string(what) + ": bad step or half_length");
    }
}

// Trapezoid rule on x = c + d v, v in [-L, L], at steps h and h/2.
// f(x, log_x) gets a logarithm of x that is continuous along the path and
// real where the path crosses the real axis.
template <class Real, class Fn>
QuadratureResult<Real> line_quadrature(const ContourSpec<Real>& spec, Fn&& f, const Real& analytic_tail = Real(0))
{
    using C = complex_t<Real>;
    using std::abs;
    using std::arg;
    using std::ceil;
    using std::log;
    using std::max;
    using std::min;
    using std::round;
    const C d = path_direction<Real>(spec.path);
    const Real hh = spec.step / 2;
    const int n = static_cast<int>(to_double(ceil(spec.half_length / hh)));
    const Real guard = spec.pole_guard * min(spec.crossing, 1 - spec.crossing);
    const auto count = static_cast<std::size_t>(2 * n + 1);

    std::vector<C> xs(count);
    std::vector<C> logs(count);
    for (int j = -n; j <= n; ++j) {
        const auto idx = static_cast<std::size_t>(j + n);
        xs[idx] = C(spec.crossing) + d * C(hh * Real(j));
        const C& x = xs[idx];
        if (abs(x - C(round(x.real()))) < guard) {
            throw domain_error("line_quadrature: node too close to a pole");
        }
    }
    // continuous log, walking outwards from the crossing
    logs[static_cast<std::size_t>(n)] = C(log(spec.crossing));
    for (int j = 1; j <= n; ++j) {
        for (int sgn : {1, -1}) {
            const auto idx = static_cast<std::size_t>(n + sgn * j);
            const auto prev = static_cast<std::size_t>(n + sgn * (j - 1));
            const Real step_arg = arg(xs[idx] / xs[prev]);
            logs[idx] = C(log(abs(xs[idx])), logs[prev].imag() + step_arg);
        }
    }

    std::vector<C> even;
    std::vector<C> odd;
    even.reserve(count / 2 + 1);
    odd.reserve(count / 2 + 1);
    std::vector<C> vals(count);
    for (int j = -n; j <= n; ++j) {
        const auto idx = static_cast<std::size_t>(j + n);
        vals[idx] = f(xs[idx], logs[idx]);
        ((j % 2 == 0) ? even : odd).push_back(vals[idx]);
    }
    const C s_even = pairwise_sum(even);
    const C s_odd = pairwise_sum(odd);
    const C coarse = C(spec.step) * d * s_even;
    const C fine = C(hh) * d * (s_even + s_odd);

    // Tail beyond +-L from the decay rate at the two ends.
    auto tail_at = [&](std::size_t end, std::size_t inner) {
        const Real a = abs(vals[end]);
        const Real b = abs(vals[inner]);
        if (a == 0) {
            return Real(0);
        }
        if (!(b > a)) {
            return a * spec.half_length;  // not decaying yet
        }
        const Real rate = log(b / a) / hh;
        return a / rate;
    };
    const Real tail = max(analytic_tail, tail_at(0, 1) + tail_at(count - 1, count - 2));
    QuadratureResult<Real> r;
    r.value = fine;
    r.truncation = tail;
    r.error_estimate = abs(fine - coarse) + tail;
    r.truncation_warning = tail > Real(truncation_warning_level);
    return r;
}

template <class Real>
complex_t<Real> pole_kernel(const complex_t<Real>& x)
{
    using C = complex_t<Real>;
    using std::exp;
    const C ipx = C(Real(0), pi<Real>()) * x;
    return C(Real(1)) / (exp(ipx) - exp(-ipx));
}

template <class Real>
complex_t<Real> ipi(const complex_t<Real>& z)
{
    return complex_t<Real>(Real(0), pi<Real>()) * z;
}

}  // namespace detail

/// Phi(u): integral of exp(-pi i x^2 + 2 pi i u x) / (e^{pi i x} - e^{-pi i x}) along 0↖1.
template <class Real>
QuadratureResult<Real> phi_u(const complex_t<Real>& u, const ContourSpec<Real>& spec = {})
{
    using C = complex_t<Real>;
    using std::abs;
    using std::exp;
    detail::check_spec(spec, Path::up_left, "phi_u");
    if (abs(u.imag()) > 4) {
        throw domain_error("phi_u: |Im u| must not exceed 4");
    }
    const Real bound =
        exp(-pi<Real>() * spec.half_length * spec.half_length + 2 * pi<Real>() * abs(u) * spec.half_length);
    return detail::line_quadrature(
        spec,
        [&](const C& x, const C&) {
            return exp(detail::ipi(C(Real(2)) * u * x - x * x)) * detail::pole_kernel(x);
        },
        bound);
}

/// Phi(tau, u) for Re tau < 0, along 0↖1.
template <class Real>
QuadratureResult<Real> phi_tau_u(const complex_t<Real>& tau, const complex_t<Real>& u,
                                 const ContourSpec<Real>& spec = {})
{
    using C = complex_t<Real>;
    using std::exp;
    detail::check_spec(spec, Path::up_left, "phi_tau_u");
    if (!(tau.real() < 0)) {
        throw domain_error("phi_tau_u: Re tau must be negative");
    }
    return detail::line_quadrature(spec, [&](const C& x, const C&) {
        return exp(detail::ipi(tau * x * x + C(Real(2)) * u * x)) * detail::pole_kernel(x);
    });
}

/// Integral of exp(-pi i x^2) along 0↖1; equals e^{3 pi i/4}.
template <class Real>
QuadratureResult<Real> gauss_line_integral(const ContourSpec<Real>& spec = {})
{
    using C = complex_t<Real>;
    using std::exp;
    detail::check_spec(spec, Path::up_left, "gauss_line_integral");
    return detail::line_quadrature(spec, [](const C& x, const C&) { return exp(-detail::ipi(x * x)); });
}

/// Closed form 1/(1 - e^{-2 pi i u}) - e^{pi i u^2}/(e^{pi i u} - e^{-pi i u}).
/// Within 0.05 of an integer j the two simple poles are cancelled by hand:
/// with u = j + h and q = pi i ((2j-1) h + h^2),
/// Phi = -e^{pi i h} exprel(q) ((2j-1) + h)/2 / sinc(pi h).
template <class Real>
complex_t<Real> phi_closed(const complex_t<Real>& u)
{
    using C = complex_t<Real>;
    using std::abs;
    using std::exp;
    using std::round;
    const Real jr = round(u.real());
    const C h = u - C(jr);
    if (abs(h) < Real(0.05)) {
        const C two_j_minus_1(2 * jr - 1);
        const C q = detail::ipi(two_j_minus_1 * h + h * h);
        return -exp(detail::ipi(h)) * exprel(q) * (two_j_minus_1 + h) / C(Real(2)) / sinc(C(pi<Real>()) * h);
    }
    const C one(Real(1));
    return one / (one - exp(C(Real(-2)) * detail::ipi(u))) -
           exp(detail::ipi(u * u)) / (exp(detail::ipi(u)) - exp(-detail::ipi(u)));
}

/// g^(k)(z0) for k = 0..n by the trapezoid rule on a circle of radius r.
template <class Real, class Fn>
std::vector<complex_t<Real>> cauchy_derivatives(Fn&& g, const complex_t<Real>& z0, int n, const Real& r = Real(0.25),
                                                int points = 128)
{
    using C = complex_t<Real>;
    using std::cos;
    using std::pow;
    using std::sin;
    std::vector<C> vals(static_cast<std::size_t>(points));
    std::vector<C> unit(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        const Real a = 2 * pi<Real>() * Real(j) / Real(points);
        unit[static_cast<std::size_t>(j)] = C(cos(a), sin(a));
        vals[static_cast<std::size_t>(j)] = g(z0 + C(r) * unit[static_cast<std::size_t>(j)]);
    }
    std::vector<C> out(static_cast<std::size_t>(n) + 1);
    Real kf = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 1) {
            kf *= k;
        }
        std::vector<C> terms(static_cast<std::size_t>(points));
        for (int j = 0; j < points; ++j) {
            const auto rot = static_cast<std::size_t>((static_cast<long>(k) * j) % points);
            terms[static_cast<std::size_t>(j)] = vals[static_cast<std::size_t>(j)] * std::conj(unit[rot]);
        }
        out[static_cast<std::size_t>(k)] = C(kf / (Real(points) * pow(r, k))) * pairwise_sum(terms);
    }
    return out;
}

/// Both sides of the moment formula: the quadrature of the Phi integrand
/// times x^n, and (2 pi i)^-n times the n-th derivative of the closed form.
template <class Real>
std::pair<complex_t<Real>, complex_t<Real>> moment_check(int n, const complex_t<Real>& u,
                                                        const ContourSpec<Real>& spec = {})
{
    using C = complex_t<Real>;
    using std::exp;
    using std::pow;
    if (n < 0 || n > 4) {
        throw domain_error("moment_check: n must lie in [0, 4]");
    }
    detail::check_spec(spec, Path::up_left, "moment_check");
    const auto q = detail::line_quadrature(spec, [&](const C& x, const C&) {
        return exp(detail::ipi(C(Real(2)) * u * x - x * x)) * detail::pole_kernel(x) * pow(x, n);
    });
    const auto derivs = cauchy_derivatives<Real>([](const C& z) { return phi_closed(z); }, u, n);
    const C two_pi_i(Real(0), 2 * pi<Real>());
    return {q.value, derivs[static_cast<std::size_t>(n)] / pow(two_pi_i, n)};
}

/// Default spec for the integrals in s: path, and a half-length and step
/// that follow the growth and oscillation of the power factor.
template <class Real>
ContourSpec<Real> spec_for_s(const complex_t<Real>& s, Path path)
{
    using std::abs;
    using std::min;
    using std::sqrt;
    ContourSpec<Real> spec;
    spec.path = path;
    const Real t = abs(s.imag());
    spec.half_length = Real(6) + abs(s.real()) / 5 + sqrt(t) / 2;
    spec.step = min(Real(0.05), Real(1) / (Real(1) + t / 2 + abs(s.real()) / 4));
    return spec;
}

namespace detail {

template <class Real>
void check_s_window(const complex_t<Real>& s, const char* what)
{
    using std::abs;
    if (abs(s.imag()) > 100) {
        throw domain_error(std::string(what) + ": |Im s| above 100 is outside the quadrature window");
    }
}

}  // namespace detail

/// f(s): integral of x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}) along 0↙1.
template <class Real>
QuadratureResult<Real> f_s(const complex_t<Real>& s, const ContourSpec<Real>& spec)
{
    using C = complex_t<Real>;
    using std::exp;
    detail::check_spec(spec, Path::down_left, "f_s");
    detail::check_s_window(s, "f_s");
    return detail::line_quadrature(spec, [&](const C& x, const C& lx) {
        return exp(detail::ipi(x * x) - s * lx) * detail::pole_kernel(x);
    });
}

template <class Real>
QuadratureResult<Real> f_s(const complex_t<Real>& s)
{
    return f_s(s, spec_for_s(s, Path::down_left));
}

/// Integral of x^{s-1} e^{-pi i x^2} / (e^{pi i x} - e^{-pi i x}) along 0↘1.
template <class Real>
QuadratureResult<Real> f_s_reflected(const complex_t<Real>& s, const ContourSpec<Real>& spec)
{
    using C = complex_t<Real>;
    using std::exp;
    detail::check_spec(spec, Path::down_right, "f_s_reflected");
    detail::check_s_window(s, "f_s_reflected");
    return detail::line_quadrature(spec, [&](const C& x, const C& lx) {
        return exp((s - C(Real(1))) * lx - detail::ipi(x * x)) * detail::pole_kernel(x);
    });
}

template <class Real>
QuadratureResult<Real> f_s_reflected(const complex_t<Real>& s)
{
    return f_s_reflected(s, spec_for_s(s, Path::down_right));
}

/// log(pi^{-s/2} Gamma(s/2)).
template <class Real>
complex_t<Real> log_xi_factor(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::log;
    return -s / C(Real(2)) * C(log(pi<Real>())) + log_gamma(s / C(Real(2)));
}

/// phi(s) = 2 pi^{-s/2} Gamma(s/2) f(s).
template <class Real>
complex_t<Real> phi_s(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::exp;
    return C(Real(2)) * exp(log_xi_factor(s)) * f_s(s).value;
}

/// Residual of the symmetric integral representation
///   pi^{-(1-s)/2} Gamma((1-s)/2) zeta(1-s)
///     = pi^{-s/2} Gamma(s/2) f(s) + pi^{-(1-s)/2} Gamma((1-s)/2) f_reflected(s),
/// divided by the largest of the three terms.
template <class Real = real160>
Real functional_equation_check(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::abs;
    using std::exp;
    using std::max;
    if (abs(s.real()) > 6 || abs(s.imag()) < 2 || abs(s.imag()) > 100) {
        throw domain_error("functional_equation_check: need |Re s| <= 6 and 2 <= |Im s| <= 100");
    }
    const C one(Real(1));
    const C g_s = exp(log_xi_factor(s));
    const C g_r = exp(log_xi_factor(one - s));
    const C lhs = g_r * oracle_zeta_continued(one - s);
    const C t1 = g_s * f_s(s).value;
    const C t2 = g_r * f_s_reflected(s).value;
    const Real scale = max(abs(lhs), max(abs(t1), abs(t2)));
    return abs(lhs - t1 - t2) / scale;
}

/// |Re(2 e^{i theta} f(s)) - Z(t)| at s = 1/2 + it, where e^{i theta} is the
/// phase of pi^{-s/2} Gamma(s/2). This is the critical-line identity
/// Re phi(s) = pi^{-s/2} Gamma(s/2) zeta(s) divided by |pi^{-s/2} Gamma(s/2)|.
template <class Real = real160>
Real critical_line_identity(const Real& t)
{
    using C = complex_t<Real>;
    using std::abs;
    using std::cos;
    using std::sin;
    if (!(t >= 2 && t <= 100)) {
        throw domain_error("critical_line_identity: t must lie in [2, 100]");
    }
    const C s(Real(0.5), t);
    const Real th = log_xi_factor(s).imag();
    const C phase(cos(th), sin(th));
    const Real lhs = (C(Real(2)) * phase * f_s(s).value).real();
    const Real z = (phase * oracle_zeta(s)).real();
    return abs(lhs - z);
}

/// The quadrature value of f(s) and the leading asymptotic term
///   e^{(pi i/4)(s - 7/2)} pi^{(s-1)/2} sin(pi s/2) Gamma((1-s)/2) sin(pi eta)/cos(2 pi eta),
/// eta = sqrt((s-1)/(2 pi i)), valid for t > 0 and -Re s >= t^{3/7}.
template <class Real>
std::pair<complex_t<Real>, complex_t<Real>> f_asymptotic_leading(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::arg;
    using std::cos;
    using std::exp;
    using std::log;
    using std::pow;
    using std::sin;
    using std::sqrt;
    const Real t = s.imag();
    if (!(t > 0) || !(-s.real() >= pow(t, Real(3) / 7))) {
        throw domain_error("f_asymptotic_leading: need t > 0 and -Re s >= t^(3/7)");
    }
    const C one(Real(1));
    const C two(Real(2));
    const C i(Real(0), Real(1));
    const C eta = sqrt((s - one) / (C(2 * pi<Real>()) * i));
    const Real a = arg(eta);
    if (!(a > 0 && a < pi<Real>() / 4)) {
        throw domain_error("f_asymptotic_leading: eta outside 0 < arg < pi/4");
    }
    const C pi_c(pi<Real>());
    const C log_lead = C(pi<Real>() / 4) * i * (s - C(Real(3.5))) + (s - one) / two * log(pi_c) +
                       log(sin(pi_c * s / two)) + log_gamma((one - s) / two) +
                       log(sin(pi_c * eta) / cos(two * pi_c * eta));
    return {f_s(s).value, exp(log_lead)};
}

/// log of the prefactor of g(s); finite wherever (s+1)/2 is not a pole.
template <class Real>
complex_t<Real> g_prefactor_log(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::log;
    const C one(Real(1));
    const C two(Real(2));
    return -(s + one) / two * C(log(pi<Real>())) - C(Real(0), pi<Real>() / 4) * s + log_gamma((s + one) / two);
}

/// g(s) = pi^{-(s+1)/2} e^{-pi i s/4} Gamma((s+1)/2) f(s).
template <class Real>
complex_t<Real> g_s(const complex_t<Real>& s)
{
    using C = complex_t<Real>;
    using std::exp;
    return exp(g_prefactor_log(s)) * f_s(s).value;
}

}  // namespace rsiegel

#endif
