#ifndef RSIEGEL_PSIFUN_HPP
#define RSIEGEL_PSIFUN_HPP

// F(u) = cos(u^2 + 3pi/8) / cos(sqrt(2pi) u) and its derivatives.
//
// The quotient is entire: at every zero u0 = (2k+1) sqrt(pi/8) of the
// denominator, u0^2 + 3pi/8 = (k^2+k+1) pi/2 is an odd multiple of pi/2, so
// the numerator vanishes too. Close to u0 both factors are rewritten as
// sin(.)/(.) around u0 and the common zero cancels analytically.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace rsiegel {

inline constexpr double default_singularity_threshold = 0.05;

template <class Real>
struct FDerivatives {
    Real center;
    std::vector<Real> values;  // values[k] = F^(k)(center)
    Real error_estimate;       // max over k of order_errors
    std::vector<Real> order_errors;
};

template <class Real>
struct CauchyOptions {
    Real radius = Real(0.3);
    int points = 128;
    Real threshold = Real(default_singularity_threshold);
};

namespace detail {

// T is Real or complex<Real>.
template <class Real, class T>
T f_eval(const T& u, const Real& threshold)
{
    using std::abs;
    using std::cos;
    using std::round;
    using std::sqrt;
    const Real c = sqrt(2 * pi<Real>());
    const T den = cos(c * u);
    if (abs(den) >= threshold) {
        return cos(u * u + T(3 * pi<Real>() / 8)) / den;
    }
    Real re_u;
    if constexpr (std::is_same_v<T, Real>) {
        re_u = u;
    } else {
        re_u = u.real();
    }
    const Real kr = round(c * re_u / pi<Real>() - Real(0.5));
    const auto k = static_cast<std::int64_t>(to_double(kr));
    const Real u0 = Real(2 * k + 1) * sqrt(pi<Real>() / 8);
    const T h = u - T(u0);
    const std::int64_t m = k * k + k + 1;
    const int sign_num = (m % 4 == 1) ? 1 : -1;
    const int sign_den = (k % 2 == 0) ? 1 : -1;
    // sin(h (2u0 + h)) / sin(c h)
    const T p = h * (T(2 * u0) + h);
    const T ratio = sinc(p) * (T(2 * u0) + h) / (sinc(T(c) * h) * T(c));
    return (sign_num * sign_den > 0) ? ratio : T(-ratio);
}

}  // namespace detail

/// Value of the entire extension of F at real u.
template <class Real>
Real f_value(const Real& u, const Real& threshold = Real(default_singularity_threshold))
{
    return detail::f_eval<Real, Real>(u, threshold);
}

/// F^(k)(u) for k = 0..kmax by the Cauchy integral over a circle of radius r,
/// discretised with the periodic trapezoid rule. The rule is run with M and
/// 2M nodes; the 2M values are returned and their difference is the error
/// estimate.
template <class Real>
FDerivatives<Real> f_derivatives(const Real& u, int kmax, const CauchyOptions<Real>& opt = {})
{
    using std::abs;
    using std::cos;
    using std::max;
    using std::pow;
    using std::sin;
    using C = complex_t<Real>;
    if (kmax < 0 || kmax > 16) {
        throw domain_error("f_derivatives: derivative order must lie in [0, 16]");
    }
    if (!(opt.radius > 0) || opt.points < 8) {
        throw domain_error("f_derivatives: bad circle parameters");
    }
    const int n_fine = 2 * opt.points;
    std::vector<C> fz(static_cast<std::size_t>(n_fine));
    std::vector<C> unit(static_cast<std::size_t>(n_fine));
    Real fmax = 0;
    for (int j = 0; j < n_fine; ++j) {
        const Real ang = 2 * pi<Real>() * Real(j) / Real(n_fine);
        unit[static_cast<std::size_t>(j)] = C(cos(ang), sin(ang));
        const C z = C(u) + opt.radius * unit[static_cast<std::size_t>(j)];
        fz[static_cast<std::size_t>(j)] = detail::f_eval<Real, C>(z, opt.threshold);
        fmax = max(fmax, abs(fz[static_cast<std::size_t>(j)]));
    }

    auto rule = [&](int stride) {
        const int n = n_fine / stride;
        std::vector<Real> out(static_cast<std::size_t>(kmax) + 1);
        for (int k = 0; k <= kmax; ++k) {
            std::vector<Real> terms(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                const auto idx = static_cast<std::size_t>(j * stride);
                // e^{-ik theta_j} = conj(unit_j)^k
                const std::size_t rot = (static_cast<std::size_t>(k) * idx) % static_cast<std::size_t>(n_fine);
                terms[static_cast<std::size_t>(j)] = (fz[idx] * std::conj(unit[rot])).real();
            }
            Real kf = 1;
            for (int i = 2; i <= k; ++i) {
                kf *= i;
            }
            out[static_cast<std::size_t>(k)] = kf * pairwise_sum(terms) / (Real(n) * pow(opt.radius, k));
        }
        return out;
    };

    const std::vector<Real> coarse = rule(2);
    std::vector<Real> fine = rule(1);

    Real err = 0;
    std::vector<Real> order_errors(static_cast<std::size_t>(kmax) + 1);
    Real kf = 1;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 1) {
            kf *= k;
        }
        const auto kk = static_cast<std::size_t>(k);
        const Real diff = abs(fine[kk] - coarse[kk]);
        err = max(err, diff);
        order_errors[kk] = diff;
        const Real cauchy_scale = kf * fmax / pow(opt.radius, k);
        const Real scale = max(abs(fine[kk]), Real(1e-6) * cauchy_scale);
        if (diff > Real(1e-8) * scale) {
            throw convergence_error("f_derivatives: doubling the node count changed F^(" + std::to_string(k) +
                                    ") by more than 1e-8 relative");
        }
    }
    return {u, std::move(fine), err, std::move(order_errors)};
}

}  // namespace rsiegel

#endif
