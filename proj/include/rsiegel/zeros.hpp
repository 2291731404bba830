#ifndef RSIEGEL_ZEROS_HPP
#define RSIEGEL_ZEROS_HPP

// Gram points, sign-change scans of Z(t), zero counting, and the sum over
// zeros of 1/(a^2 + 1/4).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "errors.hpp"
#include "exactcoeff.hpp"
#include "numeric.hpp"
#include "theta.hpp"
#include "zeta_eval.hpp"

namespace rsiegel {

enum class ZeroMethod { rs, oracle };

inline const char* to_string(ZeroMethod m)
{
    return m == ZeroMethod::rs ? "rs" : "oracle";
}

struct ZeroRecord {
    int index;  // 1-based within the scan
    double t;
    double residual;  // |Z| at t
    ZeroMethod method;
};

struct ScanOptions {
    int samples_per_gram = 4;
    int max_samples_per_gram = 64;
    double oracle_tolerance = 1e-10;
};

/// Gram point g_n: the t > 10 with theta(t) = n pi.
inline double gram_point(std::int64_t n)
{
    if (n < 0) {
        throw domain_error("gram_point: n must be non-negative");
    }
    const double target = static_cast<double>(n) * pi<double>();
    auto f = [target](double t) { return theta_reference(t).theta - target; };
    double lo = 10.0;
    double hi = 20.0;
    while (f(hi) < 0) {
        lo = hi;
        hi *= 2;
        if (hi > 1e12) {
            throw convergence_error("gram_point: no bracket");
        }
    }
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
    return (r.first + r.second) / 2;
}

namespace detail {

struct ZSample {
    double t;
    double z;
};

// Z evaluator for a method; returns value and the tolerance a refined zero must meet.
template <class OracleReal>
std::function<std::pair<double, double>(double)> z_evaluator(ZeroMethod method, double oracle_tol)
{
    if (method == ZeroMethod::rs) {
        return [](double t) {
            const auto b = z_function(t);
            return std::make_pair(b.z, b.error_estimate);
        };
    }
    return [oracle_tol](double t) {
        const auto o = oracle_z(OracleReal(t));
        return std::make_pair(to_double(o.value), oracle_tol);
    };
}

// Gram index of the first Gram point above t (t >= g_0 assumed).
inline std::int64_t next_gram_index(double t)
{
    const double th = theta_reference(t).theta / pi<double>();
    auto n = static_cast<std::int64_t>(std::floor(th)) + 1;
    while (n > 0 && gram_point(n - 1) > t) {
        --n;
    }
    return std::max<std::int64_t>(n, 0);
}

// Breakpoints: t_lo, the Gram points inside, t_hi. Below g_0 unit spacing is used.
inline std::vector<double> gram_breakpoints(double t_lo, double t_hi)
{
    std::vector<double> pts{t_lo};
    const double g0 = gram_point(0);
    double t = t_lo;
    while (t + 1.0 < std::min(g0, t_hi)) {
        t += 1.0;
        pts.push_back(t);
    }
    if (t_hi > g0) {
        for (std::int64_t n = next_gram_index(std::max(t_lo, g0));; ++n) {
            const double g = gram_point(n);
            if (g >= t_hi) {
                break;
            }
            if (g > pts.back()) {
                pts.push_back(g);
            }
        }
    }
    if (t_hi > pts.back()) {
        pts.push_back(t_hi);
    }
    return pts;
}

}  // namespace detail

/// Zeros of Z in [t_lo, t_hi] located as sign changes and refined by a
/// bracketing solver. Z is sampled `samples_per_gram` times per Gram interval;
/// runs of same-signed samples that dip towards zero are bisected further,
/// and the whole grid is refined (up to max_samples_per_gram) if the count
/// strays more than 2 from the smooth count (theta(t_hi) - theta(t_lo))/pi.
template <class OracleReal = real160>
std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, ZeroMethod method, const ScanOptions& opt = {})
{
    if (!(t_lo >= 2 * pi<double>()) || !(t_hi > t_lo)) {
        throw domain_error("scan_zeros: need 2 pi <= t_lo < t_hi");
    }
    const auto eval = detail::z_evaluator<OracleReal>(method, opt.oracle_tolerance);
    const std::vector<double> breaks = detail::gram_breakpoints(t_lo, t_hi);
    const double expected = (theta_reference(t_hi).theta - theta_reference(t_lo).theta) / pi<double>();

    for (int q = opt.samples_per_gram; q <= opt.max_samples_per_gram; q *= 2) {
        std::vector<detail::ZSample> samples;
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            for (int j = 0; j < q; ++j) {
                const double t = breaks[i] + (breaks[i + 1] - breaks[i]) * j / q;
                samples.push_back({t, eval(t).first});
            }
        }
        samples.push_back({t_hi, eval(t_hi).first});

        // bisect dips: a same-signed triple whose middle is closest to zero
        const double min_gap = (breaks.size() > 1 ? (t_hi - t_lo) / static_cast<double>(breaks.size() - 1) : 1.0) /
                               opt.max_samples_per_gram;
        for (bool changed = true; changed;) {
            changed = false;
            std::vector<detail::ZSample> next{samples.front()};
            for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
                const auto& a = samples[i - 1];
                const auto& b = samples[i];
                const auto& c = samples[i + 1];
                const bool same = (a.z > 0) == (b.z > 0) && (b.z > 0) == (c.z > 0);
                const bool dip = std::abs(b.z) < std::abs(a.z) && std::abs(b.z) < std::abs(c.z);
                if (same && dip && b.t - a.t > 2 * min_gap) {
                    const double m = (a.t + b.t) / 2;
                    next.push_back({m, eval(m).first});
                    changed = true;
                }
                next.push_back(b);
                if (same && dip && c.t - b.t > 2 * min_gap) {
                    const double m = (b.t + c.t) / 2;
                    next.push_back({m, eval(m).first});
                    changed = true;
                }
            }
            next.push_back(samples.back());
            std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
            next.erase(std::unique(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.t == y.t; }),
                       next.end());
            samples = std::move(next);
        }

        std::vector<std::pair<double, double>> brackets;
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            if ((samples[i].z > 0) != (samples[i + 1].z > 0)) {
                brackets.emplace_back(samples[i].t, samples[i + 1].t);
            }
        }
        if (std::abs(static_cast<double>(brackets.size()) - std::round(expected)) > 2) {
            continue;
        }

        std::vector<ZeroRecord> out;
        out.reserve(brackets.size());
        for (const auto& [a, b] : brackets) {
            auto f = [&eval](double t) { return eval(t).first; };
            std::uintmax_t iters = 100;
            const auto r = boost::math::tools::toms748_solve(f, a, b, boost::math::tools::eps_tolerance<double>(50), iters);
            double best_t = r.first;
            auto best = eval(r.first);
            for (double cand : {r.second, (r.first + r.second) / 2}) {
                const auto v = eval(cand);
                if (std::abs(v.first) < std::abs(best.first)) {
                    best = v;
                    best_t = cand;
                }
            }
            const double tol = best.second;
            if (!(std::abs(best.first) <= tol)) {
                throw convergence_error("scan_zeros: refinement stalled at t = " + std::to_string(best_t));
            }
            out.push_back({static_cast<int>(out.size()) + 1, best_t, std::abs(best.first), method});
        }
        return out;
    }
    throw completeness_error("scan_zeros: sign changes in [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                             "] disagree with the smooth count even at the finest grid");
}

struct ZeroCount {
    int count;      // verified sign changes in (0, T]
    double smooth;  // theta(T)/pi + 1
};

/// True when the oracle finds no sign change of Z on [0.1, 2 pi].
template <class OracleReal = real160>
bool no_zeros_below_two_pi()
{
    double prev = to_double(oracle_z(OracleReal(0.1)).value);
    for (int j = 2; 0.1 * j < 2 * pi<double>(); ++j) {
        const double z = to_double(oracle_z(OracleReal(0.1 * j)).value);
        if ((z > 0) != (prev > 0)) {
            return false;
        }
        prev = z;
    }
    return (to_double(oracle_z(OracleReal(2 * pi<double>())).value) > 0) == (prev > 0);
}

inline double smooth_count(double T)
{
    return theta_reference(T).theta / pi<double>() + 1;
}

/// N_0(T) from zeros already scanned on [2 pi, T].
template <class OracleReal = real160>
ZeroCount count_zeros(double T, const std::vector<ZeroRecord>& scanned)
{
    if (!no_zeros_below_two_pi<OracleReal>()) {
        throw completeness_error("count_zeros: unexpected sign change of Z below 2 pi");
    }
    int n = 0;
    for (const auto& z : scanned) {
        if (z.t <= T) {
            ++n;
        }
    }
    return {n, smooth_count(T)};
}

template <class OracleReal = real160>
ZeroCount count_zeros(double T, ZeroMethod method = ZeroMethod::oracle)
{
    if (!(T >= 2 * pi<double>())) {
        throw domain_error("count_zeros: T must be at least 2 pi");
    }
    if (T == 2 * pi<double>()) {
        return count_zeros<OracleReal>(T, std::vector<ZeroRecord>{});
    }
    return count_zeros<OracleReal>(T, scan_zeros<OracleReal>(2 * pi<double>(), T, method));
}

/// Euler's constant by Euler-Maclaurin on H_N - log N with N = 50.
template <class Real>
Real euler_gamma()
{
    using std::log;
    using std::pow;
    constexpr int n = 50;
    constexpr int terms = 40;
    const auto b = bernoulli_numbers(terms);
    Real h = 0;
    for (int k = n; k >= 1; --k) {
        h += Real(1) / Real(k);
    }
    Real g = h - log(Real(n)) - Real(1) / Real(2 * n);
    const Real n2 = Real(n) * Real(n);
    Real p = n2;
    for (int k = 1; k <= terms; ++k) {
        g += to_real<Real>(b[static_cast<std::size_t>(2 * k)]) / (Real(2 * k) * p);
        p *= n2;
    }
    return g;
}

/// 1 + gamma/2 - log(pi)/2 - log 2, the value of sum 1/(a^2 + 1/4) over all zeros.
template <class Real>
Real zero_sum_closed_form()
{
    using std::log;
    return Real(1) + euler_gamma<Real>() / 2 - log(pi<Real>()) / 2 - log(Real(2));
}

struct SumCheckReport {
    double T;
    int n_zeros;
    double partial;
    double tail;
    real256 closed_form;
    double discrepancy;
};

/// Partial sum over scanned zeros up to T plus the density tail
/// (log(T/2 pi) + 1)/(2 pi T), compared with the closed form.
inline SumCheckReport zero_sum_check(double T, const std::vector<ZeroRecord>& zeros)
{
    if (!(T >= 50)) {
        throw domain_error("zero_sum_check: T must be at least 50");
    }
    std::vector<double> terms;
    for (const auto& z : zeros) {
        if (z.t <= T) {
            terms.push_back(1.0 / (z.t * z.t + 0.25));
        }
    }
    const double partial = pairwise_sum(terms);
    const double tail = (std::log(T / (2 * pi<double>())) + 1) / (2 * pi<double>() * T);
    const real256 closed = zero_sum_closed_form<real256>();
    const double disc = std::abs(partial + tail - to_double(closed));
    return {T, static_cast<int>(terms.size()), partial, tail, closed, disc};
}

template <class OracleReal = real160>
SumCheckReport zero_sum_check(double T)
{
    return zero_sum_check(T, scan_zeros<OracleReal>(2 * pi<double>(), T, ZeroMethod::oracle));
}

struct FidelityReport {
    double a1;
    double a3;
    double a1_riemann = 14.1386;
    double a3_riemann = 25.31;
    double a1_gram = 14.1347;
    double a3_gram = 25.01;
    double a1_relative_diff;  // |14.1386 - a1| / a1
    bool a1_within_bound;     // below 3 parts per thousand
    double a3_discrepancy;    // |25.31 - a3|
    double a1_rs;             // a1 from the Riemann-Siegel scan
};

/// Riemann's reported first and third zeros against refined values.
template <class OracleReal = real160>
FidelityReport riemann_fidelity_report()
{
    const auto oracle = scan_zeros<OracleReal>(10.0, 30.0, ZeroMethod::oracle);
    const auto rs = scan_zeros<OracleReal>(10.0, 30.0, ZeroMethod::rs);
    if (oracle.size() < 3 || rs.empty()) {
        throw completeness_error("riemann_fidelity_report: expected three zeros in [10, 30]");
    }
    FidelityReport r{};
    r.a1_riemann = 14.1386;
    r.a3_riemann = 25.31;
    r.a1_gram = 14.1347;
    r.a3_gram = 25.01;
    r.a1 = oracle[0].t;
    r.a3 = oracle[2].t;
    r.a1_relative_diff = std::abs(r.a1_riemann - r.a1) / r.a1;
    r.a1_within_bound = r.a1_relative_diff < 3e-3;
    r.a3_discrepancy = std::abs(r.a3_riemann - r.a3);
    r.a1_rs = rs[0].t;
    return r;
}

/// CSV "index,t,residual,method"; t to 12 significant digits.
inline void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& zeros)
{
    os << "index,t,residual,method\n";
    char buf[96];
    for (const auto& z : zeros) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.3e,%s\n", z.index, z.t, z.residual, to_string(z.method));
        os << buf;
    }
}

}  // namespace rsiegel

#endif
