#ifndef RSIEGEL_EXACTCOEFF_HPP
#define RSIEGEL_EXACTCOEFF_HPP

// Exact coefficient tables of the Riemann-Siegel expansion.
//
// Everything here is rational (or Gaussian-rational) arithmetic; nothing
// depends on a floating precision.
//
//   B_n  Laurent series in x, generated from B_0 = exp(i x^-2)
//   A_n  coefficients of tau^-n in S, as combinations of F^(k)(delta)
//   C_n  coefficients of t^(-n/2) in R (sigma = 1/2)
//   D_n  asymptotic series in tau^-1 of the derivative-ordered expansion

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_types.hpp"

namespace rsiegel {

namespace detail {

inline Rational factorial(int n)
{
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return Rational(f);
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
    }
    return r;
}

inline void require_nonnegative(int n, const char* what)
{
    if (n < 0) {
        throw domain_error(std::string(what) + ": argument must be non-negative");
    }
}

}  // namespace detail

/// Euler (secant) numbers E_0..E_N from
/// E_n - C(2n,2) E_{n-1} + C(2n,4) E_{n-2} - ... + (-1)^n E_0 = 0.
inline std::vector<Rational> euler_secant_numbers(int count)
{
    detail::require_nonnegative(count, "euler_secant_numbers");
    std::vector<Rational> e(static_cast<std::size_t>(count) + 1);
    e[0] = 1;
    for (int n = 1; n <= count; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j) {
            const Rational term = Rational(detail::binomial(2 * n, 2 * j)) * e[static_cast<std::size_t>(n - j)];
            acc += (j % 2 == 1) ? term : Rational(-term);
        }
        e[static_cast<std::size_t>(n)] = acc;
    }
    return e;
}

/// F_0..F_N, the Taylor data of x/sin x, from
/// C(2n+1,1) F_n - C(2n+1,3) F_{n-1} + ... + (-1)^n F_0 = 0.
inline std::vector<Rational> fn_numbers(int count)
{
    detail::require_nonnegative(count, "fn_numbers");
    std::vector<Rational> f(static_cast<std::size_t>(count) + 1);
    f[0] = 1;
    for (int n = 1; n <= count; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j) {
            const Rational term = Rational(detail::binomial(2 * n + 1, 2 * j + 1)) * f[static_cast<std::size_t>(n - j)];
            acc += (j % 2 == 1) ? term : Rational(-term);
        }
        f[static_cast<std::size_t>(n)] = acc / (2 * n + 1);
    }
    return f;
}

/// Bernoulli numbers B_0..B_{2N} (B_1 = -1/2) from sum_j C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(int count)
{
    detail::require_nonnegative(count, "bernoulli_numbers");
    const int top = 2 * count;
    std::vector<Rational> b(static_cast<std::size_t>(top) + 1);
    b[0] = 1;
    for (int m = 1; m <= top; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j) {
            acc += Rational(detail::binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

/// B_n as a Laurent series in x, exponents -2(n+2)..3n, every stored
/// coefficient exact.
///
/// The step a_k^(n+1) = i(1-2s)/4 a_{k-1} - a_{k+1}/2 - (k-1)(k-2)/8 a_{k-3}
/// reaches three exponents down per step, so B_0 is seeded 3n deeper than
/// the returned window.
inline FormalSeries bn_series(int n, const Rational& sigma)
{
    detail::require_nonnegative(n, "bn_series");
    const int window_low = -2 * (n + 2);
    int low = window_low - 3 * n;

    std::map<int, GaussianRational> cur;
    {
        GaussianRational ik(1);
        Rational kfact = 1;
        for (int k = 0; 2 * k <= -low; ++k) {
            if (k > 0) {
                ik *= GaussianRational::i();
                kfact *= k;
            }
            cur[-2 * k] = ik / GaussianRational(kfact);
        }
    }

    const GaussianRational lift{Rational(0), (1 - 2 * sigma) / 4};
    const GaussianRational half(Rational(1, 2));
    for (int step = 0; step < n; ++step) {
        const int top = 3 * (step + 1);
        const int next_low = low + 3;
        std::map<int, GaussianRational> next;
        auto get = [&cur](int e) {
            auto it = cur.find(e);
            return it == cur.end() ? GaussianRational{} : it->second;
        };
        for (int k = next_low; k <= top; ++k) {
            GaussianRational v = lift * get(k - 1) - half * get(k + 1);
            const Rational w = Rational((k - 1) * (k - 2), 8);
            if (w != 0) {
                v -= GaussianRational(w) * get(k - 3);
            }
            if (!v.is_zero()) {
                next.emplace(k, std::move(v));
            }
        }
        cur = std::move(next);
        low = next_low;
    }

    FormalSeries out(Variable::x, window_low, 3 * n);
    for (const auto& [k, c] : cur) {
        if (k >= window_low) {
            out.set(k, c);
        }
    }
    return out;
}

/// A_n = sum_{k=0}^{3n} a_k^(n)/k! F^(k)(delta).
inline DerivativeCombo an_table(int n, const Rational& sigma)
{
    const FormalSeries b = bn_series(n, sigma);
    DerivativeCombo a;
    for (const auto& [k, c] : b.terms()) {
        if (k >= 0) {
            a.add(k, c / GaussianRational(detail::factorial(k)));
        }
    }
    return a;
}

/// exp(-(i/8) sum_k F_k/(k(2k-1)) (2t)^(1-2k)) written in powers of tau^-1
/// (t = tau^2), exact through tau^-high.
inline FormalSeries phase_series(int high)
{
    detail::require_nonnegative(high, "phase_series");
    const int kmax = (high + 2) / 4 + 1;
    const auto fnum = fn_numbers(kmax);
    FormalSeries q(Variable::inv_tau, 0, high);
    for (int k = 1; 4 * k - 2 <= high; ++k) {
        const Rational mag = fnum[static_cast<std::size_t>(k)] / (k * (2 * k - 1)) / 8 /
                             Rational(BigInt(1) << (2 * k - 1));
        q.set(4 * k - 2, GaussianRational(Rational(0), -mag));
    }
    return q.exp();
}

/// C_n, the coefficient of t^(-n/2) in R at sigma = 1/2.
inline DerivativeCombo cn_table(int n)
{
    detail::require_nonnegative(n, "cn_table");
    const FormalSeries phase = phase_series(n);
    const Rational half(1, 2);
    DerivativeCombo c;
    for (const auto& [j, pj] : phase.terms()) {
        if (j > n) {
            break;
        }
        c += an_table(n - j, half).scaled(pj);
    }
    return c;
}

/// a_0..a_{n_max} of the saddle-point expansion as polynomials in tau^-1:
/// (n+1) tau a_{n+1} = -(n+1-sigma) a_n + i a_{n-2}, a_0 = 1.
inline std::vector<FormalSeries> ak_saddle_coeffs(int n_max, const Rational& sigma)
{
    detail::require_nonnegative(n_max, "ak_saddle_coeffs");
    std::vector<FormalSeries> a;
    a.reserve(static_cast<std::size_t>(n_max) + 1);
    a.push_back(FormalSeries::constant(Variable::inv_tau, GaussianRational(1), 0));
    for (int n = 0; n < n_max; ++n) {
        const int deg = n + 1;
        FormalSeries next(Variable::inv_tau, 0, deg);
        const GaussianRational lin(Rational(-(n + 1)) + sigma);
        for (const auto& [e, c] : a[static_cast<std::size_t>(n)].terms()) {
            next.add_to(e + 1, lin * c / GaussianRational(Rational(n + 1)));
        }
        if (n >= 2) {
            for (const auto& [e, c] : a[static_cast<std::size_t>(n - 2)].terms()) {
                next.add_to(e + 1, GaussianRational::i() * c / GaussianRational(Rational(n + 1)));
            }
        }
        a.push_back(std::move(next));
    }
    return a;
}

/// omega = (1/8) sum E_k/k (2t)^(-2k) in powers of tau^-1, exact through tau^-high.
inline FormalSeries omega_series(int high)
{
    detail::require_nonnegative(high, "omega_series");
    const auto e = euler_secant_numbers(high / 4 + 1);
    FormalSeries w(Variable::inv_tau, 0, high);
    for (int k = 1; 4 * k <= high; ++k) {
        w.set(4 * k, GaussianRational(e[static_cast<std::size_t>(k)] / (8 * k) / Rational(BigInt(1) << (2 * k))));
    }
    return w;
}

/// Asymptotic series of D_n through tau^-order, as a series in tau^-1
/// (a stored exponent e stands for tau^-e).
///
/// D_0 = e^w, D_1 = -tau (e^w - e^-w),
/// D_{n+1} = -2/(n+1) tau D_n - 1/(4n(n+1)) D_{n-3}.
/// Each multiplication by tau costs one order, so the seed series are
/// carried n orders further than requested.
inline FormalSeries dn_series(int n, int order)
{
    detail::require_nonnegative(n, "dn_series");
    detail::require_nonnegative(order, "dn_series");
    const int high = order + n;
    const FormalSeries w = omega_series(high);
    const FormalSeries ew = w.exp();
    const FormalSeries emw = w.scaled(GaussianRational(-1)).exp();

    std::vector<FormalSeries> d;
    d.push_back(ew);
    if (n >= 1) {
        d.push_back((ew - emw).shifted(-1).scaled(GaussianRational(-1)));
    }
    for (int k = 1; k < n; ++k) {
        FormalSeries next = d[static_cast<std::size_t>(k)].shifted(-1).scaled(GaussianRational(Rational(-2, k + 1)));
        if (k >= 3) {
            next = next + d[static_cast<std::size_t>(k - 3)].scaled(GaussianRational(Rational(-1, 4 * k * (k + 1))));
        }
        d.push_back(std::move(next));
    }
    const FormalSeries& dn = d[static_cast<std::size_t>(n)];
    FormalSeries out(Variable::inv_tau, std::min(0, dn.low_cutoff()), order);
    for (const auto& [e, c] : dn.terms()) {
        if (e <= order) {
            out.set(e, c);
        }
    }
    return out;
}

struct BklEntry {
    int k = 0;
    int l = 0;
    GaussianRational from_c;  // C_l coefficient of F^(3l-4k)
    GaussianRational from_d;  // tau^-l coefficient of D_{3l-4k}
    bool agree = false;
    bool shared = false;  // one of b00, b34, b23, b12, b01, b24
};

/// Coefficients b_kl of F^(3l-4k)(delta) tau^-l, once from the C_n tables and
/// once from the D_n series, for l <= l_max <= 4.
inline std::map<std::pair<int, int>, BklEntry> bkl_crosscheck(int l_max)
{
    detail::require_nonnegative(l_max, "bkl_crosscheck");
    if (l_max > 4) {
        throw domain_error("bkl_crosscheck: tables beyond l = 4 are not supported");
    }
    static const std::pair<int, int> shared[] = {{0, 0}, {3, 4}, {2, 3}, {1, 2}, {0, 1}, {2, 4}};
    std::map<std::pair<int, int>, BklEntry> out;
    for (int l = 0; l <= l_max; ++l) {
        const DerivativeCombo c = cn_table(l);
        for (int k = 0; 4 * k <= 3 * l; ++k) {
            const int order = 3 * l - 4 * k;
            BklEntry e;
            e.k = k;
            e.l = l;
            e.from_c = c[order];
            e.from_d = dn_series(order, l).coefficient(l);
            e.agree = e.from_c == e.from_d;
            for (const auto& s : shared) {
                e.shared = e.shared || (s.first == k && s.second == l);
            }
            out.emplace(std::make_pair(k, l), std::move(e));
        }
    }
    return out;
}

/// Coefficient dump: one "TABLE n k re_num/re_den im_num/im_den" line per entry.
inline void dump_records(std::ostream& os, char table, int n, const DerivativeCombo& combo)
{
    for (const auto& [k, c] : combo.entries()) {
        os << table << ' ' << n << ' ' << k << ' ' << c << '\n';
    }
}

/// For series in tau^-1 the k field is the tau exponent (e.g. -4 for tau^-4).
inline void dump_records(std::ostream& os, char table, int n, const FormalSeries& series)
{
    const bool inverse = series.variable() != Variable::x;
    for (const auto& [e, c] : series.terms()) {
        os << table << ' ' << n << ' ' << (inverse ? -e : e) << ' ' << c << '\n';
    }
}

inline void dump_records(std::ostream& os, char table, int n, const Rational& value)
{
    os << table << ' ' << n << ' ' << 0 << ' ' << GaussianRational(value) << '\n';
}

}  // namespace rsiegel

#endif
