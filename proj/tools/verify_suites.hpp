#ifndef RSIEGEL_TOOLS_VERIFY_SUITES_HPP
#define RSIEGEL_TOOLS_VERIFY_SUITES_HPP

// Self-checks run by `verify <suite>`. Each check carries its residual and
// the tolerance it is held to.

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <rsiegel/rsiegel.hpp>

#include "emit.hpp"

namespace rsiegel::cli {

struct Check {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> extras;  // key, JSON literal

    bool passed() const
    {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

inline Check at_most(std::string name, double residual, double tol)
{
    return {std::move(name), residual, tol, residual <= tol};
}

inline Check below(std::string name, double residual, double bound)
{
    return {std::move(name), residual, bound, residual < bound};
}

inline SuiteResult verify_phi()
{
    using C = std::complex<double>;
    const C i1(0, 1);
    const C gauss = std::exp(i1 * (3 * M_PI / 4));
    SuiteResult r{"phi", {}, {}};

    double grid = 0;
    for (double re : {-0.8, 0.2, 1.2}) {
        for (double im : {-0.5, 0.0, 0.5}) {
            const C u(re, im);
            grid = std::max(grid, std::abs(phi_u(u).value - phi_closed(u)));
        }
    }
    r.checks.push_back(at_most("phi_u_vs_closed_form_9_points", grid, 1e-10));
    r.checks.push_back(at_most("gauss_integral_vs_exp_3pi_i_over_4", std::abs(gauss_line_integral<double>().value - gauss), 1e-12));

    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> rad(0.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    double shift = 0;
    double residue = 0;
    for (int k = 0; k < 10; ++k) {
        const C u = std::polar(rad(rng), ang(rng));
        const C p0 = phi_u(u).value;
        const C p1 = phi_u(u + 1.0).value;
        shift = std::max(shift, std::abs(p1 - p0 - std::exp(i1 * M_PI * (u + 0.5) * (u + 0.5)) * gauss));
        residue = std::max(residue, std::abs(p0 - std::exp(-2.0 * M_PI * i1 * u) * p1 - 1.0));
    }
    r.checks.push_back(at_most("shift_identity_10_random_u", shift, 1e-9));
    r.checks.push_back(at_most("residue_identity_10_random_u", residue, 1e-9));

    double moments = 0;
    for (int n = 0; n <= 2; ++n) {
        const auto [q, d] = moment_check(n, C(0.3, 0.1));
        moments = std::max(moments, std::abs(q - d));
    }
    r.checks.push_back(at_most("moments_n_le_2", moments, 1e-8));
    return r;
}

inline SuiteResult verify_functional()
{
    using C = complex_t<real160>;
    SuiteResult r{"functional", {}, {}};
    r.checks.push_back(at_most("s=0.5+20i", to_double(functional_equation_check(C(real160("0.5"), real160(20)))), 1e-8));
    r.checks.push_back(at_most("s=2+15i", to_double(functional_equation_check(C(real160(2), real160(15)))), 1e-8));
    return r;
}

inline SuiteResult verify_critical()
{
    using C = complex_t<real160>;
    SuiteResult r{"critical", {}, {}};
    r.checks.push_back(at_most("t=20", to_double(critical_line_identity(real160(20))), 1e-6));
    r.checks.push_back(at_most("t=50", to_double(critical_line_identity(real160(50))), 1e-6));
    for (int t : {10, 20, 40}) {
        const C s(real160("0.5"), real160(t));
        const double d = to_double(abs(f_s_reflected(s).value - conj(f_s(s).value)));
        r.checks.push_back(at_most("conjugation_t=" + std::to_string(t), d, 1e-10));
    }
    return r;
}

inline SuiteResult verify_sumcheck(double T)
{
    SuiteResult r{"sumcheck", {}, {}};
    const auto zeros = scan_zeros(2 * pi<double>(), T, ZeroMethod::oracle);
    const auto rep = zero_sum_check(T, zeros);
    const double cf = to_double(abs(rep.closed_form - real256("0.02309570896612103381")));
    r.checks.push_back(at_most("closed_form_digits", cf, 1e-18));
    r.checks.push_back(at_most("partial_plus_tail_vs_closed_form", rep.discrepancy, 1e-3));
    r.extras.emplace_back("T", num(T));
    r.extras.emplace_back("closed_form", str(rep.closed_form.str(22)));
    r.extras.emplace_back("n_zeros", num(static_cast<long long>(rep.n_zeros)));
    r.extras.emplace_back("partial", num(rep.partial));
    r.extras.emplace_back("tail", num(rep.tail));
    return r;
}

inline SuiteResult verify_fidelity()
{
    SuiteResult r{"fidelity", {}, {}};
    const auto f = riemann_fidelity_report();
    r.checks.push_back(at_most("a1_vs_14.1347", std::abs(f.a1 - f.a1_gram), 5e-4));
    r.checks.push_back(below("a1_vs_14.1386_three_per_thousand", f.a1_relative_diff, 3e-3));
    r.checks.push_back(at_most("a3_vs_25.01", std::abs(f.a3 - f.a3_gram), 1e-2));
    r.checks.push_back(at_most("a3_vs_25.31_discrepancy_near_0.30", std::abs(f.a3_discrepancy - 0.30), 1e-2));
    r.extras.emplace_back("a1", num(f.a1));
    r.extras.emplace_back("a3", num(f.a3));
    r.extras.emplace_back("a3_discrepancy", num(f.a3_discrepancy));
    return r;
}

inline SuiteResult verify_asymptotic()
{
    using C = complex_t<real160>;
    SuiteResult r{"asymptotic", {}, {}};
    const auto ratio_error = [](int sigma) {
        const auto [q, l] = f_asymptotic_leading(C(real160(sigma), real160(10)));
        return to_double(abs(q / l - C(real160(1))));
    };
    const double at50 = ratio_error(-50);
    const double at80 = ratio_error(-80);
    r.checks.push_back(at_most("leading_term_s=-50+10i", at50, 0.1));
    r.checks.push_back(below("leading_term_s=-80+10i_improves", at80, at50));
    const double bound = to_double(abs(f_s(C(real160(2), real160(30))).value - C(real160(1))));
    r.checks.push_back(below("f_minus_1_at_2+30i", bound, 0.75));
    return r;
}

}  // namespace rsiegel::cli

#endif
