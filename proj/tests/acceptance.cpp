// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <rsiegel/rsiegel.hpp>

using namespace rsiegel;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

Rational q(long long n, long long d) { return Rational(n) / Rational(d); }
GaussianRational re(long long n, long long d) { return {q(n, d), Rational(0)}; }
GaussianRational im(long long n, long long d) { return {Rational(0), q(n, d)}; }

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome coefficient_tables()
{
    const Rational half = q(1, 2);
    bool ok = cn_table(0) == DerivativeCombo{{0, GaussianRational(1)}};
    ok = ok && cn_table(1) == DerivativeCombo{{3, re(-1, 24)}};
    ok = ok && cn_table(2) == DerivativeCombo{{2, re(1, 16)}, {6, re(1, 1152)}};
    ok = ok && cn_table(3) == DerivativeCombo{{1, re(-1, 16)}, {5, re(-1, 240)}, {9, re(-1, 82944)}};
    ok = ok && cn_table(4) == DerivativeCombo{{0, re(1, 32)}, {4, re(19, 1536)}, {8, re(11, 92160)}, {12, re(1, 7962624)}};
    ok = ok && an_table(0, half) == DerivativeCombo{{0, GaussianRational(1)}};
    ok = ok && an_table(1, half) == DerivativeCombo{{3, re(-1, 24)}};
    ok = ok && an_table(2, half) == DerivativeCombo{{0, im(1, 48)}, {2, re(1, 16)}, {6, re(1, 1152)}};
    ok = ok && an_table(3, half) ==
                   DerivativeCombo{{1, re(-1, 16)}, {3, im(-1, 1152)}, {5, re(-1, 240)}, {9, re(-1, 82944)}};
    ok = ok && an_table(4, half) == DerivativeCombo{{0, re(143, 4608)},
                                                    {2, im(1, 768)},
                                                    {4, re(19, 1536)},
                                                    {6, im(1, 55296)},
                                                    {8, re(11, 92160)},
                                                    {12, re(1, 7962624)}};
    return {ok, "C_0..C_4 and A_0..A_4 at sigma = 1/2 compared exactly"};
}

Outcome dn_expansions()
{
    bool ok = true;
    const auto d0 = dn_series(0, 8);
    ok = ok && d0.coefficient(0) == GaussianRational(1) && d0.coefficient(4) == re(1, 32) &&
         d0.coefficient(8) == re(41, 2048);
    const auto d1 = dn_series(1, 7);
    ok = ok && d1.coefficient(3) == re(-1, 16) && d1.coefficient(7) == re(-5, 128);
    const auto d2 = dn_series(2, 6);
    ok = ok && d2.coefficient(2) == re(1, 16) && d2.coefficient(6) == re(5, 128);
    const auto d3 = dn_series(3, 5);
    ok = ok && d3.coefficient(1) == re(-1, 24) && d3.coefficient(5) == re(-5, 192);
    const auto d4 = dn_series(4, 4);
    ok = ok && d4.coefficient(4) == re(19, 1536);
    int shared = 0;
    for (const auto& [kl, e] : bkl_crosscheck(4)) {
        if (e.shared) {
            ok = ok && e.agree;
            ++shared;
        }
    }
    ok = ok && shared == 6;
    return {ok, "D_0..D_4 printed terms exact; " + std::to_string(shared) + " shared b_kl agree"};
}

Outcome ef_numbers()
{
    const auto e = euler_secant_numbers(3);
    const auto f = fn_numbers(3);
    const bool ok = e[0] == 1 && e[1] == 1 && e[2] == 5 && e[3] == 61 && f[0] == 1 && f[1] == q(1, 3) &&
                    f[2] == q(7, 15) && f[3] == q(31, 21);
    return {ok, "E = (1,1,5,61), F = (1,1/3,7/15,31/21)"};
}

Outcome theta_consistency()
{
    double worst = 0;
    for (double t : {50.0, 100.0, 500.0}) {
        worst = std::max(worst, std::abs(theta_series(t, 4).theta - theta_reference(t).theta));
    }
    const bool coeffs = theta_correction_coefficient(1) == q(1, 48) && theta_correction_coefficient(2) == q(7, 5760);
    return {worst <= 1e-10 && coeffs, fmt("max |series - reference| = %.3e; corrections 1/48, 7/5760 exact", worst)};
}

Outcome rs_vs_oracle()
{
    double wide = 0;
    for (int i = 0; i < 50; ++i) {
        const double t = 50.0 + 450.0 * i / 49;
        wide = std::max(wide, std::abs(z_function(t).z - to_double(oracle_z(real256(t)).value)));
    }
    double narrow = 0;
    for (int i = 0; i < 20; ++i) {
        const double t = 200.0 + 300.0 * i / 19;
        narrow = std::max(narrow, std::abs(z_function(t).z - to_double(oracle_z(real256(t)).value)));
    }
    return {wide <= 1e-4 && narrow <= 1e-6, fmt("max error %.3e on [50,500], %.3e on [200,500]", wide, narrow)};
}

Outcome zero_fidelity()
{
    const auto r = riemann_fidelity_report();
    const bool ok = std::abs(r.a1 - 14.1347) <= 5e-4 && r.a1_relative_diff < 3e-3 && std::abs(r.a3 - 25.01) <= 1e-2 &&
                    std::abs(r.a3_discrepancy - 0.30) <= 1e-2;
    return {ok, fmt("a1 = %.10f, a3 = %.10f, |25.31 - a3| = %.4f", r.a1, r.a3, r.a3_discrepancy)};
}

std::vector<ZeroRecord> scanned;  // shared by criteria 7 and 8

Outcome zero_sum()
{
    scanned = scan_zeros(2 * pi<double>(), 500.0, ZeroMethod::oracle);
    const auto rep = zero_sum_check(500.0, scanned);
    const double cf = to_double(abs(rep.closed_form - real256("0.02309570896612103381")));
    return {cf <= 1e-18 && rep.discrepancy <= 1e-3,
            fmt("closed form off by %.2e; %.0f zeros, discrepancy %.3e", cf, rep.n_zeros, rep.discrepancy)};
}

Outcome counting()
{
    const auto c100 = count_zeros(100.0, scanned);
    const auto c50 = count_zeros(50.0, scanned);
    const auto c500 = count_zeros(500.0, scanned);
    const bool ok = c100.count == 29 && c50.count == 10 && std::abs(c100.count - std::round(c100.smooth)) <= 2 &&
                    std::abs(c50.count - std::round(c50.smooth)) <= 2 && c500.count / 500.0 > 1.0 / 38;
    return {ok, fmt("N(50) = %.0f, N(100) = %.0f, N(500)/500 = %.4f", c50.count, c100.count, c500.count / 500.0)};
}

Outcome contour_identities()
{
    using C = std::complex<double>;
    const C i1(0, 1);
    const C gauss = std::exp(i1 * (3 * M_PI / 4));
    double grid = 0;
    for (double a : {-0.8, 0.2, 1.2}) {
        for (double b : {-0.5, 0.0, 0.5}) {
            grid = std::max(grid, std::abs(phi_u(C(a, b)).value - phi_closed(C(a, b))));
        }
    }
    const double g = std::abs(gauss_line_integral<double>().value - gauss);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> r(0.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    double eqs = 0;
    for (int k = 0; k < 10; ++k) {
        const C u = std::polar(r(rng), ang(rng));
        const C p0 = phi_u(u).value;
        const C p1 = phi_u(u + 1.0).value;
        eqs = std::max(eqs, std::abs(p1 - p0 - std::exp(i1 * M_PI * (u + 0.5) * (u + 0.5)) * gauss));
        eqs = std::max(eqs, std::abs(p0 - std::exp(-2.0 * M_PI * i1 * u) * p1 - 1.0));
    }
    double mom = 0;
    for (int n = 0; n <= 2; ++n) {
        const auto [a, b] = moment_check(n, C(0.3, 0.1));
        mom = std::max(mom, std::abs(a - b));
    }
    const bool ok = grid <= 1e-10 && g <= 1e-12 && eqs <= 1e-9 && mom <= 1e-8;
    return {ok, fmt("closed form %.2e, Gauss %.2e, difference equations %.2e", grid, g, eqs) + fmt(", moments %.2e", mom)};
}

Outcome integral_representation()
{
    using C = complex_t<real160>;
    const double fe1 = to_double(functional_equation_check(C(real160("0.5"), real160(20))));
    const double fe2 = to_double(functional_equation_check(C(real160(2), real160(15))));
    const double cl1 = to_double(critical_line_identity(real160(20)));
    const double cl2 = to_double(critical_line_identity(real160(50)));
    const double bound = to_double(abs(f_s(C(real160(2), real160(30))).value - C(real160(1))));
    const bool ok = fe1 <= 1e-8 && fe2 <= 1e-8 && cl1 <= 1e-6 && cl2 <= 1e-6 && bound < 0.75;
    return {ok, fmt("functional %.2e / %.2e, critical %.2e", fe1, fe2, cl1) + fmt(" / %.2e, |f(2+30i) - 1| = %.4f", cl2, bound)};
}

Outcome strip_formula()
{
    using Cd = std::complex<double>;
    using C = complex_t<real256>;
    double off = 0;
    for (const char* s : {"0.25", "0.75"}) {
        const double sigma = std::stod(s);
        const auto o = oracle_zeta(C(real256(s), real256(200)));
        off = std::max(off, std::abs(zeta_strip(Cd(sigma, 200.0)) - Cd(to_double(o.real()), to_double(o.imag()))));
    }
    const double half = std::abs(zeta_strip(Cd(0.5, 200.0)) - zeta_critical(200.0));
    return {off <= 1e-3 && half <= 1e-6, fmt("off-line error %.3e, sigma = 1/2 reduction %.3e", off, half)};
}

Outcome leading_term()
{
    using C = complex_t<real160>;
    const auto err = [](int sigma) {
        const auto [quad, lead] = f_asymptotic_leading(C(real160(sigma), real160(10)));
        return to_double(abs(quad / lead - C(real160(1))));
    };
    const double a = err(-50);
    const double b = err(-80);
    return {a <= 0.1 && b < a, fmt("|ratio - 1| = %.4f at -50+10i, %.4f at -80+10i", a, b)};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "coefficient tables", 1, coefficient_tables},
        {2, "D_n expansions", 1, dn_expansions},
        {3, "E/F numbers", 1, ef_numbers},
        {4, "theta consistency", 1, theta_consistency},
        {5, "Riemann-Siegel vs oracle", 120, rs_vs_oracle},
        {6, "zero fidelity", 30, zero_fidelity},
        {7, "zero-sum identity", 300, zero_sum},
        {8, "zero counting", 300, counting},
        {9, "contour identities", 10, contour_identities},
        {10, "integral representation", 30, integral_representation},
        {11, "strip formula", 10, strip_formula},
        {12, "leading-term spot check", 10, leading_term},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%s] %2d %-26s %7.2fs (limit %gs)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                    in_time ? "" : " TOO SLOW", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
