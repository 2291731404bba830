#ifndef RSIEGEL_TOOLS_CLI_APP_HPP
#define RSIEGEL_TOOLS_CLI_APP_HPP

// Command-line front end. run() returns the process exit code:
// 0 success, 1 usage, 2 domain, 3 completeness, 4 failed verification.

#include <complex>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <rsiegel/rsiegel.hpp>

#include "emit.hpp"
#include "verify_suites.hpp"

namespace rsiegel::cli {

enum ExitCode { ok = 0, usage = 1, domain = 2, incomplete = 3, verify_failed = 4 };

struct CliConfig {
    std::optional<int> precision_bits;  // unset: 53 for rs paths, 256 for oracle paths
    int terms = max_correction_terms;
    std::string format;  // unset: per-command default
};

namespace detail {

inline Format parse_format(const std::string& s, Format fallback)
{
    if (s.empty()) {
        return fallback;
    }
    static const std::map<std::string, Format> names{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    return names.at(s);
}

// Calls f with a value of the Real type matching the precision tier.
template <class F>
void with_precision(int bits, F&& f)
{
    if (bits <= 53) {
        f(double{});
    } else if (bits <= 160) {
        f(real160{});
    } else if (bits <= 256) {
        f(real256{});
    } else {
        f(real512{});
    }
}

inline Rational parse_rational(const std::string& s)
{
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            return exact_rational(std::stod(s));
        }
        return Rational(BigInt(s.substr(0, slash))) / Rational(BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw domain_error("cannot read '" + s + "' as a rational");
    }
}

inline void emit_suite(std::ostream& os, Format f, const SuiteResult& r)
{
    if (f == Format::csv) {
        // one row per check; suite-level extras only exist in json and text
        os << "suite,name,residual,tolerance,pass\n";
        for (const auto& c : r.checks) {
            os << r.suite << ',' << c.name << ',' << num(c.residual) << ',' << num(c.tolerance) << ','
               << boolean(c.pass) << '\n';
        }
        return;
    }
    if (f == Format::text) {
        os << "suite " << r.suite << '\n';
        for (const auto& [k, v] : r.extras) {
            os << k << ' ' << plain(v) << '\n';
        }
        for (const auto& c : r.checks) {
            os << (c.pass ? "PASS " : "FAIL ") << c.name << " residual " << num(c.residual) << " tolerance "
               << num(c.tolerance) << '\n';
        }
        os << "pass " << boolean(r.passed()) << '\n';
        return;
    }
    std::vector<std::string> checks;
    for (const auto& c : r.checks) {
        checks.push_back(object({{"name", str(c.name)},
                                 {"residual", num(c.residual)},
                                 {"tolerance", num(c.tolerance)},
                                 {"pass", boolean(c.pass)}}));
    }
    std::vector<Field> fields{{"suite", str(r.suite)}};
    for (const auto& [k, v] : r.extras) {
        fields.push_back({k, v});
    }
    fields.push_back({"checks", array(checks)});
    fields.push_back({"pass", boolean(r.passed())});
    os << object(fields) << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Riemann-Siegel evaluation, coefficient tables and zero scans", "rsiegel"};
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig cfg;
    int precision = 0;
    app.add_option("--precision", precision, "working precision in bits (>= 53)")->check(CLI::Range(53, 4096));
    app.add_option("--terms", cfg.terms, "correction terms C_0..C_{k-1} (<= 5)")->check(CLI::Range(0, 5));
    app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    bool experimental = false;
    app.add_flag("--experimental", experimental, "allow coefficient indices beyond the pinned range");

    double t = 0;
    double sigma = 0.5;
    std::string method = "rs";

    auto* z = app.add_subcommand("z", "Z(t) with its breakdown");
    z->add_option("t", t)->required();

    auto* zeta = app.add_subcommand("zeta", "zeta(sigma + it)");
    zeta->add_option("sigma", sigma)->required();
    zeta->add_option("t", t)->required();
    zeta->add_option("--method", method, "rs or oracle")->check(CLI::IsMember({"rs", "oracle"}));

    auto* theta = app.add_subcommand("theta", "Riemann-Siegel theta");
    theta->add_option("t", t)->required();
    std::string route = "reference";
    int theta_terms = 4;
    theta->add_option("--route", route)->check(CLI::IsMember({"reference", "series"}));
    theta->add_option("--theta-terms", theta_terms)->check(CLI::Range(1, 10));

    auto* coeffs = app.add_subcommand("coeffs", "exact coefficient records");
    std::string table;
    int index = 0;
    int order = 8;
    std::string sigma_text = "1/2";
    coeffs->add_option("table", table)->required()->check(CLI::IsMember({"A", "C", "D", "E", "F"}));
    coeffs->add_option("n", index)->required();
    coeffs->add_option("--order", order, "highest tau^-1 power for D");
    coeffs->add_option("--sigma", sigma_text, "sigma for A as p/q or decimal");
    coeffs->add_flag("--experimental", experimental);

    auto* zeros = app.add_subcommand("zeros", "zeros of Z in [t_lo, t_hi] as CSV");
    double t_lo = 0;
    double t_hi = 0;
    bool summary = false;
    std::string zero_method = "oracle";
    zeros->add_option("t_lo", t_lo)->required();
    zeros->add_option("t_hi", t_hi)->required();
    zeros->add_option("--method", zero_method)->check(CLI::IsMember({"rs", "oracle"}));
    zeros->add_flag("--summary", summary, "print only the count line");

    double sum_t = 500;
    auto* sumcheck = app.add_subcommand("sumcheck", "alias for verify sumcheck");
    sumcheck->add_option("--T", sum_t)->check(CLI::Range(50.0, 1e4));

    auto* phi = app.add_subcommand("phi", "Phi(u) by quadrature and in closed form");
    double u_re = 0;
    double u_im = 0;
    phi->add_option("u_re", u_re)->required();
    phi->add_option("u_im", u_im);

    auto* fs = app.add_subcommand("fs", "the integral f(s) along 0 to the lower left of 1");
    bool reflected = false;
    fs->add_option("sigma", sigma)->required();
    fs->add_option("t", t)->required();
    fs->add_flag("--reflected", reflected, "the mirrored integral along 0 to the lower right of 1");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"phi", "functional", "critical", "sumcheck", "fidelity", "asymptotic"}));
    verify->add_option("--T", sum_t, "upper ordinate for sumcheck")->check(CLI::Range(50.0, 1e4));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        const int code = app.exit(e, e.get_exit_code() == 0 ? out : sink, e.get_exit_code() == 0 ? out : err);
        if (code != 0) {
            err << sink.str();
        }
        return code == 0 ? ok : usage;
    }
    if (precision != 0) {
        cfg.precision_bits = precision;
    }
    const int rs_bits = cfg.precision_bits.value_or(53);
    const int oracle_bits = cfg.precision_bits.value_or(256);

    try {
        if (z->parsed()) {
            const Format f = detail::parse_format(cfg.format, Format::json);
            detail::with_precision(rs_bits, [&](auto tag) {
                using Real = decltype(tag);
                RSConfig rc;
                rc.correction_terms = cfg.terms;
                rc.precision_bits = rs_bits;
                const auto b = z_function(Real(t), rc);
                emit(out, f,
                     {{"t", num(to_double(b.t))},
                      {"m", num(static_cast<long long>(b.m))},
                      {"delta", num(to_double(b.delta))},
                      {"theta", num(to_double(b.theta))},
                      {"main_sum", num(to_double(b.main_sum))},
                      {"remainder", num(to_double(b.remainder))},
                      {"z", num(to_double(b.z))},
                      {"err_est", num(to_double(b.error_estimate))}});
            });
            return ok;
        }
        if (zeta->parsed()) {
            const Format f = detail::parse_format(cfg.format, Format::json);
            const bool oracle = method == "oracle";
            detail::with_precision(oracle ? oracle_bits : rs_bits, [&](auto tag) {
                using Real = decltype(tag);
                using C = complex_t<Real>;
                const C s{Real(sigma), Real(t)};
                C v;
                if (oracle) {
                    v = sigma < 0.5 ? oracle_zeta_continued(s) : oracle_zeta(s);
                } else if (sigma == 0.5) {
                    RSConfig rc;
                    rc.correction_terms = cfg.terms;
                    v = zeta_critical(Real(t), rc);
                } else {
                    v = zeta_strip(s, cfg.terms);
                }
                emit(out, f,
                     {{"sigma", num(sigma)},
                      {"t", num(t)},
                      {"re", num(to_double(v.real()))},
                      {"im", num(to_double(v.imag()))},
                      {"method", str(method)}});
            });
            return ok;
        }
        if (theta->parsed()) {
            const Format f = detail::parse_format(cfg.format, Format::json);
            detail::with_precision(rs_bits, [&](auto tag) {
                using Real = decltype(tag);
                const auto v = route == "series" ? theta_series(Real(t), theta_terms) : theta_reference(Real(t));
                emit(out, f,
                     {{"t", num(t)},
                      {"theta", num(to_double(v.theta))},
                      {"route", str(route)},
                      {"err_est", num(to_double(v.error_estimate))}});
            });
            return ok;
        }
        if (coeffs->parsed()) {
            const Format f = detail::parse_format(cfg.format, Format::text);
            if (index < 0) {
                throw domain_error("coeffs: n must be non-negative");
            }
            if (index > 4 && !experimental) {
                throw domain_error("coeffs: n above 4 needs --experimental");
            }
            if (index > 40) {
                throw domain_error("coeffs: n above 40 is not supported");
            }
            std::ostringstream records;
            const char tab = table[0];
            switch (tab) {
            case 'A': dump_records(records, tab, index, an_table(index, detail::parse_rational(sigma_text))); break;
            case 'C': dump_records(records, tab, index, cn_table(index)); break;
            case 'D': dump_records(records, tab, index, dn_series(index, order)); break;
            case 'E': dump_records(records, tab, index, euler_secant_numbers(index)[static_cast<std::size_t>(index)]); break;
            default: dump_records(records, tab, index, fn_numbers(index)[static_cast<std::size_t>(index)]); break;
            }
            if (f == Format::text) {
                out << records.str();
                return ok;
            }
            std::istringstream in(records.str());
            std::vector<std::string> rows;
            if (f == Format::csv) {
                out << "table,n,k,re,im\n";
            }
            for (std::string tb, re, im; in >> tb;) {
                int n = 0;
                int k = 0;
                in >> n >> k >> re >> im;
                if (f == Format::csv) {
                    out << tb << ',' << n << ',' << k << ',' << re << ',' << im << '\n';
                } else {
                    rows.push_back(object({{"table", str(tb)},
                                           {"n", num(static_cast<long long>(n))},
                                           {"k", num(static_cast<long long>(k))},
                                           {"re", str(re)},
                                           {"im", str(im)}}));
                }
            }
            if (f == Format::json) {
                out << object({{"records", array(rows)}}) << '\n';
            }
            return ok;
        }
        if (zeros->parsed()) {
            if (!(t_hi > t_lo)) {
                err << "zeros: t_hi must exceed t_lo\n";
                return usage;
            }
            const Format f = detail::parse_format(cfg.format, Format::csv);
            const ZeroMethod zm = zero_method == "rs" ? ZeroMethod::rs : ZeroMethod::oracle;
            std::vector<ZeroRecord> found;
            detail::with_precision(std::max(oracle_bits, 160), [&](auto tag) {
                using Real = decltype(tag);
                if constexpr (std::is_same_v<Real, double>) {
                    found = scan_zeros<real160>(t_lo, t_hi, zm);
                } else {
                    found = scan_zeros<Real>(t_lo, t_hi, zm);
                }
            });
            const double expected = smooth_count(t_hi) - smooth_count(t_lo);
            char line[96];
            std::snprintf(line, sizeof line, "count=%zu,expected=%.3f\n", found.size(), expected);
            if (f == Format::json) {
                std::vector<std::string> rows;
                for (const auto& r : found) {
                    rows.push_back(object({{"index", num(static_cast<long long>(r.index))},
                                           {"t", num(r.t)},
                                           {"residual", num(r.residual)},
                                           {"method", str(to_string(r.method))}}));
                }
                std::vector<Field> fields;
                if (!summary) {
                    fields.push_back({"zeros", array(rows)});
                }
                fields.push_back({"count", num(static_cast<long long>(found.size()))});
                fields.push_back({"expected", num(expected)});
                out << object(fields) << '\n';
            } else {
                if (!summary) {
                    write_zero_csv(out, found);
                }
                out << line;
            }
            return ok;
        }
        if (phi->parsed()) {
            const Format f = detail::parse_format(cfg.format, Format::json);
            detail::with_precision(rs_bits, [&](auto tag) {
                using Real = decltype(tag);
                using C = complex_t<Real>;
                const C u{Real(u_re), Real(u_im)};
                const auto q = phi_u(u);
                const C c = phi_closed(u);
                emit(out, f,
                     {{"u_re", num(u_re)},
                      {"u_im", num(u_im)},
                      {"re", num(to_double(q.value.real()))},
                      {"im", num(to_double(q.value.imag()))},
                      {"closed_re", num(to_double(c.real()))},
                      {"closed_im", num(to_double(c.imag()))},
                      {"err_est", num(to_double(q.error_estimate))},
                      {"diff", num(to_double(abs(q.value - c)))}});
            });
            return ok;
        }
        if (fs->parsed()) {
            // double precision loses f(s) to cancellation once t passes ~50
            const Format f = detail::parse_format(cfg.format, Format::json);
            detail::with_precision(cfg.precision_bits.value_or(160), [&](auto tag) {
                using Real = decltype(tag);
                using C = complex_t<Real>;
                const C s{Real(sigma), Real(t)};
                const auto q = reflected ? f_s_reflected(s) : f_s(s);
                emit(out, f,
                     {{"sigma", num(sigma)},
                      {"t", num(t)},
                      {"re", num(to_double(q.value.real()))},
                      {"im", num(to_double(q.value.imag()))},
                      {"err_est", num(to_double(q.error_estimate))},
                      {"truncation", num(to_double(q.truncation))}});
            });
            return ok;
        }
        const std::string name = sumcheck->parsed() ? "sumcheck" : suite;
        SuiteResult r;
        if (name == "phi") {
            r = verify_phi();
        } else if (name == "functional") {
            r = verify_functional();
        } else if (name == "critical") {
            r = verify_critical();
        } else if (name == "sumcheck") {
            r = verify_sumcheck(sum_t);
        } else if (name == "fidelity") {
            r = verify_fidelity();
        } else {
            r = verify_asymptotic();
        }
        detail::emit_suite(out, detail::parse_format(cfg.format, Format::json), r);
        return r.passed() ? ok : verify_failed;
    } catch (const completeness_error& e) {
        err << "completeness: " << e.what() << '\n';
        return incomplete;
    } catch (const domain_error& e) {
        err << "domain: " << e.what() << '\n';
        return domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain;
    }
}

}  // namespace rsiegel::cli

#endif
