#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <rsiegel/theta.hpp>

using namespace rsiegel;

TEST(LogGamma, ClassicalValues)
{
    // the upward shift sums about a dozen logs, so a few ulps of log(14!) remain
    EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-14);
    EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(M_PI), 1e-14);
    EXPECT_NEAR(log_gamma(10.0), std::lgamma(10.0), 1e-13);
    const real256 half("0.5");
    EXPECT_LT(to_double(abs(log_gamma(half) - log(pi<real256>()) / 2)), 1e-70);
}

TEST(LogGamma, MatchesLgammaOnPositiveAxis)
{
    for (double x = 0.05; x < 40; x *= 1.37) {
        EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-13 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
    }
}

TEST(LogGamma, RecurrenceInComplexPlane)
{
    using C = std::complex<double>;
    for (const C z : {C(0.3, 2.0), C(1.7, -5.0), C(4.0, 30.0), C(0.25, 250.0)}) {
        const C lhs = log_gamma(z + 1.0) - log_gamma(z);
        const C diff = lhs - std::log(z);
        // equal modulo 2 pi i
        EXPECT_NEAR(diff.real(), 0.0, 1e-12);
        const double k = std::round(diff.imag() / (2 * M_PI));
        EXPECT_NEAR(diff.imag() - 2 * M_PI * k, 0.0, 1e-10);
    }
}

TEST(LogGamma, Reflection)
{
    using C = std::complex<double>;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    std::uniform_real_distribution<double> im(0.2, 5.0);
    for (int i = 0; i < 20; ++i) {
        C z(re(rng), im(rng));
        if (i % 2 == 1) {
            z = std::conj(z);
        }
        const C lhs = log_gamma(z) + log_gamma(C(1.0) - z);
        const C rhs = std::log(M_PI) - std::log(std::sin(M_PI * z));
        const C d = lhs - rhs;
        EXPECT_NEAR(d.real(), 0.0, 1e-11) << z;
        const double k = std::round(d.imag() / (2 * M_PI));
        EXPECT_NEAR(d.imag() - 2 * M_PI * k, 0.0, 1e-10) << z;
    }
}

TEST(LogGamma, Poles)
{
    EXPECT_THROW(log_gamma(0.0), pole_error);
    EXPECT_THROW(log_gamma(-3.0), pole_error);
    EXPECT_THROW(log_gamma(std::complex<double>(-2.0, 0.0)), domain_error);
}

TEST(Theta, FrozenValues)
{
    // mpmath siegeltheta
    EXPECT_NEAR(theta_reference(50.0).theta, 26.46136607016140964745495, 1e-12);
    EXPECT_NEAR(theta_reference(100.0).theta, 87.97216523178721962548313, 1e-12);
    EXPECT_NEAR(theta_reference(500.0).theta, 843.7901005881892295154034, 1e-10);
    EXPECT_LT(to_double(abs(theta_reference(real256(100)).theta - real256("87.97216523178721962548313"))), 1e-24);
}

TEST(Theta, RouteAgreement)
{
    for (double t : {50.0, 100.0, 500.0}) {
        const auto s = theta_series(t, 4);
        const auto r = theta_reference(t);
        EXPECT_LE(std::abs(s.theta - r.theta), 1e-10) << t;
        EXPECT_EQ(s.route, ThetaRoute::series);
        EXPECT_EQ(r.route, ThetaRoute::reference);
    }
}

TEST(Theta, SeriesErrorModel)
{
    for (double t : {50.0, 80.0, 150.0, 400.0}) {
        for (int k = 1; k <= 4; ++k) {
            const real256 tt(t);
            const auto a = theta_series(tt, k);
            const auto b = theta_series(tt, k + 1);
            EXPECT_LE(to_double(abs(a.theta - b.theta)), to_double(a.error_estimate) * (1 + 1e-12))
                << t << " " << k;
        }
    }
}

TEST(Theta, CorrectionCoefficients)
{
    EXPECT_EQ(theta_correction_coefficient(1), Rational(1) / 48);
    EXPECT_EQ(theta_correction_coefficient(2), Rational(7) / 5760);
    EXPECT_EQ(omega_coefficient(1), Rational(1) / 32);
    EXPECT_EQ(omega_coefficient(2), Rational(5) / 256);
    EXPECT_EQ(omega_coefficient(3), Rational(61) / 1536);
}

TEST(Theta, LogAbsGammaSeries)
{
    for (double t : {20.0, 100.0, 300.0}) {
        const real160 tt(t);
        const complex_t<real160> z(real160("0.25"), tt / 2);
        const double ref = to_double(log_gamma(z).real());
        EXPECT_NEAR(to_double(log_abs_gamma_series(tt, 6)), ref, 1e-12 * std::max(1.0, std::abs(ref))) << t;
    }
}

TEST(Theta, SeriesDomain)
{
    EXPECT_THROW(theta_series(9.0, 4), domain_error);
    EXPECT_THROW(theta_series(50.0, 0), domain_error);
    EXPECT_THROW(theta_series(50.0, 11), domain_error);
    EXPECT_THROW(theta_reference(0.0), domain_error);
    EXPECT_THROW(omega(5.0, 2), domain_error);
}

TEST(Theta, MultiprecisionRoutesAgree)
{
    const real256 t(200);
    const auto s = theta_series(t, 10);
    const auto r = theta_reference(t);
    // the remainder of the Stirling series is within a small factor of the first omitted term
    EXPECT_LE(to_double(abs(s.theta - r.theta)), 2 * to_double(s.error_estimate));
}
