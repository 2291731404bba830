#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <rsiegel/psifun.hpp>

using namespace rsiegel;

namespace {

// k-th derivative by central differences, Richardson-extrapolated over
// h, h/2, h/4, h/8. Independent of the Cauchy-circle route.
template <class Real>
Real fd_derivative(const Real& x, int k, const Real& h0)
{
    constexpr int levels = 4;
    std::vector<std::vector<Real>> tab(levels);
    Real h = h0;
    for (int i = 0; i < levels; ++i, h /= 2) {
        Real sum = 0;
        long long binom = 1;
        for (int j = 0; j <= k; ++j) {
            const Real node = x + (Real(k) / 2 - Real(j)) * h;
            const Real term = Real(binom) * f_value(node);
            sum += (j % 2 == 0) ? term : Real(-term);
            binom = binom * (k - j) / (j + 1);
        }
        tab[static_cast<std::size_t>(i)].push_back(sum / pow(h, k));
    }
    // error expansion is in even powers of h
    for (int col = 1; col < levels; ++col) {
        const Real f = pow(Real(4), col);
        for (int i = col; i < levels; ++i) {
            const auto& prev = tab[static_cast<std::size_t>(i)];
            const auto& up = tab[static_cast<std::size_t>(i - 1)];
            tab[static_cast<std::size_t>(i)].push_back((f * prev[static_cast<std::size_t>(col - 1)] -
                                                        up[static_cast<std::size_t>(col - 1)]) /
                                                       (f - 1));
        }
    }
    return tab[levels - 1][levels - 1];
}

}  // namespace

TEST(FValue, AtZero)
{
    EXPECT_NEAR(f_value(0.0), std::cos(3 * M_PI / 8), 1e-15);
    EXPECT_NEAR(f_value(0.0), 0.3826834324, 1e-10);
}

TEST(FValue, RemovableSingularity)
{
    const double u0 = std::sqrt(M_PI / 8);
    EXPECT_NEAR(f_value(u0), 0.5, 1e-15);
    // the neighbours approach the same value
    EXPECT_NEAR(f_value(u0 + 1e-9), 0.5, 1e-8);
    EXPECT_NEAR(f_value(u0 - 1e-9), 0.5, 1e-8);
}

TEST(FValue, FrozenValue)
{
    // mpmath, 40 digits
    EXPECT_NEAR(f_value(0.3), 0.4081673262908665400908985, 1e-15);
}

TEST(FValue, Evenness)
{
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double u = dist(rng);
        EXPECT_LE(std::abs(f_value(u) - f_value(-u)), 1e-12) << u;
    }
}

TEST(FValue, EntiretyProbe)
{
    for (int k = 0; k < 4; ++k) {
        const double u0 = (2 * k + 1) * std::sqrt(M_PI / 8);
        for (int j = -20; j <= 20; ++j) {
            const double u = u0 + j * 2.5e-3;
            EXPECT_LE(std::abs(f_value(u, 0.05) - f_value(u, 0.005)), 1e-10) << u;
        }
    }
}

TEST(FValue, MultiprecisionAgreesWithDouble)
{
    for (double u : {-2.1, -0.5, 0.0, 0.3, 0.62666, 1.1, 2.9}) {
        EXPECT_NEAR(to_double(f_value(real160(u))), f_value(u), 1e-14) << u;
    }
}

TEST(FDerivatives, EvenFunctionFacts)
{
    const auto d1 = f_derivatives(0.0, 1);
    EXPECT_NEAR(d1.values[1], 0.0, 1e-13);
    const auto d2 = f_derivatives(0.0, 2);
    EXPECT_NEAR(d2.values[0], std::cos(3 * M_PI / 8), 1e-14);
}

TEST(FDerivatives, FrozenDoubleValues)
{
    // mpmath diff of the quotient at 0.3
    const double ref[] = {0.40816732629086654444, 0.17275266679741554485, 0.61370911653843276217,
                          0.37306244007396426886, 1.1429381983191170387,  -1.1746165841337637568,
                          -6.7687654542772154369};
    const auto d = f_derivatives(0.3, 6);
    for (int k = 0; k <= 6; ++k) {
        EXPECT_NEAR(d.values[static_cast<std::size_t>(k)], ref[k], 1e-11 * std::max(1.0, std::abs(ref[k]))) << k;
    }
}

TEST(FDerivatives, AgreeWithFiniteDifferenceOracle)
{
    const real256 u("0.3");
    const auto d = f_derivatives(u, 12);
    for (int k = 0; k <= 6; ++k) {
        const real256 fd = fd_derivative(u, k, real256("0.01"));
        const real256 v = d.values[static_cast<std::size_t>(k)];
        EXPECT_LE(to_double(abs(v - fd) / abs(fd)), 1e-8) << k;
    }
}

TEST(FDerivatives, RadiusIndependence)
{
    CauchyOptions<real160> small;
    small.radius = real160("0.25");
    CauchyOptions<real160> large;
    large.radius = real160("0.4");
    for (const char* u : {"0", "0.6", "1.2"}) {
        const auto a = f_derivatives(real160(u), 8, small);
        const auto b = f_derivatives(real160(u), 8, large);
        for (int k = 0; k <= 8; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double scale = std::max({to_double(abs(a.values[kk])), to_double(abs(b.values[kk])), 1.0});
            EXPECT_LE(to_double(abs(a.values[kk] - b.values[kk])), 1e-8 * scale) << "u=" << u << " k=" << k;
        }
    }
}

TEST(FDerivatives, RadiusIndependenceInDouble)
{
    CauchyOptions<double> small;
    small.radius = 0.25;
    CauchyOptions<double> large;
    large.radius = 0.4;
    for (double u : {0.0, 0.6, 1.2}) {
        const auto a = f_derivatives(u, 8, small);
        const auto b = f_derivatives(u, 8, large);
        for (int k = 0; k <= 8; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double scale = std::max({std::abs(a.values[kk]), std::abs(b.values[kk]), 1.0});
            EXPECT_LE(std::abs(a.values[kk] - b.values[kk]), 1e-8 * scale) << "u=" << u << " k=" << k;
        }
    }
}

TEST(FDerivatives, OddDerivativesVanishAtZero)
{
    const auto d = f_derivatives(real160(0), 11);
    for (int k = 1; k <= 11; k += 2) {
        EXPECT_LE(to_double(abs(d.values[static_cast<std::size_t>(k)])), 1e-10) << k;
    }
}

TEST(FDerivatives, ErrorEstimateIsMaxOfOrders)
{
    const auto d = f_derivatives(0.7, 12);
    ASSERT_EQ(d.order_errors.size(), 13u);
    double m = 0;
    for (double e : d.order_errors) {
        m = std::max(m, e);
    }
    EXPECT_EQ(m, d.error_estimate);
}

TEST(FDerivatives, BadArguments)
{
    EXPECT_THROW(f_derivatives(0.1, 17), domain_error);
    EXPECT_THROW(f_derivatives(0.1, -1), domain_error);
    CauchyOptions<double> bad;
    bad.radius = 0;
    EXPECT_THROW(f_derivatives(0.1, 3, bad), domain_error);
}
