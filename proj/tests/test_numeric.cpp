#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "orlicz/ext_real.hpp"
#include "orlicz/numeric.hpp"

using namespace orlicz;

TEST(ExtReal, ArithmeticAndOrder) {
    const ExtReal inf = ExtReal::infinity();
    EXPECT_TRUE((ExtReal(3.0) + inf).is_finite() == false);
    EXPECT_EQ((ExtReal(0.0) * inf).value(), 0.0);
    EXPECT_LT(ExtReal(1e300), inf);
    EXPECT_EQ(inf.str(), "inf");
    EXPECT_THROW(ExtReal(-1.0), std::domain_error);
    EXPECT_THROW(ExtReal(std::nan("")), std::domain_error);
}

TEST(Quadrature, Polynomial) {
    const auto r = integrate([](double x) { return x * x; }, 0.0, 3.0);
    EXPECT_NEAR(r.value, 9.0, 1e-12);
}

TEST(Quadrature, LogAxis) {
    const auto r = integrate_log([](double t) { return 1.0 / t; }, 1e-20, 1e20);
    EXPECT_NEAR(r.value, 40.0 * std::log(10.0), 1e-9);
}

TEST(Improper, IntegrableSingularityAtLower) {
    const auto r = integrate_toward_lower([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    EXPECT_NE(r.status, TailStatus::diverged);
    EXPECT_NEAR(r.value, 2.0, 1e-9);
}

TEST(Improper, NonIntegrableSingularity) {
    const auto r = integrate_toward_lower([](double x) { return 1.0 / x; }, 0.0, 1.0);
    EXPECT_EQ(r.status, TailStatus::diverged);
}

TEST(Improper, SingularityAtUpper) {
    const auto r = integrate_toward_upper([](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0);
    EXPECT_NEAR(r.value, 2.0, 1e-9);
}

TEST(Improper, ToInfinity) {
    const auto r = integrate_to_infinity([](double t) { return 1.0 / (t * t); }, 1.0);
    EXPECT_NEAR(r.value, 1.0, 1e-9);
    const auto e = integrate_to_infinity([](double t) { return std::exp(-t); }, 1.0);
    EXPECT_NEAR(e.value, std::exp(-1.0), 1e-12);
    const auto d = integrate_to_infinity([](double t) { return 1.0 / t; }, 1.0);
    EXPECT_EQ(d.status, TailStatus::diverged);
}

TEST(Improper, SlowPowerTailExtrapolated) {
    // int_1^inf t^{-1.5} = 2
    const auto r = integrate_to_infinity([](double t) { return std::pow(t, -1.5); }, 1.0);
    EXPECT_NE(r.status, TailStatus::diverged);
    EXPECT_NEAR(r.value, 2.0, 1e-6);
}

TEST(Grid, LogGridEnds) {
    const auto g = log_grid(1e-3, 1e3, 7);
    ASSERT_EQ(g.size(), 7u);
    EXPECT_DOUBLE_EQ(g.front(), 1e-3);
    EXPECT_DOUBLE_EQ(g.back(), 1e3);
    EXPECT_NEAR(g[3], 1.0, 1e-14);
    EXPECT_EQ(log_grid_per_decade(1.0, 100.0, 10).size(), 21u);
}

TEST(Grid, LogLogSlope) {
    const auto x = log_grid(1.0, 1e4, 20);
    std::vector<double> y;
    for (double v : x) y.push_back(5.0 * std::pow(v, 2.5));
    EXPECT_NEAR(loglog_slope(x, y), 2.5, 1e-12);
}

TEST(LogLogTable, ExactOnPowerAndInverse) {
    const auto x = log_grid(1e-5, 1e5, 101);
    std::vector<double> y;
    for (double v : x) y.push_back(std::pow(v, 1.5));
    const LogLogTable tab(x, y);
    EXPECT_NEAR(tab(std::numbers::pi) / std::pow(std::numbers::pi, 1.5), 1.0, 1e-12);
    EXPECT_NEAR(tab.inverse(8.0), 4.0, 1e-10);
    EXPECT_NEAR(tab.x_min(), 1e-5, 1e-17);
    EXPECT_NEAR(tab.x_max(), 1e5, 1e-7);
    EXPECT_NEAR(tab.end_slope_high(), 1.5, 1e-9);
}

TEST(GaussLegendre, ExactForPolynomials) {
    for (std::size_t m : {1u, 2u, 5u, 8u, 16u}) {
        const auto g = gauss_legendre(m);
        double sum_w = 0.0, moment = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            sum_w += g.weights[i];
            moment += g.weights[i] * std::pow(g.nodes[i], 2 * m - 2);
        }
        EXPECT_NEAR(sum_w, 2.0, 1e-14) << m;
        EXPECT_NEAR(moment, 2.0 / (2.0 * m - 1.0), 1e-14) << m;
    }
}
