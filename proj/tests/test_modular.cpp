#include <gtest/gtest.h>

#include <cmath>

#include "orlicz/modular.hpp"

using namespace orlicz;

namespace {

TestFunction constant(double c) {
    return {[c](const Point&) { return c; }, [](const Point&) { return Point{}; }, "const"};
}

TestFunction coordinate(int i) {
    return {[i](const Point& x) { return x[static_cast<std::size_t>(i)]; },
            [i](const Point&) {
                Point g{};
                g[static_cast<std::size_t>(i)] = 1.0;
                return g;
            },
            "x"};
}

// 1 + x(log x - 1), gradient (log x, 0, 0).
TestFunction counter_u() {
    return {[](const Point& x) { return 1.0 + x[0] * (std::log(x[0]) - 1.0); },
            [](const Point& x) { return Point{std::log(x[0]), 0.0, 0.0}; }, "counter"};
}

YoungFunction t_exp_t() { return power_exp(1.0, 1.0); }

}  // namespace

TEST(Box, Validation) {
    EXPECT_DOUBLE_EQ(BoxDomain::unit(3).measure(), 1.0);
    BoxDomain b;
    b.n = 2;
    b.upper = {2.0, 0.5, 1.0};
    EXPECT_DOUBLE_EQ(b.measure(), 1.0);
    b.upper[1] = -1.0;
    EXPECT_THROW(b.validate(), std::invalid_argument);
    b.upper[1] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(b.validate(), PreconditionError);
    EXPECT_THROW(BoxDomain::unit(4), std::invalid_argument);
}

TEST(IntegrateBox, Polynomials) {
    const auto v = integrate_box([](const Point& x) { return x[0] * x[1] * x[2]; }, BoxDomain::unit(3));
    EXPECT_NEAR(v.value(), 0.125, 1e-12);
    const auto w = integrate_box([](const Point& x) { return -std::log(x[0]) * x[1]; }, BoxDomain::unit(2, {{0, false}}));
    EXPECT_NEAR(w.value(), 0.5, 1e-10);
}

TEST(IntegrateBox, BothFacesSingular) {
    // int_0^1 (x(1-x))^(-1/2) = pi.
    const auto v = integrate_box([](const Point& x) { return 1.0 / std::sqrt(x[0] * (1.0 - x[0])); },
                                 BoxDomain::unit(1, {{0, false}, {0, true}}));
    EXPECT_NEAR(v.value(), M_PI, 1e-8);
}

TEST(Modular, Examples) {
    const auto box = BoxDomain::unit(2);
    EXPECT_NEAR(modular_integral(constant(3.0), linear(), 1.0, box).value(), 3.0, 1e-12);
    for (double l : {0.1, 1.0, 7.0}) EXPECT_EQ(modular_integral(constant(0.0), t_exp_t(), l, box).value(), 0.0);
    TestFunction mlog{[](const Point& x) { return -std::log(x[0]); }, [](const Point& x) { return Point{-1.0 / x[0]}; },
                      "-log"};
    EXPECT_NEAR(modular_integral(mlog, linear(), 1.0, BoxDomain::unit(1, {{0, false}})).value(), 1.0, 1e-9);
    EXPECT_THROW(modular_integral(mlog, linear(), 0.0, BoxDomain::unit(1)), std::domain_error);
}

TEST(Modular, CounterexampleGradientClosedForm) {
    // int_0^1 (-log x / l) x^(-1/l) dx = l / (l - 1)^2 for l > 1, divergent otherwise.
    const auto box = BoxDomain::unit(2, {{0, false}});
    for (double l : {1.5, 2.0, 4.0}) {
        const double exact = l / ((l - 1.0) * (l - 1.0));
        EXPECT_NEAR(modular_gradient(counter_u(), t_exp_t(), l, box).value(), exact, 1e-7 * exact) << l;
    }
    EXPECT_TRUE(modular_gradient(counter_u(), t_exp_t(), 1.0, box).is_infinite());
    EXPECT_TRUE(modular_gradient(counter_u(), t_exp_t(), 0.5, box).is_infinite());
}

TEST(Luxemburg, Examples) {
    const auto box = BoxDomain::unit(2);
    EXPECT_NEAR(luxemburg_norm(constant(2.5), linear(), box).value(), 2.5, 1e-10);
    EXPECT_NEAR(luxemburg_norm(constant(1.0), power(2.0), box).value(), 1.0, 1e-10);
    EXPECT_EQ(luxemburg_norm(constant(0.0), power(2.0), box).value(), 0.0);
    // int_0^1 (x / l)^2 = 1 / (3 l^2).
    EXPECT_NEAR(luxemburg_norm(coordinate(0), power(2.0), BoxDomain::unit(1)).value(), 1.0 / std::sqrt(3.0), 1e-10);
    // l / (l - 1)^2 = 1.
    const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    const auto w = w1a_quantities(counter_u(), t_exp_t(), BoxDomain::unit(2, {{0, false}}));
    EXPECT_NEAR(w.norm_grad.value(), golden, 1e-8 * golden);
    EXPECT_TRUE(w.modular_grad(2.0).is_finite());
}

TEST(Luxemburg, Homogeneity) {
    const auto box = BoxDomain::unit(2, {{0, false}});
    for (const auto& Y : {power(2.0), t_exp_t(), power_log(1.5, 1.0)}) {
        const double a = luxemburg_norm(counter_u(), Y, box).value();
        const double b = luxemburg_norm(scaled(counter_u(), 2.0), Y, box).value();
        EXPECT_NEAR(b, 2.0 * a, 1e-8 * b) << Y.label();
    }
}

TEST(Luxemburg, UnitBallProperty) {
    const auto box = BoxDomain::unit(2, {{0, false}});
    for (double c : {0.3, 0.6, 0.9, 1.2}) {
        const auto u = scaled(counter_u(), c);
        const bool in_ball = luxemburg_norm(u, power(3.0), box) <= ExtReal(1.0);
        EXPECT_EQ(in_ball, modular_integral(u, power(3.0), 1.0, box) <= ExtReal(1.0)) << c;
    }
}

TEST(Modular, NonIncreasingInLambda) {
    const auto box = BoxDomain::unit(2, {{0, false}});
    ExtReal prev = ExtReal::infinity();
    for (double l = 0.25; l <= 8.0; l *= 1.5) {
        const auto v = modular_gradient(counter_u(), t_exp_t(), l, box);
        EXPECT_LE(v, prev) << l;
        prev = v;
    }
}

TEST(W1A, Examples) {
    const auto w = w1a_quantities(coordinate(0), linear(), BoxDomain::unit(2));
    EXPECT_NEAR(w.norm_grad.value(), 1.0, 1e-10);
    EXPECT_NEAR(w.norm_u.value(), 0.5, 1e-10);
    const auto z = w1a_quantities(constant(0.0), power(2.0), BoxDomain::unit(2));
    EXPECT_EQ(z.norm().value(), 0.0);
}

TEST(GradientCheck, DetectsMismatch) {
    EXPECT_TRUE(check_gradient(counter_u(), BoxDomain::unit(2, {{0, false}})).consistent);
    TestFunction bad = counter_u();
    bad.gradient = [](const Point& x) { return Point{std::log(x[0]) + 0.01, 0.0, 0.0}; };
    EXPECT_FALSE(check_gradient(bad, BoxDomain::unit(2, {{0, false}})).consistent);
}

TEST(Convergence, ConstantShifts) {
    const auto box = BoxDomain::unit(2);
    std::vector<TestFunction> seq;
    std::vector<double> ks;
    for (double k = 2; k <= 1024; k *= 2) {
        seq.push_back(constant(1.0 / k));
        ks.push_back(k);
    }
    const std::vector<double> grid{0.25, 0.5, 1.0, 2.0, 4.0};
    const auto rep = modular_convergence(seq, ks, constant(0.0), power(2.0), box, grid);
    EXPECT_TRUE(rep.norm_convergence);
    EXPECT_DOUBLE_EQ(rep.smallest_converging_lambda.value(), 0.25);
    // (1 / (k l))^2.
    EXPECT_NEAR(rep.values[2][1].value(), std::pow(1.0 / (8.0 * 0.5), 2), 1e-14);

    const auto same = modular_convergence(std::vector<TestFunction>(4, coordinate(0)), {1, 2, 3, 4}, coordinate(0),
                                          power(2.0), box, grid);
    EXPECT_TRUE(same.norm_convergence);
    for (const auto& row : same.values) {
        for (const auto& v : row) EXPECT_EQ(v.value(), 0.0);
    }

    const auto stuck = modular_convergence(std::vector<TestFunction>(4, constant(1.0)), {1, 2, 3, 4}, constant(0.0),
                                           power(2.0), box, grid);
    EXPECT_TRUE(stuck.converging_lambdas.empty());
    EXPECT_TRUE(stuck.smallest_converging_lambda.is_infinite());
}

TEST(Convergence, CounterexampleSequence) {
    const auto box = BoxDomain::unit(2, {{0, false}});
    std::vector<TestFunction> seq;
    std::vector<double> ks;
    for (double k : {8.0, 64.0, 512.0}) {
        const double shift = (std::log(k) + 1.0) / k;
        TestFunction uk = counter_u();
        uk.value = [shift](const Point& x) { return 1.0 + x[0] * (std::log(x[0]) - 1.0) + shift; };
        seq.push_back(uk);
        ks.push_back(k);
    }
    const std::vector<double> grid{0.25, 0.5, 1.0, 2.0, 4.0};
    const auto rep = modular_convergence(seq, ks, counter_u(), t_exp_t(), box, grid);
    EXPECT_TRUE(rep.norm_convergence);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const double s = (std::log(ks[i]) + 1.0) / ks[i];
        EXPECT_NEAR(rep.values[i][2].value(), s * std::exp(s), 1e-12) << ks[i];
    }
    const auto serial = modular_convergence(seq, ks, counter_u(), t_exp_t(), box, grid, ModularPart::sobolev, {},
                                            Execution::serial);
    EXPECT_EQ(serial.values, rep.values);
}

TEST(Convergence, RowRule) {
    const std::vector<double> k{1, 2, 4, 8};
    EXPECT_TRUE(row_converges(k, {1.0, 0.5, 0.25, 0.125}, {}));
    EXPECT_FALSE(row_converges(k, {1.0, 0.5, 0.6, 0.1}, {}));
    EXPECT_FALSE(row_converges(k, {1.0, 0.9, 0.85, 0.84}, {}));
    EXPECT_FALSE(row_converges(k, {1.0, ExtReal::infinity(), 0.1, 0.0}, {}));
    EXPECT_TRUE(row_converges(k, {0.0, 0.0, 0.0, 0.0}, {}));
}
