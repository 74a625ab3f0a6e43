#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "orlicz/numeric.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<YoungFunction> builtins() {
    return {power(1.0),
            power(2.0),
            power(3.5, 2.0),
            power_log(2.0, 1.0, 1.0),
            power_log(1.5, -0.5, std::exp(1.0)),
            power_loglog(2.0, 1.0),
            exp_young(1.0),
            exp_young(0.5),
            exp_young(2.0),
            power_exp(1.0, 1.0),
            exp_neg_inv(1.0),
            linear(3.0),
            piecewise({{0.0, 0.0}, {1.0, 1.0}}),
            piecewise({{0.0, 1.0}, {2.0, 0.0, true}}),
            glued(linear(1.0), power(3.0), 1.0),
            modify_near_zero(power(1.5), 2)};
}

// t*e^t, used throughout as the counterexample function.
YoungFunction t_exp_t() { return power_exp(1.0, 1.0); }

}  // namespace

TEST(Eval, Examples) {
    EXPECT_DOUBLE_EQ(power(2.0)(3.0), 9.0);
    for (const auto& Y : builtins()) EXPECT_EQ(Y(0.0), 0.0) << Y.label();
    EXPECT_NEAR(power_log(2.0, 1.0, 1.0)(1.0), std::log(2.0), 1e-15);
    EXPECT_THROW(power(2.0)(-1.0), std::domain_error);
    EXPECT_EQ(eval(power(2.0), 3.0).value(), 9.0);
}

TEST(Eval, ExpShiftMakesConvex) {
    const auto Y = exp_young(0.5);
    const double s = std::pow(1.0, 2.0);  // ((1-a)/a)^{1/a} = 1 for a = 1/2
    EXPECT_NEAR(Y(1.0), std::exp(std::sqrt(1.0 + s)) - std::exp(1.0), 1e-13);
}

TEST(Inverse, Examples) {
    EXPECT_DOUBLE_EQ(power(2.0).inverse(4.0), 2.0);
    const auto jump = piecewise({{0.0, 0.0}, {1.0, 0.0, true}});
    EXPECT_DOUBLE_EQ(jump.inverse(0.0), 1.0);
    EXPECT_DOUBLE_EQ(jump.inverse(7.5), 1.0);
    EXPECT_DOUBLE_EQ(jump.inverse(1e300), 1.0);
    EXPECT_EQ(inverse(power(2.0), ExtReal::infinity()).is_finite(), false);
}

TEST(Inverse, PlateauRightEndpoint) {
    const auto Y = piecewise({{0.0, 0.0}, {2.0, 1.0}});
    EXPECT_NEAR(Y.inverse(0.0), 2.0, 1e-12);
    EXPECT_NEAR(Y.inverse(1.0), 3.0, 1e-12);
}

TEST(Inverse, CustomBisectionMatchesClosedForm) {
    CustomSpec spec;
    spec.eval = [](double t) { return t * t * t; };
    const auto Y = custom(spec);
    for (double y : {1e-9, 0.5, 8.0, 1e12}) EXPECT_NEAR(Y.inverse(y) / std::cbrt(y), 1.0, 1e-11);
}

TEST(Inverse, EvalRoundTripOnGrid) {
    for (const auto& Y : builtins()) {
        for (double t : log_grid(1e-6, 1e6, 64)) {
            const double v = Y(t);
            // v == 0 means A(t) underflowed, not a plateau.
            if (!std::isfinite(v) || v == 0.0) continue;
            const double s = Y.inverse(v);
            EXPECT_GE(s, t * (1.0 - 1e-12)) << Y.label() << " t=" << t;
            if (v > 0.0 && v < 1e300) {
                // strictly increasing and continuous there
                EXPECT_LE(s, t * (1.0 + 1e-9) + 1e-300) << Y.label() << " t=" << t;
            }
        }
    }
}

TEST(Delta2, Examples) {
    const auto p = check_delta2(power(2.5), Regime::global());
    EXPECT_TRUE(p.holds);
    EXPECT_NEAR(p.constant, std::pow(2.0, 2.5), 1e-12);
    const auto c = check_delta2(t_exp_t(), Regime::near_infinity());
    EXPECT_FALSE(c.holds);
    ASSERT_TRUE(c.witness.has_value());
    const auto z = check_delta2(exp_neg_inv(1.0), Regime::near_zero());
    EXPECT_FALSE(z.holds);
    EXPECT_TRUE(check_delta2(power_log(2.0, 1.0), Regime::near_infinity()).holds);
    EXPECT_FALSE(check_delta2(exp_young(1.0), Regime::near_infinity()).holds);
}

TEST(Delta2, CustomGridMatchesSymbolicRatio) {
    CustomSpec spec;
    spec.eval = [](double t) { return t * std::exp(t); };
    const auto v = check_delta2(custom(spec), Regime::near_infinity());
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.witness.has_value());
    const double t = *v.witness;
    EXPECT_GT(2.0 * std::exp(t), 1e3);

    CustomSpec sq;
    sq.eval = [](double t) { return t * t; };
    const auto h = check_delta2(custom(sq), Regime::global());
    EXPECT_TRUE(h.holds);
    EXPECT_NEAR(h.constant, 4.0, 1e-6);
}

TEST(Delta2, ZeroCustomIsIndeterminate) {
    CustomSpec spec;
    spec.eval = [](double) { return 0.0; };
    EXPECT_THROW(check_delta2(custom(spec), Regime::near_zero()), IndeterminateError);
}

TEST(Equivalence, Examples) {
    const auto v = equivalent(power(2.0), power(2.0, 3.0), Regime::global());
    EXPECT_TRUE(v.equivalent);
    EXPECT_NEAR(v.constant, std::sqrt(3.0), 1e-12);
    EXPECT_FALSE(equivalent(power(2.0), power_log(2.0, 1.0), Regime::near_infinity()).equivalent);
    for (const auto& Y : builtins()) {
        const auto r = equivalent(Y, Y, Regime::near_infinity());
        EXPECT_TRUE(r.equivalent) << Y.label();
        EXPECT_EQ(r.constant, 1.0) << Y.label();
    }
}

TEST(Equivalence, GridConstantMatchesScaling) {
    CustomSpec spec;
    spec.eval = [](double t) { return 3.0 * t * t; };
    const auto v = equivalent(power(2.0), custom(spec), Regime::global());
    EXPECT_TRUE(v.equivalent);
    EXPECT_NEAR(v.constant, std::sqrt(3.0), 1e-6);
}

TEST(Equivalence, Symmetric) {
    const std::vector<std::pair<YoungFunction, YoungFunction>> pairs = {
        {power(2.0), power(2.0, 5.0)},
        {power_log(2.0, 1.0), power(2.0)},
        {glued(linear(1.0), power(3.0), 1.0), power(3.0)},
    };
    for (const auto& [a, b] : pairs) {
        for (const auto& r : {Regime::global(), Regime::near_infinity(), Regime::near_zero()}) {
            const auto ab = equivalent(a, b, r);
            const auto ba = equivalent(b, a, r);
            EXPECT_EQ(ab.equivalent, ba.equivalent);
            if (ab.equivalent) {
                EXPECT_NEAR(ab.constant, ba.constant, 1e-9 * ab.constant);
            }
        }
    }
}

TEST(Nondegenerate, Examples) {
    EXPECT_TRUE(is_nondegenerate(power(1.0)));
    EXPECT_FALSE(is_nondegenerate(piecewise({{0.0, 0.0}, {1.0, 1.0}})));
    EXPECT_TRUE(is_nondegenerate(exp_neg_inv(1.0)));
    EXPECT_TRUE(is_nondegenerate(exp_neg_inv(3.0)));
}

TEST(ModifyNearZero, LinearThenOriginal) {
    const auto M = modify_near_zero(power(1.5), 2);
    EXPECT_EQ(M.kind(), YoungKind::glued);
    // linear below the glue point, unchanged beyond it
    const double a = M(1e-8), b = M(2e-8);
    EXPECT_NEAR(b / a, 2.0, 1e-12);
    EXPECT_NEAR(M(10.0), std::pow(10.0, 1.5), 1e-9);
    const auto e = equivalent(M, power(1.5), Regime::near_infinity());
    EXPECT_TRUE(e.equivalent);
    EXPECT_EQ(e.constant, 1.0);
}

TEST(ModifyNearZero, ExpNegInvBecomesLinear) {
    const auto M = modify_near_zero(exp_neg_inv(1.0), 3);
    EXPECT_NEAR(M(1e-10) / M(1e-11), 10.0, 1e-9);
    EXPECT_TRUE(is_nondegenerate(M));
}

TEST(Properties, ConvexityProbe) {
    for (const auto& Y : builtins()) {
        const auto g = log_grid(1e-6, 1e6, 64);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); j += 7) {
                const double s = g[i], t = g[j];
                const double at = Y(t);
                if (!std::isfinite(at)) continue;
                const double mid = Y(0.5 * (s + t));
                EXPECT_LE(mid, 0.5 * (Y(s) + at) + 1e-12 * (1.0 + at)) << Y.label() << " s=" << s << " t=" << t;
            }
        }
    }
}

TEST(Properties, RatioNonDecreasing) {
    for (const auto& Y : builtins()) {
        double prev = 0.0;
        for (double t : log_grid(1e-6, 1e6, 64)) {
            const double v = Y(t);
            if (!std::isfinite(v)) break;
            const double r = v / t;
            EXPECT_GE(r, prev * (1.0 - 1e-12)) << Y.label() << " t=" << t;
            prev = r;
        }
    }
}

// Convexity with A(0) = 0 gives lambda A(t) <= A(lambda t) for lambda >= 1.
TEST(Properties, ScalingBound) {
    for (const auto& Y : builtins()) {
        for (double t : log_grid(1e-6, 1e6, 64)) {
            for (double lambda : {1.0, 2.0, 10.0, 1e3}) {
                const double big = Y(lambda * t);
                if (!std::isfinite(big)) continue;
                EXPECT_LE(lambda * Y(t), big * (1.0 + 1e-12)) << Y.label() << " t=" << t << " l=" << lambda;
            }
        }
    }
}

TEST(Records, RoundTripLabels) {
    const auto r = power_log(2.0, 1.0, 1.0).record();
    EXPECT_EQ(r.kind, "powerlog");
    ASSERT_EQ(r.params.size(), 3u);
    EXPECT_EQ(r.params[0], 2.0);
    EXPECT_EQ(power(2.0).zero_exponent().value_or(-1.0), 2.0);
    EXPECT_EQ(piecewise({{0.0, 1.0}, {2.0, 0.0, true}}).finite_jump().value_or(-1.0), 2.0);
    EXPECT_EQ(piecewise({{0.0, 1.0}, {2.0, 0.0, true}})(3.0), kInf);
}
