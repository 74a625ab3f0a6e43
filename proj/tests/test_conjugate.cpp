#include <gtest/gtest.h>

#include <cmath>

#include "orlicz/conjugate.hpp"
#include "orlicz/numeric.hpp"

using namespace orlicz;

TEST(Classify, Power) {
    EXPECT_EQ(classify_integral_zero(power(2.0), 3), Classification::converges);
    EXPECT_EQ(classify_integral_zero(power(3.0), 3), Classification::diverges);
    EXPECT_EQ(classify_integral_inf(power(2.0), 3), Classification::diverges);
    EXPECT_EQ(classify_integral_inf(power(4.0), 3), Classification::converges);
    EXPECT_EQ(classify_integral_inf(power(3.0), 3), Classification::diverges);
    EXPECT_EQ(classify_integral_inf(power_log(3.0, 2.5), 3), Classification::converges);
    EXPECT_EQ(classify_integral_inf(power_log(3.0, 2.0), 3), Classification::diverges);
    EXPECT_EQ(classify_integral_inf(exp_young(1.0), 2), Classification::converges);
    EXPECT_EQ(classify_integral_zero(exp_neg_inv(1.0), 2), Classification::diverges);
}

TEST(Classify, CustomFitAgreesWithAnalytic) {
    CustomSpec spec;
    spec.eval = [](double t) { return std::pow(t, 1.5); };
    const auto Y = custom(spec);
    EXPECT_EQ(classify_integral_zero(Y, 2), Classification::converges);
    EXPECT_EQ(classify_integral_inf(Y, 2), Classification::diverges);
    CustomSpec fast;
    fast.eval = [](double t) { return std::pow(t, 4.0); };
    EXPECT_EQ(classify_integral_inf(custom(fast), 2), Classification::converges);
    EXPECT_EQ(classify_integral_zero(custom(fast), 2), Classification::diverges);
}

TEST(Hn, PowerClosedForm) {
    // A = t^p, p < n: H_n(s) = ((n-1)/(n-p))^{(n-1)/n} s^{(n-p)/n}
    for (int n : {2, 3, 4}) {
        for (double p : {1.0, 1.5}) {
            if (p >= n) continue;
            const double k = std::pow((n - 1.0) / (n - p), (n - 1.0) / n);
            for (double s : {1e-3, 1.0, 42.0, 1e6}) {
                EXPECT_NEAR(H_n(power(p), n, s) / (k * std::pow(s, (n - p) / n)), 1.0, 1e-9) << n << " " << p << " " << s;
            }
        }
    }
}

TEST(Hn, PreconditionAtZero) { EXPECT_THROW(H_n(power(3.0), 2, 1.0), PreconditionError); }

TEST(Conjugate, PowerGivesSobolevExponent) {
    // A = t^p, p < n: A_n ~ t^{np/(n-p)}
    const auto r = sobolev_conjugate(power(1.5), 3);
    EXPECT_FALSE(r.modified);
    EXPECT_EQ(r.H_limit.is_finite(), false);
    EXPECT_NEAR(fitted_exponent(r.An, 1.0, 1e3), 3.0 * 1.5 / 1.5, 1e-6);
    const double k = std::pow(2.0 / 1.5, 2.0 / 3.0);
    const double t = 5.0;
    const double s = std::pow(t / k, 3.0 / 1.5);
    EXPECT_NEAR(r.An(t) / std::pow(s, 1.5), 1.0, 1e-9);
}

TEST(Conjugate, InverseIsComposition) {
    const auto r = sobolev_conjugate(power_log(1.5, 1.0), 2);
    for (double t : {0.01, 1.0, 30.0}) {
        const double v = r.An(t);
        EXPECT_NEAR(r.An.inverse(v) / t, 1.0, 1e-9);
        EXPECT_NEAR(r.Hn->inverse((*r.Hn)(t)) / t, 1.0, 1e-10);
    }
}

TEST(Conjugate, FastGrowthHasFiniteLimit) {
    // A = t^4, n = 2: H_limit = (int_0^inf (t/A)^{1} )^{1/2} diverges at 0, so A is modified first
    const auto r = sobolev_conjugate(power(4.0), 2);
    EXPECT_TRUE(r.modified);
    EXPECT_EQ(r.classification_inf, Classification::converges);
    ASSERT_TRUE(r.H_limit.is_finite());
    const double L = r.H_limit.value();
    EXPECT_TRUE(std::isinf(r.An(L * 1.0001)));
    EXPECT_TRUE(std::isfinite(r.An(L * 0.99)));
}

TEST(Conjugate, LimitOracleLinearGlue) {
    // glued(linear, t^3) at 1, n = 2: I = int_0^1 1 dt + int_1^inf t^{-2} dt = 2, H_limit = sqrt(2)
    const auto Y = glued(linear(1.0), power(3.0), 1.0);
    const auto r = sobolev_conjugate(Y, 2);
    EXPECT_FALSE(r.modified);
    EXPECT_NEAR(r.H_limit.value(), std::sqrt(2.0), 1e-8);
}

TEST(Conjugate, LimitingCaseExponentialGrowth) {
    // A = t^n: A_n grows like exp(t^{n'})
    const auto r = sobolev_conjugate(power(2.0), 2);
    EXPECT_TRUE(r.modified);
    EXPECT_EQ(r.classification_inf, Classification::diverges);
    const double a = std::log(r.An(4.0)), b = std::log(r.An(8.0));
    EXPECT_NEAR(std::log(b / a) / std::log(2.0), 2.0, 0.1);
}

TEST(Conjugate, SigmaEqualsIntegerPath) {
    const auto a = sobolev_conjugate(power(1.2), 3);
    const auto b = sobolev_conjugate_sigma(power(1.2), 3.0, 3);
    for (double t : {0.1, 2.0}) EXPECT_DOUBLE_EQ(a.An(t), b.An(t));
    const auto c = sobolev_conjugate_sigma(power(1.2), 2.5, 2);
    EXPECT_NEAR(fitted_exponent(c.An, 1.0, 1e3), 2.5 * 1.2 / 1.3, 1e-6);
    EXPECT_THROW(sobolev_conjugate_sigma(power(1.2), 2.5, 3), std::domain_error);
}

TEST(Conjugate, SigmaAtExponentIsSuperPolynomial) {
    const auto c = sobolev_conjugate_sigma(power(2.5), 2.5, 2);
    const double a = std::log(c.An(1e1)), b = std::log(c.An(1e2));
    EXPECT_GT((b - a) / std::log(10.0), 20.0);
}

TEST(Hn, LinearIsSquareRoot) {
    for (double s : {0.0, 1e-4, 1.0, 9.0, 1e8}) EXPECT_NEAR(H_n(linear(), 2, s), std::sqrt(s), 1e-10 * (1.0 + std::sqrt(s)));
    EXPECT_EQ(classify_integral_zero(linear(), 5), Classification::converges);
}

TEST(Hn, InverseRoundTrip) {
    const auto r = sobolev_conjugate(power_log(2.0, 1.0), 3);
    for (double y : log_grid(1e-6, 1e6, 40)) EXPECT_NEAR((*r.Hn)(r.Hn->inverse(y)) / y, 1.0, 1e-8) << y;
}

TEST(Hn, DivergentTailIsUnbounded) {
    const auto r = sobolev_conjugate(power(3.0), 3);
    EXPECT_EQ(r.classification_inf, Classification::diverges);
    EXPECT_TRUE(std::isinf(r.H_limit.value()));
    double prev = 0.0;
    for (double s : {1e10, 1e40, 1e100, 1e250}) {
        const double h = (*r.Hn)(s);
        EXPECT_GT(h, prev);
        prev = h;
    }
}

TEST(Conjugate, PowerExponentOverWideRange) {
    for (auto [p, n] : std::vector<std::pair<double, int>>{{1.0, 2}, {2.0, 3}, {3.0, 4}}) {
        const auto r = sobolev_conjugate(power(p), n);
        EXPECT_NEAR(fitted_exponent(r.An, 1e2, 1e6), n * p / (n - p), 1e-3);
    }
}

TEST(Conjugate, BorderlineIsSuperPolynomial) {
    const auto r = sobolev_conjugate(power(3.0), 3);
    for (double m : {5.0, 20.0}) {
        const double a = std::log(r.An(10.0)) - m * std::log(10.0);
        const double b = std::log(r.An(30.0)) - m * std::log(30.0);
        EXPECT_GT(b, a) << m;
    }
}

TEST(Conjugate, AnConvexOnFiniteRange) {
    for (const auto& Y : {power(1.5), power_log(2.0, 1.0), power(5.0)}) {
        const auto r = sobolev_conjugate(Y, 3);
        const auto g = log_grid(1e-3, 1e3, 64);
        for (std::size_t i = 1; i + 1 < g.size(); ++i) {
            const double a = r.An(g[i - 1]), c = r.An(g[i + 1]);
            if (!std::isfinite(c)) break;
            // chord above the graph at the geometric midpoint
            const double w = (g[i + 1] - g[i]) / (g[i + 1] - g[i - 1]);
            EXPECT_LE(r.An(g[i]), w * a + (1.0 - w) * c + 1e-9 * (1.0 + c)) << Y.label() << " " << g[i];
        }
    }
}

TEST(HatAn, EquivalentToPiecesInEachRegime) {
    const auto r = sobolev_conjugate(power(1.5), 2);
    const auto h = hat_An(power(1.5), 2);
    EXPECT_TRUE(equivalent(h, power(1.5), Regime::near_zero()).equivalent);
    EXPECT_NEAR(fitted_exponent(h, 1e3, 1e6), fitted_exponent(r.An, 1e3, 1e6), 1e-6);
}

TEST(HatAn, GluesAtCompatiblePoint) {
    const auto h = hat_An(power(1.5), 2);
    EXPECT_EQ(h.kind(), YoungKind::glued);
    EXPECT_NEAR(h(1e-6), std::pow(1e-6, 1.5), 1e-20);
    // convex: slopes non-decreasing across the glue
    double prev = 0.0;
    for (double t : log_grid(1e-3, 1e3, 200)) {
        const double s = right_slope(h, t);
        EXPECT_GE(s, prev * (1.0 - 1e-7)) << t;
        prev = s;
    }
}
