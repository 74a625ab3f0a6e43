#include <gtest/gtest.h>

#include "orlicz/growth.hpp"

using namespace orlicz;

namespace {

Growth make(double pw, double lg = 0.0, double llg = 0.0) {
    Growth g;
    g.pw = pw;
    g.lg = lg;
    g.llg = llg;
    return g;
}

}  // namespace

TEST(Growth, Ordering) {
    EXPECT_TRUE(dominated(make(1.0), make(2.0)));
    EXPECT_FALSE(dominated(make(2.0), make(1.0, 100.0)));
    EXPECT_TRUE(dominated(make(2.0, -1.0), make(2.0)));
    EXPECT_TRUE(dominated(make(2.0, 1.0, 3.0), make(2.0, 1.0, 3.0)));
    EXPECT_FALSE(dominated(make(2.0, 1.0, 3.5), make(2.0, 1.0, 3.0)));
    Growth plus = make(2.0);
    plus.pw_plus = true;
    EXPECT_FALSE(dominated(plus, make(2.0, 50.0)));
    EXPECT_TRUE(dominated(plus, make(2.1)));
    EXPECT_TRUE(dominated(make(2.0, 50.0), plus));
    Growth big;
    big.superpoly = true;
    EXPECT_FALSE(dominated(big, make(100.0)));
    EXPECT_TRUE(dominated(make(100.0), big));
    EXPECT_THROW(dominated(big, big), AnalyticUnavailable);
}

TEST(Growth, LogAndExp) {
    EXPECT_DOUBLE_EQ(log_of(make(0.5)).lg, 1.0);
    EXPECT_DOUBLE_EQ(log_of(make(0.0, 0.7)).llg, 1.0);
    EXPECT_THROW(log_of(make(0.0, 0.0, 2.0)), AnalyticUnavailable);
    // exp(K log t) = t^K: an arbitrarily small power after shrinking K.
    EXPECT_TRUE(exp_of(make(0.0, 1.0)).pw_plus);
    EXPECT_DOUBLE_EQ(exp_of(make(0.0, 0.5)).sub, 0.5);
    EXPECT_TRUE(exp_of(make(0.0, 0.0, 1.0)).lg_plus);
    EXPECT_TRUE(exp_of(make(0.1)).superpoly);
    EXPECT_TRUE(exp_of(make(0.0, 1.5)).superpoly);
    EXPECT_TRUE(make(0.0, -1.0).bounded());
    EXPECT_TRUE(exp_of(make(0.0, -1.0)).bounded());
}

TEST(Growth, HnAsymptotics) {
    // Power p < n: t^{(n-p)/n}.
    EXPECT_DOUBLE_EQ(hn_growth(power(2.0), 3)->pw, 1.0 / 3.0);
    // p = n: L^{(n-1-l)/n}.
    const auto h = hn_growth(power_log(3.0, 1.0), 3);
    EXPECT_DOUBLE_EQ(h->pw, 0.0);
    EXPECT_DOUBLE_EQ(h->lg, 1.0 / 3.0);
    // p = n, l = n - 1: LL^{(n-1)/n}.
    EXPECT_DOUBLE_EQ(hn_growth(power_log(3.0, 2.0), 3)->llg, 2.0 / 3.0);
    EXPECT_TRUE(hn_growth(power(4.0), 3)->bounded());
    EXPECT_FALSE(hn_growth(exp_young(1.0), 2).has_value());
}

TEST(Growth, ApplyAndInverse) {
    const auto g = apply(power_log(2.0, 3.0), make(1.5));
    EXPECT_DOUBLE_EQ(g->pw, 3.0);
    EXPECT_DOUBLE_EQ(g->lg, 3.0);
    const auto inv = apply_inverse(power_log(2.0, 3.0), *g);
    EXPECT_DOUBLE_EQ(inv->pw, 1.5);
    EXPECT_NEAR(inv->lg, 0.0, 1e-12);
    EXPECT_DOUBLE_EQ(apply(Envelope::power_loglog(2.0, 1.0), make(1.0))->llg, 1.0);
    EXPECT_TRUE(apply(Envelope::exp(1.0), make(0.5))->superpoly);
    EXPECT_FALSE(apply(Envelope::custom([](double t) { return t; }), make(1.0)).has_value());
}
