#include "orlicz/growth.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace orlicz {

namespace {

constexpr double kEps = 1e-12;

bool zero(double v) { return std::abs(v) <= kEps; }

Growth constant_growth() { return Growth{}; }

// Compares one level: -1 lhs smaller, +1 lhs larger, 0 tie.
int level(double l, bool lp, double r, bool rp) {
    if (l < r - kEps) return -1;
    if (l > r + kEps) return 1;
    if (rp) return -1;
    if (lp) return 1;
    return 0;
}

}  // namespace

bool Growth::bounded() const {
    if (superpoly || pw_plus || sub_plus || lg_plus) return false;
    if (pw > kEps) return false;
    if (pw < -kEps) return true;
    if (sub > kEps) return false;
    if (lg > kEps) return false;
    if (lg < -kEps) return true;
    return llg <= kEps;
}

std::string Growth::str() const {
    if (superpoly) return "superpoly";
    std::string s = fmt::format("t^{}{}", pw, pw_plus ? "+" : "");
    if (sub > 0.0 || sub_plus) s += fmt::format(" exp(L^{}{})", sub, sub_plus ? "+" : "");
    if (!zero(lg) || lg_plus) s += fmt::format(" L^{}{}", lg, lg_plus ? "+" : "");
    if (!zero(llg)) s += fmt::format(" LL^{}", llg);
    return s;
}

Growth operator*(const Growth& a, const Growth& b) {
    Growth g;
    g.superpoly = a.superpoly || b.superpoly;
    g.pw = a.pw + b.pw;
    g.pw_plus = a.pw_plus || b.pw_plus;
    g.sub = std::max(a.sub, b.sub);
    g.sub_plus = a.sub_plus || b.sub_plus;
    g.lg = a.lg + b.lg;
    g.lg_plus = a.lg_plus || b.lg_plus;
    g.llg = a.llg + b.llg;
    return g;
}

Growth pow(const Growth& g, double r) {
    if (zero(r)) return constant_growth();
    if (r < 0.0 && (g.superpoly || g.pw_plus || g.sub_plus || g.lg_plus || g.sub > 0.0)) {
        throw AnalyticUnavailable("growth algebra: negative power of a non-algebraic factor");
    }
    Growth out = g;
    out.pw *= r;
    out.lg *= r;
    out.llg *= r;
    return out;
}

Growth log_of(const Growth& g) {
    Growth out;
    if (g.superpoly) throw AnalyticUnavailable("growth algebra: log of a superpolynomial quantity");
    if (g.pw > kEps || (zero(g.pw) && g.pw_plus)) {
        out.lg = 1.0;
    } else if (g.pw < -kEps) {
        throw AnalyticUnavailable("growth algebra: log of a decaying quantity");
    } else if (g.sub > kEps || g.sub_plus) {
        out.lg = g.sub;
        out.lg_plus = g.sub_plus;
    } else if (g.lg > kEps || (zero(g.lg) && g.lg_plus)) {
        out.llg = 1.0;
    } else {
        throw AnalyticUnavailable("growth algebra: log of a quantity growing like LL^c or slower");
    }
    return out;
}

Growth exp_of(const Growth& g) {
    Growth out;
    if (g.superpoly || g.pw > kEps || g.pw_plus || g.sub > kEps || g.sub_plus) {
        out.superpoly = true;
        return out;
    }
    if (g.pw < -kEps) return constant_growth();
    if (g.lg > 1.0 + kEps || (zero(g.lg - 1.0) && (g.lg_plus || g.llg > kEps))) {
        out.superpoly = true;
    } else if (zero(g.lg - 1.0)) {
        // exp(K L) = t^K; K may be shrunk by the envelope constant. LL^{c<0} rounds up.
        out.pw_plus = true;
    } else if (g.lg > kEps) {
        out.sub = g.lg;
        out.sub_plus = g.lg_plus || g.llg > kEps;
    } else if (g.lg < -kEps) {
        return constant_growth();
    } else if (g.lg_plus || g.llg > 1.0 + kEps) {
        out.sub_plus = true;
    } else if (g.llg > kEps) {
        // exp(K LL) = L^K; exp(LL^theta), theta < 1, rounds up to the same class.
        out.lg_plus = true;
    }
    return out;
}

bool dominated(const Growth& lhs, const Growth& rhs) {
    if (lhs.superpoly) {
        if (rhs.superpoly) throw AnalyticUnavailable("growth algebra: both sides superpolynomial");
        return false;
    }
    if (rhs.superpoly) return true;
    for (int c : {level(lhs.pw, lhs.pw_plus, rhs.pw, rhs.pw_plus), level(lhs.sub, lhs.sub_plus, rhs.sub, rhs.sub_plus),
                  level(lhs.lg, lhs.lg_plus, rhs.lg, rhs.lg_plus)}) {
        if (c != 0) return c < 0;
    }
    return lhs.llg <= rhs.llg + kEps;
}

std::optional<Growth> apply(const YoungFunction& Y, const Growth& X) {
    const Asymptotics& a = Y.at_infinity();
    if (a.cls != GrowthClass::power) return std::nullopt;
    if (X.superpoly) {
        Growth s;
        s.superpoly = true;
        return s;
    }
    if (X.bounded()) return constant_growth();
    Growth out = pow(X, a.power);
    if (!zero(a.log_order)) out = out * pow(log_of(X), a.log_order);
    if (!zero(a.loglog_order)) out = out * pow(log_of(log_of(X)), a.loglog_order);
    return out;
}

std::optional<Growth> apply_inverse(const YoungFunction& Y, const Growth& X) {
    const Asymptotics& a = Y.at_infinity();
    if (a.cls != GrowthClass::power || X.superpoly) return std::nullopt;
    if (X.bounded()) return constant_growth();
    // Inverse of t^p L^l LL^m is y^{1/p} (log y)^{-l/p} (loglog y)^{-m/p}.
    Growth out = pow(X, 1.0 / a.power);
    if (!zero(a.log_order)) out = out * pow(log_of(X), -a.log_order / a.power);
    if (!zero(a.loglog_order)) out = out * pow(log_of(log_of(X)), -a.loglog_order / a.power);
    return out;
}

std::optional<Growth> apply(const Envelope& E, const Growth& X) {
    const auto& p = E.params();
    switch (E.kind()) {
        case EnvelopeKind::one:
            return constant_growth();
        case EnvelopeKind::power:
            return pow(X, p[0]);
        case EnvelopeKind::power_log:
            return zero(p[1]) ? pow(X, p[0]) : pow(X, p[0]) * pow(log_of(X), p[1]);
        case EnvelopeKind::power_loglog:
            return zero(p[1]) ? pow(X, p[0]) : pow(X, p[0]) * pow(log_of(log_of(X)), p[1]);
        case EnvelopeKind::log_power:
            return pow(log_of(X), p[0]);
        case EnvelopeKind::exp:
            return exp_of(pow(X, p[0]));
        case EnvelopeKind::exp_power_log:
            return exp_of(zero(p[1]) ? pow(X, p[0]) : pow(X, p[0]) * pow(log_of(X), p[1]));
        case EnvelopeKind::exp_exp:
            return exp_of(exp_of(pow(X, p[0])));
        case EnvelopeKind::custom:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Growth> hn_growth(const YoungFunction& A, double sigma) {
    const Asymptotics& a = A.at_infinity();
    if (a.cls != GrowthClass::power) return std::nullopt;
    const double q = a.power, l = a.log_order, m = a.loglog_order;
    Growth g;
    if (q < sigma - kEps) {
        g.pw = (sigma - q) / sigma;
        g.lg = -l / sigma;
        g.llg = -m / sigma;
    } else if (zero(q - sigma) && l < sigma - 1.0 - kEps) {
        g.lg = (sigma - 1.0 - l) / sigma;
        g.llg = -m / sigma;
    } else if (zero(q - sigma) && zero(l - (sigma - 1.0)) && m < sigma - 1.0 - kEps) {
        g.llg = (sigma - 1.0 - m) / sigma;
    } else if (q > sigma + kEps || (zero(q - sigma) && l > sigma - 1.0 + kEps) ||
               (zero(q - sigma) && zero(l - (sigma - 1.0)) && m > sigma - 1.0 + kEps)) {
        return constant_growth();  // integral at infinity converges, H_n bounded
    } else {
        return std::nullopt;
    }
    return g;
}

}  // namespace orlicz
