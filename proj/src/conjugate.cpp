#include "orlicz/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kKnots = 1024;
constexpr double kKnotLo = 1e-40;
constexpr double kKnotHi = 1e40;

QuadOptions fine() {
    QuadOptions q;
    q.rel_tol = 1e-13;
    return q;
}

Classification from_bool(bool conv) { return conv ? Classification::converges : Classification::diverges; }

// Local slopes of log g between consecutive decades 10^e, e in exps.
Classification fit_tail(const std::function<double(double)>& g, bool at_zero) {
    std::vector<double> slopes;
    const int start = at_zero ? -11 : 11;
    for (int k = 0; k < 4; ++k) {
        const int e = at_zero ? start - k : start + k;
        const double t1 = std::pow(10.0, e);
        const double t2 = at_zero ? t1 / 10.0 : t1 * 10.0;
        const double g1 = g(t1), g2 = g(t2);
        if (at_zero && std::isinf(g2)) return Classification::diverges;
        if (!at_zero && g2 == 0.0) return Classification::converges;
        if (!(g1 > 0.0) || !(g2 > 0.0) || !std::isfinite(g1) || !std::isfinite(g2)) {
            return Classification::indeterminate;
        }
        slopes.push_back(std::log(g2 / g1) / std::log(t2 / t1));
    }
    bool all_above = true, all_below = true;
    for (std::size_t i = slopes.size() - 3; i < slopes.size(); ++i) {
        all_above = all_above && slopes[i] > -1.0 + 1e-3;
        all_below = all_below && slopes[i] < -1.0 - 1e-3;
    }
    if (at_zero) {
        if (all_above) return Classification::converges;
        if (all_below) return Classification::diverges;
    } else {
        if (all_above) return Classification::diverges;
        if (all_below) return Classification::converges;
    }
    return Classification::indeterminate;
}

std::function<double(double)> make_integrand(const YoungFunction& Y, double sigma) {
    const double expo = 1.0 / (sigma - 1.0);
    return [Y, expo](double t) {
        if (t == 0.0) return 0.0;
        const double la = Y.log_value(t);
        if (std::isinf(la)) return la > 0.0 ? 0.0 : kInf;
        return std::exp(expo * (std::log(t) - la));
    };
}

void check_sigma(double sigma) {
    if (!(sigma > 1.0) || !std::isfinite(sigma)) throw std::domain_error("Sobolev exponent must exceed 1");
}

}  // namespace

const char* to_string(Classification c) {
    switch (c) {
        case Classification::converges:
            return "converges";
        case Classification::diverges:
            return "diverges";
        default:
            return "indeterminate";
    }
}

Classification classify_integral_zero(const YoungFunction& Y, double sigma) {
    check_sigma(sigma);
    const Asymptotics& a = Y.at_zero();
    constexpr double eps = 1e-12;
    switch (a.cls) {
        case GrowthClass::power:
            if (a.power < sigma - eps) return Classification::converges;
            if (a.power > sigma + eps) return Classification::diverges;
            // A ~ t^sigma |log t|^l near 0.
            return from_bool(a.log_order / (sigma - 1.0) > 1.0 + eps);
        case GrowthClass::flat:
        case GrowthClass::degenerate:
            return Classification::diverges;
        case GrowthClass::unknown:
            return fit_tail(make_integrand(Y, sigma), true);
        default:
            return Classification::indeterminate;
    }
}

Classification classify_integral_inf(const YoungFunction& Y, double sigma) {
    check_sigma(sigma);
    const Asymptotics& a = Y.at_infinity();
    constexpr double eps = 1e-12;
    switch (a.cls) {
        case GrowthClass::power: {
            if (a.power > sigma + eps) return Classification::converges;
            if (a.power < sigma - eps) return Classification::diverges;
            const double l = a.log_order / (sigma - 1.0);
            if (l > 1.0 + eps) return Classification::converges;
            if (l < 1.0 - eps) return Classification::diverges;
            return from_bool(a.loglog_order / (sigma - 1.0) > 1.0 + eps);
        }
        case GrowthClass::exponential:
        case GrowthClass::jump:
            return Classification::converges;
        case GrowthClass::unknown:
            return fit_tail(make_integrand(Y, sigma), false);
        default:
            return Classification::indeterminate;
    }
}

SobolevIntegral::SobolevIntegral(YoungFunction Y, double sigma, Classification at_infinity)
    : Y_(std::move(Y)), sigma_(sigma), expo_(1.0 / (sigma - 1.0)), outer_((sigma - 1.0) / sigma) {
    check_sigma(sigma);
    const auto g = [this](double t) { return integrand(t); };
    knots_ = log_grid(kKnotLo, kKnotHi, kKnots);
    cumulative_.resize(kKnots);
    ImproperOptions io;
    io.rel_tol = 1e-13;
    const ImproperResult head = integrate_toward_lower(g, 0.0, knots_[0], io);
    if (head.status == TailStatus::diverged) {
        throw PreconditionError("H_n: integrand diverges at 0; modify the function near zero first");
    }
    cumulative_[0] = head.value;
    for (std::size_t j = 1; j < kKnots; ++j) {
        cumulative_[j] = cumulative_[j - 1] + integrate_log(g, knots_[j - 1], knots_[j], fine()).value;
    }
    if (at_infinity == Classification::diverges) {
        limit_I_ = kInf;
    } else {
        const ImproperResult tail = integrate_to_infinity(g, kKnotHi, io);
        limit_I_ = tail.status == TailStatus::diverged ? kInf : cumulative_.back() + tail.value;
    }
    limit_h_ = std::isinf(limit_I_) ? kInf : std::pow(limit_I_, outer_);
}

double SobolevIntegral::integrand(double t) const {
    if (t == 0.0) return 0.0;
    const double la = Y_.log_value(t);
    if (std::isinf(la)) return la > 0.0 ? 0.0 : kInf;
    if (std::isnan(la)) {
        const double v = Y_(t);
        if (std::isinf(v)) return 0.0;
        return std::pow(t / v, expo_);
    }
    return std::exp(expo_ * (std::log(t) - la));
}

double SobolevIntegral::integral(double s) const {
    if (s <= 0.0) return 0.0;
    const auto g = [this](double t) { return integrand(t); };
    if (s < knots_.front()) {
        ImproperOptions io;
        io.rel_tol = 1e-13;
        return integrate_toward_lower(g, 0.0, s, io).value;
    }
    if (s >= knots_.back()) {
        if (std::isinf(s)) return limit_I_;
        return cumulative_.back() + integrate_log(g, knots_.back(), s, fine()).value;
    }
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
    const std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
    return cumulative_[j] + integrate_log(g, knots_[j], s, fine()).value;
}

double SobolevIntegral::operator()(double s) const {
    if (std::isnan(s) || s < 0.0) throw std::domain_error("H_n: argument must be nonnegative");
    if (std::isinf(s)) return limit_h_;
    return std::pow(integral(s), outer_);
}

double SobolevIntegral::solve(double lo, double hi, double I_lo, double target) const {
    // Safeguarded Newton on F(s) = I(lo) + int_lo^s g - target, keeping F(lo) < 0 <= F(hi).
    const auto g = [this](double t) { return integrand(t); };
    const double base = lo;
    auto F = [&](double s) { return I_lo + integrate_log(g, base, s, fine()).value - target; };
    double a = lo, b = hi;
    double s = std::sqrt(lo) * std::sqrt(hi);  // lo * hi may underflow
    for (int it = 0; it < 200; ++it) {
        const double f = F(s);
        if (f < 0.0) {
            a = s;
        } else {
            b = s;
        }
        if (std::abs(f) <= 1e-15 * target || (b - a) <= 1e-15 * b) break;
        const double d = integrand(s);
        double next = (d > 0.0 && std::isfinite(d)) ? s - f / d : std::numeric_limits<double>::quiet_NaN();
        if (!(next > a && next < b)) next = (b / a > 4.0) ? std::sqrt(a) * std::sqrt(b) : 0.5 * (a + b);
        s = next;
    }
    return b > s ? s : b;
}

double SobolevIntegral::inverse(double y) const {
    if (std::isnan(y) || y < 0.0) throw std::domain_error("H_n inverse: argument must be nonnegative");
    if (y == 0.0) return 0.0;
    if (y > limit_h_) return kInf;
    const double target = std::pow(y, 1.0 / outer_);
    if (target > limit_I_) return kInf;
    if (target <= cumulative_.front()) {
        double hi = knots_.front(), lo = hi;
        double Ilo = cumulative_.front();
        while (Ilo >= target && lo > 1e-300) {
            lo *= 1e-4;
            Ilo = integral(lo);
        }
        return solve(lo, hi, Ilo, target);
    }
    if (target <= cumulative_.back()) {
        const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), target);
        const std::size_t j = static_cast<std::size_t>(it - cumulative_.begin());
        return solve(knots_[j - 1], knots_[j], cumulative_[j - 1], target);
    }
    double lo = knots_.back(), hi = lo;
    double Ilo = cumulative_.back();
    for (;;) {
        const double next = hi * 1e10;
        if (next > 1e300) break;
        const double In = integral(next);
        if (In >= target) {
            hi = next;
            break;
        }
        lo = next;
        Ilo = In;
        hi = next;
    }
    if (integral(hi) < target) return kInf;  // beyond the double range
    return solve(lo, hi, Ilo, target);
}

double H_n(const YoungFunction& Y, int n, double s) {
    if (n < 2) throw std::domain_error("H_n: n must be >= 2");
    if (classify_integral_zero(Y, n) != Classification::converges) {
        throw PreconditionError("H_n: condition at zero fails; apply modify_near_zero first");
    }
    const SobolevIntegral H(Y, n, classify_integral_inf(Y, n));
    return H(s);
}

namespace {

Asymptotics conjugate_zero(const Asymptotics& a, double sigma) {
    if (a.cls == GrowthClass::power && a.power < sigma) {
        const double k = sigma / (sigma - a.power);
        return {GrowthClass::power, a.power * k, a.log_order * k, a.loglog_order * k, 1.0};
    }
    return {};
}

Asymptotics conjugate_inf(const Asymptotics& a, double sigma, Classification inf, double H_limit) {
    if (inf == Classification::converges && std::isfinite(H_limit)) return {GrowthClass::jump, 0, 0, 0, 1.0};
    if (a.cls != GrowthClass::power) return {};
    constexpr double eps = 1e-12;
    if (a.power < sigma - eps) {
        const double k = sigma / (sigma - a.power);
        return {GrowthClass::power, a.power * k, a.log_order * k, a.loglog_order * k, 1.0};
    }
    if (std::abs(a.power - sigma) <= eps && a.log_order < sigma - 1.0 - eps && a.loglog_order == 0.0) {
        return {GrowthClass::exponential, sigma / (sigma - 1.0 - a.log_order), 0, 0, 1.0};
    }
    return {};
}

}  // namespace

ConjugateResult sobolev_conjugate_sigma(const YoungFunction& Y, double sigma, int n) {
    check_sigma(sigma);
    if (sigma < n) throw std::domain_error("sobolev_conjugate_sigma: sigma must be >= n");
    ConjugateResult r;
    r.sigma = sigma;
    r.classification_zero = classify_integral_zero(Y, sigma);
    r.classification_inf = classify_integral_inf(Y, sigma);
    if (r.classification_zero == Classification::indeterminate || r.classification_inf == Classification::indeterminate) {
        throw IndeterminateError("sobolev_conjugate: integral classification is indeterminate for " + Y.label());
    }
    r.base = Y;
    if (r.classification_zero == Classification::diverges) {
        r.base = modify_near_zero(Y, static_cast<int>(std::ceil(sigma)));
        r.modified = true;
    }
    auto H = std::make_shared<const SobolevIntegral>(r.base, sigma, r.classification_inf);
    r.Hn = H;
    r.H_limit = ExtReal(H->limit());
    const YoungFunction base = r.base;
    CustomSpec spec;
    spec.eval = [H, base](double t) {
        const double s = H->inverse(t);
        if (std::isinf(s)) return kInf;
        return base(s);
    };
    spec.inverse = [H, base](double y) {
        const double s = base.inverse(y);
        return (*H)(s);
    };
    spec.at_zero = conjugate_zero(r.base.at_zero(), sigma);
    spec.at_infinity = conjugate_inf(r.base.at_infinity(), sigma, r.classification_inf, H->limit());
    if (std::isfinite(H->limit())) spec.finite_jump = H->limit();
    spec.label = "conj(" + Y.label() + ")";
    r.An = custom(std::move(spec));
    return r;
}

ConjugateResult sobolev_conjugate(const YoungFunction& Y, int n) {
    if (n < 2) throw std::domain_error("sobolev_conjugate: n must be >= 2");
    return sobolev_conjugate_sigma(Y, static_cast<double>(n), n);
}

YoungFunction hat_An(const YoungFunction& Y, int n) {
    const ConjugateResult r = sobolev_conjugate(Y, n);
    for (int j = 0; j <= 60; ++j) {
        const double t = std::ldexp(1.0, j);
        const double yt = Y(t), at = r.An(t);
        if (!std::isfinite(yt) || !std::isfinite(at)) break;
        const double rs = right_slope(r.An, t);
        if (std::isfinite(rs) && left_slope(Y, t) <= rs * (1.0 + 1e-9)) return glued(Y, r.An, t);
    }
    throw std::domain_error("hat_An: no compatible dyadic glue point");
}

double fitted_exponent(const YoungFunction& Y, double lo, double hi, std::size_t points) {
    const auto t = log_grid(lo, hi, points);
    std::vector<double> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = Y(t[i]);
    return loglog_slope(t, v);
}

}  // namespace orlicz
