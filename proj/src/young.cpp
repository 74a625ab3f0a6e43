#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = 2.718281828459045;

struct PowerK {
    double p, k;
};
struct PowerLogK {
    double p, alpha, c;
};
struct PowerLogLogK {
    double p, alpha, c, log_c_minus_1;
};
struct ExpK {
    double alpha, shift, base;  // base = exp(shift^alpha)
};
// (t+s)^a - s^a without cancellation for small t.
double exp_increment(const ExpK& k, double t) {
    if (k.shift == 0.0) return std::pow(t, k.alpha);
    return std::pow(k.shift, k.alpha) * std::expm1(k.alpha * std::log1p(t / k.shift));
}
struct PowerExpK {
    double p, alpha;
};
struct ExpNegInvK {
    double alpha, t_g, f_g, s_g;
};
struct LinearK {
    double k;
};
struct PiecewiseK {
    std::vector<Branch> branches;
    std::vector<double> values;  // A at each breakpoint
};
struct GluedK {
    YoungFunction zero, inf;
    double t_star, val_star, inf_star, shift;
};
struct CustomK {
    CustomSpec spec;
};

std::string fmt_num(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

struct YoungFunction::Impl {
    std::variant<PowerK, PowerLogK, PowerLogLogK, ExpK, PowerExpK, ExpNegInvK, LinearK, PiecewiseK, GluedK, CustomK>
        data;
    Asymptotics zero;
    Asymptotics inf;
    std::optional<double> jump;
};

namespace {

double eval_impl(const YoungFunction::Impl& m, double t);

double piecewise_eval(const PiecewiseK& k, double t) {
    const auto& br = k.branches;
    std::size_t i = 0;
    while (i + 1 < br.size() && br[i + 1].breakpoint < t) ++i;
    if (br[i].infinite) return t > br[i].breakpoint ? kInf : k.values[i];
    return k.values[i] + br[i].slope * (t - br[i].breakpoint);
}

double piecewise_inverse(const PiecewiseK& k, double y) {
    const auto& br = k.branches;
    for (std::size_t i = 0; i < br.size(); ++i) {
        if (k.values[i] > y) return br[i].breakpoint;
        if (br[i].infinite) return br[i].breakpoint;
        const double end = (i + 1 < br.size()) ? k.values[i + 1] : kInf;
        if (br[i].slope > 0.0 && y < end) return br[i].breakpoint + (y - k.values[i]) / br[i].slope;
    }
    return kInf;
}

struct Evaluator {
    double t;
    double operator()(const PowerK& k) const { return t == 0.0 ? 0.0 : k.k * std::pow(t, k.p); }
    double operator()(const PowerLogK& k) const {
        if (t == 0.0) return 0.0;
        const double L = k.c == 1.0 ? std::log1p(t) : std::log(k.c + t);
        return std::pow(t, k.p) * std::pow(L, k.alpha);
    }
    double operator()(const PowerLogLogK& k) const {
        if (t == 0.0) return 0.0;
        const double LL = std::log1p(k.log_c_minus_1 + std::log1p(t / k.c));
        return std::pow(t, k.p) * std::pow(LL, k.alpha);
    }
    double operator()(const ExpK& k) const {
        if (t == 0.0) return 0.0;
        return k.base * std::expm1(exp_increment(k, t));
    }
    double operator()(const PowerExpK& k) const {
        if (t == 0.0) return 0.0;
        return std::pow(t, k.p) * std::exp(std::pow(t, k.alpha));
    }
    double operator()(const ExpNegInvK& k) const {
        if (t == 0.0) return 0.0;
        if (t <= k.t_g) return std::exp(-std::pow(t, -k.alpha));
        return k.f_g + k.s_g * (t - k.t_g);
    }
    double operator()(const LinearK& k) const { return k.k * t; }
    double operator()(const PiecewiseK& k) const { return t == 0.0 ? 0.0 : piecewise_eval(k, t); }
    double operator()(const GluedK& k) const {
        if (t <= k.t_star) return k.zero(t);
        const double v = k.inf(t);
        if (std::isinf(v)) return v;
        return k.shift == 0.0 ? v : v + k.shift;
    }
    double operator()(const CustomK& k) const { return t == 0.0 ? 0.0 : k.spec.eval(t); }
};

double eval_impl(const YoungFunction::Impl& m, double t) { return std::visit(Evaluator{t}, m.data); }

YoungFunction make(YoungFunction::Impl impl) {
    return YoungFunction(std::make_shared<const YoungFunction::Impl>(std::move(impl)));
}

}  // namespace

double monotone_inverse(const std::function<double(double)>& A, double y, double rel_tol, int max_iter) {
    if (std::isnan(y)) throw std::domain_error("inverse: NaN argument");
    if (std::isinf(y)) return kInf;
    double lo = 0.0, hi = 1.0;
    if (A(hi) <= y) {
        lo = hi;
        while (A(hi) <= y) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e300) return kInf;
        }
    } else {
        while (hi > 1e-300 && A(0.5 * hi) > y) hi *= 0.5;
        lo = 0.5 * hi;
        if (A(lo) > y) return 0.0;
    }
    for (int i = 0; i < max_iter && hi - lo > rel_tol * hi; ++i) {
        const double mid = (lo > 0.0 && hi / lo > 4.0) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        if (A(mid) > y) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

namespace {

struct Inverter {
    const YoungFunction& self;
    double y;
    double operator()(const PowerK& k) const { return std::pow(y / k.k, 1.0 / k.p); }
    double operator()(const PowerLogK&) const { return generic(); }
    double operator()(const PowerLogLogK&) const { return generic(); }
    double operator()(const ExpK& k) const {
        const double sa = std::pow(k.shift, k.alpha);
        const double d = std::log1p(y / k.base);
        if (k.shift == 0.0) return std::pow(d, 1.0 / k.alpha);
        return k.shift * std::expm1(std::log1p(d / sa) / k.alpha);
    }
    double operator()(const PowerExpK&) const { return generic(); }
    double operator()(const ExpNegInvK& k) const {
        if (y <= 0.0) return 0.0;
        if (y < k.f_g) return std::pow(-std::log(y), -1.0 / k.alpha);
        return k.t_g + (y - k.f_g) / k.s_g;
    }
    double operator()(const LinearK& k) const { return y / k.k; }
    double operator()(const PiecewiseK& k) const { return piecewise_inverse(k, y); }
    double operator()(const GluedK& k) const {
        if (y < k.val_star) return k.zero.inverse(y);
        return k.inf.inverse(y - k.val_star + k.inf_star);
    }
    double operator()(const CustomK& k) const {
        if (k.spec.inverse) return k.spec.inverse(y);
        return generic();
    }
    double generic() const {
        return monotone_inverse([this](double s) { return self(s); }, y);
    }
};

struct LogEvaluator {
    const YoungFunction& self;
    double t;
    double operator()(const PowerK& k) const { return std::log(k.k) + k.p * std::log(t); }
    double operator()(const PowerLogK& k) const {
        const double L = k.c == 1.0 ? std::log1p(t) : std::log(k.c + t);
        return k.p * std::log(t) + k.alpha * std::log(L);
    }
    double operator()(const PowerLogLogK& k) const {
        const double LL = std::log1p(k.log_c_minus_1 + std::log1p(t / k.c));
        return k.p * std::log(t) + k.alpha * std::log(LL);
    }
    double operator()(const ExpK& k) const {
        const double d = exp_increment(k, t);
        const double lexpm1 = d > 30.0 ? d + std::log1p(-std::exp(-d)) : std::log(std::expm1(d));
        return std::log(k.base) + lexpm1;
    }
    double operator()(const PowerExpK& k) const { return k.p * std::log(t) + std::pow(t, k.alpha); }
    double operator()(const ExpNegInvK& k) const {
        if (t <= k.t_g) return -std::pow(t, -k.alpha);
        return std::log(k.f_g + k.s_g * (t - k.t_g));
    }
    double operator()(const LinearK& k) const { return std::log(k.k * t); }
    double operator()(const PiecewiseK&) const { return std::log(self(t)); }
    double operator()(const GluedK& k) const {
        if (t <= k.t_star) return k.zero.log_value(t);
        if (k.shift == 0.0) return k.inf.log_value(t);
        return std::log(self(t));
    }
    double operator()(const CustomK&) const { return std::log(self(t)); }
};

}  // namespace

YoungFunction::YoungFunction() : YoungFunction(linear(1.0)) {}

YoungFunction::YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

double YoungFunction::operator()(double t) const {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("Young function evaluated at negative argument");
    if (std::isinf(t)) {
        const double v = eval_impl(*impl_, 1e300);
        return v > 0.0 ? kInf : 0.0;
    }
    return eval_impl(*impl_, t);
}

double YoungFunction::log_value(double t) const {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("Young function evaluated at negative argument");
    if (t == 0.0) return -kInf;
    return std::visit(LogEvaluator{*this, t}, impl_->data);
}

double YoungFunction::inverse(double y) const {
    if (std::isnan(y) || y < 0.0) throw std::domain_error("inverse: argument must be nonnegative");
    if (std::isinf(y)) return kInf;
    return std::visit(Inverter{*this, y}, impl_->data);
}

YoungKind YoungFunction::kind() const { return static_cast<YoungKind>(impl_->data.index()); }

bool YoungFunction::parametric() const {
    return kind() != YoungKind::custom && kind() != YoungKind::glued;
}

const Asymptotics& YoungFunction::at_zero() const { return impl_->zero; }
const Asymptotics& YoungFunction::at_infinity() const { return impl_->inf; }
std::optional<double> YoungFunction::finite_jump() const { return impl_->jump; }

std::optional<double> YoungFunction::zero_exponent() const {
    if (impl_->zero.cls == GrowthClass::power) return impl_->zero.power;
    return std::nullopt;
}

std::optional<double> YoungFunction::inf_exponent() const {
    if (impl_->inf.cls == GrowthClass::power) return impl_->inf.power;
    return std::nullopt;
}

FamilyRecord YoungFunction::record() const {
    struct V {
        FamilyRecord operator()(const PowerK& k) const {
            if (k.k == 1.0) return {"power", {k.p}};
            return {"power", {k.p, k.k}};
        }
        FamilyRecord operator()(const PowerLogK& k) const { return {"powerlog", {k.p, k.alpha, k.c}}; }
        FamilyRecord operator()(const PowerLogLogK& k) const { return {"powerloglog", {k.p, k.alpha, k.c}}; }
        FamilyRecord operator()(const ExpK& k) const { return {"exp", {k.alpha, k.shift}}; }
        FamilyRecord operator()(const PowerExpK& k) const { return {"powerexp", {k.p, k.alpha}}; }
        FamilyRecord operator()(const ExpNegInvK& k) const { return {"expneginv", {k.alpha}}; }
        FamilyRecord operator()(const LinearK& k) const {
            if (k.k == 1.0) return {"linear", {}};
            return {"linear", {k.k}};
        }
        FamilyRecord operator()(const PiecewiseK& k) const {
            FamilyRecord r{"piecewise", {}};
            for (const auto& b : k.branches) {
                r.params.push_back(b.breakpoint);
                r.params.push_back(b.infinite ? -1.0 : b.slope);
            }
            return r;
        }
        FamilyRecord operator()(const GluedK&) const { return {"glued", {}}; }
        FamilyRecord operator()(const CustomK&) const { return {"custom", {}}; }
    };
    return std::visit(V{}, impl_->data);
}

std::string YoungFunction::label() const {
    if (const auto* c = std::get_if<CustomK>(&impl_->data)) return c->spec.label;
    if (const auto* g = std::get_if<GluedK>(&impl_->data)) {
        return "glued(" + g->zero.label() + "|" + fmt_num(g->t_star) + "|" + g->inf.label() + ")";
    }
    const FamilyRecord r = record();
    std::string s = r.kind;
    for (std::size_t i = 0; i < r.params.size(); ++i) s += (i == 0 ? ":" : ",") + fmt_num(r.params[i]);
    return s;
}

// ---- factories ----

YoungFunction power(double p, double coeff) {
    if (!(p > 0.0) || !(coeff > 0.0)) throw std::domain_error("power: exponent and coefficient must be positive");
    YoungFunction::Impl m{PowerK{p, coeff}, {GrowthClass::power, p, 0, 0, coeff}, {GrowthClass::power, p, 0, 0, coeff},
                          std::nullopt};
    return make(std::move(m));
}

YoungFunction power_log(double p, double alpha, double c) {
    if (!(p > 0.0) || !(c >= 1.0)) throw std::domain_error("power_log: need p > 0 and c >= 1");
    const double q0 = c == 1.0 ? p + alpha : p;
    if (!(q0 > 0.0)) throw std::domain_error("power_log: function does not vanish at 0");
    const double coeff = c == 1.0 ? 1.0 : std::pow(std::log(c), alpha);
    YoungFunction::Impl m{PowerLogK{p, alpha, c}, {GrowthClass::power, q0, 0, 0, coeff},
                          {GrowthClass::power, p, alpha, 0, 1.0}, std::nullopt};
    return make(std::move(m));
}

YoungFunction power_loglog(double p, double alpha, double c) {
    if (!(p > 0.0) || !(c >= kE - 1e-12)) throw std::domain_error("power_loglog: need p > 0 and c >= e");
    const bool at_e = std::abs(c - kE) < 1e-12;
    const double cm1 = at_e ? 0.0 : std::log(c) - 1.0;
    const double q0 = at_e ? p + alpha : p;
    if (!(q0 > 0.0)) throw std::domain_error("power_loglog: function does not vanish at 0");
    const double coeff = at_e ? std::exp(-alpha) : std::pow(std::log(std::log(c)), alpha);
    YoungFunction::Impl m{PowerLogLogK{p, alpha, at_e ? kE : c, cm1}, {GrowthClass::power, q0, 0, 0, coeff},
                          {GrowthClass::power, p, 0, alpha, 1.0}, std::nullopt};
    return make(std::move(m));
}

YoungFunction exp_young(double alpha, std::optional<double> shift) {
    if (!(alpha > 0.0)) throw std::domain_error("exp_young: alpha must be positive");
    const double s = shift ? *shift : (alpha < 1.0 ? std::pow((1.0 - alpha) / alpha, 1.0 / alpha) : 0.0);
    if (!(s >= 0.0)) throw std::domain_error("exp_young: shift must be nonnegative");
    if (s == 0.0 && alpha < 1.0) throw std::domain_error("exp_young: alpha < 1 needs a positive shift");
    const double base = std::exp(std::pow(s, alpha));
    Asymptotics z = s > 0.0 ? Asymptotics{GrowthClass::power, 1.0, 0, 0, base * alpha * std::pow(s, alpha - 1.0)}
                            : Asymptotics{GrowthClass::power, alpha, 0, 0, 1.0};
    YoungFunction::Impl m{ExpK{alpha, s, base}, z, {GrowthClass::exponential, alpha, 0, 0, 1.0}, std::nullopt};
    return make(std::move(m));
}

YoungFunction power_exp(double p, double alpha) {
    if (!(p >= 1.0) || !(alpha > 0.0)) throw std::domain_error("power_exp: need p >= 1, alpha > 0");
    YoungFunction::Impl m{PowerExpK{p, alpha}, {GrowthClass::power, p, 0, 0, 1.0},
                          {GrowthClass::exponential, alpha, 0, 0, 1.0}, std::nullopt};
    return make(std::move(m));
}

YoungFunction exp_neg_inv(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("exp_neg_inv: alpha must be positive");
    // Glue at the inflection point; the tangent line keeps convexity.
    const double tg = std::pow(alpha / (alpha + 1.0), 1.0 / alpha);
    const double fg = std::exp(-std::pow(tg, -alpha));
    const double sg = alpha * std::pow(tg, -alpha - 1.0) * fg;
    YoungFunction::Impl m{ExpNegInvK{alpha, tg, fg, sg}, {GrowthClass::flat, alpha, 0, 0, 1.0},
                          {GrowthClass::power, 1.0, 0, 0, sg}, std::nullopt};
    return make(std::move(m));
}

YoungFunction linear(double slope) {
    if (!(slope > 0.0)) throw std::domain_error("linear: slope must be positive");
    YoungFunction::Impl m{LinearK{slope}, {GrowthClass::power, 1.0, 0, 0, slope},
                          {GrowthClass::power, 1.0, 0, 0, slope}, std::nullopt};
    return make(std::move(m));
}

YoungFunction piecewise(std::vector<Branch> branches) {
    if (branches.empty() || branches.front().breakpoint != 0.0) {
        throw std::domain_error("piecewise: first branch must start at 0");
    }
    if (branches.front().infinite) throw std::domain_error("piecewise: infinite branch at 0");
    std::vector<double> values(branches.size(), 0.0);
    bool rises = false;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& b = branches[i];
        if (b.infinite && i + 1 != branches.size()) throw std::domain_error("piecewise: infinite branch must be last");
        if (!b.infinite && b.slope < 0.0) throw std::domain_error("piecewise: negative slope");
        if (i > 0) {
            const auto& prev = branches[i - 1];
            if (!(b.breakpoint > prev.breakpoint)) throw std::domain_error("piecewise: breakpoints must increase");
            if (!b.infinite && b.slope < prev.slope) throw std::domain_error("piecewise: slopes must not decrease");
            values[i] = values[i - 1] + prev.slope * (b.breakpoint - prev.breakpoint);
        }
        if (b.infinite || b.slope > 0.0) rises = true;
    }
    if (!rises) throw std::domain_error("piecewise: function is constant");
    Asymptotics z = branches.front().slope > 0.0
                        ? Asymptotics{GrowthClass::power, 1.0, 0, 0, branches.front().slope}
                        : Asymptotics{GrowthClass::degenerate, 0, 0, 0, 0};
    Asymptotics inf = branches.back().infinite ? Asymptotics{GrowthClass::jump, 0, 0, 0, 1.0}
                                               : Asymptotics{GrowthClass::power, 1.0, 0, 0, branches.back().slope};
    std::optional<double> jump;
    if (branches.back().infinite) jump = branches.back().breakpoint;
    YoungFunction::Impl m{PiecewiseK{std::move(branches), std::move(values)}, z, inf, jump};
    return make(std::move(m));
}

YoungFunction glued(YoungFunction near_zero, YoungFunction near_infinity, double t_star) {
    if (!(t_star > 0.0)) throw std::domain_error("glued: t* must be positive");
    const double vz = near_zero(t_star);
    const double vi = near_infinity(t_star);
    if (!std::isfinite(vz) || !std::isfinite(vi)) throw std::domain_error("glued: pieces must be finite at t*");
    std::optional<double> jump;
    if (near_infinity.finite_jump() && *near_infinity.finite_jump() > t_star) jump = near_infinity.finite_jump();
    if (near_zero.finite_jump() && *near_zero.finite_jump() <= t_star) jump = near_zero.finite_jump();
    const Asymptotics z = near_zero.at_zero();
    const Asymptotics i = near_infinity.at_infinity();
    const double shift = vz == vi ? 0.0 : vz - vi;
    YoungFunction::Impl m{GluedK{std::move(near_zero), std::move(near_infinity), t_star, vz, vi, shift}, z, i, jump};
    return make(std::move(m));
}

YoungFunction custom(CustomSpec spec) {
    if (!spec.eval) throw std::invalid_argument("custom: evaluator required");
    Asymptotics z = spec.at_zero, i = spec.at_infinity;
    std::optional<double> jump = spec.finite_jump;
    YoungFunction::Impl m{CustomK{std::move(spec)}, z, i, jump};
    return make(std::move(m));
}

// ---- spec operations ----

ExtReal eval(const YoungFunction& Y, double t) { return ExtReal(Y(t)); }

ExtReal inverse(const YoungFunction& Y, ExtReal t) { return ExtReal(Y.inverse(t.value())); }

std::vector<double> regime_grid(const Regime& r, const GridSpec& g) {
    if (!(r.t0 > 0.0)) throw std::domain_error("regime: t0 must be positive");
    const double span = std::pow(10.0, g.decades);
    switch (r.tag) {
        case Regime::Tag::near_zero:
            return log_grid_per_decade(r.t0 / span, r.t0, g.per_decade);
        case Regime::Tag::near_infinity:
            return log_grid_per_decade(r.t0, r.t0 * span, g.per_decade);
        case Regime::Tag::global:
        default:
            return log_grid_per_decade(1.0 / span, span, g.per_decade);
    }
}

namespace {

double round_up(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) return x;
    const double scale = std::pow(10.0, 8 - std::floor(std::log10(x)));
    return std::ceil(x * scale * (1.0 - 1e-15)) / scale;
}

// Per-decade maxima of values over a log grid.
std::vector<double> decade_maxima(const std::vector<double>& t, const std::vector<double>& v) {
    std::vector<double> out;
    if (t.empty()) return out;
    const double base = std::floor(std::log10(t.front()) + 1e-9);
    int cur = -1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (std::isnan(v[i])) continue;
        const int d = static_cast<int>(std::floor(std::log10(t[i]) - base + 1e-9));
        if (d != cur) {
            out.push_back(v[i]);
            cur = d;
        } else {
            out.back() = std::max(out.back(), v[i]);
        }
    }
    return out;
}

// Strictly growing (by > 1% per decade) over the last three decades.
bool growing_tail(std::vector<double> m, bool high_end) {
    if (!high_end) std::reverse(m.begin(), m.end());
    if (m.size() < 3) return false;
    const std::size_t k = m.size();
    return m[k - 1] > m[k - 2] * 1.01 && m[k - 2] > m[k - 3] * 1.01;
}

bool uses_zero(const Regime& r) { return r.tag != Regime::Tag::near_infinity; }
bool uses_inf(const Regime& r) { return r.tag != Regime::Tag::near_zero; }

std::optional<bool> delta2_side(const Asymptotics& a) {
    switch (a.cls) {
        case GrowthClass::power:
            return true;
        case GrowthClass::unknown:
            return std::nullopt;
        default:
            return false;
    }
}

}  // namespace

Delta2Verdict check_delta2(const YoungFunction& Y, const Regime& r, const GridSpec& g) {
    if (r.tag == Regime::Tag::near_infinity && Y.finite_jump()) {
        throw std::domain_error("check_delta2: function is not finite near infinity");
    }
    const auto grid = regime_grid(r, g);
    // log ratios; +inf marks A(t) = 0 < A(2t) or A(2t) = inf.
    std::vector<double> lr(grid.size(), std::numeric_limits<double>::quiet_NaN());
    bool any_positive = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double a1 = Y(t), a2 = Y(2.0 * t);
        if (std::isinf(a1)) continue;
        if (std::isinf(a2)) {
            lr[i] = kInf;
            continue;
        }
        const double l1 = Y.log_value(t), l2 = Y.log_value(2.0 * t);
        if (std::isinf(l1) && l1 < 0.0) {
            if (a2 > 0.0 || l2 > -kInf) lr[i] = kInf;
            continue;
        }
        any_positive = true;
        lr[i] = l2 - l1;
    }
    auto worst = [&]() {
        std::size_t w = 0;
        double best = -kInf;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!std::isnan(lr[i]) && lr[i] > best) {
                best = lr[i];
                w = i;
            }
        }
        return w;
    };
    auto sup_ratio = [&]() {
        double s = 0.0;
        for (double l : lr) {
            if (!std::isnan(l)) s = std::max(s, std::exp(l));
        }
        return s;
    };

    Delta2Verdict out;
    std::optional<bool> zero_ok, inf_ok;
    bool known = true;
    if (uses_zero(r)) {
        zero_ok = delta2_side(Y.at_zero());
        known = known && zero_ok.has_value();
    }
    if (uses_inf(r)) {
        inf_ok = delta2_side(Y.at_infinity());
        known = known && inf_ok.has_value();
    }
    if (known) {
        out.analytic = true;
        out.holds = zero_ok.value_or(true) && inf_ok.value_or(true);
        if (out.holds) {
            if (Y.kind() == YoungKind::power) {
                out.constant = std::pow(2.0, *Y.zero_exponent());
            } else if (Y.kind() == YoungKind::linear) {
                out.constant = 2.0;
            } else {
                // Points with A(t) = 0 carry no information once the side is power-like.
                double s = 0.0;
                for (double l : lr) {
                    if (!std::isnan(l) && std::isfinite(l)) s = std::max(s, std::exp(l));
                }
                out.constant = round_up(s);
            }
        } else {
            out.witness = grid[worst()];
            out.constant = kInf;
        }
        return out;
    }

    if (!any_positive) throw IndeterminateError("check_delta2: function vanishes on the probed regime");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isnan(lr[i]) && std::isinf(lr[i])) {
            out.holds = false;
            out.witness = grid[i];
            out.constant = kInf;
            return out;
        }
    }
    const auto m = decade_maxima(grid, lr);
    bool grows = false;
    if (uses_inf(r)) grows = grows || growing_tail(m, true);
    if (uses_zero(r)) grows = grows || growing_tail(m, false);
    if (grows) {
        out.holds = false;
        out.witness = grid[worst()];
        out.constant = kInf;
        return out;
    }
    out.holds = true;
    out.constant = round_up(sup_ratio());
    return out;
}

namespace {

std::optional<bool> ends_equivalent(const Asymptotics& a, const Asymptotics& b) {
    if (a.cls == GrowthClass::unknown || b.cls == GrowthClass::unknown) return std::nullopt;
    if (a.cls != b.cls) return false;
    constexpr double eps = 1e-12;
    switch (a.cls) {
        case GrowthClass::power:
            return std::abs(a.power - b.power) <= eps && std::abs(a.log_order - b.log_order) <= eps &&
                   std::abs(a.loglog_order - b.loglog_order) <= eps;
        case GrowthClass::exponential:
        case GrowthClass::flat:
            return std::abs(a.power - b.power) <= eps;
        default:
            return true;
    }
}

}  // namespace

EquivalenceVerdict equivalent(const YoungFunction& Y1, const YoungFunction& Y2, const Regime& r, const GridSpec& g,
                              double c_max) {
    EquivalenceVerdict out;
    const auto grid = regime_grid(r, g);
    std::vector<double> ct(grid.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double a = Y1(t), b = Y2(t);
        if (std::isinf(a) || std::isinf(b)) continue;
        if (a == 0.0 && b == 0.0) continue;
        const double ratio = Y1.inverse(b) / t;
        ct[i] = (ratio > 0.0) ? std::max(ratio, 1.0 / ratio) : kInf;
    }
    auto max_c = [&](std::size_t* where) {
        double m = 1.0;
        std::size_t w = 0;
        for (std::size_t i = 0; i < ct.size(); ++i) {
            if (!std::isnan(ct[i]) && ct[i] > m) {
                m = ct[i];
                w = i;
            }
        }
        if (where) *where = w;
        return m;
    };
    auto snap = [](double c) { return std::abs(c - 1.0) < 1e-9 ? 1.0 : c; };

    std::optional<bool> z, i;
    bool known = true;
    if (uses_zero(r)) {
        z = ends_equivalent(Y1.at_zero(), Y2.at_zero());
        known = known && z.has_value();
    }
    if (uses_inf(r)) {
        i = ends_equivalent(Y1.at_infinity(), Y2.at_infinity());
        known = known && i.has_value();
    }
    if (known) {
        out.analytic = true;
        out.equivalent = z.value_or(true) && i.value_or(true);
        std::size_t w = 0;
        const double c = max_c(&w);
        if (out.equivalent) {
            if (Y1.kind() == YoungKind::power && Y2.kind() == YoungKind::power) {
                const double k1 = Y1.at_zero().coeff, k2 = Y2.at_zero().coeff;
                out.constant = snap(std::pow(std::max(k1 / k2, k2 / k1), 1.0 / *Y1.zero_exponent()));
            } else {
                out.constant = snap(c);
            }
        } else {
            out.witness = grid[w];
            out.constant = kInf;
        }
        return out;
    }

    std::size_t w = 0;
    const double c = max_c(&w);
    bool any = false;
    for (double v : ct) any = any || !std::isnan(v);
    if (!any) throw IndeterminateError("equivalent: no comparable grid points");
    const auto m = decade_maxima(grid, ct);
    bool grows = false;
    if (uses_inf(r)) grows = grows || growing_tail(m, true);
    if (uses_zero(r)) grows = grows || growing_tail(m, false);
    if (grows || std::isinf(c)) {
        out.equivalent = false;
        out.witness = grid[w];
        out.constant = kInf;
        return out;
    }
    if (c > c_max) throw IndeterminateError("equivalent: grid constant exceeds c_max without a growth trend");
    out.equivalent = true;
    out.constant = snap(c);
    return out;
}

bool is_nondegenerate(const YoungFunction& Y) {
    switch (Y.at_zero().cls) {
        case GrowthClass::degenerate:
            return false;
        case GrowthClass::power:
        case GrowthClass::flat:
            return true;
        default:
            return Y(1e-6) > 0.0;
    }
}

double right_slope(const YoungFunction& Y, double t) {
    const double h = 1e-7 * std::max(t, 1e-300);
    return (Y(t + h) - Y(t)) / h;
}

double left_slope(const YoungFunction& Y, double t) {
    const double h = 1e-7 * t;
    return (Y(t) - Y(t - h)) / h;
}

YoungFunction modify_near_zero(const YoungFunction& Y, int n) {
    if (n < 2) throw std::domain_error("modify_near_zero: n must be >= 2");
    auto admissible = [&](double t) {
        const double v = Y(t);
        if (!std::isfinite(v) || !(v > 0.0)) return false;
        const double rs = right_slope(Y, t);
        return std::isfinite(rs) && v / t <= rs * (1.0 + 1e-9) + 1e-300;
    };
    std::optional<double> ts;
    for (int j = 0; j <= 60 && !ts; ++j) {
        if (admissible(std::ldexp(1.0, j))) ts = std::ldexp(1.0, j);
    }
    for (int j = 1; j <= 60 && !ts; ++j) {
        if (admissible(std::ldexp(1.0, -j))) ts = std::ldexp(1.0, -j);
    }
    if (!ts) throw std::domain_error("modify_near_zero: no admissible glue point");
    const double slope = Y(*ts) / *ts;
    return glued(linear(slope), Y, *ts);
}

}  // namespace orlicz
