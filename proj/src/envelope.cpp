#include "orlicz/envelope.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::domain_error(std::string("envelope: ") + what + " must be positive");
}

std::string fmt_params(const std::vector<double>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", p[i]);
        s += (i ? "," : "") + std::string(buf);
    }
    return s;
}

}  // namespace

Envelope::Envelope() : kind_(EnvelopeKind::one), e_([](double) { return 1.0; }), label_("one") {}

double Envelope::operator()(double t) const {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("envelope: argument must be nonnegative");
    return e_(t);
}

std::string Envelope::label() const {
    if (kind_ == EnvelopeKind::one || kind_ == EnvelopeKind::custom) return label_;
    return label_ + ":" + fmt_params(params_);
}

Envelope Envelope::one() { return Envelope(); }

Envelope Envelope::power(double r) {
    require_positive(r, "r");
    Envelope E;
    E.kind_ = EnvelopeKind::power;
    E.params_ = {r};
    E.label_ = "power";
    E.e_ = [r](double t) { return std::pow(t, r); };
    return E;
}

Envelope Envelope::power_log(double r, double gamma) {
    require_positive(r, "r");
    if (gamma < 0.0) throw std::domain_error("envelope: gamma must be nonnegative");
    Envelope E;
    E.kind_ = EnvelopeKind::power_log;
    E.params_ = {r, gamma};
    E.label_ = "powerlog";
    E.e_ = [r, gamma](double t) { return std::pow(t, r) * std::pow(std::log1p(t), gamma); };
    return E;
}

Envelope Envelope::power_loglog(double r, double gamma) {
    require_positive(r, "r");
    if (gamma < 0.0) throw std::domain_error("envelope: gamma must be nonnegative");
    Envelope E;
    E.kind_ = EnvelopeKind::power_loglog;
    E.params_ = {r, gamma};
    E.label_ = "powerloglog";
    E.e_ = [r, gamma](double t) {
        const double ll = std::log1p(std::log1p(t / std::exp(1.0)));  // log log(e + t)
        return std::pow(t, r) * std::pow(ll, gamma);
    };
    return E;
}

Envelope Envelope::log_power(double r) {
    require_positive(r, "r");
    Envelope E;
    E.kind_ = EnvelopeKind::log_power;
    E.params_ = {r};
    E.label_ = "logpower";
    E.e_ = [r](double t) { return std::pow(std::log1p(t), r); };
    return E;
}

Envelope Envelope::exp(double a) {
    require_positive(a, "a");
    Envelope E;
    E.kind_ = EnvelopeKind::exp;
    E.params_ = {a};
    E.label_ = "exp";
    E.e_ = [a](double t) { return std::exp(std::pow(t, a)); };
    return E;
}

Envelope Envelope::exp_power_log(double a, double b) {
    require_positive(a, "a");
    if (b < 0.0) throw std::domain_error("envelope: b must be nonnegative");
    Envelope E;
    E.kind_ = EnvelopeKind::exp_power_log;
    E.params_ = {a, b};
    E.label_ = "exppowerlog";
    E.e_ = [a, b](double t) { return std::exp(std::pow(t, a) * std::pow(std::log1p(t), b)); };
    return E;
}

Envelope Envelope::exp_exp(double a) {
    require_positive(a, "a");
    Envelope E;
    E.kind_ = EnvelopeKind::exp_exp;
    E.params_ = {a};
    E.label_ = "expexp";
    E.e_ = [a](double t) { return std::exp(std::exp(std::pow(t, a))); };
    return E;
}

Envelope Envelope::custom(std::function<double(double)> e, std::string label) {
    if (!e) throw std::invalid_argument("envelope: empty evaluator");
    Envelope E;
    E.kind_ = EnvelopeKind::custom;
    E.label_ = std::move(label);
    E.e_ = std::move(e);
    return E;
}

bool is_valid_envelope(const Envelope& E) {
    double prev = E(0.0);
    if (!(prev >= 0.0)) return false;
    bool positive = prev > 0.0;
    for (double t : log_grid(1e-6, 1e6, 241)) {
        const double v = E(t);
        if (!(v >= prev)) return false;
        positive = positive || v > 0.0;
        prev = v;
    }
    return positive;
}

}  // namespace orlicz
