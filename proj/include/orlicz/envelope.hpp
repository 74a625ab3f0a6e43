#pragma once

#include <functional>
#include <string>
#include <vector>

namespace orlicz {

// Non-decreasing continuous bound E with |f'(t)| <= kappa E(kappa |t|).
enum class EnvelopeKind { one, power, power_log, power_loglog, log_power, exp, exp_power_log, exp_exp, custom };

class Envelope {
public:
    Envelope();  // E = 1

    double operator()(double t) const;
    EnvelopeKind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    std::string label() const;

    static Envelope one();
    static Envelope power(double r);                          // t^r
    static Envelope power_log(double r, double gamma);        // t^r log^gamma(1 + t)
    static Envelope power_loglog(double r, double gamma);     // t^r (log log(e + t))^gamma
    static Envelope log_power(double r);                      // log^r(1 + t)
    static Envelope exp(double a);                            // exp(t^a)
    static Envelope exp_power_log(double a, double b);        // exp(t^a log^b(1 + t))
    static Envelope exp_exp(double a);                        // exp(exp(t^a))
    static Envelope custom(std::function<double(double)> e, std::string label = "custom");

private:
    EnvelopeKind kind_;
    std::vector<double> params_;
    std::function<double(double)> e_;
    std::string label_;
};

// Non-decreasing and not identically zero on a log grid over [1e-6, 1e6].
bool is_valid_envelope(const Envelope& E);

}  // namespace orlicz
