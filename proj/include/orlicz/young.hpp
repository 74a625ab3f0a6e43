#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/ext_real.hpp"

namespace orlicz {

// Asymptotic shape of A near 0 or near infinity.
//   power:       A ~ coeff * t^power * log^log_order * loglog^loglog_order
//   exponential: A ~ exp(t^power) up to power-type factors (infinity only)
//   flat:        A vanishes faster than every power at 0 (e.g. exp(-t^-a))
//   degenerate:  A = 0 on a neighbourhood of 0
//   jump:        A = +inf beyond a finite point (infinity only)
enum class GrowthClass { power, exponential, flat, degenerate, jump, unknown };

struct Asymptotics {
    GrowthClass cls = GrowthClass::unknown;
    double power = 0.0;
    double log_order = 0.0;
    double loglog_order = 0.0;
    double coeff = 1.0;
};

struct FamilyRecord {
    std::string kind;
    std::vector<double> params;
};

enum class YoungKind { power, power_log, power_loglog, exp, power_exp, exp_neg_inv, linear, piecewise, glued, custom };

// A Piecewise branch starting at `breakpoint`: affine with the given slope,
// or +inf on (breakpoint, inf) when `infinite` is set.
struct Branch {
    double breakpoint = 0.0;
    double slope = 0.0;
    bool infinite = false;
};

struct CustomSpec {
    std::function<double(double)> eval;
    std::function<double(double)> inverse;  // optional closed form
    Asymptotics at_zero;
    Asymptotics at_infinity;
    std::optional<double> finite_jump;
    std::string label = "custom";
};

class YoungFunction {
public:
    YoungFunction();  // Linear

    // A(t); may be +inf. Throws std::domain_error for t < 0.
    double operator()(double t) const;
    // log A(t) without intermediate under/overflow where the kind allows it.
    double log_value(double t) const;
    // Generalized right-continuous inverse inf{s >= 0 : A(s) > y}.
    double inverse(double y) const;

    YoungKind kind() const;
    bool parametric() const;
    const Asymptotics& at_zero() const;
    const Asymptotics& at_infinity() const;
    std::optional<double> finite_jump() const;
    std::optional<double> zero_exponent() const;
    std::optional<double> inf_exponent() const;
    FamilyRecord record() const;
    std::string label() const;

    struct Impl;
    explicit YoungFunction(std::shared_ptr<const Impl> impl);
    const Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

// Factories for the parametric tier.
YoungFunction power(double p, double coeff = 1.0);  // coeff * t^p; Young iff p >= 1
YoungFunction power_log(double p, double alpha, double c = 1.0);        // t^p log^alpha(c + t)
YoungFunction power_loglog(double p, double alpha, double c = 2.718281828459045);  // t^p (log log(c + t))^alpha
YoungFunction exp_young(double alpha, std::optional<double> shift = std::nullopt);  // exp((t+s)^a) - exp(s^a)
YoungFunction power_exp(double p, double alpha);  // t^p exp(t^alpha)
YoungFunction exp_neg_inv(double alpha);           // exp(-t^-alpha) near 0, tangent line tail
YoungFunction linear(double slope = 1.0);
YoungFunction piecewise(std::vector<Branch> branches);
// near_zero on [0, t*]; near_infinity shifted to stay continuous on (t*, inf).
YoungFunction glued(YoungFunction near_zero, YoungFunction near_infinity, double t_star);
YoungFunction custom(CustomSpec spec);

// Spec-level operations.
ExtReal eval(const YoungFunction& Y, double t);
ExtReal inverse(const YoungFunction& Y, ExtReal t);

struct Regime {
    enum class Tag { global, near_zero, near_infinity };
    Tag tag = Tag::global;
    double t0 = 1.0;

    static Regime global() { return {Tag::global, 1.0}; }
    static Regime near_zero(double t0 = 1.0) { return {Tag::near_zero, t0}; }
    static Regime near_infinity(double t0 = 1.0) { return {Tag::near_infinity, t0}; }
};

struct GridSpec {
    std::size_t per_decade = 256;
    double decades = 6.0;  // span on each side covered by the regime grid
};

std::vector<double> regime_grid(const Regime& r, const GridSpec& g = {});

struct Delta2Verdict {
    bool holds = false;
    double constant = 0.0;           // grid supremum of A(2t)/A(t), rounded up
    std::optional<double> witness;   // t where the ratio is worst when failing
    bool analytic = false;
};

struct EquivalenceVerdict {
    bool equivalent = false;
    double constant = 0.0;
    std::optional<double> witness;
    bool analytic = false;
};

Delta2Verdict check_delta2(const YoungFunction& Y, const Regime& r, const GridSpec& g = {});
EquivalenceVerdict equivalent(const YoungFunction& Y1, const YoungFunction& Y2, const Regime& r,
                              const GridSpec& g = {}, double c_max = 1e6);
bool is_nondegenerate(const YoungFunction& Y);
YoungFunction modify_near_zero(const YoungFunction& Y, int n);

// One-sided difference quotients, used for glue compatibility.
double right_slope(const YoungFunction& Y, double t);
double left_slope(const YoungFunction& Y, double t);

// Generic monotone bisection for inf{s : A(s) > y}.
double monotone_inverse(const std::function<double(double)>& A, double y, double rel_tol = 1e-12,
                        int max_iter = 200);

}  // namespace orlicz
