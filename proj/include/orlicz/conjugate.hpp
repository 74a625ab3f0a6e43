#pragma once

#include <memory>

#include "orlicz/ext_real.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class Classification { converges, diverges, indeterminate };

const char* to_string(Classification c);

// H_sigma(s) = (int_0^s (t/A(t))^{1/(sigma-1)} dt)^{(sigma-1)/sigma}, tabulated at
// construction on 1024 log-spaced knots.
class SobolevIntegral {
public:
    SobolevIntegral(YoungFunction Y, double sigma, Classification at_infinity);

    double operator()(double s) const;
    // Generalized left-continuous inverse; +inf above the limit.
    double inverse(double y) const;
    double limit() const { return limit_h_; }
    double integrand(double t) const;
    double sigma() const { return sigma_; }
    const YoungFunction& base() const { return Y_; }

private:
    double integral(double s) const;  // I(s), before the outer power
    double solve(double lo, double hi, double I_lo, double target) const;

    YoungFunction Y_;
    double sigma_;
    double expo_;
    double outer_;
    std::vector<double> knots_;
    std::vector<double> cumulative_;
    double limit_I_;
    double limit_h_;
};

struct ConjugateResult {
    std::shared_ptr<const SobolevIntegral> Hn;
    YoungFunction An;
    ExtReal H_limit;
    Classification classification_zero = Classification::indeterminate;
    Classification classification_inf = Classification::indeterminate;
    YoungFunction base;     // A itself, or A modified near zero
    bool modified = false;  // true when modify_near_zero was applied
    double sigma = 0.0;
};

Classification classify_integral_zero(const YoungFunction& Y, double sigma);
Classification classify_integral_inf(const YoungFunction& Y, double sigma);

// H_n of an admissible Y (classify_integral_zero must be Converges).
double H_n(const YoungFunction& Y, int n, double s);

ConjugateResult sobolev_conjugate(const YoungFunction& Y, int n);
// sigma >= n is required; n is the ambient dimension.
ConjugateResult sobolev_conjugate_sigma(const YoungFunction& Y, double sigma, int n = 2);
YoungFunction hat_An(const YoungFunction& Y, int n);

// Least-squares growth exponent of Y over a log grid on [lo, hi].
double fitted_exponent(const YoungFunction& Y, double lo, double hi, std::size_t points = 41);

}  // namespace orlicz
