#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

// Raised when a black-box decision cannot be made either way.
class IndeterminateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an operation's documented precondition is violated.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<double(double)>;

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_depth = 14;
    int max_panels = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (7/15) on a finite interval. Returns +inf if the
// integrand is infinite at a node.
QuadResult integrate(const ScalarFn& f, double a, double b, const QuadOptions& opt = {});

// Same, on a logarithmic axis t = e^u, for 0 < a < b.
QuadResult integrate_log(const ScalarFn& f, double a, double b, const QuadOptions& opt = {});

enum class TailStatus { converged, extrapolated, diverged };

struct ImproperResult {
    double value = 0.0;
    TailStatus status = TailStatus::converged;
};

struct ImproperOptions {
    double rel_tol = 1e-11;
    double block = 4.0;    // block width in the log variable
    double v_max = 690.0;  // log-range cap
};

// Integral over (a, b] with a possible singularity at a (x = a + (b-a)e^{-v}).
ImproperResult integrate_toward_lower(const ScalarFn& f, double a, double b, const ImproperOptions& opt = {});
// Integral over [a, b) with a possible singularity at b.
ImproperResult integrate_toward_upper(const ScalarFn& f, double a, double b, const ImproperOptions& opt = {});
// Integral over [a, inf) for a > 0 (t = a e^{v}).
ImproperResult integrate_to_infinity(const ScalarFn& f, double a, const ImproperOptions& opt = {});

// count points geometrically spaced on [lo, hi], both ends included.
std::vector<double> log_grid(double lo, double hi, std::size_t count);
// per_decade points per decade on [lo, hi], both ends included.
std::vector<double> log_grid_per_decade(double lo, double hi, std::size_t per_decade);

// m-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(std::size_t m);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Fritsch-Carlson monotone cubic interpolation of (log x, log y) data.
class LogLogTable {
public:
    LogLogTable() = default;
    LogLogTable(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    // Inverse of a strictly increasing table.
    double inverse(double y) const;
    double x_min() const;
    double x_max() const;
    bool empty() const { return lx_.empty(); }
    double end_slope_low() const;
    double end_slope_high() const;

private:
    double eval_log(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& ds,
                    double lx) const;
    std::vector<double> lx_, ly_, d_, di_;
};

}  // namespace orlicz
