#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orlicz/conjugate.hpp"
#include "orlicz/envelope.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using Vec = std::vector<double>;

// One term A(|M xi|_2) of a linear-image function; M is given row by row.
struct LinearTerm {
    std::vector<Vec> rows;
    YoungFunction A;
};

class NDimYoungFunction {
public:
    enum class Form { isotropic, orthotropic, linear_image, black_box };

    static NDimYoungFunction isotropic(YoungFunction A, int n);
    static NDimYoungFunction orthotropic(std::vector<YoungFunction> A);
    static NDimYoungFunction linear_image(int n, std::vector<LinearTerm> terms);
    static NDimYoungFunction black_box(int n, std::function<double(const Vec&)> phi, std::string label = "blackbox");

    double operator()(const Vec& xi) const;
    int dim() const { return n_; }
    Form form() const { return form_; }
    // Isotropic: {A}; orthotropic: A_1..A_n; otherwise empty.
    const std::vector<YoungFunction>& components() const { return components_; }
    const std::string& label() const { return label_; }

private:
    NDimYoungFunction() = default;
    int n_ = 0;
    Form form_ = Form::black_box;
    std::vector<YoungFunction> components_;
    std::vector<LinearTerm> terms_;
    std::function<double(const Vec&)> phi_;
    std::string label_;
};

// n / sum(1/p_i).
double bar_p(const std::vector<double>& p);

// A-bar with inverse equal to the geometric mean of the A_i inverses.
YoungFunction orthotropic_bar(const std::vector<YoungFunction>& A);

struct VolumeOptions {
    Execution exec = Execution::parallel;
    double rel_tol = 1e-7;
    std::size_t max_level = 14;  // up to 2^max_level directions in 2-D
};

// |{Phi <= t}| by quadrature of the radial function over directions (n = 2, 3).
double sublevel_volume(const NDimYoungFunction& Phi, double t, const VolumeOptions& opt = {});

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Seeded Monte Carlo estimate of the same volume; independent of the thread count.
MonteCarloEstimate sublevel_volume_mc(const NDimYoungFunction& Phi, double t, std::size_t samples = 1000000,
                                      std::uint64_t seed = 12345, Execution exec = Execution::parallel);

double unit_ball_volume(int n);

// Phi_circ^{-1}(t). Isotropic and orthotropic forms are analytic; others use the volume.
double phi_circ(const NDimYoungFunction& Phi, double t);
// (V(t) / omega_n)^{1/n} from the sublevel volume, for any form.
double phi_circ_by_volume(const NDimYoungFunction& Phi, double t, const VolumeOptions& opt = {});

// Phi_circ as a one-dimensional Young function. Volume-based forms are tabulated
// on t in [1e-30, 1e60] and extrapolated by the end slopes.
YoungFunction phi_circ_function(const NDimYoungFunction& Phi, const VolumeOptions& opt = {});

ConjugateResult phi_n(const NDimYoungFunction& Phi, int n);

struct ThetaOptions {
    double residual_tol = 1e-8;
    int max_doublings = 120;
};

// Root of Phi_n(t) = Phi(xi / E(t)). The conjugate is built once at construction.
class ThetaSolver {
public:
    ThetaSolver(NDimYoungFunction Phi, Envelope E, int n, ThetaOptions opt = {});

    double theta(const Vec& xi) const;
    double residual(const Vec& xi, double theta) const;
    const ConjugateResult& conjugate() const { return conj_; }
    double rhs(const Vec& xi, double t) const;  // Phi(xi / E(t))

private:
    NDimYoungFunction Phi_;
    Envelope E_;
    ConjugateResult conj_;
    ThetaOptions opt_;
};

double solve_theta(const NDimYoungFunction& Phi, const Envelope& E, int n, const Vec& xi);

}  // namespace orlicz
