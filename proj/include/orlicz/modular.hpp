#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orlicz/aniso.hpp"
#include "orlicz/ext_real.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using Point = std::array<double, 3>;

// A face {x_axis = lower[axis]} or {x_axis = upper[axis]} near which the
// integrand may blow up.
struct Face {
    int axis = 0;
    bool upper = false;
};

struct BoxDomain {
    int n = 1;
    Point lower{0.0, 0.0, 0.0};
    Point upper{1.0, 1.0, 1.0};
    std::vector<Face> singular_faces;

    static BoxDomain unit(int n, std::vector<Face> faces = {});
    // Throws std::invalid_argument on a malformed box, PreconditionError on an unbounded one.
    void validate() const;
    double measure() const;
    bool singular(int axis, bool upper_side) const;
};

struct TestFunction {
    std::function<double(const Point&)> value;
    std::function<Point(const Point&)> gradient;
    std::string label;
};

double norm(const Point& p, int n);

struct GradientCheck {
    bool consistent = true;
    double worst = 0.0;  // largest |fd - g| / (1 + |g|)
};

// Central differences at random interior points kept 10% away from singular faces.
GradientCheck check_gradient(const TestFunction& u, const BoxDomain& box, std::size_t points = 32,
                             double rel_tol = 1e-4, std::uint64_t seed = 2024);

struct ModularOptions {
    double rel_tol = 1e-10;
};

// int_box f over the box; +inf when a singular-face integral diverges.
// Throws IndeterminateError when a regular panel fails to converge.
ExtReal integrate_box(const std::function<double(const Point&)>& f, const BoxDomain& box,
                      const ModularOptions& opt = {});

// int A(|u| / lambda).
ExtReal modular_integral(const TestFunction& u, const YoungFunction& Y, double lambda, const BoxDomain& box,
                         const ModularOptions& opt = {});
// int A(|grad u| / lambda).
ExtReal modular_gradient(const TestFunction& u, const YoungFunction& Y, double lambda, const BoxDomain& box,
                         const ModularOptions& opt = {});
// int Phi(grad u / lambda).
ExtReal modular_gradient(const TestFunction& u, const NDimYoungFunction& Phi, double lambda, const BoxDomain& box,
                         const ModularOptions& opt = {});

using ModularFn = std::function<ExtReal(double)>;

// inf{lambda > 0 : M(lambda) <= 1} for a non-increasing modular M.
ExtReal luxemburg_norm(const ModularFn& M);
ExtReal luxemburg_norm(const TestFunction& u, const YoungFunction& Y, const BoxDomain& box);

struct W1AQuantities {
    ExtReal norm_u;
    ExtReal norm_grad;
    ModularFn modular_u;
    ModularFn modular_grad;

    ExtReal norm() const { return norm_u + norm_grad; }
};

W1AQuantities w1a_quantities(const TestFunction& u, const YoungFunction& Y, const BoxDomain& box);

// Which part of a difference u_k - u enters the modular.
enum class ModularPart { value, gradient, sobolev };

// Finite-index proxy for "M_k -> 0": the row is non-increasing and either drops
// below rel_drop of its first entry or decays at least like k^-min_rate.
struct ConvergenceRule {
    double rel_drop = 1e-3;
    double min_rate = 0.5;
};

struct ModularReport {
    std::vector<double> indices;
    std::vector<double> lambda_grid;
    std::vector<std::vector<ExtReal>> values;  // [index][lambda]
    std::vector<double> converging_lambdas;
    bool norm_convergence = false;
    ExtReal smallest_converging_lambda = ExtReal::infinity();
};

bool row_converges(const std::vector<double>& indices, const std::vector<ExtReal>& column, const ConvergenceRule& rule);

ModularReport modular_convergence(const std::vector<TestFunction>& seq, const std::vector<double>& indices,
                                  const TestFunction& limit, const YoungFunction& Y, const BoxDomain& box,
                                  const std::vector<double>& lambda_grid, ModularPart part = ModularPart::sobolev,
                                  const ConvergenceRule& rule = {}, Execution exec = Execution::parallel);

TestFunction difference(const TestFunction& a, const TestFunction& b);
TestFunction scaled(const TestFunction& u, double c);

}  // namespace orlicz
