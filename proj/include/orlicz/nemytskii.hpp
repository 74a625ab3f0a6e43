#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/conditions.hpp"
#include "orlicz/envelope.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// f with a Borel representative of f' and the bound |f'(t)| <= kappa E(kappa |t|).
struct LipschitzSpec {
    std::function<double(double)> f;
    std::function<double(double)> fprime;
    double kappa = 1.0;
    Envelope envelope;
    std::optional<double> global_lipschitz;
    double f_at_zero = 0.0;
    std::string label = "f";

    // f(0) = f_at_zero and the derivative bound on +-[1e-6, 1e6]; the reason goes to *why.
    bool valid(std::string* why = nullptr) const;

    static LipschitzSpec identity();
    static LipschitzSpec constant(double c);
    // max(0, |t| - s), right derivative at the kinks.
    static LipschitzSpec shrink(double s = 1.0);
    // t |t| / 2, derivative |t|.
    static LipschitzSpec half_square();
};

// f(u), gradient f'(u) grad u.
TestFunction compose(const LipschitzSpec& spec, const TestFunction& u);
// g_s(u): u - s above s, u + s below -s, 0 between; gradient grad u where |u| >= s.
TestFunction truncate(const TestFunction& u, double s);

struct ContinuityOptions {
    std::vector<double> lambda_factors;  // times ||u||; empty means 2^j, -6 <= j <= 6
    ConvergenceRule rule;
    Execution exec = Execution::parallel;
};

struct ContinuityReport {
    bool refused = false;
    std::string note;
    ConditionVerdict condition;
    double limit_norm = 0.0;  // ||u||_{W^{1,A}}
    double lambda = 0.0;      // smallest grid lambda with u_k -> u
    double predicted = 0.0;   // 24 kappa max(lambda, ||u||)
    ModularReport input;      // u_k - u in A on the lambda grid
    ModularReport image;      // f(u_k) - f(u) in B at the predicted constant
    ModularReport image_gradient;
    bool converges = false;
};

ContinuityReport continuity_experiment(const LipschitzSpec& spec, const std::vector<TestFunction>& seq,
                                       const std::vector<double>& indices, const TestFunction& limit,
                                       const YoungFunction& A, const YoungFunction& B, const BoxDomain& box,
                                       const ContinuityOptions& opt = {});

// The composition counterexample on (0,1)^dim with A(t) = t e^t, f = shrink(1),
// u = 1 + x1 (log x1 - 1), u_k = u + (log k + 1) / k.
struct CounterexampleOptions {
    int dim = 2;
    std::vector<double> ks{8, 64, 512};
    std::vector<double> deltas{1e-3, 1e-4, 1e-6};
    std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0};
    Execution exec = Execution::parallel;
};

// One strip integral: int over (delta, 1/k) x (0,1)^{dim-1} of A(|grad f(u_k) - grad f(u)| / lambda).
struct StripRow {
    double k = 0.0;
    double delta = 0.0;
    double lambda = 0.0;
    bool skipped = false;  // 1/k <= delta
    double quadrature = 0.0;
    double closed_form = 0.0;
    double rel_err = 0.0;
};

struct CounterexampleReport {
    CounterexampleOptions options;
    // Modular of u_k - u in W^{1,A}: [k][lambda].
    std::vector<std::vector<double>> w_modular;
    // Last over first entry per lambda, and the finite-index rule verdict per lambda.
    std::vector<double> w_drop;
    std::vector<bool> w_rule;
    std::vector<StripRow> strips;
    double max_rel_err = 0.0;
    // Per lambda: strip values grow as delta decreases and track a closed form that is unbounded.
    std::vector<bool> divergent;
    std::vector<std::string> notes;
};

// Closed form of the strip integral; +inf when delta = 0 and lambda <= 1.
double strip_closed_form(double k, double delta, double lambda);
CounterexampleReport counterexample_run(const CounterexampleOptions& opt = {});
// Long format: section,k,delta,lambda,value,closed_form,rel_err
std::string counterexample_csv(const CounterexampleReport& r);

// Tensor Gauss-Legendre rule on the box: `panels` per axis, `order` nodes per panel.
struct TensorGrid {
    std::vector<Point> points;
    std::vector<double> weights;
};
TensorGrid tensor_grid(const BoxDomain& box, int panels, int order = 4);

struct PoincareRow {
    std::string label;
    bool excluded = false;  // u = 0
    double gradient_modular = 0.0;
    double c = 0.0;
    double c_refined = 0.0;
    double drift = 0.0;
};

struct PoincareReport {
    std::vector<PoincareRow> rows;
    double c_star = 0.0;
    double c_star_refined = 0.0;
    double drift = 0.0;
    bool finite = false;
    bool stable = false;  // drift <= 5%
};

struct PoincareOptions {
    int panels = 6;  // refined run uses twice as many
    int order = 4;
    Execution exec = Execution::parallel;
};

// Smallest c with int A_n(|u| / (c (int A(|grad u|))^{1/n})) <= int A(|grad u|), per u.
PoincareReport poincare_probe(const std::vector<TestFunction>& corpus, const YoungFunction& A, const BoxDomain& box,
                              const PoincareOptions& opt = {});

struct LemmaGridVerdict {
    bool refused = false;
    std::string note;
    bool holds = false;
    double worst_margin = 0.0;
    double constant = 0.0;  // additive constant on the right
    std::optional<std::pair<double, double>> witness;  // (s, t)
    std::size_t points = 0;
};

// B(E(s) t / 2) <= c + A_n(s) + A(t) with c = B(t0 E(A_n^{-1}(A(t0)))) on a 64 x 64 log grid
// over [1e-3, 1e3]^2 plus the s = 0 row. Refused unless check_inq_ass2 holds.
LemmaGridVerdict lemma_sobolev_grid(const YoungFunction& A, const YoungFunction& B, const Envelope& E, int n,
                                    double t0 = 1.0, Execution exec = Execution::parallel);
// B(E(s) t) <= F(s) + A(t) on the same grid. Refused unless B(t E(F^{-1}(A(t)))) <= A(t)
// holds on a log grid over [1e-6, 1e6].
LemmaGridVerdict lemma_envelope_grid(const YoungFunction& A, const YoungFunction& B, const Envelope& E,
                                     const YoungFunction& F, Execution exec = Execution::parallel);

// One-dimensional embeddings on an interval (box with n = 1).
struct OneDCheck {
    std::string label;
    double sup = 0.0;
    double bound = 0.0;
    bool holds = false;
};

// sup|u| <= |I| A^{-1}(int_I A(|u'|) / |I|) for u vanishing at an endpoint.
OneDCheck check_sup_bound(const TestFunction& u, const YoungFunction& A, const BoxDomain& interval);
// max over the corpus of sup|u| / ||u||_{W^{1,A}}.
double calibrate_sup_constant(const std::vector<TestFunction>& corpus, const YoungFunction& A,
                              const BoxDomain& interval);
// max over the corpus of sup|u| / int A(|u'|).
double calibrate_sup_modular_constant(const std::vector<TestFunction>& corpus, const YoungFunction& A,
                                      const BoxDomain& interval);

}  // namespace orlicz
