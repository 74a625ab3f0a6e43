#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orlicz::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kIndeterminate = 2;

struct Output {
    std::string format = "json";  // csv or json
    std::string path;             // empty: stdout
};

struct ConjugateArgs {
    std::string A;
    int n = 3;
    std::optional<double> sigma;
    double lo = 1e-3;
    double hi = 1e6;
    std::size_t points = 25;
};

struct AnisoArgs {
    std::string Phi;  // iso:<young> with --n, or ortho:<young>;<young>[;<young>]
    int n = 0;
    std::vector<double> ts{1.0};
    std::size_t mc_samples = 0;
    std::uint64_t seed = 12345;
};

struct NormArgs {
    std::string u;
    std::string A;
    std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0};
};

struct ConvergeArgs {
    std::string u;
    std::string mode = "shift";  // u + 1/k or (1 + 1/k) u
    std::string A;
    double kmax = 1024;
    std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0};
    std::string part = "sobolev";
};

struct CheckArgs {
    std::string cond;  // inq-ass2, inq-assD, ortho, aniso
    std::vector<std::string> A, B;
    std::string E = "one";
    std::string F;
    std::string Phi, Psi;
    double n = 3;
    double t1 = 0.1;
    bool analytic_only = false;
    bool with_constant = true;
};

struct TableArgs {
    std::string example = "zygmund";
    std::optional<double> p, alpha, r, gamma;
    std::optional<int> n;
};

struct CounterexampleArgs {
    int dim = 2;
    double kmax = 1024;
    std::vector<double> ks;
    std::vector<double> deltas{1e-3, 1e-4, 1e-6};
    std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0};
};

struct ExperimentArgs {
    std::string config;
};

int run_conjugate(const ConjugateArgs& a, const Output& out);
int run_aniso(const AnisoArgs& a, const Output& out);
int run_norm(const NormArgs& a, const Output& out);
int run_converge(const ConvergeArgs& a, const Output& out);
int run_check(const CheckArgs& a, const Output& out);
int run_table(const TableArgs& a, const Output& out);
int run_counterexample(const CounterexampleArgs& a, const Output& out);
int run_experiment(const ExperimentArgs& a, const Output& out);

}  // namespace orlicz::cli
