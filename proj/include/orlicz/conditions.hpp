#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/aniso.hpp"
#include "orlicz/envelope.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class Truth { holds, fails, indeterminate };
std::string to_string(Truth t);

struct ConditionVerdict {
    Truth status = Truth::indeterminate;
    bool holds = false;
    double worst_margin = 0.0;  // min over the grid of RHS - LHS
    std::optional<double> witness;
    std::string grid;
    bool analytic = false;
    double constant = 1.0;  // argument constant used by the grid check
    std::string note;
};

struct Ass2Options {
    double t0 = 1.0;
    double t_max = 1e6;
    std::size_t points = 512;
    bool grid = true;  // false: exponent algebra only (fails over to the grid when not decidable)
    Execution exec = Execution::parallel;
};

// B(t E(H_n(t))) <= A(t) near infinity, up to equivalence. With an argument
// constant c the grid check reads B(t E(H_n(t)/c)/c) <= A(ct).
ConditionVerdict check_inq_ass2(const YoungFunction& A, const YoungFunction& B, const Envelope& E, double n,
                                const Ass2Options& opt = {});

struct AssDVerdict {
    ConditionVerdict inequality;  // B(t E(F^{-1}(A(t)))) <= A(t) on (0, t1]
    ConditionVerdict limsup;      // limsup_{t->0} F(lambda t)/A(t) < inf
    Truth status = Truth::indeterminate;
};

AssDVerdict check_inq_assD(const YoungFunction& A, const YoungFunction& B, const Envelope& E, const YoungFunction& F,
                           double t1);

// Trend detector for limsup_{t->0} of exp(log_ratio(t)) on [1e-8, 1e-2].
Truth limsup_near_zero(const std::function<double(double)>& log_ratio);

// B_i(A_i^{-1}(Abar(t)) E(Hbar_n(t))) <= Abar(t) for every i.
ConditionVerdict check_ortho(const std::vector<YoungFunction>& A, const std::vector<YoungFunction>& B,
                             const Envelope& E, int n, const Ass2Options& opt = {});

struct AnisoOptions {
    std::size_t directions = 32;
    std::size_t radii = 64;
    double r_min = 1e-3;
    double r_max = 1e3;
    Execution exec = Execution::parallel;
};

// Psi(xi) <= c + Phi(xi / E(theta(xi))), c = 0 unless with_constant.
ConditionVerdict check_aniso(const NDimYoungFunction& Phi, const NDimYoungFunction& Psi, const Envelope& E, int n,
                             bool with_constant, const AnisoOptions& opt = {});

// Closed-form rows of the Zygmund tables.
enum class ZygmundExample { zygmund, zygmund2, classical };

struct ZygmundParams {
    double p = 2.0;
    double alpha = 0.0;
    int n = 3;
    double r = 1.0;
    double gamma = 0.0;
};

struct ZygmundRow {
    std::string example;
    int row = 0;
    std::string regime;
    std::string q_relation;  // "<", "<=", "=", "any"
    double q_bound = 0.0;
    std::string beta_relation;  // "any", "<", "<=", "="
    double beta_bound = 0.0;
    std::string envelope;
    bool unconditional = false;
    bool verified = false;  // the exponent algebra agrees at the boundary and rejects just past it
};

std::vector<ZygmundRow> zygmund_table(ZygmundExample ex, const ZygmundParams& prm);

// Boundary exponents used by the tables.
double q_max(double p, double n, double r);
double beta_max(double p, double alpha, double n, double r, double gamma);

const char* to_string(ZygmundExample ex);
ZygmundExample parse_zygmund_example(const std::string& name);
// Fixed parameter sweep per table (alpha = 0 only for the classical one).
std::vector<ZygmundParams> default_zygmund_sweep(ZygmundExample ex);
// Header example,p,alpha,n,r,gamma,row,regime,q_relation,q_bound,beta_relation,beta_bound,envelope,unconditional,verified
std::string zygmund_csv(ZygmundExample ex, const std::vector<ZygmundParams>& sweep);

}  // namespace orlicz
