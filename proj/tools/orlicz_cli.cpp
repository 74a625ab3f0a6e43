#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <omp.h>

#include "commands.hpp"

using namespace orlicz::cli;

namespace {

void add_output(CLI::App* sub, Output& out, const char* default_format) {
    out.format = default_format;
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out.path, "Write to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("ORLICZ_NUM_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }

    CLI::App app{"Orlicz-Sobolev toolkit"};
    app.require_subcommand(1);

    std::function<int()> action;

    ConjugateArgs conj;
    auto* c = app.add_subcommand("conjugate", "Tabulate H_n and the Sobolev conjugate A_n");
    c->add_option("--A", conj.A, "Young function")->required();
    c->add_option("--n", conj.n, "Dimension")->check(CLI::PositiveNumber);
    c->add_option("--sigma", conj.sigma, "Exponent sigma >= n");
    c->add_option("--lo", conj.lo);
    c->add_option("--hi", conj.hi);
    c->add_option("--points", conj.points);
    Output c_out;
    add_output(c, c_out, "json");
    c->callback([&] { action = [&] { return run_conjugate(conj, c_out); }; });

    AnisoArgs an;
    auto* a = app.add_subcommand("aniso", "Sublevel volumes and Phi_circ of an n-dimensional Young function");
    a->add_option("--Phi", an.Phi, "iso:<young> or ortho:<young>;<young>[;<young>]")->required();
    a->add_option("--n", an.n, "Dimension of an iso form");
    a->add_option("--t", an.ts, "Levels")->delimiter(',');
    a->add_option("--mc-samples", an.mc_samples, "Monte Carlo cross-check samples");
    a->add_option("--seed", an.seed);
    Output a_out;
    add_output(a, a_out, "json");
    a->callback([&] { action = [&] { return run_aniso(an, a_out); }; });

    NormArgs nm;
    auto* m = app.add_subcommand("norm", "Luxemburg norms and modulars of a corpus function");
    m->add_option("--u", nm.u, "Corpus function")->required();
    m->add_option("--A", nm.A, "Young function")->required();
    m->add_option("--lambdas", nm.lambdas)->delimiter(',');
    Output m_out;
    add_output(m, m_out, "json");
    m->callback([&] { action = [&] { return run_norm(nm, m_out); }; });

    ConvergeArgs cv;
    auto* g = app.add_subcommand("converge", "Modular convergence of u_k to u");
    g->add_option("--u", cv.u, "Corpus function")->required();
    g->add_option("--seq", cv.mode, "shift: u + 1/k, scale: (1 + 1/k) u")->check(CLI::IsMember({"shift", "scale"}));
    g->add_option("--A", cv.A, "Young function")->required();
    g->add_option("--kmax", cv.kmax);
    g->add_option("--lambdas", cv.lambdas)->delimiter(',');
    g->add_option("--part", cv.part)->check(CLI::IsMember({"value", "gradient", "sobolev"}));
    Output g_out;
    add_output(g, g_out, "json");
    g->callback([&] { action = [&] { return run_converge(cv, g_out); }; });

    CheckArgs ck;
    auto* k = app.add_subcommand("check", "Check a structural condition");
    k->add_option("--cond", ck.cond)->required()->check(CLI::IsMember({"inq-ass2", "inq-assD", "ortho", "aniso"}));
    k->add_option("--A", ck.A, "Young function (repeat for ortho)");
    k->add_option("--B", ck.B, "Young function (repeat for ortho)");
    k->add_option("--E", ck.E, "Envelope");
    k->add_option("--F", ck.F, "Young function for inq-assD");
    k->add_option("--Phi", ck.Phi);
    k->add_option("--Psi", ck.Psi);
    k->add_option("--n", ck.n);
    k->add_option("--t1", ck.t1);
    k->add_flag("--analytic-only", ck.analytic_only, "Skip the grid when the exponent algebra decides");
    k->add_flag("!--no-constant", ck.with_constant, "Aniso check without the additive constant");
    Output k_out;
    add_output(k, k_out, "json");
    k->callback([&] { action = [&] { return run_check(ck, k_out); }; });

    TableArgs tb;
    auto* t = app.add_subcommand("table", "Zygmund example tables");
    t->add_option("--example", tb.example)->check(CLI::IsMember({"zygmund", "zygmund2", "classical"}));
    t->add_option("--p", tb.p);
    t->add_option("--alpha", tb.alpha);
    t->add_option("--n", tb.n);
    t->add_option("--r", tb.r);
    t->add_option("--gamma", tb.gamma);
    Output t_out;
    add_output(t, t_out, "csv");
    t->callback([&] { action = [&] { return run_table(tb, t_out); }; });

    CounterexampleArgs ce;
    auto* x = app.add_subcommand("counterexample", "Composition counterexample with A(t) = t e^t");
    x->add_option("--dim", ce.dim)->check(CLI::Range(1, 3));
    x->add_option("--kmax", ce.kmax, "Dyadic indices 2..kmax");
    x->add_option("--ks", ce.ks, "Explicit indices")->delimiter(',');
    x->add_option("--deltas", ce.deltas)->delimiter(',');
    x->add_option("--lambdas", ce.lambdas)->delimiter(',');
    Output x_out;
    add_output(x, x_out, "csv");
    x->callback([&] { action = [&] { return run_counterexample(ce, x_out); }; });

    ExperimentArgs ex;
    auto* e = app.add_subcommand("experiment", "Continuity of a Nemytskii operator from a JSON config");
    e->add_option("--config", ex.config)->required();
    Output e_out;
    add_output(e, e_out, "json");
    e->callback([&] { action = [&] { return run_experiment(ex, e_out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kError;
    }
    try {
        return action ? action() : kError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kError;
    }
}
