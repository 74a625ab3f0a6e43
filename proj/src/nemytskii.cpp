#include "orlicz/nemytskii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "orlicz/conjugate.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point scale_point(const Point& g, double s) { return {g[0] * s, g[1] * s, g[2] * s}; }

}  // namespace

bool LipschitzSpec::valid(std::string* why) const {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (!f || !fprime) return fail("f and f' are required");
    if (!(kappa > 0.0)) return fail("kappa must be positive");
    if (std::abs(f(0.0) - f_at_zero) > 1e-12 * (1.0 + std::abs(f_at_zero))) {
        return fail(fmt::format("f(0) = {} but f_at_zero = {}", f(0.0), f_at_zero));
    }
    std::vector<double> ts{0.0};
    for (double t : log_grid(1e-6, 1e6, 241)) {
        ts.push_back(t);
        ts.push_back(-t);
    }
    for (double t : ts) {
        const double d = std::abs(fprime(t)), bound = kappa * envelope(kappa * std::abs(t));
        if (d > bound * (1.0 + 1e-12) + 1e-12) {
            return fail(fmt::format("|f'({})| = {} exceeds kappa E(kappa |t|) = {}", t, d, bound));
        }
    }
    return true;
}

LipschitzSpec LipschitzSpec::identity() {
    LipschitzSpec s;
    s.f = [](double t) { return t; };
    s.fprime = [](double) { return 1.0; };
    s.global_lipschitz = 1.0;
    s.label = "identity";
    return s;
}

LipschitzSpec LipschitzSpec::constant(double c) {
    LipschitzSpec s;
    s.f = [c](double) { return c; };
    s.fprime = [](double) { return 0.0; };
    s.global_lipschitz = 0.0;
    s.f_at_zero = c;
    s.label = fmt::format("constant:{}", c);
    return s;
}

LipschitzSpec LipschitzSpec::shrink(double level) {
    if (!(level >= 0.0)) throw std::domain_error("shrink: level must be non-negative");
    LipschitzSpec s;
    s.f = [level](double t) { return std::max(0.0, std::abs(t) - level); };
    s.fprime = [level](double t) { return t >= level ? 1.0 : (t < -level ? -1.0 : 0.0); };
    s.global_lipschitz = 1.0;
    s.label = fmt::format("shrink:{}", level);
    return s;
}

LipschitzSpec LipschitzSpec::half_square() {
    LipschitzSpec s;
    s.f = [](double t) { return 0.5 * t * std::abs(t); };
    s.fprime = [](double t) { return std::abs(t); };
    s.envelope = Envelope::power(1.0);
    s.label = "half_square";
    return s;
}

TestFunction compose(const LipschitzSpec& spec, const TestFunction& u) {
    TestFunction out;
    out.value = [f = spec.f, v = u.value](const Point& x) { return f(v(x)); };
    out.gradient = [fp = spec.fprime, v = u.value, g = u.gradient](const Point& x) {
        return scale_point(g(x), fp(v(x)));
    };
    out.label = spec.label + "(" + u.label + ")";
    return out;
}

TestFunction truncate(const TestFunction& u, double s) {
    if (!(s > 0.0)) throw std::domain_error("truncate: s must be positive");
    TestFunction out;
    out.value = [s, v = u.value](const Point& x) {
        const double y = v(x);
        return y > s ? y - s : (y < -s ? y + s : 0.0);
    };
    out.gradient = [s, v = u.value, g = u.gradient](const Point& x) {
        return std::abs(v(x)) >= s ? g(x) : Point{0.0, 0.0, 0.0};
    };
    out.label = fmt::format("g_{}({})", s, u.label);
    return out;
}

ContinuityReport continuity_experiment(const LipschitzSpec& spec, const std::vector<TestFunction>& seq,
                                       const std::vector<double>& indices, const TestFunction& limit,
                                       const YoungFunction& A, const YoungFunction& B, const BoxDomain& box,
                                       const ContinuityOptions& opt) {
    ContinuityReport r;
    auto refuse = [&](std::string why) {
        r.refused = true;
        r.note = std::move(why);
        return r;
    };
    std::string why;
    if (!spec.valid(&why)) return refuse("invalid f: " + why);
    r.condition = check_inq_ass2(A, B, spec.envelope, static_cast<double>(box.n));
    if (!r.condition.holds) return refuse("growth condition on (A, B, E) does not hold");
    const ExtReal norm = w1a_quantities(limit, A, box).norm();
    if (norm.is_infinite()) return refuse("limit is not in W^{1,A}");
    r.limit_norm = norm.value();

    std::vector<double> grid;
    const double unit = r.limit_norm > 0.0 ? r.limit_norm : 1.0;
    if (opt.lambda_factors.empty()) {
        for (int j = -6; j <= 6; ++j) grid.push_back(std::ldexp(unit, j));
    } else {
        for (double f : opt.lambda_factors) grid.push_back(f * unit);
    }
    r.input = modular_convergence(seq, indices, limit, A, box, grid, ModularPart::sobolev, opt.rule, opt.exec);
    if (r.input.converging_lambdas.empty()) return refuse("u_k does not converge modularly on the lambda grid");
    r.lambda = r.input.smallest_converging_lambda.value();
    r.predicted = 24.0 * spec.kappa * std::max(r.lambda, r.limit_norm);

    std::vector<TestFunction> images;
    images.reserve(seq.size());
    for (const auto& u : seq) images.push_back(compose(spec, u));
    const TestFunction fl = compose(spec, limit);
    r.image = modular_convergence(images, indices, fl, B, box, {r.predicted}, ModularPart::value, opt.rule, opt.exec);
    r.image_gradient =
        modular_convergence(images, indices, fl, B, box, {r.predicted}, ModularPart::gradient, opt.rule, opt.exec);
    r.converges = !r.image.converging_lambdas.empty() && !r.image_gradient.converging_lambdas.empty();
    return r;
}

// ---- counterexample ----

double strip_closed_form(double k, double delta, double lambda) {
    if (!(k > 0.0) || !(delta >= 0.0) || !(lambda > 0.0)) throw std::domain_error("strip_closed_form: bad arguments");
    // (1/lambda) int (-log x) x^{a-1}, a = 1 - 1/lambda.
    const double a = 1.0 - 1.0 / lambda;
    auto G = [a](double x) {
        const double L = std::log(x);
        if (a == 0.0) return -0.5 * L * L;
        return std::pow(x, a) * (-L / a + 1.0 / (a * a));
    };
    const double hi = G(1.0 / k);
    if (delta == 0.0) return a <= 0.0 ? kInf : hi / lambda;
    return (hi - G(delta)) / lambda;
}

namespace {

struct Counterexample {
    YoungFunction A = power_exp(1.0, 1.0);
    LipschitzSpec f = LipschitzSpec::shrink(1.0);
    TestFunction u;

    Counterexample() {
        u.value = [](const Point& x) { return 1.0 + x[0] * (std::log(x[0]) - 1.0); };
        u.gradient = [](const Point& x) { return Point{std::log(x[0]), 0.0, 0.0}; };
        u.label = "1+x1(log x1-1)";
    }

    TestFunction u_k(double k) const {
        const double shift = (std::log(k) + 1.0) / k;
        TestFunction v;
        v.value = [base = u.value, shift](const Point& x) { return base(x) + shift; };
        v.gradient = u.gradient;
        v.label = fmt::format("u_{}", k);
        return v;
    }
};

}  // namespace

CounterexampleReport counterexample_run(const CounterexampleOptions& opt) {
    if (opt.dim < 1 || opt.dim > 3) throw std::invalid_argument("counterexample_run: dim must be 1, 2 or 3");
    if (opt.ks.empty() || opt.deltas.empty() || opt.lambdas.empty()) {
        throw std::invalid_argument("counterexample_run: empty k, delta or lambda list");
    }
    if (!std::is_sorted(opt.ks.begin(), opt.ks.end())) throw std::invalid_argument("counterexample_run: k not increasing");
    if (!std::is_sorted(opt.deltas.rbegin(), opt.deltas.rend())) {
        throw std::invalid_argument("counterexample_run: deltas not decreasing");
    }
    const Counterexample ce;
    CounterexampleReport r;
    r.options = opt;
    const std::size_t nk = opt.ks.size(), nl = opt.lambdas.size(), nd = opt.deltas.size();

    std::vector<TestFunction> seq;
    for (double k : opt.ks) seq.push_back(ce.u_k(k));
    const auto box = BoxDomain::unit(opt.dim);
    const auto conv =
        modular_convergence(seq, opt.ks, ce.u, ce.A, box, opt.lambdas, ModularPart::sobolev, {}, opt.exec);
    r.w_modular.assign(nk, std::vector<double>(nl));
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = 0; j < nl; ++j) r.w_modular[i][j] = conv.values[i][j].value();
    }
    for (std::size_t j = 0; j < nl; ++j) {
        const double first = r.w_modular.front()[j], last = r.w_modular.back()[j];
        r.w_drop.push_back(first > 0.0 ? last / first : 0.0);
        const auto& cl = conv.converging_lambdas;
        r.w_rule.push_back(std::find(cl.begin(), cl.end(), opt.lambdas[j]) != cl.end());
    }

    const TestFunction fu = compose(ce.f, ce.u);
    r.strips.resize(nk * nd * nl);
    for_each_index(r.strips.size(), opt.exec, [&](std::size_t idx) {
        const std::size_t i = idx / (nd * nl), d = (idx / nl) % nd, j = idx % nl;
        StripRow& row = r.strips[idx];
        row.k = opt.ks[i];
        row.delta = opt.deltas[d];
        row.lambda = opt.lambdas[j];
        if (1.0 / row.k <= row.delta) {
            row.skipped = true;
            return;
        }
        // x1 = exp(-y): the mass piles up at x1 = delta for lambda < 1, and in y the
        // integrand is smooth on [log k, -log delta].
        BoxDomain strip = BoxDomain::unit(opt.dim);
        strip.lower[0] = std::log(row.k);
        strip.upper[0] = -std::log(row.delta);
        const TestFunction fk = compose(ce.f, ce.u_k(row.k));
        const double lam = row.lambda;
        const auto integrand = [&](const Point& y) {
            const Point x{std::exp(-y[0]), y[1], y[2]};
            const Point a = fk.gradient(x), b = fu.gradient(x);
            return ce.A(norm({a[0] - b[0], a[1] - b[1], a[2] - b[2]}, opt.dim) / lam) * x[0];
        };
        row.quadrature = integrate_box(integrand, strip).value();
        row.closed_form = strip_closed_form(row.k, row.delta, lam);
        row.rel_err = std::abs(row.quadrature - row.closed_form) / std::abs(row.closed_form);
    });
    for (const auto& row : r.strips) {
        if (row.skipped) {
            r.notes.push_back(fmt::format("k={} delta={:g}: 1/k <= delta, skipped", row.k, row.delta));
        } else {
            r.max_rel_err = std::max(r.max_rel_err, row.rel_err);
        }
    }
    r.notes.erase(std::unique(r.notes.begin(), r.notes.end()), r.notes.end());

    // Divergence: for every k the strip values increase as delta decreases, match the
    // closed form, and the closed form is unbounded as delta -> 0.
    for (std::size_t j = 0; j < nl; ++j) {
        bool div = true;
        for (std::size_t i = 0; i < nk && div; ++i) {
            if (std::isfinite(strip_closed_form(opt.ks[i], 0.0, opt.lambdas[j]))) div = false;
            double prev = -kInf;
            std::size_t used = 0;
            for (std::size_t d = 0; d < nd && div; ++d) {
                const StripRow& row = r.strips[(i * nd + d) * nl + j];
                if (row.skipped) continue;
                div = row.rel_err <= 1e-6 && row.quadrature > prev;
                prev = row.quadrature;
                ++used;
            }
            if (used < 2) div = false;
        }
        r.divergent.push_back(div);
    }
    return r;
}

std::string counterexample_csv(const CounterexampleReport& r) {
    std::string out = "section,k,delta,lambda,value,closed_form,rel_err\n";
    const auto& o = r.options;
    for (std::size_t i = 0; i < o.ks.size(); ++i) {
        for (std::size_t j = 0; j < o.lambdas.size(); ++j) {
            out += fmt::format("w_modular,{},,{},{:.17g},,\n", o.ks[i], o.lambdas[j], r.w_modular[i][j]);
        }
    }
    for (const auto& row : r.strips) {
        if (row.skipped) {
            out += fmt::format("strip,{},{:g},{},skipped,,\n", row.k, row.delta, row.lambda);
        } else {
            out += fmt::format("strip,{},{:g},{},{:.17g},{:.17g},{:.3e}\n", row.k, row.delta, row.lambda,
                               row.quadrature, row.closed_form, row.rel_err);
        }
    }
    for (std::size_t j = 0; j < o.lambdas.size(); ++j) {
        out += fmt::format("w_drop,,,{},{:.17g},,\n", o.lambdas[j], r.w_drop[j]);
        out += fmt::format("divergent,,,{},{},,\n", o.lambdas[j], r.divergent[j] ? 1 : 0);
    }
    return out;
}

// ---- Poincare probe ----

TensorGrid tensor_grid(const BoxDomain& box, int panels, int order) {
    box.validate();
    if (panels < 1 || order < 1) throw std::invalid_argument("tensor_grid: panels and order must be positive");
    const GaussRule g = gauss_legendre(static_cast<std::size_t>(order));
    std::array<std::vector<double>, 3> nodes, weights;
    for (int a = 0; a < box.n; ++a) {
        const double h = (box.upper[a] - box.lower[a]) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = box.lower[a] + (p + 0.5) * h;
            for (int q = 0; q < order; ++q) {
                nodes[a].push_back(mid + 0.5 * h * g.nodes[q]);
                weights[a].push_back(0.5 * h * g.weights[q]);
            }
        }
    }
    TensorGrid out;
    const std::size_t m = nodes[0].size();
    std::size_t total = 1;
    for (int a = 0; a < box.n; ++a) total *= m;
    out.points.reserve(total);
    out.weights.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Point x{0.0, 0.0, 0.0};
        double w = 1.0;
        std::size_t rest = idx;
        for (int a = 0; a < box.n; ++a) {
            const std::size_t k = rest % m;
            rest /= m;
            x[a] = nodes[a][k];
            w *= weights[a][k];
        }
        out.points.push_back(x);
        out.weights.push_back(w);
    }
    return out;
}

namespace {

// A_n through a log-log table on [1e-30, top]; direct evaluation above the table, power-law
// extrapolation below it. Direct evaluation at tiny arguments inverts H_n from scratch.
class TabulatedConjugate {
public:
    explicit TabulatedConjugate(YoungFunction An) : An_(std::move(An)) {
        std::vector<double> xs, ys;
        for (double x : log_grid_per_decade(1e-30, 1e30, 8)) {
            const double y = An_(x);
            if (!(y > 0.0) || !std::isfinite(y) || y > 1e300) break;
            xs.push_back(x);
            ys.push_back(y);
        }
        if (xs.size() >= 8) {
            top_ = xs.back();
            table_ = LogLogTable(std::move(xs), std::move(ys));
        }
    }
    double operator()(double x) const {
        if (x <= 0.0) return 0.0;
        if (table_.empty() || x > top_) return An_(x);
        return table_(x);
    }

private:
    YoungFunction An_;
    LogLogTable table_;
    double top_ = 0.0;
};

// Smallest c with sum w An(|u| / (c G^{1/n})) <= G, or 0 when u vanishes on the grid.
double poincare_constant(const std::vector<double>& absu, const std::vector<double>& w, double G, int n,
                         const TabulatedConjugate& An) {
    if (!(G > 0.0)) return 0.0;
    const double scale = std::pow(G, 1.0 / n);
    auto lhs = [&](double c) {
        double s = 0.0;
        for (std::size_t i = 0; i < absu.size(); ++i) {
            if (absu[i] == 0.0) continue;
            s += w[i] * An(absu[i] / (c * scale));
            if (std::isinf(s)) return kInf;
        }
        return s;
    };
    auto ok = [&](double c) { return lhs(c) <= G; };
    double lo = 1.0, hi = 1.0;
    if (ok(1.0)) {
        while (lo > 1e-300 && ok(lo)) {
            hi = lo;
            lo *= 0.5;
        }
        if (lo <= 1e-300) return 0.0;
    } else {
        while (!ok(hi)) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e300) return kInf;
        }
    }
    while (hi / lo > 1.0 + 1e-9) {
        const double mid = std::sqrt(lo * hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

PoincareReport poincare_probe(const std::vector<TestFunction>& corpus, const YoungFunction& A, const BoxDomain& box,
                              const PoincareOptions& opt) {
    box.validate();
    if (corpus.empty()) throw std::invalid_argument("poincare_probe: empty corpus");
    const TabulatedConjugate An(sobolev_conjugate(A, box.n).An);
    const TensorGrid coarse = tensor_grid(box, opt.panels, opt.order);
    const TensorGrid fine = tensor_grid(box, 2 * opt.panels, opt.order);
    PoincareReport r;
    r.rows.resize(corpus.size());
    std::vector<double> cs(2 * corpus.size()), gs(2 * corpus.size());
    for_each_index(2 * corpus.size(), opt.exec, [&](std::size_t job) {
        const TestFunction& u = corpus[job / 2];
        const TensorGrid& g = job % 2 ? fine : coarse;
        std::vector<double> absu(g.points.size());
        double G = 0.0;
        for (std::size_t i = 0; i < g.points.size(); ++i) {
            absu[i] = std::abs(u.value(g.points[i]));
            G += g.weights[i] * A(norm(u.gradient(g.points[i]), box.n));
        }
        gs[job] = G;
        cs[job] = poincare_constant(absu, g.weights, G, box.n, An);
    });
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        PoincareRow& row = r.rows[i];
        row.label = corpus[i].label;
        row.gradient_modular = gs[2 * i + 1];
        row.c = cs[2 * i];
        row.c_refined = cs[2 * i + 1];
        row.excluded = gs[2 * i] == 0.0 && gs[2 * i + 1] == 0.0;
        if (row.excluded) continue;
        row.drift = std::abs(row.c_refined - row.c) / row.c;
        r.c_star = std::max(r.c_star, row.c);
        r.c_star_refined = std::max(r.c_star_refined, row.c_refined);
    }
    r.finite = std::isfinite(r.c_star) && std::isfinite(r.c_star_refined) && r.c_star > 0.0;
    r.drift = r.finite ? std::abs(r.c_star_refined - r.c_star) / r.c_star : kInf;
    r.stable = r.finite && r.drift <= 0.05;
    return r;
}

// ---- two-variable lemma grids ----

namespace {

template <class Lhs, class Rhs>
LemmaGridVerdict scan_grid(Lhs lhs, Rhs rhs, Execution exec) {
    std::vector<double> ss{0.0};
    for (double s : log_grid(1e-3, 1e3, 64)) ss.push_back(s);
    const auto ts = log_grid(1e-3, 1e3, 64);
    struct RowWorst {
        double margin = kInf;
        double t = 0.0;
        bool ok = true;
    };
    std::vector<RowWorst> rows(ss.size());
    for_each_index(ss.size(), exec, [&](std::size_t i) {
        RowWorst& w = rows[i];
        for (double t : ts) {
            const double R = rhs(ss[i], t), L = lhs(ss[i], t);
            const double m = std::isinf(R) ? kInf : R - L;
            if (m < -1e-9 * (1.0 + std::abs(R))) w.ok = false;
            if (m < w.margin) {
                w.margin = m;
                w.t = t;
            }
        }
    });
    LemmaGridVerdict v;
    v.holds = true;
    v.worst_margin = kInf;
    v.points = ss.size() * ts.size();
    for (std::size_t i = 0; i < ss.size(); ++i) {
        v.holds = v.holds && rows[i].ok;
        if (rows[i].margin < v.worst_margin) {
            v.worst_margin = rows[i].margin;
            if (!rows[i].ok) v.witness = std::make_pair(ss[i], rows[i].t);
        }
    }
    if (v.holds) v.witness.reset();
    return v;
}

}  // namespace

LemmaGridVerdict lemma_sobolev_grid(const YoungFunction& A, const YoungFunction& B, const Envelope& E, int n,
                                    double t0, Execution exec) {
    const auto cond = check_inq_ass2(A, B, E, static_cast<double>(n));
    if (!cond.holds) {
        LemmaGridVerdict v;
        v.refused = true;
        v.note = "hypothesis B(t E(H_n(t))) <= A(t) not verified";
        return v;
    }
    const YoungFunction An = sobolev_conjugate(A, n).An;
    const double c = B(t0 * E(An.inverse(A(t0))));
    auto v = scan_grid([&](double s, double t) { return B(E(s) * t / 2.0); },
                       [&](double s, double t) { return c + An(s) + A(t); }, exec);
    v.constant = c;
    return v;
}

LemmaGridVerdict lemma_envelope_grid(const YoungFunction& A, const YoungFunction& B, const Envelope& E,
                                     const YoungFunction& F, Execution exec) {
    if (A.finite_jump() || F.finite_jump()) {
        LemmaGridVerdict v;
        v.refused = true;
        v.note = "A and F must be finite-valued";
        return v;
    }
    for (double t : log_grid(1e-6, 1e6, 512)) {
        const double rhs = A(t), lhs = B(t * E(F.inverse(rhs)));
        if (rhs - lhs < -1e-9 * (1.0 + rhs)) {
            LemmaGridVerdict v;
            v.refused = true;
            v.note = fmt::format("hypothesis B(t E(F^-1(A(t)))) <= A(t) fails at t = {:g}", t);
            return v;
        }
    }
    return scan_grid([&](double s, double t) { return B(E(s) * t); }, [&](double s, double t) { return F(s) + A(t); },
                     exec);
}

// ---- one-dimensional embeddings ----

namespace {

void check_interval(const BoxDomain& I) {
    if (I.n != 1) throw std::invalid_argument("one-dimensional check needs a box with n = 1");
    I.validate();
}

double sup_abs(const TestFunction& u, const BoxDomain& I) {
    constexpr int kSamples = 4096;
    double s = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
        const double x = I.lower[0] + (I.upper[0] - I.lower[0]) * i / kSamples;
        s = std::max(s, std::abs(u.value({x, 0.0, 0.0})));
    }
    return s;
}

}  // namespace

OneDCheck check_sup_bound(const TestFunction& u, const YoungFunction& A, const BoxDomain& I) {
    check_interval(I);
    OneDCheck c;
    c.label = u.label;
    c.sup = sup_abs(u, I);
    const double len = I.measure();
    const ExtReal m = modular_gradient(u, A, 1.0, I);
    c.bound = m.is_finite() ? len * A.inverse(m.value() / len) : kInf;
    c.holds = c.sup <= c.bound * (1.0 + 1e-9) + 1e-12;
    return c;
}

double calibrate_sup_constant(const std::vector<TestFunction>& corpus, const YoungFunction& A, const BoxDomain& I) {
    check_interval(I);
    double c = 0.0;
    for (const auto& u : corpus) {
        const ExtReal nrm = w1a_quantities(u, A, I).norm();
        const double s = sup_abs(u, I);
        if (s == 0.0) continue;
        c = std::max(c, nrm.is_finite() ? s / nrm.value() : 0.0);
    }
    return c;
}

double calibrate_sup_modular_constant(const std::vector<TestFunction>& corpus, const YoungFunction& A,
                                      const BoxDomain& I) {
    check_interval(I);
    double c = 0.0;
    for (const auto& u : corpus) {
        const double s = sup_abs(u, I);
        if (s == 0.0) continue;
        const ExtReal m = modular_gradient(u, A, 1.0, I);
        c = std::max(c, m.is_finite() ? s / m.value() : 0.0);
    }
    return c;
}

}  // namespace orlicz
