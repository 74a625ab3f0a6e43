#include "orlicz/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "orlicz/conjugate.hpp"
#include "orlicz/growth.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// RHS - LHS with inf - inf read as a tie.
double margin(double rhs, double lhs) {
    if (std::isinf(lhs) && std::isinf(rhs)) return 0.0;
    return rhs - lhs;
}

double tol(double rhs) { return 1e-9 * (1.0 + std::abs(rhs)); }

struct Scan {
    bool ok = true;
    double worst = kInf;
    std::optional<double> witness;
};

// Pointwise RHS - LHS over a t grid, tracking the worst violation relative to the tolerance.
template <class Lhs, class Rhs>
Scan scan(const std::vector<double>& ts, Lhs lhs, Rhs rhs) {
    Scan s;
    double worst_excess = -kInf;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double r = rhs(i), l = lhs(i);
        const double m = margin(r, l);
        if (std::isnan(m)) throw IndeterminateError("condition check: NaN on the grid");
        s.worst = std::min(s.worst, m);
        const double excess = -m - tol(r);
        if (excess > 0.0) s.ok = false;
        if (excess > worst_excess) {
            worst_excess = excess;
            if (!s.ok) s.witness = ts[i];
        }
    }
    return s;
}

std::vector<double> constant_ladder() {
    std::vector<double> c;
    for (int j = 0; j <= 160; ++j) c.push_back(std::pow(2.0, j / 4.0));
    return c;
}

ConditionVerdict finish(ConditionVerdict v, Truth status) {
    v.status = status;
    v.holds = status == Truth::holds;
    return v;
}

std::optional<bool> analytic_ass2(const YoungFunction& A, const YoungFunction& B, const Envelope& E, double n) {
    try {
        const auto h = hn_growth(A, n);
        if (!h) return std::nullopt;
        const auto eh = apply(E, *h);
        if (!eh) return std::nullopt;
        const auto lhs = apply(B, Growth::identity() * *eh);
        const auto rhs = apply(A, Growth::identity());
        if (!lhs || !rhs) return std::nullopt;
        return dominated(*lhs, *rhs);
    } catch (const AnalyticUnavailable&) {
        return std::nullopt;
    }
}

std::shared_ptr<const SobolevIntegral> numeric_hn(const YoungFunction& A, double n) {
    const int dim = std::max(1, static_cast<int>(std::floor(n)));
    return sobolev_conjugate_sigma(A, n, dim).Hn;
}

// Grid check with argument constants. On analytic "holds" the smallest c on the
// ladder that closes the inequality is reported; on "fails" a witness is searched
// beyond the window when the window itself looks fine.
template <class Lhs, class Rhs>
ConditionVerdict constant_search(std::optional<bool> analytic, const std::vector<double>& ts, Lhs lhs_c, Rhs rhs_c,
                                 const std::string& grid) {
    ConditionVerdict v;
    v.grid = grid;
    v.analytic = analytic.has_value();
    if (analytic && *analytic) {
        Scan last;
        for (double c : constant_ladder()) {
            last = scan(ts, [&](std::size_t i) { return lhs_c(ts[i], c); }, [&](std::size_t i) { return rhs_c(ts[i], c); });
            v.constant = c;
            if (last.ok) break;
        }
        v.worst_margin = last.worst;
        if (!last.ok) v.note = "grid did not close with constants up to 2^40";
        return finish(v, Truth::holds);
    }
    const Scan s = scan(ts, [&](std::size_t i) { return lhs_c(ts[i], 1.0); }, [&](std::size_t i) { return rhs_c(ts[i], 1.0); });
    v.worst_margin = s.worst;
    v.witness = s.witness;
    if (!analytic) return finish(v, s.ok ? Truth::holds : Truth::fails);
    if (s.ok) {
        for (double t = ts.back() * 10.0; t < 1e300; t *= 10.0) {
            const double r = rhs_c(t, 1.0), m = margin(r, lhs_c(t, 1.0));
            if (-m > tol(r)) {
                v.worst_margin = m;
                v.witness = t;
                v.note = "violation found beyond the grid window";
                break;
            }
        }
        if (!v.witness) v.note = "exponent algebra fails but no violation below 1e300";
    }
    return finish(v, Truth::fails);
}

std::string grid_label(double lo, double hi, std::size_t points) {
    return fmt::format("log grid [{:g}, {:g}] x {}", lo, hi, points);
}

}  // namespace

std::string to_string(Truth t) {
    switch (t) {
        case Truth::holds:
            return "holds";
        case Truth::fails:
            return "fails";
        case Truth::indeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

ConditionVerdict check_inq_ass2(const YoungFunction& A, const YoungFunction& B, const Envelope& E, double n,
                                const Ass2Options& opt) {
    if (!(n >= 1.0)) throw std::domain_error("check_inq_ass2: n must be at least 1");
    if (!is_nondegenerate(A)) throw PreconditionError("check_inq_ass2: A must be nondegenerate");
    const auto analytic = analytic_ass2(A, B, E, n);
    if (!opt.grid) {
        ConditionVerdict v;
        v.analytic = analytic.has_value();
        v.grid = "exponent algebra only";
        if (!analytic) {
            v.note = "outside the exponent-algebra fragment";
            return finish(v, Truth::indeterminate);
        }
        return finish(v, *analytic ? Truth::holds : Truth::fails);
    }
    if (classify_integral_zero(A, n) == Classification::indeterminate ||
        classify_integral_inf(A, n) == Classification::indeterminate) {
        throw PreconditionError("check_inq_ass2: H_n unavailable (indeterminate classification)");
    }
    const auto Hn = numeric_hn(A, n);
    const double lo = std::max(opt.t0, 1e-6);
    const auto ts = log_grid(lo, opt.t_max, opt.points);
    std::vector<double> h(ts.size());
    for_each_index(ts.size(), opt.exec, [&](std::size_t i) { h[i] = (*Hn)(ts[i]); });
    auto H = [&](double t) {
        const auto it = std::lower_bound(ts.begin(), ts.end(), t);
        if (it != ts.end() && *it == t) return h[static_cast<std::size_t>(it - ts.begin())];
        return (*Hn)(t);
    };
    return constant_search(
        analytic, ts, [&](double t, double c) { return B(t * E(H(t) / c) / c); }, [&](double t, double c) { return A(c * t); },
        grid_label(lo, opt.t_max, opt.points));
}

Truth limsup_near_zero(const std::function<double(double)>& log_ratio) {
    const auto ts = log_grid_per_decade(1e-8, 1e-2, 20);  // ascending
    std::vector<double> l(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) l[i] = log_ratio(ts[i]);
    // Index 0 is t = 1e-8; 20 points per decade.
    const double l8 = l[0], l7 = l[20], l6 = l[40];
    if (std::isnan(l8) || std::isnan(l7) || std::isnan(l6)) return Truth::indeterminate;
    if (l8 == -kInf) return Truth::holds;
    if (l8 == kInf) return Truth::fails;
    if (std::isinf(l7) || std::isinf(l6)) return Truth::indeterminate;
    // Monotone toward 0 over the last two decades, in either direction.
    bool rising = true, falling = true;
    double lo = l[0], hi = l[0];
    for (std::size_t i = 0; i < 40; ++i) {
        const double slack = 1e-12 * (1.0 + std::abs(l[i]));
        rising = rising && l[i] >= l[i + 1] - slack;
        falling = falling && l[i] <= l[i + 1] + slack;
        lo = std::min(lo, l[i + 1]);
        hi = std::max(hi, l[i + 1]);
    }
    if (hi - lo <= 1e-3 || falling) return Truth::holds;
    if (!rising) return Truth::indeterminate;
    const double d_last = l8 - l7, d_prev = l7 - l6;
    if (d_last >= 0.5 * d_prev) return Truth::fails;
    if (d_last <= 0.2 * d_prev) return Truth::holds;
    return Truth::indeterminate;
}

namespace {

// limsup F(lambda t)/A(t) at 0 from the declared near-zero shapes, when both are known.
std::optional<Truth> limsup_by_asymptotics(const YoungFunction& F, const YoungFunction& A) {
    const Asymptotics f = F.at_zero(), a = A.at_zero();
    const auto known = [](GrowthClass c) { return c == GrowthClass::power || c == GrowthClass::flat; };
    if (!known(f.cls) || !known(a.cls)) return std::nullopt;
    if (f.cls != a.cls) return f.cls == GrowthClass::flat ? Truth::holds : Truth::fails;
    if (f.cls == GrowthClass::flat) {
        if (f.power == a.power) return std::nullopt;  // decided by coefficients and lambda
        return f.power > a.power ? Truth::holds : Truth::fails;
    }
    // Power type: t^q |log t|^l (log|log t|)^m, compared lexicographically.
    if (f.power != a.power) return f.power > a.power ? Truth::holds : Truth::fails;
    if (f.log_order != a.log_order) return f.log_order < a.log_order ? Truth::holds : Truth::fails;
    return f.loglog_order <= a.loglog_order ? Truth::holds : Truth::fails;
}

}  // namespace

AssDVerdict check_inq_assD(const YoungFunction& A, const YoungFunction& B, const Envelope& E, const YoungFunction& F,
                           double t1) {
    if (!(t1 > 0.0)) throw std::domain_error("check_inq_assD: t1 must be positive");
    if (F.finite_jump()) throw PreconditionError("check_inq_assD: F must be finite-valued");
    AssDVerdict out;
    const double lo = std::max(1e-8, t1 * 1e-8);
    const auto ts = log_grid(lo, t1, 512);
    // Near zero an absolute tolerance is vacuous, so the margin here is relative to A(t).
    ConditionVerdict& q = out.inequality;
    q.grid = grid_label(lo, t1, 512) + ", relative margin";
    q.worst_margin = kInf;
    bool ok = true;
    for (double t : ts) {
        const double rhs = A(t);
        const double lhs = B(t * E(F.inverse(rhs)));
        const double m = rhs > 0.0 ? (rhs - lhs) / rhs : (lhs > 0.0 ? -kInf : 0.0);
        if (m < q.worst_margin) {
            q.worst_margin = m;
            if (m < -1e-9) q.witness = t;
        }
        ok = ok && m >= -1e-9;
    }
    q = finish(q, ok ? Truth::holds : Truth::fails);

    ConditionVerdict& s = out.limsup;
    s.grid = "t in [1e-8, 1e-2], lambda in {1, 10, 100}";
    if (const auto exact = limsup_by_asymptotics(F, A)) {
        s.analytic = true;
        s.note = "decided by the near-zero asymptotics of F and A";
        s = finish(s, *exact);
    }
    Truth agg = Truth::holds;
    for (double lam : {1.0, 10.0, 100.0}) {
        const Truth tr = limsup_near_zero([&](double t) { return F.log_value(lam * t) - A.log_value(t); });
        if (tr == Truth::fails) {
            agg = Truth::fails;
            s.witness = lam;
            break;
        }
        if (tr == Truth::indeterminate) agg = Truth::indeterminate;
    }
    if (!s.analytic) {
        s = finish(s, agg);
    } else if (agg != s.status) {
        s.note += fmt::format("; probe window disagrees ({})", to_string(agg));
        if (s.holds) s.witness.reset();
    }
    if (q.status == Truth::fails || s.status == Truth::fails) {
        out.status = Truth::fails;
    } else if (q.status == Truth::holds && s.status == Truth::holds) {
        out.status = Truth::holds;
    } else {
        out.status = Truth::indeterminate;
    }
    return out;
}

ConditionVerdict check_ortho(const std::vector<YoungFunction>& A, const std::vector<YoungFunction>& B,
                             const Envelope& E, int n, const Ass2Options& opt) {
    if (A.empty() || A.size() != B.size()) throw std::invalid_argument("check_ortho: need one B_i per A_i");
    const YoungFunction bar = orthotropic_bar(A);
    if (classify_integral_inf(bar, n) != Classification::diverges) {
        throw PreconditionError("check_ortho: the integral of Abar at infinity must diverge");
    }
    std::optional<bool> analytic;
    try {
        const auto G = apply(bar, Growth::identity());
        const auto h = hn_growth(bar, n);
        const auto eh = h ? apply(E, *h) : std::nullopt;
        if (G && eh) {
            bool all = true, decided = true;
            for (std::size_t i = 0; i < A.size(); ++i) {
                const auto inv = apply_inverse(A[i], *G);
                const auto lhs = inv ? apply(B[i], *inv * *eh) : std::nullopt;
                if (!lhs) {
                    decided = false;
                    break;
                }
                all = all && dominated(*lhs, *G);
            }
            if (decided) analytic = all;
        }
    } catch (const AnalyticUnavailable&) {
        analytic.reset();
    }
    if (!opt.grid) {
        ConditionVerdict v;
        v.analytic = analytic.has_value();
        v.grid = "exponent algebra only";
        return finish(v, analytic ? (*analytic ? Truth::holds : Truth::fails) : Truth::indeterminate);
    }
    const auto Hn = numeric_hn(bar, n);
    const double lo = std::max(opt.t0, 1e-6);
    const auto ts = log_grid(lo, opt.t_max, opt.points);
    std::vector<double> h(ts.size()), abar(ts.size());
    for_each_index(ts.size(), opt.exec, [&](std::size_t i) {
        h[i] = (*Hn)(ts[i]);
        abar[i] = bar(ts[i]);
    });
    auto index_of = [&](double t) -> std::optional<std::size_t> {
        const auto it = std::lower_bound(ts.begin(), ts.end(), t);
        if (it != ts.end() && *it == t) return static_cast<std::size_t>(it - ts.begin());
        return std::nullopt;
    };
    // max_i LHS_i against the common right-hand side.
    auto lhs = [&](double t, double c) {
        const auto k = index_of(t);
        const double ht = k ? h[*k] : (*Hn)(t), at = k ? abar[*k] : bar(t);
        const double e = E(ht / c);
        double worst = 0.0;
        for (std::size_t i = 0; i < A.size(); ++i) worst = std::max(worst, B[i](A[i].inverse(at) * e / c));
        return worst;
    };
    return constant_search(analytic, ts, lhs, [&](double t, double c) { return bar(c * t); },
                           grid_label(lo, opt.t_max, opt.points));
}

namespace {

std::vector<Vec> aniso_directions(int n, std::size_t count) {
    std::vector<Vec> d;
    const double pi = std::numbers::pi;
    for (std::size_t j = 0; j < count; ++j) {
        if (n == 2) {
            const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(count);
            d.push_back({std::cos(th), std::sin(th)});
        } else {
            const double z = 1.0 - 2.0 * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
            const double r = std::sqrt(1.0 - z * z), ph = pi * (3.0 - std::sqrt(5.0)) * static_cast<double>(j);
            d.push_back({r * std::cos(ph), r * std::sin(ph), z});
        }
    }
    return d;
}

struct AnisoSample {
    double excess_max = 0.0;  // max (LHS - RHS)^+
    double margin_min = kInf;
    double witness = 0.0;
};

AnisoSample aniso_sample(const ThetaSolver& solver, const NDimYoungFunction& Psi, const std::vector<Vec>& dirs,
                         const std::vector<double>& radii, Execution exec) {
    const std::size_t R = radii.size();
    std::vector<double> lhs(dirs.size() * R), rhs(dirs.size() * R);
    for_each_index(dirs.size() * R, exec, [&](std::size_t k) {
        Vec xi = dirs[k / R];
        for (auto& v : xi) v *= radii[k % R];
        const double th = solver.theta(xi);
        rhs[k] = solver.rhs(xi, th);
        lhs[k] = Psi(xi);
    });
    AnisoSample s;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        const double m = margin(rhs[k], lhs[k]);
        if (m < s.margin_min) {
            s.margin_min = m;
            s.witness = radii[k % R];
        }
        s.excess_max = std::max(s.excess_max, -m);
    }
    return s;
}

}  // namespace

ConditionVerdict check_aniso(const NDimYoungFunction& Phi, const NDimYoungFunction& Psi, const Envelope& E, int n,
                             bool with_constant, const AnisoOptions& opt) {
    if (Phi.dim() != n || Psi.dim() != n) throw std::invalid_argument("check_aniso: dimensions must agree");
    if (n != 2 && n != 3) throw std::domain_error("check_aniso: n must be 2 or 3");
    ConditionVerdict v;
    const ThetaSolver solver(Phi, E, n);
    const auto dirs = aniso_directions(n, opt.directions);
    AnisoSample base;
    try {
        base = aniso_sample(solver, Psi, dirs, log_grid(opt.r_min, opt.r_max, opt.radii), opt.exec);
    } catch (const std::exception& e) {
        v.note = std::string("theta solver failed: ") + e.what();
        return finish(v, Truth::indeterminate);
    }
    v.grid = fmt::format("{} directions x {} radii in [{:g}, {:g}]", opt.directions, opt.radii, opt.r_min, opt.r_max);
    if (!with_constant) {
        v.constant = 0.0;
        v.worst_margin = base.margin_min;
        if (base.margin_min < -1e-9 * (1.0 + std::abs(base.excess_max))) v.witness = base.witness;
        return finish(v, v.witness ? Truth::fails : Truth::holds);
    }
    const double c = base.excess_max;
    AnisoSample fine;
    try {
        fine = aniso_sample(solver, Psi, dirs, log_grid(opt.r_min, opt.r_max * 10.0, 2 * opt.radii), opt.exec);
    } catch (const std::exception& e) {
        v.note = std::string("theta solver failed on refinement: ") + e.what();
        return finish(v, Truth::indeterminate);
    }
    v.constant = c;
    v.grid += "; refined to radii x 10 and twice the density";
    // Margin of the stability test: refined constant within 5% of the base one.
    v.worst_margin = 1.05 * c + 1e-9 * (1.0 + c) - fine.excess_max;
    const bool stable = std::isfinite(c) && v.worst_margin >= 0.0;
    if (!stable) v.witness = fine.witness;
    return finish(v, stable ? Truth::holds : Truth::fails);
}

double q_max(double p, double n, double r) { return n * p / (n + r * (n - p)); }

double beta_max(double p, double alpha, double n, double r, double gamma) {
    return n * (alpha * (1.0 + r) - gamma * p) / (n + r * (n - p));
}

namespace {

constexpr double kE = std::numbers::e;

// Zygmund families with a large enough log base that they vanish at 0 for any exponents.
YoungFunction family(ZygmundExample ex, double p, double a) {
    if (ex == ZygmundExample::zygmund2) return a == 0.0 ? power(p) : power_loglog(p, a, std::exp(kE));
    return a == 0.0 ? power(p) : power_log(p, a, kE);
}

bool verify(ZygmundExample ex, const ZygmundParams& prm, const Envelope& E, double q_ok, double b_ok, double q_bad,
            double b_bad) {
    Ass2Options opt;
    opt.grid = false;
    const auto A = family(ex, prm.p, prm.alpha);
    const auto good = check_inq_ass2(A, family(ex, q_ok, b_ok), E, prm.n, opt);
    const auto bad = check_inq_ass2(A, family(ex, q_bad, b_bad), E, prm.n, opt);
    return good.status == Truth::holds && bad.status == Truth::fails;
}

bool verify_unconditional(ZygmundExample ex, const ZygmundParams& prm) {
    return classify_integral_inf(family(ex, prm.p, prm.alpha), prm.n) == Classification::converges;
}

ZygmundRow make_row(std::string example, int row, std::string regime, std::string qrel, double qb, std::string brel,
                    double bb, const Envelope& E) {
    ZygmundRow z;
    z.example = std::move(example);
    z.row = row;
    z.regime = std::move(regime);
    z.q_relation = std::move(qrel);
    z.q_bound = qb;
    z.beta_relation = std::move(brel);
    z.beta_bound = bb;
    z.envelope = E.label();
    return z;
}

}  // namespace

std::vector<ZygmundRow> zygmund_table(ZygmundExample ex, const ZygmundParams& prm) {
    const double p = prm.p, a = prm.alpha, r = prm.r, g = prm.gamma;
    const double n = prm.n;
    if (prm.n < 2) throw std::domain_error("zygmund_table: n >= 2 required");
    if (!((p > 1.0) || (p == 1.0 && a >= 0.0))) {
        throw std::domain_error("zygmund_table: need p > 1 and any alpha, or p = 1 and alpha >= 0");
    }
    if (!(r > 0.0) || !(g >= 0.0)) throw std::domain_error("zygmund_table: need r > 0 and gamma >= 0");
    const double np = n / (n - 1.0);  // n'
    std::vector<ZygmundRow> rows;
    const bool below = p < n, at = p == n, above = p > n;

    if (ex == ZygmundExample::classical) {
        if (a != 0.0) throw std::domain_error("zygmund_table: the classical table has alpha = 0");
        if (below) {
            const double qm = q_max(p, n, r);
            auto z = make_row("classical", 1, "p<n", "<=", qm, "=", 0.0, Envelope::power(r));
            z.verified = verify(ex, prm, Envelope::power(r), qm, 0.0, 1.05 * qm, 0.0);
            rows.push_back(z);
        }
        if (at) {
            auto z1 = make_row("classical", 2, "p=n", "=", n, "=", 0.0, Envelope::one());
            z1.verified = verify(ex, prm, Envelope::one(), n, 0.0, n, 0.1);
            rows.push_back(z1);
            auto z2 = make_row("classical", 3, "p=n", "<", n, "=", 0.0, Envelope::power(r));
            z2.verified = verify(ex, prm, Envelope::power(r), n - 0.1, 0.0, n, 0.0);
            rows.push_back(z2);
            auto z3 = make_row("classical", 4, "p=n", "<", n, "=", 0.0, Envelope::exp(np));
            z3.verified = verify(ex, prm, Envelope::exp(np), n - 0.1, 0.0, n, 0.0);
            rows.push_back(z3);
            const double b_log = -r * (n - 1.0);
            auto z4 = make_row("classical", 5, "p=n", "=", n, "<=", b_log, Envelope::power(r));
            z4.verified = verify(ex, prm, Envelope::power(r), n, b_log, n, b_log + 0.1);
            rows.push_back(z4);
            const double b_loglog = -r * n;
            auto z5 = make_row("classical", 6, "p=n", "=", n, "<=", b_loglog, Envelope::log_power(r));
            z5.verified = verify(ZygmundExample::zygmund2, prm, Envelope::log_power(r), n, b_loglog, n, b_loglog + 0.1);
            rows.push_back(z5);
        }
        if (above) {
            auto z = make_row("classical", 7, "p>n", "=", p, "=", 0.0, Envelope::one());
            z.unconditional = true;
            z.verified = verify_unconditional(ex, prm);
            rows.push_back(z);
        }
        return rows;
    }

    const bool two = ex == ZygmundExample::zygmund2;
    const std::string name = two ? "zygmund2" : "zygmund";
    if (below) {
        const double qm = q_max(p, n, r), bm = beta_max(p, a, n, r, g);
        const Envelope E = two ? Envelope::power_loglog(r, g) : Envelope::power_log(r, g);
        auto z1 = make_row(name, 1, "p<n", "<", qm, "any", 0.0, E);
        z1.verified = verify(ex, prm, E, 0.99 * qm, a + 5.0, 1.01 * qm, a - 5.0);
        rows.push_back(z1);
        auto z2 = make_row(name, 2, "p<n", "=", qm, "<=", bm, E);
        z2.verified = verify(ex, prm, E, qm, bm, qm, bm + 0.1);
        rows.push_back(z2);
    }
    if (!two && at && a < n - 1.0) {
        const Envelope E3 = Envelope::exp(n / (n - 1.0 - a));
        auto z3 = make_row(name, 3, "p=n, alpha<n-1", "<", n, "any", 0.0, E3);
        z3.verified = verify(ex, prm, E3, n - 0.1, a + 5.0, n, a);
        rows.push_back(z3);
        const double b4 = a * (1.0 + r) - r * (n - 1.0);
        auto z4 = make_row(name, 4, "p=n, alpha<n-1", "=", n, "<=", b4, Envelope::power(r));
        z4.verified = verify(ex, prm, Envelope::power(r), n, b4, n, b4 + 0.1);
        rows.push_back(z4);
    }
    if (!two && at && a == n - 1.0) {
        const Envelope E5 = Envelope::exp_exp(np);
        auto z5 = make_row(name, 5, "p=n, alpha=n-1", "<", n, "any", 0.0, E5);
        z5.verified = verify(ex, prm, E5, n - 0.1, a + 5.0, n, a);
        rows.push_back(z5);
        const Envelope E6 = Envelope::exp(np);
        auto z6 = make_row(name, 6, "p=n, alpha=n-1", "=", n, "<", n - 1.0, E6);
        z6.verified = verify(ex, prm, E6, n, n - 1.1, n, n - 1.0);
        rows.push_back(z6);
    }
    if (!two && at && a > n - 1.0) {
        auto z = make_row(name, 8, "p=q=n, alpha=beta>n-1", "=", n, "=", a, Envelope::one());
        z.unconditional = true;
        z.verified = verify_unconditional(ex, prm);
        rows.push_back(z);
    }
    if (two && at) {
        const Envelope E3 = Envelope::exp_power_log(np, a / (n - 1.0));
        auto z3 = make_row(name, 3, "p=n", "<", n, "any", 0.0, E3);
        z3.verified = verify(ex, prm, E3, n - 0.1, a + 5.0, n, a);
        rows.push_back(z3);
        if (g > 0.0) {
            const double b4 = a - n * g;
            auto z4 = make_row(name, 4, "p=q=n, gamma>0", "=", n, "<=", b4, Envelope::log_power(g));
            z4.verified = verify(ex, prm, Envelope::log_power(g), n, b4, n, b4 + 0.1);
            rows.push_back(z4);
        }
    }
    if (above) {
        auto z = make_row(name, two ? 6 : 9, "p=q>n, alpha=beta", "=", p, "=", a, Envelope::one());
        z.unconditional = true;
        z.verified = verify_unconditional(ex, prm);
        rows.push_back(z);
    }
    auto last = make_row(name, two ? 5 : 7, "p=q, alpha=beta", "=", p, "=", a, Envelope::one());
    last.verified = verify(ex, prm, Envelope::one(), p, a, p, a + 0.1);
    rows.push_back(last);
    return rows;
}

const char* to_string(ZygmundExample ex) {
    switch (ex) {
        case ZygmundExample::zygmund: return "zygmund";
        case ZygmundExample::zygmund2: return "zygmund2";
        case ZygmundExample::classical: return "classical";
    }
    return "?";
}

ZygmundExample parse_zygmund_example(const std::string& name) {
    for (auto ex : {ZygmundExample::zygmund, ZygmundExample::zygmund2, ZygmundExample::classical}) {
        if (name == to_string(ex)) return ex;
    }
    throw std::invalid_argument("unknown table '" + name + "' (zygmund, zygmund2, classical)");
}

std::vector<ZygmundParams> default_zygmund_sweep(ZygmundExample ex) {
    std::vector<ZygmundParams> out;
    const std::vector<double> alphas = ex == ZygmundExample::classical ? std::vector<double>{0.0}
                                                                       : std::vector<double>{0.0, 0.5, 1.0, 2.0, 3.0};
    for (int n : {2, 3, 4}) {
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.5}) {
            for (double a : alphas) {
                for (double r : {0.5, 1.0, 2.0}) {
                    for (double g : {0.0, 0.5}) out.push_back({p, a, n, r, g});
                }
            }
        }
    }
    return out;
}

std::string zygmund_csv(ZygmundExample ex, const std::vector<ZygmundParams>& sweep) {
    std::string out =
        "example,p,alpha,n,r,gamma,row,regime,q_relation,q_bound,beta_relation,beta_bound,envelope,unconditional,"
        "verified\n";
    for (const auto& prm : sweep) {
        for (const auto& z : zygmund_table(ex, prm)) {
            out += fmt::format("{},{:g},{:g},{},{:g},{:g},{},\"{}\",{},{:.12g},{},{:.12g},\"{}\",{},{}\n", z.example, prm.p,
                               prm.alpha, prm.n, prm.r, prm.gamma, z.row, z.regime, z.q_relation, z.q_bound,
                               z.beta_relation, z.beta_bound, z.envelope, z.unconditional ? 1 : 0, z.verified ? 1 : 0);
        }
    }
    return out;
}

}  // namespace orlicz
