// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "orlicz/aniso.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/conjugate.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/nemytskii.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void fail(Result& r, const std::string& why) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += why;
}

Result conjugate_recovery() {
    Result r;
    double worst = 0.0, slowest = 0.0;
    for (auto [p, n] : {std::pair{1.0, 2}, {2.0, 3}, {3.0, 4}}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto c = sobolev_conjugate(power(p), n);
        const double e = fitted_exponent(c.An, 1e2, 1e6);
        const double secs = seconds_since(t0);
        const double want = n * p / (n - p);
        // Oracle: H_n(s) = ((n-1)/(n-p))^{(n-1)/n} s^{(n-p)/n}.
        const double k = std::pow((n - 1.0) / (n - p), (n - 1.0) / n);
        for (double s : {1e-2, 1.0, 1e4})
            if (std::abs((*c.Hn)(s) / (k * std::pow(s, (n - p) / n)) - 1.0) > 1e-9)
                fail(r, fmt::format("H_n off the closed form at p={} n={} s={}", p, n, s));
        worst = std::max(worst, std::abs(e - want));
        slowest = std::max(slowest, secs);
        if (std::abs(e - want) > 1e-3) fail(r, fmt::format("p={} n={}: exponent {} vs {}", p, n, e, want));
        if (secs >= 5.0) fail(r, fmt::format("p={} n={}: {:.2f} s", p, n, secs));
    }
    if (r.pass) r.detail = fmt::format("max |exponent error| {:.2e}, slowest {:.3f} s", worst, slowest);
    return r;
}

Result classification_table() {
    Result r;
    int cases = 0, indeterminate = 0;
    for (int n : {2, 3}) {
        for (double p : {1.0, 1.5, n - 0.1, double(n), n + 0.1, 2.0 * n}) {
            const auto inf = classify_integral_inf(power(p), n);
            const auto zero = classify_integral_zero(power(p), n);
            ++cases;
            if ((inf == Classification::diverges) != (p <= n))
                fail(r, fmt::format("inf p={} n={}: {}", p, n, to_string(inf)));
            if ((zero == Classification::converges) != (p < n))
                fail(r, fmt::format("zero p={} n={}: {}", p, n, to_string(zero)));
        }
        const std::vector<YoungFunction> parametric{
            power_log(1.5, 1.0), power_log(double(n), -1.0), power_log(double(n), 2.0), power_loglog(double(n), 1.0),
            power_loglog(2.0 * n, -1.0), exp_young(1.0), exp_young(0.5), power_exp(1.0, 1.0), exp_neg_inv(1.0),
            linear(2.0)};
        for (const auto& Y : parametric) {
            for (auto c : {classify_integral_inf(Y, n), classify_integral_zero(Y, n)}) {
                ++cases;
                if (c == Classification::indeterminate) ++indeterminate;
            }
        }
    }
    if (indeterminate > 0) fail(r, fmt::format("{} indeterminate on parametric kinds", indeterminate));
    if (r.pass) r.detail = fmt::format("{} classifications, 0 indeterminate", cases);
    return r;
}

Result classical_example() {
    Result r;
    for (auto [p, n, s] : {std::tuple{2.0, 3.0, 1.0}, {1.0, 2.0, 2.0}, {2.0, 4.0, 0.5}}) {
        const double q = n * p / (n + s * (n - p));  // independent of q_max
        if (std::abs(q - q_max(p, n, s)) > 1e-14) fail(r, "q_max disagrees with the closed form");
        if (!check_inq_ass2(power(p), power(q), Envelope::power(s), n).holds)
            fail(r, fmt::format("boundary q={} does not hold (p={} n={} r={})", q, p, n, s));
        if (check_inq_ass2(power(p), power(1.05 * q), Envelope::power(s), n).status != Truth::fails)
            fail(r, fmt::format("1.05 q does not fail (p={} n={} r={})", p, n, s));
    }
    for (int n : {2, 3}) {
        const double np = n / (n - 1.0);
        if (!check_inq_ass2(power(n), power(n - 0.1), Envelope::exp(np), n).holds)
            fail(r, fmt::format("p=n={} with exp(t^n') does not hold at q=n-0.1", n));
    }
    if (r.pass) r.detail = "3 boundaries hold, 3 at 1.05q fail, p=n rows hold for n=2,3";
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Result zygmund_golden() {
    Result r;
    std::size_t rows = 0;
    for (auto ex : {ZygmundExample::zygmund, ZygmundExample::zygmund2}) {
        const std::string path = std::string(ORLICZ_GOLDEN_DIR) + "/" + to_string(ex) + ".csv";
        const std::string want = slurp(path);
        if (want.empty()) fail(r, "missing " + path);
        const std::string got = zygmund_csv(ex, default_zygmund_sweep(ex));
        if (got != want) fail(r, fmt::format("{} differs from the golden file", to_string(ex)));
        for (const auto& prm : default_zygmund_sweep(ex)) {
            if (prm.p >= prm.n) continue;
            const double n = prm.n;
            const double oracle =
                n * (prm.alpha * (1.0 + prm.r) - prm.gamma * prm.p) / (n + prm.r * (n - prm.p));
            const double b = beta_max(prm.p, prm.alpha, n, prm.r, prm.gamma);
            if (std::abs(b - oracle) > 1e-12 * (1.0 + std::abs(oracle)))
                fail(r, fmt::format("beta_max {} vs {}", b, oracle));
            for (const auto& row : zygmund_table(ex, prm)) {
                ++rows;
                if (!row.verified) fail(r, fmt::format("{} row {} not verified", to_string(ex), row.row));
            }
        }
    }
    if (r.pass) r.detail = fmt::format("both tables byte-identical, {} p<n rows verified", rows);
    return r;
}

Result counterexample() {
    Result r;
    CounterexampleOptions opt;
    opt.dim = 2;
    opt.ks = {8, 64, 512};
    opt.deltas = {1e-3, 1e-4, 1e-6};
    opt.lambdas = {0.25, 0.5, 1.0, 2.0, 4.0};
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = counterexample_run(opt);
    const double secs = seconds_since(t0);

    // (a) literal drop below 1e-3 of the first value by k = 512.
    std::string drops;
    bool a = true;
    for (std::size_t j = 0; j < opt.lambdas.size(); ++j) {
        const double d = c.w_modular.back()[j] / c.w_modular.front()[j];
        drops += fmt::format("{}{:g}:{:.2e}", j ? " " : "", opt.lambdas[j], d);
        if (!(d < 1e-3)) a = false;
    }
    if (!a) fail(r, fmt::format("(a) drop by k=512 [{}] not below 1e-3", drops));

    // (b) strips at lambda = 1 against ((log delta)^2 - (log k)^2) / 2.
    double worst = 0.0;
    std::size_t strips = 0;
    for (const auto& s : c.strips) {
        if (s.skipped || s.lambda != 1.0) continue;
        const double want = 0.5 * (std::pow(std::log(s.delta), 2) - std::pow(std::log(s.k), 2));
        worst = std::max(worst, std::abs(s.quadrature - want) / want);
        ++strips;
    }
    if (strips != 9 || worst > 1e-6) fail(r, fmt::format("(b) {} strips, worst rel err {:.2e}", strips, worst));

    // (c) divergence certified at lambda = 1.
    bool certified = false;
    for (std::size_t j = 0; j < opt.lambdas.size(); ++j)
        if (opt.lambdas[j] == 1.0) certified = c.divergent[j];
    if (!certified) fail(r, "(c) delta trend does not certify divergence");
    if (secs >= 60.0) fail(r, fmt::format("{:.1f} s", secs));

    const std::string bc = fmt::format("(b) worst rel err {:.2e} over {} strips, (c) divergent at lambda=1, {:.2f} s",
                                       worst, strips, secs);
    if (r.pass)
        r.detail = "(a) all drops below 1e-3, " + bc;
    else
        r.detail += "; " + bc;
    return r;
}

Result theta_consistency() {
    Result r;
    const auto Phi = NDimYoungFunction::isotropic(power(2.0), 3);
    const ThetaSolver solver(Phi, Envelope::power(1.0), 3);
    const auto& Hn = *solver.conjugate().Hn;
    double worst = 0.0;
    const int count = 1000;
    for (int i = 0; i < count; ++i) {
        const double s = std::pow(10.0, -3.0 + 6.0 * i / (count - 1.0));
        const double t = Hn.inverse(s) * s;  // H_n^{-1}(s) E(s)
        const double th = solver.theta({t, 0.0, 0.0});
        worst = std::max(worst, std::abs(th - s) / s);
    }
    if (worst > 1e-6) fail(r, fmt::format("worst rel err {:.2e}", worst));
    if (r.pass) r.detail = fmt::format("{} values of s in [1e-3, 1e3], worst rel err {:.2e}", count, worst);
    return r;
}

Result lemma_grid() {
    Result r;
    double worst = std::numeric_limits<double>::infinity();
    for (auto [p, n, s] : {std::tuple{2.0, 3, 1.0}, {1.0, 2, 2.0}, {2.0, 4, 0.5}}) {
        const double q = n * p / (n + s * (n - p));
        const auto v = lemma_sobolev_grid(power(p), power(q), Envelope::power(s), n);
        if (v.refused) {
            fail(r, "refused: " + v.note);
            continue;
        }
        worst = std::min(worst, v.worst_margin);
        if (!v.holds || v.points < 64u * 64u)
            fail(r, fmt::format("p={} n={} r={}: holds={} points={} margin {:.2e}", p, n, s, v.holds, v.points,
                                v.worst_margin));
    }
    if (r.pass) r.detail = fmt::format("3 families, worst normalized margin {:.2e}", worst);
    return r;
}

Result luxemburg_properties() {
    Result r;
    double worst = 0.0;
    std::size_t checks = 0;
    for (const auto& Y : {power(2.0), power_log(2.0, 1.0)}) {
        for (const auto& e : function_corpus()) {
            const double a = luxemburg_norm(e.u, Y, e.box).value();
            const double b = luxemburg_norm(scaled(e.u, 3.0), Y, e.box).value();
            if (!std::isfinite(a) || a <= 0.0) {
                fail(r, fmt::format("{} {}: norm {}", e.name, Y.label(), a));
                continue;
            }
            const double rel = std::abs(b - 3.0 * a) / b;
            worst = std::max(worst, rel);
            if (rel > 1e-8) fail(r, fmt::format("{} {}: homogeneity {:.2e}", e.name, Y.label(), rel));
            // Unit ball: ||v|| <= 1 iff int Y(|v|) <= 1, on both sides of the sphere.
            for (double c : {0.5, 0.95, 1.05, 2.0}) {
                const auto v = scaled(e.u, c / a);
                const bool in_ball = c <= 1.0;
                const bool modular_le_one = modular_integral(v, Y, 1.0, e.box) <= ExtReal(1.0);
                ++checks;
                if (in_ball != modular_le_one) fail(r, fmt::format("{} {}: unit ball at {}", e.name, Y.label(), c));
            }
        }
    }
    std::size_t oned = 0;
    for (const auto& A : {power(2.0), power(1.5), linear(), power_exp(1.0, 1.0)}) {
        for (const auto& e : interval_corpus()) {
            const auto c = check_sup_bound(e.u, A, e.box);
            ++oned;
            if (!c.holds) fail(r, fmt::format("1-D {} {}: {} > {}", A.label(), e.name, c.sup, c.bound));
        }
    }
    if (r.pass)
        r.detail = fmt::format("{} functions, homogeneity worst {:.2e}, {} unit-ball checks, {} 1-D checks",
                               function_corpus().size(), worst, checks, oned);
    return r;
}

Result orthotropic() {
    Result r;
    if (bar_p({1.0, 4.0}) != 1.6) fail(r, fmt::format("bar_p(1,4) = {:.17g}", bar_p({1.0, 4.0})));
    const std::vector<YoungFunction> A(3, power(2.0));
    const double pb = bar_p({2.0, 2.0, 2.0});
    const double q = 3.0 * pb / (3.0 + 1.0 * (3.0 - pb));
    if (q != 1.5) fail(r, fmt::format("boundary q = {}", q));
    if (!check_ortho(A, std::vector<YoungFunction>(3, power(1.5)), Envelope::power(1.0), 3).holds)
        fail(r, "q = 1.5 does not hold");
    if (check_ortho(A, std::vector<YoungFunction>(3, power(1.6)), Envelope::power(1.0), 3).holds)
        fail(r, "q = 1.6 holds");
    for (const auto& Y : {power(2.0), power_log(2.0, 1.0)}) {
        const auto bar = orthotropic_bar({Y, Y, Y});
        for (auto reg : {Regime::near_zero(), Regime::near_infinity()}) {
            const auto v = equivalent(bar, Y, reg);
            if (!v.equivalent || v.constant > 1.0 + 1e-12)
                fail(r, fmt::format("{}: equivalence constant {}", Y.label(), v.constant));
        }
        for (double t : {1e-3, 1.0, 1e3})
            if (std::abs(bar(t) - Y(t)) > 1e-12 * Y(t)) fail(r, fmt::format("{}: Abar({}) differs", Y.label(), t));
    }
    if (r.pass) r.detail = "bar_p = 1.6, q = 1.5 holds, 1.6 fails, equal components give constant 1";
    return r;
}

Result poincare() {
    Result r;
    std::string d;
    for (int n : {2, 3}) {
        const auto p = poincare_probe(bump_corpus(n), power(2.0), BoxDomain::unit(n));
        if (p.rows.size() != 5) fail(r, fmt::format("n={}: {} rows", n, p.rows.size()));
        if (!p.finite || !p.stable)
            fail(r, fmt::format("n={}: finite={} stable={} drift {:.2e}", n, p.finite, p.stable, p.drift));
        d += fmt::format("{}n={}: c*={:.4g} drift {:.2e}", d.empty() ? "" : ", ", n, p.c_star, p.drift);
    }
    if (r.pass) r.detail = d;
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Result()>>> criteria{
        {1, conjugate_recovery}, {2, classification_table}, {3, classical_example}, {4, zygmund_golden},
        {5, counterexample},     {6, theta_consistency},    {7, lemma_grid},        {8, luxemburg_properties},
        {9, orthotropic},        {10, poincare}};
    int failures = 0;
    for (const auto& [id, run] : criteria) {
        Result r;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r = run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (!r.pass) ++failures;
        std::cout << fmt::format("criterion {:>2}: {} - {} [{:.1f} s]", id, r.pass ? "PASS" : "FAIL", r.detail,
                                 seconds_since(t0))
                  << std::endl;
    }
    return failures;
}
