#include "orlicz/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double improper_value(const ImproperResult& r) { return r.status == TailStatus::diverged ? kInf : r.value; }

double integrate_from(const std::function<double(const Point&)>& f, const BoxDomain& box, int axis, const Point& x,
                      const ModularOptions& opt) {
    if (axis == box.n) return f(x);
    auto g = [&, axis](double t) {
        Point y = x;
        y[static_cast<std::size_t>(axis)] = t;
        return integrate_from(f, box, axis + 1, y, opt);
    };
    const auto ax = static_cast<std::size_t>(axis);
    const double a = box.lower[ax], b = box.upper[ax];
    const bool sl = box.singular(axis, false), su = box.singular(axis, true);
    ImproperOptions io;
    io.rel_tol = std::max(opt.rel_tol, 1e-13);
    if (sl && su) {
        const double m = 0.5 * (a + b);
        return improper_value(integrate_toward_lower(g, a, m, io)) + improper_value(integrate_toward_upper(g, m, b, io));
    }
    if (sl) return improper_value(integrate_toward_lower(g, a, b, io));
    if (su) return improper_value(integrate_toward_upper(g, a, b, io));
    QuadOptions q;
    q.rel_tol = opt.rel_tol;
    const QuadResult r = integrate(g, a, b, q);
    if (std::isinf(r.value)) return kInf;
    if (!r.converged && r.error > 1e-6 * std::abs(r.value)) {
        throw IndeterminateError("integrate_box: quadrature did not converge on a regular axis; declare the singular face");
    }
    return r.value;
}

}  // namespace

BoxDomain BoxDomain::unit(int n, std::vector<Face> faces) {
    BoxDomain b;
    b.n = n;
    b.singular_faces = std::move(faces);
    b.validate();
    return b;
}

void BoxDomain::validate() const {
    if (n < 1 || n > 3) throw std::invalid_argument("BoxDomain: dimension must be 1, 2 or 3");
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (std::isinf(lower[k]) || std::isinf(upper[k])) {
            throw PreconditionError("BoxDomain: unbounded sides need a truncation radius and decay envelope");
        }
        if (!(lower[k] < upper[k])) throw std::invalid_argument("BoxDomain: lower < upper required on every axis");
    }
    for (const auto& f : singular_faces) {
        if (f.axis < 0 || f.axis >= n) throw std::invalid_argument("BoxDomain: singular face axis out of range");
    }
}

double BoxDomain::measure() const {
    double m = 1.0;
    for (int i = 0; i < n; ++i) m *= upper[static_cast<std::size_t>(i)] - lower[static_cast<std::size_t>(i)];
    return m;
}

bool BoxDomain::singular(int axis, bool upper_side) const {
    return std::any_of(singular_faces.begin(), singular_faces.end(),
                       [&](const Face& f) { return f.axis == axis && f.upper == upper_side; });
}

double norm(const Point& p, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
    return std::sqrt(s);
}

GradientCheck check_gradient(const TestFunction& u, const BoxDomain& box, std::size_t points, double rel_tol,
                             std::uint64_t seed) {
    box.validate();
    std::mt19937_64 rng(seed);
    GradientCheck out;
    for (std::size_t p = 0; p < points; ++p) {
        Point x{};
        for (int i = 0; i < box.n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const double side = box.upper[k] - box.lower[k];
            const double lo = box.lower[k] + (box.singular(i, false) ? 0.1 : 0.01) * side;
            const double hi = box.upper[k] - (box.singular(i, true) ? 0.1 : 0.01) * side;
            x[k] = std::uniform_real_distribution<double>(lo, hi)(rng);
        }
        const Point g = u.gradient(x);
        for (int i = 0; i < box.n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
            Point xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            const double fd = (u.value(xp) - u.value(xm)) / (2.0 * h);
            const double err = std::abs(fd - g[k]) / (1.0 + std::abs(g[k]));
            out.worst = std::max(out.worst, err);
        }
    }
    out.consistent = out.worst <= rel_tol;
    return out;
}

ExtReal integrate_box(const std::function<double(const Point&)>& f, const BoxDomain& box, const ModularOptions& opt) {
    box.validate();
    const double v = integrate_from(f, box, 0, Point{}, opt);
    if (std::isnan(v)) throw IndeterminateError("integrate_box: integrand produced NaN");
    return std::isinf(v) ? ExtReal::infinity() : ExtReal(std::max(v, 0.0));
}

ExtReal modular_integral(const TestFunction& u, const YoungFunction& Y, double lambda, const BoxDomain& box,
                         const ModularOptions& opt) {
    if (!(lambda > 0.0)) throw std::domain_error("modular_integral: lambda must be positive");
    return integrate_box(
        [&](const Point& x) {
            const double v = std::abs(u.value(x));
            return v == 0.0 ? 0.0 : Y(v / lambda);
        },
        box, opt);
}

ExtReal modular_gradient(const TestFunction& u, const YoungFunction& Y, double lambda, const BoxDomain& box,
                         const ModularOptions& opt) {
    if (!(lambda > 0.0)) throw std::domain_error("modular_gradient: lambda must be positive");
    return integrate_box(
        [&](const Point& x) {
            const double v = norm(u.gradient(x), box.n);
            return v == 0.0 ? 0.0 : Y(v / lambda);
        },
        box, opt);
}

ExtReal modular_gradient(const TestFunction& u, const NDimYoungFunction& Phi, double lambda, const BoxDomain& box,
                         const ModularOptions& opt) {
    if (!(lambda > 0.0)) throw std::domain_error("modular_gradient: lambda must be positive");
    if (Phi.dim() != box.n) throw std::invalid_argument("modular_gradient: Phi dimension must match the box");
    return integrate_box(
        [&](const Point& x) {
            const Point g = u.gradient(x);
            Vec xi(g.begin(), g.begin() + box.n);
            for (auto& v : xi) v /= lambda;
            return Phi(xi);
        },
        box, opt);
}

ExtReal luxemburg_norm(const ModularFn& M) {
    auto admissible = [&](double l) { return M(l) <= ExtReal(1.0); };
    if (M(1.0) == ExtReal(0.0) && M(1e-12) == ExtReal(0.0)) return 0.0;
    double lo, hi;
    if (admissible(1.0)) {
        hi = 1.0;
        lo = 0.5;
        while (admissible(lo)) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-300) return 0.0;
        }
    } else {
        lo = 1.0;
        hi = 2.0;
        while (!admissible(hi)) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e12) return ExtReal::infinity();
        }
    }
    while (hi / lo - 1.0 > 1e-12) {
        const double mid = std::sqrt(lo * hi);
        if (admissible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

ExtReal luxemburg_norm(const TestFunction& u, const YoungFunction& Y, const BoxDomain& box) {
    return luxemburg_norm([&](double l) { return modular_integral(u, Y, l, box); });
}

W1AQuantities w1a_quantities(const TestFunction& u, const YoungFunction& Y, const BoxDomain& box) {
    W1AQuantities q;
    q.modular_u = [u, Y, box](double l) { return modular_integral(u, Y, l, box); };
    q.modular_grad = [u, Y, box](double l) { return modular_gradient(u, Y, l, box); };
    q.norm_u = luxemburg_norm(q.modular_u);
    q.norm_grad = luxemburg_norm(q.modular_grad);
    return q;
}

bool row_converges(const std::vector<double>& indices, const std::vector<ExtReal>& column, const ConvergenceRule& rule) {
    if (column.empty()) return false;
    for (const auto& v : column) {
        if (v.is_infinite()) return false;
    }
    for (std::size_t i = 1; i < column.size(); ++i) {
        if (column[i].value() > column[i - 1].value() * (1.0 + 1e-9)) return false;
    }
    const double first = column.front().value(), last = column.back().value();
    if (last <= rule.rel_drop * first || last == 0.0) return true;
    std::vector<double> k, v;
    for (std::size_t i = column.size() / 2; i < column.size(); ++i) {
        k.push_back(indices[i]);
        v.push_back(column[i].value());
    }
    if (k.size() < 2) return false;
    return loglog_slope(k, v) <= -rule.min_rate;
}

TestFunction difference(const TestFunction& a, const TestFunction& b) {
    TestFunction d;
    d.value = [a, b](const Point& x) { return a.value(x) - b.value(x); };
    d.gradient = [a, b](const Point& x) {
        const Point ga = a.gradient(x), gb = b.gradient(x);
        return Point{ga[0] - gb[0], ga[1] - gb[1], ga[2] - gb[2]};
    };
    d.label = a.label + " - " + b.label;
    return d;
}

TestFunction scaled(const TestFunction& u, double c) {
    TestFunction s;
    s.value = [u, c](const Point& x) { return c * u.value(x); };
    s.gradient = [u, c](const Point& x) {
        const Point g = u.gradient(x);
        return Point{c * g[0], c * g[1], c * g[2]};
    };
    s.label = u.label + "*" + std::to_string(c);
    return s;
}

ModularReport modular_convergence(const std::vector<TestFunction>& seq, const std::vector<double>& indices,
                                  const TestFunction& limit, const YoungFunction& Y, const BoxDomain& box,
                                  const std::vector<double>& lambda_grid, ModularPart part, const ConvergenceRule& rule,
                                  Execution exec) {
    if (lambda_grid.empty()) throw std::invalid_argument("modular_convergence: empty lambda grid");
    for (std::size_t j = 1; j < lambda_grid.size(); ++j) {
        if (!(lambda_grid[j] > lambda_grid[j - 1])) throw std::invalid_argument("modular_convergence: lambda grid must increase");
    }
    if (seq.size() != indices.size()) throw std::invalid_argument("modular_convergence: one index per sequence element");
    box.validate();
    ModularReport rep;
    rep.indices = indices;
    rep.lambda_grid = lambda_grid;
    const std::size_t K = seq.size(), L = lambda_grid.size();
    std::vector<TestFunction> diffs;
    diffs.reserve(K);
    for (const auto& u : seq) diffs.push_back(difference(u, limit));
    std::vector<ExtReal> cells(K * L);
    for_each_index(K * L, exec, [&](std::size_t c) {
        const auto& d = diffs[c / L];
        const double l = lambda_grid[c % L];
        ExtReal v = 0.0;
        if (part != ModularPart::gradient) v = v + modular_integral(d, Y, l, box);
        if (part != ModularPart::value) v = v + modular_gradient(d, Y, l, box);
        cells[c] = v;
    });
    rep.values.assign(K, std::vector<ExtReal>(L));
    for (std::size_t c = 0; c < K * L; ++c) rep.values[c / L][c % L] = cells[c];
    for (std::size_t j = 0; j < L; ++j) {
        std::vector<ExtReal> column(K);
        for (std::size_t i = 0; i < K; ++i) column[i] = rep.values[i][j];
        if (row_converges(indices, column, rule)) rep.converging_lambdas.push_back(lambda_grid[j]);
    }
    rep.norm_convergence = rep.converging_lambdas.size() == L;
    if (!rep.converging_lambdas.empty()) rep.smallest_converging_lambda = rep.converging_lambdas.front();
    return rep;
}

}  // namespace orlicz
