#include "orlicz/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kPi = std::numbers::pi;

CorpusEntry entry(std::string name, int n, std::function<double(const Point&)> v,
                  std::function<Point(const Point&)> g, std::vector<Face> faces = {}) {
    CorpusEntry e;
    e.name = name;
    e.u = TestFunction{std::move(v), std::move(g), std::move(name)};
    e.box = BoxDomain::unit(n, std::move(faces));
    return e;
}

double dist2(const Point& x, double c, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += (x[i] - c) * (x[i] - c);
    return s;
}

std::vector<CorpusEntry> make_functions() {
    std::vector<CorpusEntry> c;
    c.push_back(entry("const1", 2, [](const Point&) { return 1.0; }, [](const Point&) { return Point{}; }));
    c.push_back(entry("x1", 2, [](const Point& x) { return x[0]; }, [](const Point&) { return Point{1.0, 0.0, 0.0}; }));
    c.push_back(entry(
        "sinprod2", 2, [](const Point& x) { return std::sin(kPi * x[0]) * std::sin(kPi * x[1]); },
        [](const Point& x) {
            return Point{kPi * std::cos(kPi * x[0]) * std::sin(kPi * x[1]),
                         kPi * std::sin(kPi * x[0]) * std::cos(kPi * x[1]), 0.0};
        }));
    c.push_back(entry(
        "gauss2", 2, [](const Point& x) { return std::exp(-10.0 * dist2(x, 0.5, 2)); },
        [](const Point& x) {
            const double e = -20.0 * std::exp(-10.0 * dist2(x, 0.5, 2));
            return Point{e * (x[0] - 0.5), e * (x[1] - 0.5), 0.0};
        }));
    c.push_back(entry(
        "poly3", 3, [](const Point& x) { return x[0] * x[1] * x[2]; },
        [](const Point& x) { return Point{x[1] * x[2], x[0] * x[2], x[0] * x[1]}; }));
    c.push_back(entry(
        "neglog1", 1, [](const Point& x) { return -std::log(x[0]); },
        [](const Point& x) { return Point{-1.0 / x[0], 0.0, 0.0}; }, {{0, false}}));
    c.push_back(entry(
        "invquarter1", 1, [](const Point& x) { return std::pow(x[0], -0.25); },
        [](const Point& x) { return Point{-0.25 * std::pow(x[0], -1.25), 0.0, 0.0}; }, {{0, false}}));
    c.push_back(entry(
        "sqrt2", 2, [](const Point& x) { return std::sqrt(x[0]); },
        [](const Point& x) { return Point{0.5 / std::sqrt(x[0]), 0.0, 0.0}; }, {{0, false}}));
    c.push_back(entry(
        "cone2", 2, [](const Point& x) { return 1.0 - std::sqrt(dist2(x, 0.5, 2)); },
        [](const Point& x) {
            const double r = std::sqrt(dist2(x, 0.5, 2));
            if (r == 0.0) return Point{};
            return Point{-(x[0] - 0.5) / r, -(x[1] - 0.5) / r, 0.0};
        }));
    c.push_back(entry(
        "cosmix3", 3, [](const Point& x) { return std::cos(2.0 * kPi * x[0]) + x[1] * x[2]; },
        [](const Point& x) { return Point{-2.0 * kPi * std::sin(2.0 * kPi * x[0]), x[2], x[1]}; }));
    c.push_back(entry(
        "expsum2", 2, [](const Point& x) { return std::exp(x[0] + x[1]); },
        [](const Point& x) {
            const double e = std::exp(x[0] + x[1]);
            return Point{e, e, 0.0};
        }));
    c.push_back(entry(
        "abs1", 1, [](const Point& x) { return std::abs(x[0] - 0.3); },
        [](const Point& x) { return Point{x[0] >= 0.3 ? 1.0 : -1.0, 0.0, 0.0}; }));
    return c;
}

std::vector<CorpusEntry> make_intervals() {
    std::vector<CorpusEntry> c;
    const auto d1 = [](double v) { return Point{v, 0.0, 0.0}; };
    c.push_back(entry("i_x", 1, [](const Point& x) { return x[0]; }, [d1](const Point&) { return d1(1.0); }));
    c.push_back(entry("i_x2", 1, [](const Point& x) { return x[0] * x[0]; },
                      [d1](const Point& x) { return d1(2.0 * x[0]); }));
    c.push_back(entry("i_sin3pi", 1, [](const Point& x) { return std::sin(3.0 * kPi * x[0]); },
                      [d1](const Point& x) { return d1(3.0 * kPi * std::cos(3.0 * kPi * x[0])); }));
    c.push_back(entry(
        "i_x075", 1, [](const Point& x) { return std::pow(x[0], 0.75); },
        [d1](const Point& x) { return d1(0.75 * std::pow(x[0], -0.25)); }, {{0, false}}));
    c.push_back(entry("i_hump", 1, [](const Point& x) { return x[0] * (1.0 - x[0]); },
                      [d1](const Point& x) { return d1(1.0 - 2.0 * x[0]); }));
    c.push_back(entry("i_expm1", 1, [](const Point& x) { return std::expm1(x[0]); },
                      [d1](const Point& x) { return d1(std::exp(x[0])); }));
    return c;
}

}  // namespace

const std::vector<CorpusEntry>& function_corpus() {
    static const std::vector<CorpusEntry> c = make_functions();
    return c;
}

const std::vector<CorpusEntry>& interval_corpus() {
    static const std::vector<CorpusEntry> c = make_intervals();
    return c;
}

std::optional<CorpusEntry> find_corpus(const std::string& name) {
    for (const auto* list : {&function_corpus(), &interval_corpus()}) {
        for (const auto& e : *list) {
            if (e.name == name) return e;
        }
    }
    return std::nullopt;
}

std::vector<TestFunction> bump_corpus(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("bump_corpus: n must be 2 or 3");
    std::vector<TestFunction> b;
    {
        const double rho = 0.4;
        b.push_back({[n, rho](const Point& x) {
                         const double s = dist2(x, 0.5, n) / (rho * rho);
                         return s < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0;
                     },
                     [n, rho](const Point& x) {
                         const double s = dist2(x, 0.5, n) / (rho * rho);
                         if (s >= 1.0) return Point{};
                         const double phi = std::exp(1.0 - 1.0 / (1.0 - s));
                         const double k = -phi / ((1.0 - s) * (1.0 - s)) * 2.0 / (rho * rho);
                         Point g{};
                         for (int i = 0; i < n; ++i) g[i] = k * (x[i] - 0.5);
                         return g;
                     },
                     "smooth_bump"});
    }
    b.push_back({[n](const Point& x) {
                     double v = 1.0;
                     for (int i = 0; i < n; ++i) v *= std::sin(kPi * x[i]);
                     return v;
                 },
                 [n](const Point& x) {
                     Point g{};
                     for (int i = 0; i < n; ++i) {
                         double v = kPi * std::cos(kPi * x[i]);
                         for (int j = 0; j < n; ++j) {
                             if (j != i) v *= std::sin(kPi * x[j]);
                         }
                         g[i] = v;
                     }
                     return g;
                 },
                 "sinprod"});
    b.push_back({[n](const Point& x) {
                     double v = 1.0;
                     for (int i = 0; i < n; ++i) v *= 4.0 * x[i] * (1.0 - x[i]);
                     return v;
                 },
                 [n](const Point& x) {
                     Point g{};
                     for (int i = 0; i < n; ++i) {
                         double v = 4.0 * (1.0 - 2.0 * x[i]);
                         for (int j = 0; j < n; ++j) {
                             if (j != i) v *= 4.0 * x[j] * (1.0 - x[j]);
                         }
                         g[i] = v;
                     }
                     return g;
                 },
                 "polyprod"});
    {
        const double rho = 0.3, c = 0.4;
        b.push_back({[n, rho, c](const Point& x) { return std::max(0.0, 1.0 - std::sqrt(dist2(x, c, n)) / rho); },
                     [n, rho, c](const Point& x) {
                         const double r = std::sqrt(dist2(x, c, n));
                         Point g{};
                         if (r == 0.0 || r >= rho) return g;
                         for (int i = 0; i < n; ++i) g[i] = -(x[i] - c) / (r * rho);
                         return g;
                     },
                     "cone"});
    }
    {
        const double rho = 0.35, c = 0.6;
        b.push_back({[n, rho, c](const Point& x) {
                         const double s = dist2(x, c, n) / (rho * rho);
                         return s < 1.0 ? (1.0 - s) * (1.0 - s) : 0.0;
                     },
                     [n, rho, c](const Point& x) {
                         const double s = dist2(x, c, n) / (rho * rho);
                         Point g{};
                         if (s >= 1.0) return g;
                         for (int i = 0; i < n; ++i) g[i] = -4.0 * (1.0 - s) * (x[i] - c) / (rho * rho);
                         return g;
                     },
                     "quartic_bump"});
    }
    return b;
}

}  // namespace orlicz
