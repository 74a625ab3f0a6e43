#include "orlicz/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// Returns false if the integrand hit +inf.
bool gk15(const ScalarFn& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    if (std::isnan(fc)) throw std::runtime_error("integrand returned NaN at " + std::to_string(c));
    if (std::isinf(fc)) return false;
    double k = wgk[7] * fc;
    double g = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        if (std::isnan(f1) || std::isnan(f2)) {
            throw std::runtime_error("integrand returned NaN near " + std::to_string(c));
        }
        if (std::isinf(f1) || std::isinf(f2)) return false;
        k += wgk[j] * (f1 + f2);
        if (j % 2 == 1) g += wg[j / 2] * (f1 + f2);
    }
    value = k * h;
    error = std::abs((k - g) * h);
    return true;
}

}  // namespace

QuadResult integrate(const ScalarFn& f, double a, double b, const QuadOptions& opt) {
    QuadResult out;
    if (a == b) return out;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::priority_queue<Panel> heap;
    double v = 0.0, e = 0.0;
    if (!gk15(f, a, b, v, e)) {
        out.value = kInf;
        return out;
    }
    out.evaluations = 15;
    heap.push({a, b, v, e, 0});
    double total = v, err = e;
    std::vector<Panel> done;
    while (!heap.empty() && err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           static_cast<int>(heap.size() + done.size()) < opt.max_panels) {
        Panel p = heap.top();
        heap.pop();
        if (p.depth >= opt.max_depth) {
            done.push_back(p);
            continue;
        }
        const double m = 0.5 * (p.a + p.b);
        double v1, e1, v2, e2;
        if (!gk15(f, p.a, m, v1, e1) || !gk15(f, m, p.b, v2, e2)) {
            out.value = sign * kInf;
            return out;
        }
        out.evaluations += 30;
        total += v1 + v2 - p.value;
        err += e1 + e2 - p.error;
        heap.push({p.a, m, v1, e1, p.depth + 1});
        heap.push({m, p.b, v2, e2, p.depth + 1});
    }
    // Re-sum to limit cancellation drift in the running totals.
    total = 0.0;
    err = 0.0;
    for (const auto& p : done) {
        total += p.value;
        err += p.error;
    }
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    out.value = sign * total;
    out.error = err;
    out.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) * 1.0000001;
    return out;
}

QuadResult integrate_log(const ScalarFn& f, double a, double b, const QuadOptions& opt) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("integrate_log: endpoints must be positive");
    auto g = [&f](double u) {
        const double t = std::exp(u);
        const double y = f(t);
        return y == 0.0 ? 0.0 : y * t;
    };
    return integrate(g, std::log(a), std::log(b), opt);
}

namespace {

// Integral over v in [0, v_max] of h(v), block by block, with tail extrapolation.
ImproperResult integrate_blocks(const std::function<double(double)>& h, double v_max, const ImproperOptions& opt) {
    ImproperResult out;
    std::vector<double> blocks;
    double total = 0.0;
    QuadOptions q;
    q.rel_tol = opt.rel_tol * 0.1;
    q.abs_tol = 0.0;
    int quiet = 0;
    double v = 0.0;
    // Whole blocks only, so the trend test compares like with like.
    v_max = opt.block * std::floor(v_max / opt.block);
    while (v < v_max) {
        const double w = opt.block;
        QuadResult r = integrate(h, v, v + w, q);
        if (std::isinf(r.value)) {
            out.value = kInf;
            out.status = TailStatus::diverged;
            return out;
        }
        blocks.push_back(r.value);
        total += r.value;
        v += w;
        if (std::abs(r.value) <= opt.rel_tol * std::abs(total)) {
            if (++quiet >= 2) {
                out.value = total;
                return out;
            }
        } else {
            quiet = 0;
        }
        if (total == 0.0 && blocks.size() >= 8) {
            out.value = 0.0;
            return out;
        }
        if (total > 1e12 && blocks.size() >= 3 && blocks.back() >= blocks[blocks.size() - 2]) {
            out.value = kInf;
            out.status = TailStatus::diverged;
            return out;
        }
    }
    // Range exhausted before convergence: decide from the block trend.
    const std::size_t k = blocks.size();
    if (k < 4) {
        out.value = total;
        out.status = TailStatus::extrapolated;
        return out;
    }
    const double b2 = blocks[k - 1], b1 = blocks[k - 2];
    if (!(b1 > 0.0) || !(b2 > 0.0)) {
        out.value = total;
        out.status = TailStatus::extrapolated;
        return out;
    }
    const double l_last = std::log(b2 / b1);
    if (l_last >= -1e-3) {
        out.value = kInf;
        out.status = TailStatus::diverged;
        return out;
    }
    const std::size_t m = k / 2;
    const double bm1 = blocks[m - 1], bm = blocks[m];
    double tail;
    const double l_mid = (bm1 > 0.0 && bm > 0.0) ? std::log(bm / bm1) : l_last;
    if (l_mid < 0.0 && l_last / l_mid > 0.8) {
        const double rho = std::exp(l_last);
        tail = b2 * rho / (1.0 - rho);
    } else {
        const double v2 = v_max - 0.5 * opt.block, v1 = v2 - opt.block;
        const double a = -l_last / std::log(v2 / v1);
        if (a <= 1.0 + 1e-3) {
            out.value = kInf;
            out.status = TailStatus::diverged;
            return out;
        }
        tail = (b2 / opt.block) * v_max / (a - 1.0);
    }
    out.value = total + tail;
    out.status = TailStatus::extrapolated;
    return out;
}

// Log-range over which a +/- L e^{-v} still differs from the endpoint.
double resolvable_range(double endpoint, double L, double v_max) {
    const double gap = std::abs(std::nextafter(endpoint, endpoint + 1.0) - endpoint);
    return std::min(v_max, std::log(L / (4.0 * gap)));
}

}  // namespace

ImproperResult integrate_toward_lower(const ScalarFn& f, double a, double b, const ImproperOptions& opt) {
    const double L = b - a;
    auto h = [&](double v) {
        const double s = L * std::exp(-v);
        const double y = f(a + s);
        return y == 0.0 ? 0.0 : y * s;
    };
    return integrate_blocks(h, resolvable_range(a, L, opt.v_max), opt);
}

ImproperResult integrate_toward_upper(const ScalarFn& f, double a, double b, const ImproperOptions& opt) {
    const double L = b - a;
    auto h = [&](double v) {
        const double s = L * std::exp(-v);
        const double y = f(b - s);
        return y == 0.0 ? 0.0 : y * s;
    };
    return integrate_blocks(h, resolvable_range(b, L, opt.v_max), opt);
}

ImproperResult integrate_to_infinity(const ScalarFn& f, double a, const ImproperOptions& opt) {
    if (!(a > 0.0)) throw std::domain_error("integrate_to_infinity: a must be positive");
    auto h = [&](double v) {
        const double t = a * std::exp(v);
        const double y = f(t);
        return y == 0.0 ? 0.0 : y * t;
    };
    const double v_max = std::min(opt.v_max, std::log(1e300 / a));
    return integrate_blocks(h, v_max, opt);
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi >= lo) || count == 0) throw std::domain_error("log_grid: bad range");
    std::vector<double> g(count);
    if (count == 1) {
        g[0] = lo;
        return g;
    }
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> log_grid_per_decade(double lo, double hi, std::size_t per_decade) {
    const double decades = std::log10(hi / lo);
    const auto count = static_cast<std::size_t>(std::ceil(decades * static_cast<double>(per_decade))) + 1;
    return log_grid(lo, hi, std::max<std::size_t>(count, 2));
}

GaussRule gauss_legendre(std::size_t m) {
    if (m == 0) throw std::domain_error("gauss_legendre: m must be positive");
    GaussRule g;
    g.nodes.resize(m);
    g.weights.resize(m);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(m) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= m; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(m) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        g.nodes[i] = -x;
        g.nodes[m - 1 - i] = x;
        g.weights[i] = g.weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double dn = static_cast<double>(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

namespace {

std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> delta(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            // Harmonic mean keeps the interpolant monotone.
            d[i] = 2.0 / (1.0 / delta[i - 1] + 1.0 / delta[i]);
        }
    }
    return d;
}

}  // namespace

LogLogTable::LogLogTable(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("LogLogTable: need >= 2 points");
    lx_.resize(x.size());
    ly_.resize(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(y[i])) {
            throw std::invalid_argument("LogLogTable: data must be positive and finite");
        }
        lx_[i] = std::log(x[i]);
        ly_[i] = std::log(y[i]);
    }
    d_ = monotone_slopes(lx_, ly_);
    di_.resize(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) di_[i] = d_[i] > 0.0 ? 1.0 / d_[i] : 0.0;
}

double LogLogTable::eval_log(const std::vector<double>& xs, const std::vector<double>& ys,
                             const std::vector<double>& ds, double l) const {
    const std::size_t n = xs.size();
    if (l <= xs.front()) return ys.front() + ds.front() * (l - xs.front());
    if (l >= xs.back()) return ys.back() + ds.back() * (l - xs.back());
    const auto it = std::upper_bound(xs.begin(), xs.end(), l);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    (void)n;
    const double h = xs[i + 1] - xs[i];
    const double s = (l - xs[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * ys[i] + h10 * h * ds[i] + h01 * ys[i + 1] + h11 * h * ds[i + 1];
}

double LogLogTable::operator()(double x) const {
    if (x <= 0.0) return 0.0;
    return std::exp(eval_log(lx_, ly_, d_, std::log(x)));
}

double LogLogTable::inverse(double y) const {
    if (y <= 0.0) return 0.0;
    return std::exp(eval_log(ly_, lx_, di_, std::log(y)));
}

double LogLogTable::x_min() const { return std::exp(lx_.front()); }
double LogLogTable::x_max() const { return std::exp(lx_.back()); }

double LogLogTable::end_slope_low() const { return d_.front(); }
double LogLogTable::end_slope_high() const { return d_.back(); }

}  // namespace orlicz
