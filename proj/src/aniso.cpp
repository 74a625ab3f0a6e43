#include "orlicz/aniso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(int n) {
    if (n < 1) throw std::domain_error("n-dimensional Young function: dimension must be positive");
}

// sup{r >= 0 : Phi(r dir) <= t}.
double radial(const NDimYoungFunction& Phi, const Vec& dir, double t, double guess = 1.0) {
    Vec x(dir.size());
    auto f = [&](double r) {
        for (std::size_t i = 0; i < dir.size(); ++i) x[i] = r * dir[i];
        return Phi(x);
    };
    double lo, hi = guess;
    if (f(hi) <= t) {
        while (f(hi) <= t) {
            hi *= 4.0;
            if (hi > 1e150) throw std::domain_error("sublevel set is unbounded (degenerate Phi)");
        }
        lo = hi / 4.0;
    } else {
        lo = guess;
        while (f(lo) > t) {
            lo *= 0.25;
            if (lo < 1e-300) return 0.0;
        }
        hi = lo * 4.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) <= t) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

// Linear frame x = L y (L row-major, lower triangular) in which the sublevel set is roughly round.
struct Frame {
    int n = 0;
    std::vector<double> L;
    double det = 1.0;

    explicit Frame(int dim) : n(dim), L(static_cast<std::size_t>(dim * dim), 0.0) {
        for (int i = 0; i < n; ++i) L[static_cast<std::size_t>(i * n + i)] = 1.0;
    }
    Vec map(const Vec& y) const {
        Vec x(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(i)] += L[static_cast<std::size_t>(i * n + j)] * y[static_cast<std::size_t>(j)];
        }
        return x;
    }
};

std::vector<double> radial_many(const NDimYoungFunction& Phi, const Frame& f, const std::vector<Vec>& dirs, double t,
                                Execution exec) {
    std::vector<double> rho(dirs.size());
    if (dirs.empty()) return rho;
    // Seed every bracket from one direction; the result is still independent of the schedule.
    const double r0 = radial(Phi, f.map(dirs[0]), t);
    const double guess = r0 > 0.0 ? r0 : 1.0;
    for_each_index(dirs.size(), exec, [&](std::size_t i) { rho[i] = radial(Phi, f.map(dirs[i]), t, guess); });
    return rho;
}

std::vector<Vec> circle_directions(std::size_t count, double offset) {
    const double pi = std::numbers::pi;
    std::vector<Vec> d(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double th = pi * (static_cast<double>(j) + offset) / static_cast<double>(count);
        d[j] = {std::cos(th), std::sin(th)};
    }
    return d;
}

// Gauss-Legendre in cos(polar angle) times trapezoid in azimuth.
struct SphereRule {
    std::vector<Vec> dirs;
    std::vector<double> weights;
};

SphereRule sphere_rule(std::size_t m) {
    const double pi = std::numbers::pi;
    const GaussRule g = gauss_legendre(m);
    const std::size_t na = 2 * m;
    SphereRule r;
    for (std::size_t i = 0; i < m; ++i) {
        const double u = g.nodes[i], s = std::sqrt(1.0 - u * u);
        for (std::size_t j = 0; j < na; ++j) {
            const double ph = 2.0 * pi * static_cast<double>(j) / static_cast<double>(na);
            r.dirs.push_back({s * std::cos(ph), s * std::sin(ph), u});
            r.weights.push_back(g.weights[i] * 2.0 * pi / static_cast<double>(na));
        }
    }
    return r;
}

// Whitens the set by its second moments, a few coarse passes at a time.
Frame fit_frame(const NDimYoungFunction& Phi, double t, Execution exec) {
    const int n = Phi.dim();
    const auto un = static_cast<std::size_t>(n);
    Frame f(n);
    std::vector<Vec> dirs;
    std::vector<double> w;
    if (n == 2) {
        dirs = circle_directions(64, 0.0);
        w.assign(dirs.size(), 1.0);
    } else {
        auto r = sphere_rule(8);
        dirs = std::move(r.dirs);
        w = std::move(r.weights);
    }
    for (int pass = 0; pass < 60; ++pass) {
        const auto rho = radial_many(Phi, f, dirs, t, exec);
        double rmax = 0.0;
        for (double r : rho) rmax = std::max(rmax, r);
        if (!(rmax > 0.0)) return f;
        std::vector<double> M(un * un, 0.0);
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            const double q = w[k] * std::pow(rho[k] / rmax, n + 2);
            for (std::size_t a = 0; a < un; ++a) {
                for (std::size_t b = 0; b < un; ++b) M[a * un + b] += q * dirs[k][a] * dirs[k][b];
            }
        }
        double tr = 0.0;
        for (std::size_t a = 0; a < un; ++a) tr += M[a * un + a];
        double off = 0.0;
        for (auto& v : M) v *= static_cast<double>(n) / tr;
        for (std::size_t a = 0; a < un; ++a) {
            for (std::size_t b = 0; b < un; ++b) off = std::max(off, std::abs(M[a * un + b] - (a == b ? 1.0 : 0.0)));
        }
        if (off < 0.05) break;
        // M = Q D Q^T; L <- L Q D^{1/2}. Tiny eigenvalues are clamped and refined on the next pass.
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            Eigen::Map<const Eigen::MatrixXd>(M.data(), n, n));
        const Eigen::VectorXd D = eig.eigenvalues();
        const Eigen::VectorXd sq = D.cwiseMax(1e-12 * D.maxCoeff()).cwiseSqrt();
        const Eigen::MatrixXd C = eig.eigenvectors() * sq.asDiagonal();
        const Eigen::MatrixXd Lnew = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
                                         f.L.data(), n, n) * C;
        f.det *= sq.prod();
        std::vector<double> L(un * un);
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t j = 0; j < un; ++j) L[i * un + j] = Lnew(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        f.L = std::move(L);
    }
    return f;
}

double volume_2d(const NDimYoungFunction& Phi, double t, const VolumeOptions& opt) {
    // V = det L * int_0^pi rho(theta)^2 dtheta in the whitened frame, trapezoid with midpoint refinement.
    const double pi = std::numbers::pi;
    const Frame f = fit_frame(Phi, t, opt.exec);
    std::size_t N = 64;
    double sum = 0.0;
    for (double r : radial_many(Phi, f, circle_directions(N, 0.0), t, opt.exec)) sum += r * r;
    double V = pi / static_cast<double>(N) * sum;
    for (std::size_t level = 7; level <= opt.max_level; ++level) {
        double mid = 0.0;
        for (double r : radial_many(Phi, f, circle_directions(N, 0.5), t, opt.exec)) mid += r * r;
        sum += mid;
        N *= 2;
        const double next = pi / static_cast<double>(N) * sum;
        const bool done = std::abs(next - V) <= opt.rel_tol * std::abs(next);
        V = next;
        if (done) break;
    }
    return f.det * V;
}

double volume_3d(const NDimYoungFunction& Phi, double t, const VolumeOptions& opt) {
    // V = det L * (1/3) int_{S^2} rho^3 in the whitened frame.
    const Frame f = fit_frame(Phi, t, opt.exec);
    double V = -1.0;
    const std::size_t m_max = std::size_t{1} << std::min<std::size_t>(opt.max_level / 2, 8);
    for (std::size_t m = 16; m <= m_max; m *= 2) {
        const SphereRule rule = sphere_rule(m);
        const auto rho = radial_many(Phi, f, rule.dirs, t, opt.exec);
        double sum = 0.0;
        for (std::size_t k = 0; k < rho.size(); ++k) sum += rule.weights[k] * rho[k] * rho[k] * rho[k];
        const double next = sum / 3.0;
        const bool done = V >= 0.0 && std::abs(next - V) <= opt.rel_tol * std::abs(next);
        V = next;
        if (done) break;
    }
    return f.det * V;
}

std::vector<Vec> sweep_directions(int n) {
    std::vector<Vec> d;
    const double pi = std::numbers::pi;
    if (n == 2) return circle_directions(512, 0.0);
    const int N = 2048;
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int j = 0; j < N; ++j) {
        const double z = 1.0 - 2.0 * (j + 0.5) / N, r = std::sqrt(1.0 - z * z);
        d.push_back({r * std::cos(golden * j), r * std::sin(golden * j), z});
    }
    return d;
}

}  // namespace

NDimYoungFunction NDimYoungFunction::isotropic(YoungFunction A, int n) {
    check_dim(n);
    NDimYoungFunction f;
    f.n_ = n;
    f.form_ = Form::isotropic;
    f.label_ = "iso(" + A.label() + ")";
    f.components_ = {std::move(A)};
    return f;
}

NDimYoungFunction NDimYoungFunction::orthotropic(std::vector<YoungFunction> A) {
    check_dim(static_cast<int>(A.size()));
    NDimYoungFunction f;
    f.n_ = static_cast<int>(A.size());
    f.form_ = Form::orthotropic;
    f.label_ = "ortho(";
    for (std::size_t i = 0; i < A.size(); ++i) f.label_ += (i ? ";" : "") + A[i].label();
    f.label_ += ")";
    f.components_ = std::move(A);
    return f;
}

NDimYoungFunction NDimYoungFunction::linear_image(int n, std::vector<LinearTerm> terms) {
    check_dim(n);
    for (const auto& term : terms) {
        for (const auto& row : term.rows) {
            if (static_cast<int>(row.size()) != n) throw std::invalid_argument("linear_image: row length must be n");
        }
    }
    NDimYoungFunction f;
    f.n_ = n;
    f.form_ = Form::linear_image;
    f.label_ = "linear_image";
    f.terms_ = std::move(terms);
    return f;
}

NDimYoungFunction NDimYoungFunction::black_box(int n, std::function<double(const Vec&)> phi, std::string label) {
    check_dim(n);
    if (!phi) throw std::invalid_argument("black_box: empty evaluator");
    NDimYoungFunction f;
    f.n_ = n;
    f.form_ = Form::black_box;
    f.phi_ = std::move(phi);
    f.label_ = std::move(label);
    return f;
}

double NDimYoungFunction::operator()(const Vec& xi) const {
    if (static_cast<int>(xi.size()) != n_) throw std::invalid_argument("Phi: argument has wrong dimension");
    switch (form_) {
        case Form::isotropic: {
            double s = 0.0;
            for (double v : xi) s += v * v;
            return components_[0](std::sqrt(s));
        }
        case Form::orthotropic: {
            double s = 0.0;
            for (std::size_t i = 0; i < xi.size(); ++i) s += components_[i](std::abs(xi[i]));
            return s;
        }
        case Form::linear_image: {
            double s = 0.0;
            for (const auto& term : terms_) {
                double q = 0.0;
                for (const auto& row : term.rows) {
                    double d = 0.0;
                    for (std::size_t j = 0; j < xi.size(); ++j) d += row[j] * xi[j];
                    q += d * d;
                }
                s += term.A(std::sqrt(q));
            }
            return s;
        }
        case Form::black_box:
            return phi_(xi);
    }
    return kInf;
}

double bar_p(const std::vector<double>& p) {
    if (p.empty()) throw std::domain_error("bar_p: empty exponent list");
    double s = 0.0;
    for (double v : p) {
        if (!(v >= 1.0)) throw std::domain_error("bar_p: exponents must be >= 1");
        s += 1.0 / v;
    }
    return static_cast<double>(p.size()) / s;
}

YoungFunction orthotropic_bar(const std::vector<YoungFunction>& A) {
    if (A.empty()) throw std::domain_error("orthotropic_bar: empty list");
    for (const auto& a : A) {
        if (!(a.inverse(1.0) > 0.0)) throw std::domain_error("orthotropic_bar: degenerate component " + a.label());
    }
    const double n = static_cast<double>(A.size());
    // Closed forms: pure powers give t^pbar; identical components give themselves.
    if (std::all_of(A.begin(), A.end(), [](const YoungFunction& a) { return a.kind() == YoungKind::power; })) {
        double s = 0.0, logk = 0.0;
        for (const auto& a : A) {
            const auto prm = a.record().params;
            s += 1.0 / prm.at(0);
            if (prm.size() > 1) logk += std::log(prm[1]) / prm[0];
        }
        // k_i t^p_i: the geometric mean of (y/k_i)^(1/p_i) inverts K t^pbar.
        const double pbar = n / s;
        return power(pbar, std::exp(pbar * logk / n));
    }
    const auto k0 = A.front().kind();
    const bool builtin = k0 != YoungKind::custom && k0 != YoungKind::glued && k0 != YoungKind::piecewise;
    if (builtin && std::all_of(A.begin(), A.end(), [&](const YoungFunction& a) {
            return a.kind() == k0 && a.record().params == A.front().record().params;
        })) {
        return A.front();
    }
    auto inv = [A, n](double y) {
        if (y <= 0.0) return 0.0;
        double logsum = 0.0;
        for (const auto& a : A) {
            const double s = a.inverse(y);
            if (std::isinf(s)) return kInf;
            if (s == 0.0) return 0.0;
            logsum += std::log(s);
        }
        return std::exp(logsum / n);
    };
    CustomSpec spec;
    spec.inverse = inv;
    spec.eval = [inv](double t) { return t <= 0.0 ? 0.0 : monotone_inverse(inv, t); };
    auto mean_exponent = [&](bool at_zero) {
        Asymptotics out;
        double s = 0.0;
        for (const auto& a : A) {
            const Asymptotics& as = at_zero ? a.at_zero() : a.at_infinity();
            if (as.cls != GrowthClass::power || as.log_order != 0.0 || as.loglog_order != 0.0) return Asymptotics{};
            s += 1.0 / as.power;
        }
        out.cls = GrowthClass::power;
        out.power = n / s;
        return out;
    };
    spec.at_zero = mean_exponent(true);
    spec.at_infinity = mean_exponent(false);
    spec.label = "bar(";
    for (std::size_t i = 0; i < A.size(); ++i) spec.label += (i ? ";" : "") + A[i].label();
    spec.label += ")";
    return custom(std::move(spec));
}

double unit_ball_volume(int n) {
    check_dim(n);
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double sublevel_volume(const NDimYoungFunction& Phi, double t, const VolumeOptions& opt) {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("sublevel_volume: t must be nonnegative");
    if (Phi.dim() == 2) return volume_2d(Phi, t, opt);
    if (Phi.dim() == 3) return volume_3d(Phi, t, opt);
    throw std::domain_error("sublevel_volume: only n = 2, 3 are supported");
}

MonteCarloEstimate sublevel_volume_mc(const NDimYoungFunction& Phi, double t, std::size_t samples, std::uint64_t seed,
                                      Execution exec) {
    const int n = Phi.dim();
    if (n != 2 && n != 3) throw std::domain_error("sublevel_volume_mc: only n = 2, 3 are supported");
    const Frame f = fit_frame(Phi, t, exec);
    double R = 0.0;
    for (double r : radial_many(Phi, f, sweep_directions(n), t, exec)) R = std::max(R, r);
    R *= 1.1;
    if (R == 0.0) return {};
    constexpr std::size_t chunk = 65536;
    const std::size_t chunks = (samples + chunk - 1) / chunk;
    std::vector<std::size_t> hits(chunks, 0);
    for_each_index(chunks, exec, [&](std::size_t c) {
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(sq);
        std::uniform_real_distribution<double> U(-R, R);
        const std::size_t count = std::min(chunk, samples - c * chunk);
        Vec y(static_cast<std::size_t>(n));
        std::size_t h = 0;
        for (std::size_t k = 0; k < count; ++k) {
            for (auto& v : y) v = U(rng);
            if (Phi(f.map(y)) <= t) ++h;
        }
        hits[c] = h;
    });
    std::size_t total = 0;
    for (auto h : hits) total += h;
    const double box = f.det * std::pow(2.0 * R, n);
    const double p = static_cast<double>(total) / static_cast<double>(samples);
    return {p * box, box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

double phi_circ_by_volume(const NDimYoungFunction& Phi, double t, const VolumeOptions& opt) {
    const double V = sublevel_volume(Phi, t, opt);
    return std::pow(V / unit_ball_volume(Phi.dim()), 1.0 / Phi.dim());
}

double phi_circ(const NDimYoungFunction& Phi, double t) {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("phi_circ: t must be nonnegative");
    switch (Phi.form()) {
        case NDimYoungFunction::Form::isotropic:
            return Phi.components()[0].inverse(t);
        case NDimYoungFunction::Form::orthotropic:
            return orthotropic_bar(Phi.components()).inverse(t);
        default:
            return phi_circ_by_volume(Phi, t);
    }
}

YoungFunction phi_circ_function(const NDimYoungFunction& Phi, const VolumeOptions& opt) {
    switch (Phi.form()) {
        case NDimYoungFunction::Form::isotropic:
            return Phi.components()[0];
        case NDimYoungFunction::Form::orthotropic:
            return orthotropic_bar(Phi.components());
        default:
            break;
    }
    const auto t = log_grid_per_decade(1e-30, 1e60, 4);
    std::vector<double> r(t.size());
    VolumeOptions inner = opt;
    inner.exec = Execution::serial;
    for_each_index(t.size(), opt.exec, [&](std::size_t i) { r[i] = phi_circ_by_volume(Phi, t[i], inner); });
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0) || (i > 0 && !(r[i] > r[i - 1]))) {
            throw std::domain_error("phi_circ_function: rearrangement is not strictly increasing on the table");
        }
    }
    auto table = std::make_shared<const LogLogTable>(t, r);
    CustomSpec spec;
    spec.eval = [table](double s) { return s <= 0.0 ? 0.0 : table->inverse(s); };
    spec.inverse = [table](double y) { return y <= 0.0 ? 0.0 : (*table)(y); };
    spec.label = "circ(" + Phi.label() + ")";
    return custom(std::move(spec));
}

ConjugateResult phi_n(const NDimYoungFunction& Phi, int n) {
    if (n != Phi.dim()) throw std::domain_error("phi_n: n must equal the dimension of Phi");
    return sobolev_conjugate(phi_circ_function(Phi), n);
}

ThetaSolver::ThetaSolver(NDimYoungFunction Phi, Envelope E, int n, ThetaOptions opt)
    : Phi_(std::move(Phi)), E_(std::move(E)), conj_(phi_n(Phi_, n)), opt_(opt) {
    if (conj_.H_limit.is_finite()) {
        throw PreconditionError("solve_theta: Phi_n must be finite-valued (divergent integral at infinity)");
    }
}

double ThetaSolver::rhs(const Vec& xi, double t) const {
    const double e = E_(t);
    bool zero = true;
    for (double v : xi) zero = zero && v == 0.0;
    if (zero) return 0.0;
    if (e == 0.0) return kInf;
    Vec scaled(xi);
    for (auto& v : scaled) v /= e;
    return Phi_(scaled);
}

double ThetaSolver::theta(const Vec& xi) const {
    bool zero = true;
    for (double v : xi) zero = zero && v == 0.0;
    if (zero) return 0.0;
    auto h = [&](double t) { return conj_.An(t) - rhs(xi, t); };
    double lo = 0.0, hi = 1.0;
    int doublings = 0;
    while (h(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > opt_.max_doublings) throw std::runtime_error("solve_theta: failed to bracket the root");
    }
    for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = (lo > 0.0 && hi / lo > 4.0) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        const double v = h(mid);
        if (v == 0.0) return mid;
        if (v < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ThetaSolver::residual(const Vec& xi, double theta) const {
    const double a = conj_.An(theta);
    return std::abs(a - rhs(xi, theta)) / (1.0 + a);
}

double solve_theta(const NDimYoungFunction& Phi, const Envelope& E, int n, const Vec& xi) {
    return ThetaSolver(Phi, E, n).theta(xi);
}

}  // namespace orlicz
