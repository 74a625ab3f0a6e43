#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "orlicz/aniso.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/conjugate.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/nemytskii.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/records.hpp"

namespace orlicz::cli {

using nlohmann::json;

namespace {

// JSON has no infinities; they are written as strings.
json num(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

json num(ExtReal x) { return num(x.value()); }

std::string cell(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return fmt::format("{:.12g}", x);
}

void emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw std::runtime_error("cannot open " + out.path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit(const Output& out, json j) {
    j["schema"] = 1;
    emit(out, j.dump(2));
}

std::vector<double> log_grid_points(double lo, double hi, std::size_t points) {
    if (!(lo > 0) || !(hi > lo) || points < 2) throw std::invalid_argument("need 0 < lo < hi and points >= 2");
    std::vector<double> g(points);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) g[i] = std::exp(a + (b - a) * double(i) / double(points - 1));
    return g;
}

std::vector<double> dyadic_indices(double kmax) {
    if (!(kmax >= 2)) throw std::invalid_argument("kmax must be at least 2");
    std::vector<double> ks;
    for (double k = 2; k <= kmax; k *= 2) ks.push_back(k);
    return ks;
}

std::vector<YoungFunction> parse_young_list(const std::string& text) {
    std::vector<YoungFunction> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_young(item));
    if (out.empty()) throw ParseError("empty component list");
    return out;
}

// iso:<young> (dimension from n) or ortho:<young>;<young>[;<young>].
NDimYoungFunction parse_ndim(const std::string& text, int n) {
    if (text.rfind("iso:", 0) == 0) {
        if (n < 1) throw ParseError("iso form needs --n");
        return NDimYoungFunction::isotropic(parse_young(text.substr(4)), n);
    }
    if (text.rfind("ortho:", 0) == 0) return NDimYoungFunction::orthotropic(parse_young_list(text.substr(6)));
    throw ParseError("expected iso:<young> or ortho:<young>;<young>, got '" + text + "'");
}

CorpusEntry corpus_or_throw(const std::string& name) {
    auto e = find_corpus(name);
    if (!e) throw std::invalid_argument("unknown corpus function '" + name + "'");
    return *e;
}

std::vector<TestFunction> make_sequence(const TestFunction& u, const std::string& mode,
                                        const std::vector<double>& ks) {
    std::vector<TestFunction> seq;
    for (double k : ks) {
        if (mode == "shift") {
            const double c = 1.0 / k;
            seq.push_back({[u, c](const Point& x) { return u.value(x) + c; }, u.gradient,
                           fmt::format("{}+1/{:g}", u.label, k)});
        } else if (mode == "scale") {
            seq.push_back(scaled(u, 1.0 + 1.0 / k));
        } else {
            throw std::invalid_argument("sequence mode must be shift or scale, got '" + mode + "'");
        }
    }
    return seq;
}

ModularPart parse_part(const std::string& s) {
    if (s == "value") return ModularPart::value;
    if (s == "gradient") return ModularPart::gradient;
    if (s == "sobolev") return ModularPart::sobolev;
    throw std::invalid_argument("part must be value, gradient or sobolev");
}

json verdict_json(const ConditionVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["holds"] = v.holds;
    j["worst_margin"] = num(v.worst_margin);
    j["witness"] = v.witness ? num(*v.witness) : json(nullptr);
    j["grid"] = v.grid;
    j["analytic"] = v.analytic;
    j["constant"] = num(v.constant);
    j["note"] = v.note;
    return j;
}

json report_json(const ModularReport& r) {
    json j;
    j["indices"] = r.indices;
    j["lambdas"] = r.lambda_grid;
    json rows = json::array();
    for (const auto& row : r.values) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(num(v));
        rows.push_back(jr);
    }
    j["values"] = rows;
    j["converging_lambdas"] = r.converging_lambdas;
    j["norm_convergence"] = r.norm_convergence;
    j["smallest_converging_lambda"] = num(r.smallest_converging_lambda);
    return j;
}

std::string report_csv(const ModularReport& r) {
    std::string s = "k,lambda,modular\n";
    for (std::size_t i = 0; i < r.indices.size(); ++i)
        for (std::size_t l = 0; l < r.lambda_grid.size(); ++l)
            s += fmt::format("{:g},{:g},{}\n", r.indices[i], r.lambda_grid[l], cell(r.values[i][l].value()));
    return s;
}

bool csv(const Output& out) { return out.format == "csv"; }

}  // namespace

int run_conjugate(const ConjugateArgs& a, const Output& out) {
    const auto A = parse_young(a.A);
    const auto r = a.sigma ? sobolev_conjugate_sigma(A, *a.sigma, a.n) : sobolev_conjugate(A, a.n);
    const auto ts = log_grid_points(a.lo, a.hi, a.points);
    if (csv(out)) {
        std::string s = "t,H_n,A_n\n";
        for (double t : ts) s += fmt::format("{:.12g},{},{}\n", t, cell((*r.Hn)(t)), cell(r.An(t)));
        emit(out, s);
        return kOk;
    }
    json j;
    j["A"] = A.label();
    j["n"] = a.n;
    j["sigma"] = r.sigma;
    j["classification_zero"] = to_string(r.classification_zero);
    j["classification_inf"] = to_string(r.classification_inf);
    j["H_limit"] = num(r.H_limit);
    j["modified"] = r.modified;
    json fit = nullptr;
    try {
        const double e = fitted_exponent(r.An, a.lo, a.hi);
        if (std::isfinite(e)) fit = e;
    } catch (const std::exception&) {
    }
    j["fitted_exponent"] = fit;
    json rows = json::array();
    for (double t : ts) rows.push_back({{"t", t}, {"H_n", num((*r.Hn)(t))}, {"A_n", num(r.An(t))}});
    j["rows"] = rows;
    emit(out, j);
    return kOk;
}

int run_aniso(const AnisoArgs& a, const Output& out) {
    const auto Phi = parse_ndim(a.Phi, a.n);
    const int n = Phi.dim();
    const bool volume = n == 2 || n == 3;
    json rows = json::array();
    std::string s = "t,volume,phi_circ_inverse,mc_volume,mc_std_error\n";
    for (double t : a.ts) {
        const double vol = volume ? sublevel_volume(Phi, t) : std::nan("");
        const double pc = phi_circ(Phi, t);
        MonteCarloEstimate mc{std::nan(""), std::nan("")};
        if (a.mc_samples > 0) mc = sublevel_volume_mc(Phi, t, a.mc_samples, a.seed);
        s += fmt::format("{:g},{},{},{},{}\n", t, cell(vol), cell(pc), cell(mc.value), cell(mc.std_error));
        json row{{"t", t}, {"volume", volume ? num(vol) : json(nullptr)}, {"phi_circ_inverse", num(pc)}};
        if (a.mc_samples > 0) row["mc"] = {{"value", mc.value}, {"std_error", mc.std_error}};
        rows.push_back(row);
    }
    if (csv(out)) {
        emit(out, s);
        return kOk;
    }
    emit(out, json{{"Phi", Phi.label()}, {"n", n}, {"seed", a.seed}, {"rows", rows}});
    return kOk;
}

int run_norm(const NormArgs& a, const Output& out) {
    const auto e = corpus_or_throw(a.u);
    const auto A = parse_young(a.A);
    const auto q = w1a_quantities(e.u, A, e.box);
    if (csv(out)) {
        std::string s = "lambda,modular_u,modular_grad\n";
        for (double l : a.lambdas)
            s += fmt::format("{:g},{},{}\n", l, cell(q.modular_u(l).value()), cell(q.modular_grad(l).value()));
        emit(out, s);
        return kOk;
    }
    json rows = json::array();
    for (double l : a.lambdas)
        rows.push_back({{"lambda", l}, {"modular_u", num(q.modular_u(l))}, {"modular_grad", num(q.modular_grad(l))}});
    emit(out, json{{"u", e.name},
                   {"n", e.box.n},
                   {"A", A.label()},
                   {"norm_u", num(q.norm_u)},
                   {"norm_grad", num(q.norm_grad)},
                   {"norm", num(q.norm())},
                   {"rows", rows}});
    return kOk;
}

int run_converge(const ConvergeArgs& a, const Output& out) {
    const auto e = corpus_or_throw(a.u);
    const auto A = parse_young(a.A);
    const auto ks = dyadic_indices(a.kmax);
    const auto seq = make_sequence(e.u, a.mode, ks);
    const auto r = modular_convergence(seq, ks, e.u, A, e.box, a.lambdas, parse_part(a.part));
    if (csv(out)) {
        emit(out, report_csv(r));
        return kOk;
    }
    json j = report_json(r);
    j["u"] = e.name;
    j["mode"] = a.mode;
    j["A"] = A.label();
    j["part"] = a.part;
    emit(out, j);
    return kOk;
}

int run_check(const CheckArgs& a, const Output& out) {
    json j;
    j["cond"] = a.cond;
    Truth status = Truth::indeterminate;
    Ass2Options opt;
    opt.grid = !a.analytic_only;
    const auto E = parse_envelope(a.E);
    j["E"] = E.label();
    auto need_one = [](const std::vector<std::string>& v, const char* what) {
        if (v.size() != 1) throw std::invalid_argument(fmt::format("{} needs exactly one --{}", "this condition", what));
        return parse_young(v.front());
    };
    if (a.cond == "inq-ass2") {
        const auto A = need_one(a.A, "A"), B = need_one(a.B, "B");
        const auto v = check_inq_ass2(A, B, E, a.n, opt);
        j["A"] = A.label();
        j["B"] = B.label();
        j["n"] = a.n;
        j["verdict"] = verdict_json(v);
        status = v.status;
    } else if (a.cond == "inq-assD") {
        if (a.F.empty()) throw std::invalid_argument("inq-assD needs --F");
        const auto A = need_one(a.A, "A"), B = need_one(a.B, "B");
        const auto F = parse_young(a.F);
        const auto v = check_inq_assD(A, B, E, F, a.t1);
        j["A"] = A.label();
        j["B"] = B.label();
        j["F"] = F.label();
        j["t1"] = a.t1;
        j["inequality"] = verdict_json(v.inequality);
        j["limsup"] = verdict_json(v.limsup);
        j["status"] = to_string(v.status);
        status = v.status;
    } else if (a.cond == "ortho") {
        if (a.A.empty() || a.A.size() != a.B.size()) throw std::invalid_argument("ortho needs matching --A and --B lists");
        std::vector<YoungFunction> A, B;
        for (const auto& s : a.A) A.push_back(parse_young(s));
        for (const auto& s : a.B) B.push_back(parse_young(s));
        const auto v = check_ortho(A, B, E, static_cast<int>(a.n), opt);
        j["n"] = static_cast<int>(a.n);
        j["verdict"] = verdict_json(v);
        status = v.status;
    } else if (a.cond == "aniso") {
        if (a.Phi.empty() || a.Psi.empty()) throw std::invalid_argument("aniso needs --Phi and --Psi");
        const int n = static_cast<int>(a.n);
        const auto Phi = parse_ndim(a.Phi, n), Psi = parse_ndim(a.Psi, n);
        const auto v = check_aniso(Phi, Psi, E, Phi.dim(), a.with_constant);
        j["Phi"] = Phi.label();
        j["Psi"] = Psi.label();
        j["with_constant"] = a.with_constant;
        j["verdict"] = verdict_json(v);
        status = v.status;
    } else {
        throw std::invalid_argument("unknown condition '" + a.cond + "'");
    }
    if (csv(out)) {
        emit(out, fmt::format("cond,status\n{},{}\n", a.cond, to_string(status)));
    } else {
        emit(out, j);
    }
    return status == Truth::indeterminate ? kIndeterminate : kOk;
}

int run_table(const TableArgs& a, const Output& out) {
    const auto ex = parse_zygmund_example(a.example);
    std::vector<ZygmundParams> sweep;
    if (a.p || a.alpha || a.r || a.gamma || a.n) {
        ZygmundParams prm;
        if (a.p) prm.p = *a.p;
        if (a.alpha) prm.alpha = *a.alpha;
        if (a.r) prm.r = *a.r;
        if (a.gamma) prm.gamma = *a.gamma;
        if (a.n) prm.n = *a.n;
        sweep.push_back(prm);
    } else {
        sweep = default_zygmund_sweep(ex);
    }
    if (csv(out)) {
        emit(out, zygmund_csv(ex, sweep));
        return kOk;
    }
    json rows = json::array();
    for (const auto& prm : sweep) {
        for (const auto& row : zygmund_table(ex, prm)) {
            rows.push_back({{"p", prm.p},
                            {"alpha", prm.alpha},
                            {"n", prm.n},
                            {"r", prm.r},
                            {"gamma", prm.gamma},
                            {"row", row.row},
                            {"regime", row.regime},
                            {"q_relation", row.q_relation},
                            {"q_bound", num(row.q_bound)},
                            {"beta_relation", row.beta_relation},
                            {"beta_bound", num(row.beta_bound)},
                            {"envelope", row.envelope},
                            {"unconditional", row.unconditional},
                            {"verified", row.verified}});
        }
    }
    emit(out, json{{"example", to_string(ex)}, {"rows", rows}});
    return kOk;
}

int run_counterexample(const CounterexampleArgs& a, const Output& out) {
    CounterexampleOptions opt;
    opt.dim = a.dim;
    opt.ks = a.ks.empty() ? dyadic_indices(a.kmax) : a.ks;
    opt.deltas = a.deltas;
    opt.lambdas = a.lambdas;
    const auto r = counterexample_run(opt);
    if (csv(out)) {
        emit(out, counterexample_csv(r));
        return kOk;
    }
    json w = json::array();
    for (const auto& row : r.w_modular) {
        json jr = json::array();
        for (double v : row) jr.push_back(num(v));
        w.push_back(jr);
    }
    json strips = json::array();
    for (const auto& s : r.strips)
        strips.push_back({{"k", s.k},
                          {"delta", s.delta},
                          {"lambda", s.lambda},
                          {"skipped", s.skipped},
                          {"quadrature", num(s.quadrature)},
                          {"closed_form", num(s.closed_form)},
                          {"rel_err", num(s.rel_err)}});
    json drop = json::array();
    for (double d : r.w_drop) drop.push_back(num(d));
    emit(out, json{{"dim", opt.dim},
                   {"ks", opt.ks},
                   {"deltas", opt.deltas},
                   {"lambdas", opt.lambdas},
                   {"w_modular", w},
                   {"w_drop", drop},
                   {"w_rule", r.w_rule},
                   {"strips", strips},
                   {"max_rel_err", num(r.max_rel_err)},
                   {"divergent", r.divergent},
                   {"notes", r.notes}});
    return kOk;
}

namespace {

LipschitzSpec parse_spec(const std::string& f) {
    if (f == "identity") return LipschitzSpec::identity();
    if (f == "half_square") return LipschitzSpec::half_square();
    auto arg = [&](std::size_t at) {
        const auto v = parse_numbers(f.substr(at));
        if (v.size() != 1) throw ParseError("expected one parameter in '" + f + "'");
        return v.front();
    };
    if (f.rfind("shrink:", 0) == 0) return LipschitzSpec::shrink(arg(7));
    if (f == "shrink") return LipschitzSpec::shrink();
    if (f.rfind("constant:", 0) == 0) return LipschitzSpec::constant(arg(9));
    throw ParseError("unknown f '" + f + "'");
}

}  // namespace

int run_experiment(const ExperimentArgs& a, const Output& out) {
    std::ifstream in(a.config);
    if (!in) throw std::runtime_error("cannot open " + a.config);
    const json cfg = json::parse(in);
    if (!cfg.is_object() || cfg.empty()) throw std::invalid_argument("empty config");
    for (const char* key : {"A", "B", "f", "sequence"})
        if (!cfg.contains(key)) throw std::invalid_argument(std::string("config is missing '") + key + "'");

    const auto A = parse_young(cfg.at("A").get<std::string>());
    const auto B = parse_young(cfg.at("B").get<std::string>());
    auto spec = parse_spec(cfg.at("f").get<std::string>());
    if (cfg.contains("kappa")) spec.kappa = cfg.at("kappa").get<double>();
    if (cfg.contains("E")) spec.envelope = parse_envelope(cfg.at("E").get<std::string>());

    const auto& sq = cfg.at("sequence");
    const auto e = corpus_or_throw(sq.at("base").get<std::string>());
    const auto ks = dyadic_indices(sq.value("kmax", 1024.0));
    const auto seq = make_sequence(e.u, sq.value("mode", std::string("shift")), ks);

    ContinuityOptions opt;
    if (cfg.contains("lambda_factors")) opt.lambda_factors = cfg.at("lambda_factors").get<std::vector<double>>();
    const auto r = continuity_experiment(spec, seq, ks, e.u, A, B, e.box, opt);

    if (csv(out)) {
        std::string s = "section,k,lambda,modular\n";
        auto add = [&](const char* name, const ModularReport& m) {
            for (std::size_t i = 0; i < m.indices.size(); ++i)
                for (std::size_t l = 0; l < m.lambda_grid.size(); ++l)
                    s += fmt::format("{},{:g},{:.12g},{}\n", name, m.indices[i], m.lambda_grid[l],
                                     cell(m.values[i][l].value()));
        };
        if (!r.refused) {
            add("input", r.input);
            add("image", r.image);
            add("image_gradient", r.image_gradient);
        }
        emit(out, s);
    } else {
        json j{{"f", spec.label},
               {"kappa", spec.kappa},
               {"E", spec.envelope.label()},
               {"A", A.label()},
               {"B", B.label()},
               {"base", e.name},
               {"refused", r.refused},
               {"note", r.note},
               {"condition", verdict_json(r.condition)}};
        if (!r.refused) {
            j["limit_norm"] = num(r.limit_norm);
            j["lambda"] = num(r.lambda);
            j["predicted"] = num(r.predicted);
            j["input"] = report_json(r.input);
            j["image"] = report_json(r.image);
            j["image_gradient"] = report_json(r.image_gradient);
            j["converges"] = r.converges;
        }
        emit(out, j);
    }
    return r.refused ? kIndeterminate : kOk;
}

}  // namespace orlicz::cli
