#include "orlicz/records.hpp"

#include <charconv>

#include <fmt/format.h>

namespace orlicz {

namespace {

struct Record {
    std::string kind;
    std::vector<double> params;
};

double parse_number(const std::string& s, const std::string& whole) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError(fmt::format("'{}': bad number '{}'", whole, s));
    }
    return v;
}

Record split(const std::string& text) {
    Record r;
    const auto colon = text.find(':');
    r.kind = text.substr(0, colon);
    if (r.kind.empty()) throw ParseError(fmt::format("'{}': missing kind", text));
    if (colon != std::string::npos) {
        const std::string rest = text.substr(colon + 1);
        if (rest.empty()) throw ParseError(fmt::format("'{}': empty parameter list", text));
        std::size_t start = 0;
        while (true) {
            const auto comma = rest.find(',', start);
            r.params.push_back(parse_number(rest.substr(start, comma - start), text));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return r;
}

void arity(const Record& r, const std::string& text, std::size_t lo, std::size_t hi) {
    if (r.params.size() < lo || r.params.size() > hi) {
        throw ParseError(lo == hi ? fmt::format("'{}': {} takes {} parameter(s)", text, r.kind, lo)
                                  : fmt::format("'{}': {} takes {} to {} parameters", text, r.kind, lo, hi));
    }
}

}  // namespace

std::vector<double> parse_numbers(const std::string& text) {
    if (text.empty()) throw ParseError("empty number list");
    return split("x:" + text).params;
}

YoungFunction parse_young(const std::string& text) {
    const Record r = split(text);
    const auto& p = r.params;
    try {
        if (r.kind == "power") {
            arity(r, text, 1, 2);
            return p.size() == 2 ? power(p[0], p[1]) : power(p[0]);
        }
        if (r.kind == "powerlog") {
            arity(r, text, 2, 3);
            return p.size() == 3 ? power_log(p[0], p[1], p[2]) : power_log(p[0], p[1]);
        }
        if (r.kind == "powerloglog") {
            arity(r, text, 2, 3);
            return p.size() == 3 ? power_loglog(p[0], p[1], p[2]) : power_loglog(p[0], p[1]);
        }
        if (r.kind == "exp") {
            arity(r, text, 1, 2);
            return p.size() == 2 ? exp_young(p[0], p[1]) : exp_young(p[0]);
        }
        if (r.kind == "powerexp") {
            arity(r, text, 2, 2);
            return power_exp(p[0], p[1]);
        }
        if (r.kind == "expneginv") {
            arity(r, text, 1, 1);
            return exp_neg_inv(p[0]);
        }
        if (r.kind == "linear") {
            arity(r, text, 0, 1);
            return p.empty() ? linear() : linear(p[0]);
        }
        if (r.kind == "piecewise") {
            if (p.empty() || p.size() % 2 != 0) throw ParseError(fmt::format("'{}': piecewise takes pairs", text));
            std::vector<Branch> b;
            for (std::size_t i = 0; i < p.size(); i += 2) b.push_back({p[i], p[i + 1] < 0 ? 0.0 : p[i + 1], p[i + 1] < 0});
            return piecewise(std::move(b));
        }
    } catch (const std::domain_error& e) {
        throw ParseError(fmt::format("'{}': {}", text, e.what()));
    }
    throw ParseError(fmt::format("'{}': unknown Young function kind '{}'", text, r.kind));
}

Envelope parse_envelope(const std::string& text) {
    const Record r = split(text);
    const auto& p = r.params;
    try {
        if (r.kind == "one") {
            arity(r, text, 0, 0);
            return Envelope::one();
        }
        if (r.kind == "power") {
            arity(r, text, 1, 1);
            return Envelope::power(p[0]);
        }
        if (r.kind == "powerlog") {
            arity(r, text, 2, 2);
            return Envelope::power_log(p[0], p[1]);
        }
        if (r.kind == "powerloglog") {
            arity(r, text, 2, 2);
            return Envelope::power_loglog(p[0], p[1]);
        }
        if (r.kind == "logpower") {
            arity(r, text, 1, 1);
            return Envelope::log_power(p[0]);
        }
        if (r.kind == "exp") {
            arity(r, text, 1, 1);
            return Envelope::exp(p[0]);
        }
        if (r.kind == "exppowerlog") {
            arity(r, text, 2, 2);
            return Envelope::exp_power_log(p[0], p[1]);
        }
        if (r.kind == "expexp") {
            arity(r, text, 1, 1);
            return Envelope::exp_exp(p[0]);
        }
    } catch (const std::domain_error& e) {
        throw ParseError(fmt::format("'{}': {}", text, e.what()));
    }
    throw ParseError(fmt::format("'{}': unknown envelope kind '{}'", text, r.kind));
}

}  // namespace orlicz
