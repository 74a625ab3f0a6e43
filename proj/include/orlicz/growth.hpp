#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "orlicz/envelope.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Raised when an expression leaves the fragment the exponent algebra can decide.
class AnalyticUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Growth of a function as t -> inf, modulo multiplicative constants:
//   t^pw exp(L^sub) L^lg LL^llg,   L = log t, LL = log log t,
// where a "plus" flag adds an arbitrarily small positive exponent at that level,
// or superpoly when it beats every power of t.
//
// Comparisons treat a plus on the left as arbitrarily small (it comes from
// constants inside an envelope that may be shrunk) and a plus on the right as fixed.
struct Growth {
    double pw = 0.0;
    bool pw_plus = false;
    double sub = 0.0;
    bool sub_plus = false;
    double lg = 0.0;
    bool lg_plus = false;
    double llg = 0.0;
    bool superpoly = false;

    static Growth identity() {
        Growth g;
        g.pw = 1.0;
        return g;
    }
    bool bounded() const;
    std::string str() const;
};

Growth operator*(const Growth& a, const Growth& b);
Growth pow(const Growth& g, double r);
Growth log_of(const Growth& g);
Growth exp_of(const Growth& g);

// lhs <= rhs up to constants. Throws AnalyticUnavailable when both are superpolynomial.
bool dominated(const Growth& lhs, const Growth& rhs);

// Y(x) for x of growth X; nullopt unless Y is of power type at infinity.
std::optional<Growth> apply(const YoungFunction& Y, const Growth& X);
// Y^{-1}(x) for power-type Y.
std::optional<Growth> apply_inverse(const YoungFunction& Y, const Growth& X);
// E(x); nullopt for custom envelopes.
std::optional<Growth> apply(const Envelope& E, const Growth& X);
// H_sigma(t) for power-type A with a divergent integral at infinity.
std::optional<Growth> hn_growth(const YoungFunction& A, double sigma);

}  // namespace orlicz
