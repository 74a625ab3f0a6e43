#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/envelope.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "kind" or "kind:p1,p2,...". Young kinds: power:p[,k], powerlog:p,a[,c], powerloglog:p,a[,c],
// exp:a[,shift], powerexp:p,a, expneginv:a, linear[:k], piecewise:b0,s0,b1,s1,... (slope -1 = +inf).
YoungFunction parse_young(const std::string& text);
// one, power:r, powerlog:r,g, powerloglog:r,g, logpower:r, exp:a, exppowerlog:a,b, expexp:a.
Envelope parse_envelope(const std::string& text);
// Comma-separated numbers.
std::vector<double> parse_numbers(const std::string& text);

}  // namespace orlicz
