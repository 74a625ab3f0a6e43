#include "orlicz/ext_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace orlicz {

ExtReal::ExtReal(double v) : v_(v) {
    if (std::isnan(v) || v < 0.0) {
        throw std::domain_error("ExtReal: value must be nonnegative");
    }
}

ExtReal operator*(ExtReal a, ExtReal b) {
    if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal(0.0);
    return ExtReal(ExtReal::Raw{}, a.v_ * b.v_);
}

std::string ExtReal::str() const {
    if (is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v_);
    return buf;
}

}  // namespace orlicz
