#pragma once

#include <compare>
#include <limits>
#include <string>

namespace orlicz {

// Nonnegative extended real: a value in [0, +inf].
class ExtReal {
public:
    constexpr ExtReal() = default;
    ExtReal(double v);  // NOLINT(google-explicit-constructor)

    static constexpr ExtReal infinity() { return ExtReal(Raw{}, std::numeric_limits<double>::infinity()); }

    bool is_finite() const { return v_ < std::numeric_limits<double>::infinity(); }
    bool is_infinite() const { return !is_finite(); }
    double value() const { return v_; }
    explicit operator double() const { return v_; }

    friend bool operator==(ExtReal a, ExtReal b) = default;
    friend auto operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }

    friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(Raw{}, a.v_ + b.v_); }
    // 0 * inf = 0, the convention used for modular integrands.
    friend ExtReal operator*(ExtReal a, ExtReal b);

    std::string str() const;

private:
    struct Raw {};
    constexpr ExtReal(Raw, double v) : v_(v) {}
    double v_ = 0.0;
};

}  // namespace orlicz
