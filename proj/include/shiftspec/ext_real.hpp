#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shiftspec {

// Nonnegative real extended with +infinity. Finite values are >= 0 and
// +infinity compares greater than every finite value.
class ExtReal {
public:
    ExtReal() : v_(0.0) {}
    explicit ExtReal(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0)
            throw std::invalid_argument("ExtReal: value must be >= 0");
    }

    static ExtReal infinity() {
        ExtReal r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_finite() const { return std::isfinite(v_); }
    bool is_infinite() const { return std::isinf(v_); }

    // Finite value; throws on +infinity.
    double value() const {
        if (!is_finite())
            throw std::domain_error("ExtReal: infinite value has no finite representation");
        return v_;
    }

    // Raw double, +inf included.
    double raw() const { return v_; }

    friend bool operator==(const ExtReal& a, const ExtReal& b) { return a.v_ == b.v_; }
    friend bool operator<(const ExtReal& a, const ExtReal& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return a.v_ >= b.v_; }

    friend ExtReal operator*(const ExtReal& a, const ExtReal& b) {
        ExtReal r;
        r.v_ = a.v_ * b.v_;
        return r;
    }

private:
    double v_;
};

// exp on the extended line; log-space values may be +inf.
inline ExtReal ext_exp(double log_value) {
    if (std::isinf(log_value) && log_value > 0) return ExtReal::infinity();
    ExtReal r(std::exp(log_value));
    return r;
}

} // namespace shiftspec
