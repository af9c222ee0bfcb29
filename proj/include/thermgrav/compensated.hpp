#pragma once

#include <cmath>

namespace thermgrav {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            carry_ += (sum_ - t) + v;
        } else {
            carry_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    CompensatedSum& operator+=(double v) noexcept {
        add(v);
        return *this;
    }

    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace thermgrav
