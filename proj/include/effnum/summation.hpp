#pragma once

#include <cmath>

namespace effnum {

// Neumaier's variant of Kahan summation: exact to within one rounding for
// any ordering of magnitudes.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <typename Range>
double compensated_sum(const Range& values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc += v;
  return acc.value();
}

}  // namespace effnum
