#ifndef PSL_SUMMATION_HPP
#define PSL_SUMMATION_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace psl {

/// Neumaier-compensated accumulator; the running error term is carried
/// separately so that 1e5+ term reductions stay accurate to ~1 ulp.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace psl

#endif  // PSL_SUMMATION_HPP
