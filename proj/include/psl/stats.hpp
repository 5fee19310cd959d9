#ifndef PSL_STATS_HPP
#define PSL_STATS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "psl/errors.hpp"

namespace psl {

struct MomentEstimate {
  int order = 1;
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

struct TestResult {
  double statistic = 0.0;
  long dof_or_n = 0;
  double p_value = 1.0;
  double alpha = 0.001;
  bool pass = true;
};

/// Mean of x^k with its standard error (sample sd of x^k over sqrt n).
MomentEstimate moment_estimate(std::span<const double> samples, int k);

/// Chi-square goodness of fit of an integer-valued histogram against
/// Poisson(lambda). histogram[v] counts observations equal to v; mass at
/// values >= histogram.size() is carried by an implicit tail bin. Bins with
/// expected count below 5 are pooled from both ends toward the mode.
TestResult chi_square_poisson(const std::vector<std::int64_t>& histogram, double lambda,
                              double alpha = 0.001);

/// Kolmogorov-Smirnov distance of the sample against N(0,1), with the
/// asymptotic Kolmogorov p-value.
TestResult ks_normal(std::span<const double> values, double alpha = 0.001);

struct CovarianceEstimate {
  double value = 0.0;
  double std_error = 0.0;  ///< leave-one-out jackknife
  std::size_t n = 0;
};

CovarianceEstimate covariance_estimate(
    std::span<const std::pair<double, double>> pairs);

// distribution kernels
double normal_cdf(double x);
double regularized_gamma_q(double a, double x);
double chi_square_upper_tail(double statistic, int dof);
double kolmogorov_q(double lambda);

}  // namespace psl

#endif  // PSL_STATS_HPP
