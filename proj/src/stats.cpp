#include "psl/stats.hpp"

#include <algorithm>
#include <cmath>

#include "psl/summation.hpp"

namespace psl {

namespace {

double int_pow(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

MomentEstimate moment_estimate(std::span<const double> samples, int k) {
  if (k < 1) throw ValidationError("moment_estimate: order must be >= 1");
  if (samples.size() < 2) {
    throw ValidationError("moment_estimate: need at least two samples");
  }
  const auto n = samples.size();
  CompensatedSum sum;
  for (double x : samples) sum.add(int_pow(x, k));
  const double mean = sum.value() / static_cast<double>(n);
  CompensatedSum sq;
  for (double x : samples) {
    const double dev = int_pow(x, k) - mean;
    sq.add(dev * dev);
  }
  const double sd = std::sqrt(std::max(sq.value(), 0.0) / static_cast<double>(n - 1));
  MomentEstimate e;
  e.order = k;
  e.value = mean;
  e.std_error = sd / std::sqrt(static_cast<double>(n));
  e.n = n;
  return e;
}

TestResult chi_square_poisson(const std::vector<std::int64_t>& histogram, double lambda,
                              double alpha) {
  if (!(lambda > 0.0)) throw ValidationError("chi_square_poisson: lambda must be > 0");
  std::int64_t total = 0;
  for (std::int64_t c : histogram) {
    if (c < 0) throw ValidationError("chi_square_poisson: negative count");
    total += c;
  }
  if (total < 50) throw ValidationError("chi_square_poisson: need total count >= 50");

  // expected per value 0..L-1 plus the >=L tail, mass preserved exactly
  const auto len = histogram.size();
  std::vector<double> expected(len + 1, 0.0);
  std::vector<std::int64_t> observed(len + 1, 0);
  double pmf = std::exp(-lambda);
  double cdf = 0.0;
  for (std::size_t v = 0; v < len; ++v) {
    expected[v] = static_cast<double>(total) * pmf;
    cdf += pmf;
    observed[v] = histogram[v];
    pmf *= lambda / static_cast<double>(v + 1);
  }
  expected[len] = static_cast<double>(total) * std::max(1.0 - cdf, 0.0);

  // pool the two tails inward until each end bin holds expectation >= 5
  std::size_t lo = 0;
  std::size_t hi = expected.size() - 1;
  while (lo < hi && expected[lo] < 5.0) {
    expected[lo + 1] += expected[lo];
    observed[lo + 1] += observed[lo];
    ++lo;
  }
  while (hi > lo && expected[hi] < 5.0) {
    expected[hi - 1] += expected[hi];
    observed[hi - 1] += observed[hi];
    --hi;
  }
  std::vector<double> e;
  std::vector<std::int64_t> o;
  for (std::size_t i = lo; i <= hi; ++i) {
    e.push_back(expected[i]);
    o.push_back(observed[i]);
  }
  // interior bins can dip under 5 for small totals; merge them rightward
  for (std::size_t i = 0; i + 1 < e.size();) {
    if (e[i] < 5.0) {
      e[i + 1] += e[i];
      o[i + 1] += o[i];
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
      o.erase(o.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (e.size() >= 2 && e.back() < 5.0) {
    e[e.size() - 2] += e.back();
    o[o.size() - 2] += o.back();
    e.pop_back();
    o.pop_back();
  }
  if (e.size() < 2) {
    throw ValidationError("chi_square_poisson: degenerate single-bin histogram");
  }

  CompensatedSum stat;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double dev = static_cast<double>(o[i]) - e[i];
    stat.add(dev * dev / e[i]);
  }
  TestResult t;
  t.statistic = stat.value();
  t.dof_or_n = static_cast<long>(e.size()) - 1;
  t.p_value = chi_square_upper_tail(t.statistic, static_cast<int>(t.dof_or_n));
  t.alpha = alpha;
  t.pass = t.p_value > alpha;
  return t;
}

TestResult ks_normal(std::span<const double> values, double alpha) {
  if (values.size() < 20) throw ValidationError("ks_normal: need at least 20 samples");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  double d_stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = normal_cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / static_cast<double>(n) - phi;
    const double below = phi - static_cast<double>(i) / static_cast<double>(n);
    d_stat = std::max({d_stat, above, below});
  }
  TestResult t;
  t.statistic = d_stat;
  t.dof_or_n = static_cast<long>(n);
  t.p_value = kolmogorov_q(std::sqrt(static_cast<double>(n)) * d_stat);
  t.alpha = alpha;
  t.pass = t.p_value > alpha;
  return t;
}

CovarianceEstimate covariance_estimate(
    std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 2) {
    throw ValidationError("covariance_estimate: need at least two pairs");
  }
  const auto n = pairs.size();
  const double dn = static_cast<double>(n);
  CompensatedSum sx, sy, sxy;
  for (const auto& [x, y] : pairs) {
    sx.add(x);
    sy.add(y);
    sxy.add(x * y);
  }
  const double tx = sx.value();
  const double ty = sy.value();
  const double txy = sxy.value();

  CovarianceEstimate est;
  est.n = n;
  est.value = txy / dn - (tx / dn) * (ty / dn);

  // leave-one-out estimates from the precomputed sums
  const double m = dn - 1.0;
  std::vector<double> loo(n);
  CompensatedSum loo_sum;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x, y] = pairs[i];
    const double v = (txy - x * y) / m - ((tx - x) / m) * ((ty - y) / m);
    loo[i] = v;
    loo_sum.add(v);
  }
  const double loo_mean = loo_sum.value() / dn;
  CompensatedSum dev_sq;
  for (double v : loo) {
    const double dev = v - loo_mean;
    dev_sq.add(dev * dev);
  }
  est.std_error = std::sqrt(std::max(dev_sq.value(), 0.0) * m / dn);
  return est;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw ValidationError("regularized_gamma_q: need a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  const double log_gamma_a = std::lgamma(a);
  if (x < a + 1.0) {
    // lower series, Q = 1 - P
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    const double p = sum * std::exp(-x + a * std::log(x) - log_gamma_a);
    return std::clamp(1.0 - p, 0.0, 1.0);
  }
  // modified Lentz continued fraction for Q
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const double q = h * std::exp(-x + a * std::log(x) - log_gamma_a);
  return std::clamp(q, 0.0, 1.0);
}

double chi_square_upper_tail(double statistic, int dof) {
  if (dof < 1) throw ValidationError("chi_square_upper_tail: dof must be >= 1");
  if (statistic <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * static_cast<double>(dof), 0.5 * statistic);
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 1000; ++j) {
    const double term = std::exp(-2.0 * static_cast<double>(j) * static_cast<double>(j) *
                                 lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace psl
