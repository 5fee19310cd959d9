#include "psl/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "psl/rogers.hpp"

namespace psl {

namespace {

constexpr double kGuardRel = 1e-9;

/// Depth-first bounded coordinate search over an LLL-reduced basis.
/// Calls sink(x) for every nonzero x (input-basis coordinates) whose image
/// lies within `radius` of the origin, up to a small inflation so that the
/// caller's exact membership filter makes the final call.
template <typename Sink>
void walk_ball_candidates(const Eigen::MatrixXd& basis, double radius,
                          EnumerationDiagnostics* diag, Sink&& sink) {
  if (!(radius > 0.0)) return;
  if (!std::isfinite(radius)) {
    throw ValidationError("enumerate: body must be bounded");
  }
  const Index d = basis.cols();
  auto red = lll_reduce(basis);
  const Eigen::MatrixXd g = red.basis.transpose() * red.basis;
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) {
    throw PrecisionError("enumerate: Cholesky failed on reduced Gram matrix");
  }
  const Eigen::MatrixXd r = llt.matrixU();
  const double budget = radius * radius * (1.0 + 1e-7) + 1e-300;

  std::vector<std::int64_t> y(static_cast<std::size_t>(d), 0);
  VectorXi64 x(d);
  auto dfs = [&](auto&& self, Index i, double remaining, bool any_nonzero) -> void {
    double sigma = 0.0;
    for (Index j = i + 1; j < d; ++j) {
      sigma += r(i, j) * static_cast<double>(y[static_cast<std::size_t>(j)]);
    }
    const double rii = r(i, i);
    const double half = std::sqrt(std::max(remaining, 0.0));
    const auto lo = static_cast<std::int64_t>(std::ceil((-half - sigma) / rii - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor((half - sigma) / rii + 1e-9));
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (diag) ++diag->nodes_visited;
      const double off = rii * static_cast<double>(v) + sigma;
      const double cost = off * off;
      if (cost > remaining + 1e-9 * budget) continue;
      y[static_cast<std::size_t>(i)] = v;
      if (i == 0) {
        if (any_nonzero || v != 0) {
          for (Index row = 0; row < d; ++row) {
            std::int64_t acc = 0;
            for (Index col = 0; col < d; ++col) {
              acc += red.transform(row, col) * y[static_cast<std::size_t>(col)];
            }
            x(row) = acc;
          }
          if (diag) ++diag->candidates;
          sink(x);
        }
      } else {
        self(self, i - 1, std::max(remaining - cost, 0.0), any_nonzero || v != 0);
      }
    }
    y[static_cast<std::size_t>(i)] = 0;
  };
  dfs(dfs, d - 1, budget, false);
}

bool exact_ball_path(const UnimodularLattice& lattice, const StarBody& body) {
  return body.kind() == StarBody::Kind::Ball && lattice.integer_form().has_value();
}

/// ||B_int x||^2, exact.
long double integer_norm_sq(const MatrixXi64& b, const VectorXi64& x) {
  __int128 acc = 0;
  const Index d = b.rows();
  for (Index i = 0; i < d; ++i) {
    std::int64_t row = 0;
    for (Index j = 0; j < d; ++j) row += b(i, j) * x(j);
    acc += static_cast<__int128>(row) * row;
  }
  return static_cast<long double>(acc);
}

}  // namespace

std::vector<VectorXi64> enumerate_points_in_basis(const Eigen::MatrixXd& basis,
                                                  const StarBody& body,
                                                  EnumerationDiagnostics* diag) {
  if (basis.rows() != basis.cols() || basis.cols() != body.dim()) {
    throw ValidationError("enumerate: basis and body dimensions must agree");
  }
  std::vector<VectorXi64> out;
  walk_ball_candidates(basis, body.rho_max(), diag, [&](const VectorXi64& x) {
    const Eigen::VectorXd v = basis * x.cast<double>();
    const double gsq = body.gauge_sq(v);
    if (diag && std::abs(gsq - 1.0) <= 2.0 * kGuardRel) ++diag->guard_band_hits;
    if (gsq < 1.0) out.push_back(x);
  });
  return out;
}

std::vector<VectorXi64> enumerate_points(const UnimodularLattice& lattice,
                                         const StarBody& body,
                                         EnumerationDiagnostics* diag) {
  if (lattice.dim() != body.dim()) {
    throw ValidationError("enumerate: lattice and body dimensions must agree");
  }
  if (!exact_ball_path(lattice, body)) {
    return enumerate_points_in_basis(lattice.basis(), body, diag);
  }
  // ball + integer form: decide membership as ||B_int x||^2 < p^(2/d) R^2
  // in integer/extended precision instead of the rounded real basis.
  const auto& form = *lattice.integer_form();
  const long double rhs = std::pow(static_cast<long double>(form.scale), -2.0L) *
                          static_cast<long double>(body.radius()) *
                          static_cast<long double>(body.radius());
  std::vector<VectorXi64> out;
  walk_ball_candidates(lattice.basis(), body.radius(), diag, [&](const VectorXi64& x) {
    const long double lhs = integer_norm_sq(form.matrix, x);
    if (diag && std::abs(static_cast<double>(lhs - rhs)) <=
                    kGuardRel * static_cast<double>(rhs)) {
      ++diag->guard_band_hits;
    }
    if (lhs < rhs) out.push_back(x);
  });
  return out;
}

bool is_primitive(const VectorXi64& x) {
  if (x.size() == 0 || x.isZero()) {
    throw ValidationError("is_primitive: zero vector has no primitivity");
  }
  std::int64_t g = 0;
  for (Index i = 0; i < x.size(); ++i) {
    g = std::gcd(g, x(i) < 0 ? -x(i) : x(i));
    if (g == 1) return true;
  }
  return g == 1;
}

CountSample count_primitive(const UnimodularLattice& lattice, const StarBody& body,
                            EnumerationDiagnostics* diag) {
  const double one[] = {1.0};
  CountSample s = count_profile(lattice, body, one, diag);
  s.profile.clear();
  return s;
}

CountSample count_profile(const UnimodularLattice& lattice, const StarBody& body,
                          std::span<const double> times,
                          EnumerationDiagnostics* diag) {
  if (lattice.dim() != body.dim()) {
    throw ValidationError("count_profile: lattice and body dimensions must agree");
  }
  if (times.empty()) throw ValidationError("count_profile: need at least one time");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || !std::isfinite(times[i])) {
      throw ValidationError("count_profile: times must be finite and >= 0");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw ValidationError("count_profile: times must be strictly increasing");
    }
  }
  const int d = body.dim();
  const std::size_t ell = times.size();
  const double t_max = times.back();
  std::vector<std::int64_t> first_entry(ell, 0);  // count of points entering at time bin i

  const double search_radius =
      body.rho_max() * std::pow(t_max, 1.0 / static_cast<double>(d));

  if (exact_ball_path(lattice, body)) {
    const auto& form = *lattice.integer_form();
    const long double base = std::pow(static_cast<long double>(form.scale), -2.0L) *
                             static_cast<long double>(body.radius()) *
                             static_cast<long double>(body.radius());
    std::vector<long double> thresholds(ell);
    for (std::size_t i = 0; i < ell; ++i) {
      thresholds[i] = base * std::pow(static_cast<long double>(times[i]),
                                       2.0L / static_cast<long double>(d));
    }
    walk_ball_candidates(lattice.basis(), search_radius, diag,
                         [&](const VectorXi64& x) {
                           if (!is_primitive(x)) return;
                           const long double lhs = integer_norm_sq(form.matrix, x);
                           for (std::size_t i = 0; i < ell; ++i) {
                             if (diag &&
                                 std::abs(static_cast<double>(lhs - thresholds[i])) <=
                                     kGuardRel * static_cast<double>(thresholds[i])) {
                               ++diag->guard_band_hits;
                             }
                             if (lhs < thresholds[i]) {
                               ++first_entry[i];
                               break;
                             }
                           }
                         });
  } else {
    walk_ball_candidates(lattice.basis(), search_radius, diag,
                         [&](const VectorXi64& x) {
                           if (!is_primitive(x)) return;
                           const Eigen::VectorXd v = lattice.basis() * x.cast<double>();
                           const double entry = body.entry_time(v);
                           for (std::size_t i = 0; i < ell; ++i) {
                             if (diag && times[i] > 0.0 &&
                                 std::abs(entry - times[i]) <= kGuardRel * times[i]) {
                               ++diag->guard_band_hits;
                             }
                             if (entry < times[i]) {
                               ++first_entry[i];
                               break;
                             }
                           }
                         });
  }

  CountSample out;
  out.profile.resize(ell);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < ell; ++i) {
    acc += first_entry[i];
    out.profile[i] = acc;
  }
  out.raw_count = out.profile.back();
  out.w = 0.5 * static_cast<double>(out.raw_count);
  return out;
}

double z_statistic(std::int64_t raw_count, double phi, int dim, double t) {
  if (!(phi > 0.0)) throw ValidationError("z_statistic: phi must be positive");
  if (!(t >= 0.0)) throw ValidationError("z_statistic: t must be >= 0");
  const double z = zeta(dim);
  const double centered = static_cast<double>(raw_count) - t * phi / z;
  return centered / std::sqrt(2.0 * phi / z);
}

}  // namespace psl
