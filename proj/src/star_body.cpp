#include "psl/star_body.hpp"

#include <cmath>
#include <limits>

#include "psl/rng.hpp"

namespace psl {

double unit_ball_volume(int dim) {
  if (dim < 1) throw ValidationError("unit_ball_volume: dim must be >= 1");
  const double d = static_cast<double>(dim);
  return std::exp(0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d + 1.0));
}

double ball_radius_for_volume(int dim, double volume) {
  if (!(volume > 0.0)) throw ValidationError("ball_radius_for_volume: volume must be > 0");
  return std::pow(volume / unit_ball_volume(dim), 1.0 / static_cast<double>(dim));
}

StarBody StarBody::ball(int dim, double radius) {
  if (dim < 1) throw ValidationError("StarBody::ball: dim must be >= 1");
  if (radius < 0.0 || !std::isfinite(radius)) {
    throw ValidationError("StarBody::ball: radius must be finite and >= 0");
  }
  StarBody s;
  s.dim_ = dim;
  s.kind_ = Kind::Ball;
  s.radius_ = radius;
  s.rho_max_ = radius;
  s.volume_ = unit_ball_volume(dim) * std::pow(radius, dim);
  return s;
}

StarBody StarBody::ball_with_volume(int dim, double volume) {
  return ball(dim, ball_radius_for_volume(dim, volume));
}

StarBody StarBody::ellipsoid(Eigen::VectorXd semi_axes) {
  const int dim = static_cast<int>(semi_axes.size());
  if (dim < 1) throw ValidationError("StarBody::ellipsoid: need at least one axis");
  for (int i = 0; i < dim; ++i) {
    if (!(semi_axes(i) > 0.0) || !std::isfinite(semi_axes(i))) {
      throw ValidationError("StarBody::ellipsoid: axes must be positive and finite");
    }
  }
  StarBody s;
  s.dim_ = dim;
  s.kind_ = Kind::Ellipsoid;
  s.rho_max_ = semi_axes.maxCoeff();
  s.volume_ = unit_ball_volume(dim) * semi_axes.prod();
  s.semi_axes_ = std::move(semi_axes);
  return s;
}

StarBody StarBody::radial(int dim, std::function<double(const Eigen::VectorXd&)> rho,
                          double rho_max, double volume) {
  if (dim < 1) throw ValidationError("StarBody::radial: dim must be >= 1");
  if (!rho) throw ValidationError("StarBody::radial: rho must be callable");
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) {
    throw ValidationError("StarBody::radial: rho_max must be positive and finite");
  }
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw ValidationError("StarBody::radial: volume must be positive and finite");
  }
  // spot-check rho for symmetry and the stated bound on a few fixed directions
  CounterRng rng(0x5b0d7u, 0);
  for (int trial = 0; trial < 16; ++trial) {
    Eigen::VectorXd u(dim);
    double norm = 0.0;
    do {
      for (int i = 0; i < dim; ++i) u(i) = rng.uniform_unit() * 2.0 - 1.0;
      norm = u.norm();
    } while (norm < 1e-3);
    u /= norm;
    const double r_plus = rho(u);
    const double r_minus = rho(-u);
    if (!(r_plus > 0.0) || std::abs(r_plus - r_minus) > 1e-9 * std::max(1.0, r_plus)) {
      throw ValidationError("StarBody::radial: rho must be positive and even");
    }
    if (r_plus > rho_max * (1.0 + 1e-9)) {
      throw ValidationError("StarBody::radial: rho exceeds declared rho_max");
    }
  }
  StarBody s;
  s.dim_ = dim;
  s.kind_ = Kind::Radial;
  s.rho_max_ = rho_max;
  s.volume_ = volume;
  s.rho_ = std::move(rho);
  return s;
}

double StarBody::gauge_sq(const Eigen::VectorXd& v) const {
  switch (kind_) {
    case Kind::Ball: {
      if (radius_ == 0.0) return std::numeric_limits<double>::infinity();
      return v.squaredNorm() / (radius_ * radius_);
    }
    case Kind::Ellipsoid:
      return v.cwiseQuotient(semi_axes_).squaredNorm();
    case Kind::Radial: {
      const double n2 = v.squaredNorm();
      if (n2 == 0.0) return 0.0;
      const double r = rho_(v / std::sqrt(n2));
      return n2 / (r * r);
    }
  }
  return 0.0;
}

double StarBody::entry_time(const Eigen::VectorXd& v) const {
  return std::pow(gauge_sq(v), 0.5 * static_cast<double>(dim_));
}

bool StarBody::contains(const Eigen::VectorXd& v) const {
  if (v.squaredNorm() == 0.0) return false;
  return gauge_sq(v) < 1.0;
}

}  // namespace psl
