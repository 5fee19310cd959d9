#ifndef PSL_STAR_BODY_HPP
#define PSL_STAR_BODY_HPP

#include <Eigen/Dense>
#include <functional>
#include <utility>

#include "psl/errors.hpp"

namespace psl {

double unit_ball_volume(int dim);

/// Radius R with vol(ball_d(R)) = V.
double ball_radius_for_volume(int dim, double volume);

/// Origin-symmetric star-shaped region {v != 0 : ||v|| < rho(v/||v||)}.
/// Membership is an open condition; dilation by time t scales the radial
/// function by t^(1/d) so that volume scales linearly in t.
class StarBody {
 public:
  enum class Kind { Ball, Ellipsoid, Radial };

  static StarBody ball(int dim, double radius);
  static StarBody ball_with_volume(int dim, double volume);
  static StarBody ellipsoid(Eigen::VectorXd semi_axes);
  static StarBody radial(int dim, std::function<double(const Eigen::VectorXd&)> rho,
                         double rho_max, double volume);

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  double volume() const { return volume_; }
  double rho_max() const { return rho_max_; }
  double radius() const { return radius_; }
  const Eigen::VectorXd& semi_axes() const { return semi_axes_; }

  /// Squared gauge g(v)^2 where g(v) = ||v|| / rho(v/||v||); membership in
  /// the body is g < 1, membership in the t-dilate is g^d < t.
  double gauge_sq(const Eigen::VectorXd& v) const;

  /// Entry time of v into the dilate family: smallest t with v in t^(1/d)S.
  double entry_time(const Eigen::VectorXd& v) const;

  bool contains(const Eigen::VectorXd& v) const;

 private:
  StarBody() = default;

  int dim_ = 0;
  Kind kind_ = Kind::Ball;
  double volume_ = 0.0;
  double rho_max_ = 0.0;
  double radius_ = 0.0;                  // ball
  Eigen::VectorXd semi_axes_;            // ellipsoid
  std::function<double(const Eigen::VectorXd&)> rho_;  // radial
};

}  // namespace psl

#endif  // PSL_STAR_BODY_HPP
