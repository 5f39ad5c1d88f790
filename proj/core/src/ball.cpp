#include "spherewidth/ball.hpp"

#include <cmath>

#include "spherewidth/rng.hpp"

namespace spherewidth {

BallBody::BallBody(UnitPoint center, Angle radius)
    : center_(std::move(center)), radius_(radius) {
  if (!(radius.radians() > 0.0 && radius.radians() < kHalfPi)) {
    throw Error(ErrorCode::RadiusOutOfRange,
                "ball radius must satisfy 0 < rho < pi/2");
  }
}

double BallBody::support_margin(const UnitPoint& m) const {
  require_same_dim(center_, m);
  const double far = std::min(dist(m, center_).radians() + radius_.radians(), kPi);
  return std::cos(far);
}

bool BallBody::contains(const UnitPoint& x, double tol) const {
  return dist(x, center_).radians() <= radius_.radians() + tol;
}

double BallBody::containment_violation(const UnitPoint& x) const {
  return std::max(0.0, dist(x, center_).radians() - radius_.radians());
}

double BallBody::interior_margin(const UnitPoint& x) const {
  return radius_.radians() - dist(x, center_).radians();
}

UnitPoint BallBody::boundary_point(std::uint64_t seed,
                                   std::uint64_t index) const {
  Rng rng(Rng::derive(seed, index));
  const Eigen::MatrixXd basis = tangent_basis(center_);
  Eigen::VectorXd u = basis * rng.gaussian(static_cast<int>(basis.cols()));
  while (u.norm() < 1e-12) u = basis * rng.gaussian(static_cast<int>(basis.cols()));
  u /= u.norm();
  return walk(center_, u, radius_.radians());
}

}  // namespace spherewidth
