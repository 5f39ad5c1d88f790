#pragma once

#include "spherewidth/point.hpp"

namespace spherewidth {

// Closed hemisphere H(m): all x with <m, x> >= 0.
class Hemisphere {
 public:
  explicit Hemisphere(UnitPoint center) : center_(std::move(center)) {}

  const UnitPoint& center() const { return center_; }
  int dim() const { return center_.dim(); }

  // Signed height of x over the bounding great sphere; >= 0 inside.
  double signed_height(const UnitPoint& x) const {
    require_same_dim(center_, x);
    return dot(center_, x);
  }

  bool contains(const UnitPoint& x, double tol = kGeoTol) const {
    return signed_height(x) >= -tol;
  }

  bool on_boundary(const UnitPoint& x, double tol = kGeoTol) const {
    return std::abs(signed_height(x)) <= tol;
  }

 private:
  UnitPoint center_;
};

// True iff the ball of radius rho about o fits inside H(m):
// dist(o, m) <= pi/2 - rho. Requires 0 < rho < pi/2.
bool ball_in_hemisphere(const UnitPoint& o, Angle rho, const UnitPoint& m);

}  // namespace spherewidth
