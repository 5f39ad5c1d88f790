#pragma once

#include "spherewidth/point.hpp"

namespace spherewidth {

// Analytic ball oracle: all points within `radius` of `center`,
// 0 < radius < pi/2.
class BallBody {
 public:
  BallBody(UnitPoint center, Angle radius);

  const UnitPoint& center() const { return center_; }
  Angle radius() const { return radius_; }
  int dim() const { return center_.dim(); }

  // min over the ball of <m, x> = cos(min(dist(m, center) + radius, pi)).
  double support_margin(const UnitPoint& m) const;

  bool contains(const UnitPoint& x, double tol = kGeoTol) const;
  double containment_violation(const UnitPoint& x) const;

  // Signed angular depth below the boundary sphere; > 0 strictly inside.
  double interior_margin(const UnitPoint& x) const;

  UnitPoint boundary_point(std::uint64_t seed, std::uint64_t index) const;

 private:
  UnitPoint center_;
  Angle radius_;
};

}  // namespace spherewidth
