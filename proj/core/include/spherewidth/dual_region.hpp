#pragma once

#include "spherewidth/body.hpp"

namespace spherewidth {

// The set of hemisphere centers m with support_margin(body, m) >= 0, i.e.
// the centers of all hemispheres containing the body. Spherically convex;
// its boundary consists of the supporting directions.
class DualRegion {
 public:
  explicit DualRegion(SphericalBody body);

  int dim() const { return body_.dim(); }
  const SphericalBody& body() const { return body_; }

  double margin(const UnitPoint& m) const { return support_margin(body_, m); }
  bool contains(const UnitPoint& m, double tol = kGeoTol) const {
    return margin(m) >= -tol;
  }

  // Strictly interior center with maximal margin (max-margin direction for
  // polytopes, the ball center for balls).
  const UnitPoint& anchor() const { return anchor_; }
  double anchor_margin() const { return anchor_margin_; }

  // Exit of the ray from the anchor along a unit tangent direction: the
  // first point where the margin reaches zero (a supporting direction).
  UnitPoint boundary_toward(const Eigen::VectorXd& unit_tangent) const;

  // Seeded low-discrepancy boundary point stream.
  UnitPoint sample_boundary(std::uint64_t seed, std::uint64_t index) const;

  // Face description for polytopes on S^2 / S^3 (when enumerable).
  const std::optional<DualFaces>& faces() const;

 private:
  SphericalBody body_;
  UnitPoint anchor_;
  double anchor_margin_ = 0.0;
  Eigen::MatrixXd tangent_basis_;
  std::optional<DualFaces> no_faces_;
};

inline DualRegion dual_region(const SphericalBody& body) {
  return DualRegion(body);
}

}  // namespace spherewidth
