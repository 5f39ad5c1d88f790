#pragma once

#include <vector>

#include "spherewidth/hemisphere.hpp"
#include "spherewidth/point.hpp"

namespace spherewidth {

// Intersection of two distinct, non-opposite hemispheres. The two bounding
// (d-1)-dimensional hemispheres have centers first_face_center (on the
// boundary of `first`, inside `second`) and second_face_center (the mirror).
// Thickness equals their spherical distance, pi - dist(centers).
class Lune {
 public:
  Lune(Hemisphere first, Hemisphere second);

  const Hemisphere& first() const { return first_; }
  const Hemisphere& second() const { return second_; }
  int dim() const { return first_.dim(); }

  Angle thickness() const { return thickness_; }
  const UnitPoint& first_face_center() const { return first_face_center_; }
  const UnitPoint& second_face_center() const { return second_face_center_; }

  bool contains(const UnitPoint& x, double tol = kGeoTol) const {
    return first_.contains(x, tol) && second_.contains(x, tol);
  }

  // The corner set {x : <g,x> = 0, <h,x> = 0} is a (d-2)-dimensional great
  // subsphere; this basis spans its (d-1)-dimensional linear hull.
  const Eigen::MatrixXd& corner_basis() const { return corner_basis_; }

  bool is_corner(const UnitPoint& x, double tol = kGeoTol) const;

  // Deterministic corner sample; on S^2 alternates between the two corners.
  UnitPoint sample_corner(std::uint64_t seed, std::uint64_t index) const;

  // The two antipodal corners (d == 2 only).
  std::vector<UnitPoint> corner_pair() const;

 private:
  Hemisphere first_;
  Hemisphere second_;
  Angle thickness_;
  UnitPoint first_face_center_;
  UnitPoint second_face_center_;
  Eigen::MatrixXd corner_basis_;
};

// Builds the lune G cap H; throws EqualHemispheres / OppositeHemispheres
// when the centers coincide or are antipodal within kGeoTol.
Lune make_lune(const Hemisphere& g, const Hemisphere& h);

Angle lune_thickness(const Lune& lune);

// Non-oriented angle at corner r between the tangent directions toward the
// two bounding-face centers. Equals the thickness for genuine corners.
Angle corner_angle(const Lune& lune, const UnitPoint& r);

bool lune_contains(const Lune& lune, const UnitPoint& x, double tol = kGeoTol);

}  // namespace spherewidth
