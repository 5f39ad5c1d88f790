#pragma once

#include <Eigen/Core>

#include "spherewidth/constants.hpp"
#include "spherewidth/errors.hpp"

namespace spherewidth {

// Angle in radians, restricted to [0, pi].
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : radians_(radians) {
    if (!(radians >= 0.0 && radians <= kPi)) {
      throw Error(ErrorCode::AngleOutOfRange,
                  "angle must lie in [0, pi], got " + std::to_string(radians));
    }
  }

  double radians() const { return radians_; }

  friend bool operator<(Angle a, Angle b) { return a.radians_ < b.radians_; }
  friend bool operator>(Angle a, Angle b) { return a.radians_ > b.radians_; }
  friend bool operator<=(Angle a, Angle b) { return a.radians_ <= b.radians_; }
  friend bool operator>=(Angle a, Angle b) { return a.radians_ >= b.radians_; }

 private:
  double radians_ = 0.0;
};

// A point of S^d, stored as a unit vector in R^{d+1}. d >= 2 everywhere.
class UnitPoint {
 public:
  explicit UnitPoint(Eigen::VectorXd coords);

  // Renormalizes; the constructor of choice after any arithmetic.
  static UnitPoint normalized(Eigen::VectorXd v);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  const Eigen::VectorXd& coords() const { return coords_; }
  double operator[](Eigen::Index i) const { return coords_[i]; }

  UnitPoint antipode() const { return UnitPoint(-coords_); }

 private:
  Eigen::VectorXd coords_;
};

inline double dot(const UnitPoint& a, const UnitPoint& b) {
  return a.coords().dot(b.coords());
}

void require_same_dim(const UnitPoint& a, const UnitPoint& b);

// Spherical distance arccos(clamp(<a,b>, -1, 1)).
Angle dist(const UnitPoint& a, const UnitPoint& b);

// Chordal predicates; robust where arccos loses resolution.
bool nearly_equal(const UnitPoint& a, const UnitPoint& b, double tol = kGeoTol);
bool nearly_antipodal(const UnitPoint& a, const UnitPoint& b,
                      double tol = kGeoTol);

// Unit tangent vector at a pointing along the arc toward b.
Eigen::VectorXd tangent_toward(const UnitPoint& a, const UnitPoint& b);

// Point at arc length theta from a along the given unit tangent.
UnitPoint walk(const UnitPoint& a, const Eigen::VectorXd& unit_tangent,
               double theta);

// Point of the arc ab with dist(a, result) = t * dist(a, b), t in [0, 1].
UnitPoint geodesic_point(const UnitPoint& a, const UnitPoint& b, double t);

// Orthonormal basis of the orthogonal complement of the given columns.
Eigen::MatrixXd orthonormal_complement(const Eigen::MatrixXd& columns);

// Orthonormal basis of the tangent space at p (complement of p itself).
Eigen::MatrixXd tangent_basis(const UnitPoint& p);

}  // namespace spherewidth
