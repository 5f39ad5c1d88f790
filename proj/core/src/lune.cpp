#include "spherewidth/lune.hpp"

#include <cmath>

#include "spherewidth/rng.hpp"

namespace spherewidth {

namespace {

UnitPoint face_center(const UnitPoint& own, const UnitPoint& other, double t) {
  // Center of the bounding hemisphere on bd(H(own)) inside H(other):
  // normalize(other - t * own), orthogonal to own by construction.
  return UnitPoint::normalized(other.coords() - t * own.coords());
}

}  // namespace

Lune::Lune(Hemisphere first, Hemisphere second)
    : first_(std::move(first)),
      second_(std::move(second)),
      thickness_(0.0),
      first_face_center_(first_.center()),
      second_face_center_(second_.center()),
      corner_basis_() {
  const UnitPoint& g = first_.center();
  const UnitPoint& h = second_.center();
  require_same_dim(g, h);
  if (nearly_equal(g, h)) {
    throw Error(ErrorCode::EqualHemispheres, "hemisphere centers coincide");
  }
  if (nearly_antipodal(g, h)) {
    throw Error(ErrorCode::OppositeHemispheres, "hemisphere centers are antipodal");
  }
  const double t = std::clamp(dot(g, h), -1.0, 1.0);
  thickness_ = Angle(kPi - std::acos(t));
  first_face_center_ = face_center(g, h, t);
  second_face_center_ = face_center(h, g, t);

  Eigen::MatrixXd span(g.coords().size(), 2);
  span.col(0) = g.coords();
  span.col(1) = h.coords();
  corner_basis_ = orthonormal_complement(span);
}

bool Lune::is_corner(const UnitPoint& x, double tol) const {
  require_same_dim(first_.center(), x);
  return std::abs(first_.signed_height(x)) <= tol &&
         std::abs(second_.signed_height(x)) <= tol;
}

UnitPoint Lune::sample_corner(std::uint64_t seed, std::uint64_t index) const {
  const Eigen::Index k = corner_basis_.cols();
  if (k == 1) {
    Eigen::VectorXd v = corner_basis_.col(0);
    return UnitPoint::normalized(index % 2 == 0 ? v : Eigen::VectorXd(-v));
  }
  Rng rng(Rng::derive(seed, index));
  Eigen::VectorXd w = rng.gaussian(static_cast<int>(k));
  while (w.norm() < 1e-8) w = rng.gaussian(static_cast<int>(k));
  return UnitPoint::normalized(corner_basis_ * w);
}

std::vector<UnitPoint> Lune::corner_pair() const {
  if (dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "corner_pair is defined on S^2 only; use corner_basis");
  }
  const UnitPoint c = UnitPoint::normalized(corner_basis_.col(0));
  return {c, c.antipode()};
}

Lune make_lune(const Hemisphere& g, const Hemisphere& h) { return Lune(g, h); }

Angle lune_thickness(const Lune& lune) { return lune.thickness(); }

Angle corner_angle(const Lune& lune, const UnitPoint& r) {
  if (!lune.is_corner(r)) {
    throw Error(ErrorCode::NotACorner,
                "point is not on both bounding great spheres");
  }
  const Eigen::VectorXd u1 = tangent_toward(r, lune.first_face_center());
  const Eigen::VectorXd u2 = tangent_toward(r, lune.second_face_center());
  return Angle(std::acos(std::clamp(u1.dot(u2), -1.0, 1.0)));
}

bool lune_contains(const Lune& lune, const UnitPoint& x, double tol) {
  return lune.contains(x, tol);
}

}  // namespace spherewidth
