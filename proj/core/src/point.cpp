#include "spherewidth/point.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "spherewidth/hemisphere.hpp"
#include "spherewidth/rng.hpp"

namespace spherewidth {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAUnitVector: return "NotAUnitVector";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::DegenerateGeodesic: return "DegenerateGeodesic";
    case ErrorCode::EqualHemispheres: return "EqualHemispheres";
    case ErrorCode::OppositeHemispheres: return "OppositeHemispheres";
    case ErrorCode::NotACorner: return "NotACorner";
    case ErrorCode::AntipodalPair: return "AntipodalPair";
    case ErrorCode::NotInOpenHemisphere: return "NotInOpenHemisphere";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::PointIsInside: return "PointIsInside";
    case ErrorCode::PointIsOutside: return "PointIsOutside";
    case ErrorCode::NotSupporting: return "NotSupporting";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NotADiameterPair: return "NotADiameterPair";
    case ErrorCode::WidthNotAboveHalfPi: return "WidthNotAboveHalfPi";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::NoBoundarySampler: return "NoBoundarySampler";
    case ErrorCode::CenterConditionFailed: return "CenterConditionFailed";
    case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::WidthOutOfRange: return "WidthOutOfRange";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::KappaOutOfRange: return "KappaOutOfRange";
    case ErrorCode::SigmaOutOfRange: return "SigmaOutOfRange";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::WOutOfRange: return "WOutOfRange";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

UnitPoint::UnitPoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() < 3) {
    throw Error(ErrorCode::DimensionTooSmall,
                "points live on S^d with d >= 2 (need >= 3 coordinates)");
  }
  const double n = coords_.norm();
  if (std::abs(n - 1.0) > kUnitEps) {
    throw Error(ErrorCode::NotAUnitVector,
                "norm deviates from 1 by " + std::to_string(std::abs(n - 1.0)));
  }
  // Bits are kept as given so serialization round-trips exactly; callers
  // with fresh arithmetic go through normalized().
}

UnitPoint UnitPoint::normalized(Eigen::VectorXd v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::NotAUnitVector, "cannot normalize a zero vector");
  }
  v /= n;
  return UnitPoint(std::move(v));
}

void require_same_dim(const UnitPoint& a, const UnitPoint& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "S^" + std::to_string(a.dim()) + " vs S^" + std::to_string(b.dim()));
  }
}

Angle dist(const UnitPoint& a, const UnitPoint& b) {
  require_same_dim(a, b);
  // Coinciding and antipodal representations are exact by convention.
  if (a.coords() == b.coords()) return Angle(0.0);
  if (a.coords() == -b.coords()) return Angle(kPi);
  const double c = std::clamp(dot(a, b), -1.0, 1.0);
  return Angle(std::acos(c));
}

bool nearly_equal(const UnitPoint& a, const UnitPoint& b, double tol) {
  require_same_dim(a, b);
  return (a.coords() - b.coords()).norm() <= tol;
}

bool nearly_antipodal(const UnitPoint& a, const UnitPoint& b, double tol) {
  require_same_dim(a, b);
  return (a.coords() + b.coords()).norm() <= tol;
}

Eigen::VectorXd tangent_toward(const UnitPoint& a, const UnitPoint& b) {
  require_same_dim(a, b);
  Eigen::VectorXd t = b.coords() - dot(a, b) * a.coords();
  const double n = t.norm();
  if (n <= kUnitEps) {
    throw Error(ErrorCode::DegenerateGeodesic,
                "no unique arc between equal or antipodal points");
  }
  return t / n;
}

UnitPoint walk(const UnitPoint& a, const Eigen::VectorXd& unit_tangent,
               double theta) {
  if (theta == 0.0) return a;
  return UnitPoint::normalized(std::cos(theta) * a.coords() +
                               std::sin(theta) * unit_tangent);
}

UnitPoint geodesic_point(const UnitPoint& a, const UnitPoint& b, double t) {
  require_same_dim(a, b);
  if (nearly_equal(a, b)) {
    throw Error(ErrorCode::DegenerateGeodesic, "endpoints coincide");
  }
  if (nearly_antipodal(a, b)) {
    throw Error(ErrorCode::DegenerateGeodesic, "endpoints are antipodal");
  }
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return walk(a, tangent_toward(a, b), t * dist(a, b).radians());
}

Eigen::MatrixXd orthonormal_complement(const Eigen::MatrixXd& columns) {
  const Eigen::Index n = columns.rows();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(columns);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(n - columns.cols());
}

Eigen::MatrixXd tangent_basis(const UnitPoint& p) {
  return orthonormal_complement(p.coords());
}

bool ball_in_hemisphere(const UnitPoint& o, Angle rho, const UnitPoint& m) {
  if (!(rho.radians() > 0.0 && rho.radians() < kHalfPi)) {
    throw Error(ErrorCode::RadiusOutOfRange, "need 0 < rho < pi/2");
  }
  return dist(o, m).radians() <= kHalfPi - rho.radians() + kGeoTol;
}

Eigen::VectorXd ld_direction(int n, std::uint64_t seed, std::uint64_t index) {
  if (n == 2) {
    const double off =
        static_cast<double>(detail::splitmix64(seed) >> 11) * 0x1.0p-53;
    const double a = 2.0 * kPi * ld_frac(0.61803398874989484820, index, off);
    Eigen::Vector2d v(std::cos(a), std::sin(a));
    return v;
  }
  if (n == 3) {
    const Eigen::VectorXd u = ld_point(2, seed, index);
    const double z = 1.0 - 2.0 * u[0];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = 2.0 * kPi * u[1];
    Eigen::Vector3d v(r * std::cos(a), r * std::sin(a), z);
    return v;
  }
  Rng rng(Rng::derive(seed, index));
  Eigen::VectorXd v = rng.gaussian(n);
  while (v.norm() < 1e-8) v = rng.gaussian(n);
  return v / v.norm();
}

}  // namespace spherewidth
