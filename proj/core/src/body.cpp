#include "spherewidth/body.hpp"

#include <cmath>

#include "spherewidth/cone.hpp"
#include "spherewidth/rng.hpp"

namespace spherewidth {

SphericalBody SphericalBody::from_polytope(PolytopeBody body) {
  SphericalBody out;
  out.kind_ = Kind::Polytope;
  out.polytope_ = std::make_shared<const PolytopeBody>(std::move(body));
  return out;
}

SphericalBody SphericalBody::from_ball(BallBody body) {
  SphericalBody out;
  out.kind_ = Kind::Ball;
  out.ball_ = std::make_shared<const BallBody>(std::move(body));
  return out;
}

int SphericalBody::dim() const {
  return kind_ == Kind::Polytope ? polytope_->dim() : ball_->dim();
}

const PolytopeBody& SphericalBody::polytope() const {
  if (kind_ != Kind::Polytope) {
    throw Error(ErrorCode::InvariantViolation, "body is not a polytope");
  }
  return *polytope_;
}

const BallBody& SphericalBody::ball() const {
  if (kind_ != Kind::Ball) {
    throw Error(ErrorCode::InvariantViolation, "body is not a ball");
  }
  return *ball_;
}

SphericalBody SphericalBody::with_boundary(
    std::shared_ptr<const BoundaryGeometry> b) const {
  SphericalBody out = *this;
  out.boundary_ = std::move(b);
  return out;
}

SphericalBody SphericalBody::with_provenance(
    std::shared_ptr<const ConstructorSpec> s) const {
  SphericalBody out = *this;
  out.provenance_ = std::move(s);
  return out;
}

bool contains(const SphericalBody& body, const UnitPoint& x, double tol) {
  return body.is_polytope() ? body.polytope().contains(x, tol)
                            : body.ball().contains(x, tol);
}

double support_margin(const SphericalBody& body, const UnitPoint& m) {
  return body.is_polytope() ? body.polytope().support_margin(m)
                            : body.ball().support_margin(m);
}

double containment_violation(const SphericalBody& body, const UnitPoint& x) {
  return body.is_polytope() ? body.polytope().containment_violation(x)
                            : body.ball().containment_violation(x);
}

namespace {

// Exit parameter of the ray from the inner point along a tangent direction,
// found by bisection on membership (polytopes have no facet description in
// general).
double ray_exit_theta(const PolytopeBody& poly, const Eigen::VectorXd& u) {
  const UnitPoint& a = poly.inner_point();
  auto inside = [&](double theta) {
    return poly.contains(walk(a, u, theta), 1e-12);
  };
  double lo = 0.0, hi = 0.0, step = 0.1;
  while (hi < kPi - 1e-3 && inside(std::min(hi + step, kPi - 1e-3))) {
    hi = std::min(hi + step, kPi - 1e-3);
    step *= 2.0;
  }
  hi = std::min(hi + step, kPi - 1e-3);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

// Largest slice projection over a deterministic probe set. Probing a full
// +- basis guarantees a nonzero result whenever the normal cone at p is
// nontrivial: a sign pair can only both project to zero when the probe is
// orthogonal to the cone's span.
Eigen::VectorXd best_normal_probe(const PolytopeBody& poly,
                                  const UnitPoint& p) {
  const int n = poly.dim() + 1;
  Eigen::VectorXd best = Eigen::VectorXd::Zero(n);
  auto consider = [&](const Eigen::VectorXd& u) {
    const Eigen::VectorXd cand =
        cone::project_to_dual_slice(poly.vertices(), p.coords(), u);
    if (cand.norm() > best.norm()) best = cand;
  };
  consider(p.coords() - poly.inner_point().coords());
  for (int i = 0; i < n; ++i) {
    consider(Eigen::VectorXd::Unit(n, i));
    consider(-Eigen::VectorXd::Unit(n, i));
  }
  return best;
}

}  // namespace

UnitPoint boundary_sample(const SphericalBody& body, std::uint64_t seed,
                          std::uint64_t index) {
  if (body.boundary() != nullptr) return body.boundary()->sample(seed, index);
  if (!body.is_polytope()) return body.ball().boundary_point(seed, index);
  const PolytopeBody& poly = body.polytope();
  const Eigen::MatrixXd basis = tangent_basis(poly.inner_point());
  const Eigen::VectorXd dir =
      basis * ld_direction(static_cast<int>(basis.cols()), seed, index);
  return walk(poly.inner_point(), dir, ray_exit_theta(poly, dir));
}

bool on_boundary(const SphericalBody& body, const UnitPoint& x, double tol) {
  if (!body.is_polytope()) {
    return std::abs(dist(x, body.ball().center()).radians() -
                    body.ball().radius().radians()) <= tol;
  }
  const PolytopeBody& poly = body.polytope();
  if (poly.containment_violation(x) > tol) return false;
  if (best_normal_probe(poly, x).norm() > 1e-8) return true;
  // Points a hair inside the hull have an exactly trivial normal cone;
  // measure the distance to the boundary along the inner ray instead.
  if (nearly_equal(x, poly.inner_point(), 1e-6)) return false;
  const Eigen::VectorXd u = tangent_toward(poly.inner_point(), x);
  const double exit = ray_exit_theta(poly, u);
  return std::abs(dist(poly.inner_point(), x).radians() - exit) <=
         std::max(tol, 1e-9);
}

UnitPoint supporting_direction_at(const SphericalBody& body, const UnitPoint& p,
                                  double boundary_tol) {
  if (!body.is_polytope()) {
    const BallBody& ball = body.ball();
    if (std::abs(dist(p, ball.center()).radians() - ball.radius().radians()) >
        boundary_tol) {
      throw Error(ErrorCode::NotOnBoundary, "point is not on the ball boundary");
    }
    return walk(p, tangent_toward(p, ball.center()), kHalfPi);
  }
  const PolytopeBody& poly = body.polytope();
  if (poly.containment_violation(p) > boundary_tol) {
    throw Error(ErrorCode::NotOnBoundary, "point is outside the body");
  }
  const Eigen::VectorXd best = best_normal_probe(poly, p);
  if (best.norm() > 1e-8) return UnitPoint::normalized(best);

  // Slightly-interior points: separate a point pushed just past the exit
  // of the inner ray; the certificate supports within the boundary
  // tolerance.
  if (nearly_equal(p, poly.inner_point(), 1e-6)) {
    throw Error(ErrorCode::NotOnBoundary,
                "no supporting hemisphere through an interior point");
  }
  const Eigen::VectorXd u = tangent_toward(poly.inner_point(), p);
  const double exit = ray_exit_theta(poly, u);
  if (dist(poly.inner_point(), p).radians() <
      exit - std::max(boundary_tol, 1e-9)) {
    throw Error(ErrorCode::NotOnBoundary,
                "no supporting hemisphere through an interior point");
  }
  const UnitPoint outside =
      walk(poly.inner_point(), u, std::min(exit + 1e-7, kPi - 1e-9));
  const auto proj = cone::project_to_cone(poly.vertices(), outside.coords());
  const Eigen::VectorXd r = outside.coords() - proj.point;
  if (r.norm() < 1e-12) {
    throw Error(ErrorCode::NotOnBoundary,
                "could not certify a supporting hemisphere");
  }
  return UnitPoint::normalized(-r);
}

}  // namespace spherewidth
