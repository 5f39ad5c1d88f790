#pragma once

#include <memory>
#include <optional>

#include "spherewidth/ball.hpp"
#include "spherewidth/polytope.hpp"

namespace spherewidth {

struct ConstructorSpec;

// Exact boundary access for constructor-backed bodies. Samplers return
// points of the true analytic boundary, bypassing hull sampling error.
class BoundaryGeometry {
 public:
  virtual ~BoundaryGeometry() = default;

  virtual UnitPoint sample(std::uint64_t seed, std::uint64_t index) const = 0;

  // Signed angular depth of x below the boundary (> 0 strictly inside).
  virtual bool has_interior_margin() const { return false; }
  virtual double interior_margin(const UnitPoint&) const {
    throw Error(ErrorCode::NoBoundarySampler, "no interior margin available");
  }
};

// Uniform handle over the concrete body kinds. Immutable; copies share the
// underlying representation.
class SphericalBody {
 public:
  enum class Kind { Polytope, Ball };

  static SphericalBody from_polytope(PolytopeBody body);
  static SphericalBody from_ball(BallBody body);

  Kind kind() const { return kind_; }
  bool is_polytope() const { return kind_ == Kind::Polytope; }
  int dim() const;

  const PolytopeBody& polytope() const;
  const BallBody& ball() const;

  const BoundaryGeometry* boundary() const { return boundary_.get(); }
  const std::shared_ptr<const BoundaryGeometry>& boundary_ptr() const {
    return boundary_;
  }
  const std::shared_ptr<const ConstructorSpec>& provenance() const {
    return provenance_;
  }

  SphericalBody with_boundary(std::shared_ptr<const BoundaryGeometry> b) const;
  SphericalBody with_provenance(std::shared_ptr<const ConstructorSpec> s) const;

 private:
  Kind kind_ = Kind::Polytope;
  std::shared_ptr<const PolytopeBody> polytope_;
  std::shared_ptr<const BallBody> ball_;
  std::shared_ptr<const BoundaryGeometry> boundary_;
  std::shared_ptr<const ConstructorSpec> provenance_;
};

bool contains(const SphericalBody& body, const UnitPoint& x,
              double tol = kGeoTol);
double support_margin(const SphericalBody& body, const UnitPoint& m);
double containment_violation(const SphericalBody& body, const UnitPoint& x);

// Boundary sample; uses the attached exact geometry when present, otherwise
// an analytic (ball) or bisection-based (polytope) sampler.
UnitPoint boundary_sample(const SphericalBody& body, std::uint64_t seed,
                          std::uint64_t index);

// True when x lies on the boundary within tol: nearly contained and with a
// nontrivial supporting direction through x.
bool on_boundary(const SphericalBody& body, const UnitPoint& x, double tol);

// A supporting hemisphere center at boundary point p (deterministic choice
// inside the normal cone).
UnitPoint supporting_direction_at(const SphericalBody& body, const UnitPoint& p,
                                  double boundary_tol = kBoundaryTolDefault);

}  // namespace spherewidth
