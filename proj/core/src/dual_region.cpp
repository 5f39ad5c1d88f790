#include "spherewidth/dual_region.hpp"

#include "spherewidth/cone.hpp"
#include "spherewidth/rng.hpp"

namespace spherewidth {

DualRegion::DualRegion(SphericalBody body)
    : body_(std::move(body)),
      anchor_(body_.is_polytope() ? body_.polytope().dual_anchor()
                                  : body_.ball().center()),
      anchor_margin_(body_.is_polytope()
                         ? body_.polytope().dual_anchor_margin()
                         : std::cos(body_.ball().radius().radians())),
      tangent_basis_(tangent_basis(anchor_)) {}

UnitPoint DualRegion::boundary_toward(const Eigen::VectorXd& unit_tangent) const {
  if (body_.is_polytope()) {
    const double theta =
        cone::radial_exit(body_.polytope().vertices(), anchor_.coords(),
                          unit_tangent);
    return walk(anchor_, unit_tangent, theta);
  }
  // Ball: the dual region is the ball of radius pi/2 - rho about the center.
  return walk(anchor_, unit_tangent, kHalfPi - body_.ball().radius().radians());
}

UnitPoint DualRegion::sample_boundary(std::uint64_t seed,
                                      std::uint64_t index) const {
  const Eigen::VectorXd dir =
      tangent_basis_ *
      ld_direction(static_cast<int>(tangent_basis_.cols()), seed, index);
  return boundary_toward(dir);
}

const std::optional<DualFaces>& DualRegion::faces() const {
  if (body_.is_polytope()) return body_.polytope().dual_faces();
  return no_faces_;
}

}  // namespace spherewidth
