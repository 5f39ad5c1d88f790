#pragma once

#include <utility>

#include "spherewidth/body.hpp"
#include "spherewidth/lune.hpp"

namespace spherewidth {

// Result of a width or thickness computation. The witness is the center of
// the optimal second hemisphere; the lune it forms with the queried
// supporting hemisphere realizes the reported value as its thickness.
struct WidthReport {
  Angle value;
  UnitPoint witness;
  Lune lune;
  bool converged = true;
  double residual = 0.0;
};

struct DiameterReport {
  Angle value;
  UnitPoint p;
  UnitPoint q;
};

// Width of the body determined by the supporting hemisphere H(k): the
// thickness of the narrowest lune H(k) cap H(m) containing the body,
//   pi - arccos( min { <k, m> : support_margin(body, m) >= 0, |m| = 1 } ).
//
// Polytopes are solved exactly: when the optimum is below pi/2 the
// minimizing face follows from one Euclidean projection onto the dual cone
// (its active set is the optimal face, the projection direction the
// closed-form critical point); otherwise the optimum sits on an extreme ray
// of the dual cone and those are enumerated. When the ray enumeration is
// out of budget (large S^3 hulls) a multi-start projected descent runs
// instead: 32 starts, step tolerance 1e-10, convergence reported honestly.
//
// Throws NotSupporting unless |support_margin(body, k)| <= kGeoTol.
WidthReport width_at(const SphericalBody& body, const UnitPoint& k);

// Smallest width over all supporting hemispheres. Exact via the extreme
// rays of the dual cone when enumerable (the outer objective is concave, so
// the minimum sits at a ray); otherwise seeded multi-start local search
// over the dual-region boundary.
WidthReport thickness(const SphericalBody& body, int n_starts = 32,
                      std::uint64_t seed = 0);

// Exact max pairwise vertex distance for polytopes; 2*radius for balls.
DiameterReport diameter(const SphericalBody& body);

// The hemisphere orthogonal to the arc pq at p that contains q. Requires
// (p, q) to realize the diameter within tol; the returned hemisphere
// supports the body.
Hemisphere orthogonal_diameter_support(const SphericalBody& body,
                                       const UnitPoint& p, const UnitPoint& q,
                                       double tol = kGeoTol);

// Boundary point maximizing the distance from p, with the distance.
std::pair<UnitPoint, Angle> farthest_partner(
    const SphericalBody& body, const UnitPoint& p,
    double boundary_tol = kBoundaryTolDefault);

// Center and radius of the ball inscribed at boundary point p of a body of
// constant width w > pi/2 (caller-asserted): radius w - pi/2, center on the
// arc from p toward the supporting hemisphere center at distance w - pi/2.
std::pair<UnitPoint, Angle> inscribed_ball_at(
    const SphericalBody& body, const UnitPoint& p, Angle w,
    double boundary_tol = kBoundaryTolDefault);

// A lune of thickness w containing the body with p as the center of one of
// its two bounding hemispheres, built from a supporting hemisphere at p.
// Throws CenterConditionFailed when no supporting hemisphere at p yields a
// containing lune within margin_tol (surfaced, not repaired).
Lune width_lune_at(const SphericalBody& body, const UnitPoint& p, Angle w,
                   double boundary_tol = kBoundaryTolDefault,
                   double margin_tol = kBoundaryTolDefault);

}  // namespace spherewidth
