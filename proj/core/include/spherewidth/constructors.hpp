#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spherewidth/body.hpp"

namespace spherewidth {

// Serializable recipe for every body family. Only the fields of the named
// kind are meaningful.
struct ConstructorSpec {
  std::string kind;  // ball | orthant | reuleaux | example_s3 | random | perturb
  int dim = 2;
  std::uint64_t seed = 0;

  std::vector<double> center;  // ball
  double rho = 0.0;            // ball

  int n = 3;           // reuleaux
  double w = 0.0;      // reuleaux
  int samples = 0;     // reuleaux, example_s3

  double kappa = 0.0;  // example_s3
  double sigma = 0.0;  // example_s3

  int n_points = 0;    // random
  double spread = 0.0; // random

  std::shared_ptr<ConstructorSpec> base;  // perturb
  double eps = 0.0;                       // perturb
};

SphericalBody build_body(const ConstructorSpec& spec);

// Ball oracle body of constant width 2*rho. Throws RadiusOutOfRange unless
// 0 < rho < pi/2.
SphericalBody ball_body(const UnitPoint& center, Angle rho);

// Intersection of S^d with the nonnegative orthant of an orthonormal frame:
// vertices are the d+1 frame directions; constant width pi/2.
SphericalBody orthant_body(int d);

// Regular spherical Reuleaux odd-gon on S^2: n vertices with the opposite
// pairs (offset (n-1)/2) at distance exactly w, boundary made of n circular
// arcs of radius w about the opposite vertices. Returns the polytope over
// the vertices plus `samples` boundary points, with the exact arc
// parametrization attached. The default width range is (0, pi/2);
// extended_range admits larger widths when the vertex equation stays
// solvable.
SphericalBody reuleaux_odd_gon(int n, Angle w, int samples, std::uint64_t seed,
                               bool extended_range = false);

// The S^3 constant-width example: a circle of spherical diameter kappa with
// an apex at distance kappa from all of it, spherical caps of radii sigma
// and kappa+sigma about the apex, and the two circular-arc families joining
// them. Constant width kappa + 2*sigma. Sampled on deterministic grids,
// then rotated by a seeded random rotation.
SphericalBody example_s3_body(Angle kappa, Angle sigma, int samples,
                              std::uint64_t seed);

// n_points seeded uniform points in the cap of radius spread about a random
// center; retries until the hull is full-dimensional.
SphericalBody random_body(int d, int n_points, Angle spread,
                          std::uint64_t seed);

// Moves every vertex by an independent seeded tangent displacement of norm
// at most eps and revalidates. Throws InvariantViolation when the perturbed
// set breaks the polytope invariants.
SphericalBody perturb(const SphericalBody& body, Angle eps,
                      std::uint64_t seed);

}  // namespace spherewidth
