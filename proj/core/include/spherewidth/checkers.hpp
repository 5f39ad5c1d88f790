#pragma once

#include <optional>

#include "spherewidth/width.hpp"

namespace spherewidth {

struct ConstancyWitness {
  UnitPoint where;  // supporting direction (width mode) or boundary point
  double value = 0.0;
  bool converged = true;
};

struct ConstancyReport {
  enum class Mode { Width, Diameter };
  Mode mode = Mode::Width;
  Angle w_min;
  Angle w_max;
  double spread = 0.0;
  int samples = 0;
  bool pass = false;
  int non_converged = 0;
  std::optional<ConstancyWitness> min_witness;
  std::optional<ConstancyWitness> max_witness;
};

// Samples n supporting directions from the dual-region boundary (seeded,
// low discrepancy), computes the width determined by each, and reports the
// spread. pass iff w_max - w_min <= tol.
ConstancyReport check_constant_width(const SphericalBody& body, int n,
                                     double tol, std::uint64_t seed);

// Samples n boundary points and checks that each admits a partner at the
// diameter distance: pass iff every farthest-partner distance is within tol
// of diam(body).
ConstancyReport check_constant_diameter(
    const SphericalBody& body, int n, double tol, std::uint64_t seed,
    double boundary_tol = kBoundaryTolDefault);

struct StrictConvexityReport {
  bool pass = false;
  int trials = 0;
  double min_margin = 0.0;
  std::optional<UnitPoint> worst_midpoint;
};

// Samples distinct boundary pairs and checks the geodesic midpoint is
// strictly interior by more than tol. Requires an exact boundary sampler
// with an interior margin (throws NoBoundarySampler otherwise).
StrictConvexityReport check_strict_convexity(const SphericalBody& body,
                                             int trials, double tol,
                                             std::uint64_t seed,
                                             double min_separation = 1e-2);

}  // namespace spherewidth
