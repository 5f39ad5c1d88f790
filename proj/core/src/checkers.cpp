#include "spherewidth/checkers.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "spherewidth/dual_region.hpp"
#include "spherewidth/rng.hpp"
#include "parallel.hpp"

namespace spherewidth {

ConstancyReport check_constant_width(const SphericalBody& body, int n,
                                     double tol, std::uint64_t seed) {
  const DualRegion region{body};
  std::vector<UnitPoint> dirs;
  dirs.reserve(n);
  for (int i = 0; i < n; ++i) dirs.push_back(region.sample_boundary(seed, i));

  std::vector<std::optional<WidthReport>> slots(static_cast<std::size_t>(n));
  detail::parallel_for(n, [&](int i) {
    slots[static_cast<std::size_t>(i)] = width_at(body, dirs[i]);
  });

  ConstancyReport out;
  out.mode = ConstancyReport::Mode::Width;
  out.samples = n;
  if (n == 0) {
    out.pass = true;
    return out;
  }
  int imin = 0, imax = 0;
  for (int i = 0; i < n; ++i) {
    const WidthReport& r = *slots[static_cast<std::size_t>(i)];
    if (!r.converged) ++out.non_converged;
    if (r.value.radians() < slots[imin]->value.radians()) imin = i;
    if (r.value.radians() > slots[imax]->value.radians()) imax = i;
  }
  out.w_min = slots[imin]->value;
  out.w_max = slots[imax]->value;
  out.spread = out.w_max.radians() - out.w_min.radians();
  out.pass = out.spread <= tol && out.non_converged == 0;
  out.min_witness = ConstancyWitness{dirs[imin], slots[imin]->value.radians(),
                                     slots[imin]->converged};
  out.max_witness = ConstancyWitness{dirs[imax], slots[imax]->value.radians(),
                                     slots[imax]->converged};
  return out;
}

ConstancyReport check_constant_diameter(const SphericalBody& body, int n,
                                        double tol, std::uint64_t seed,
                                        double boundary_tol) {
  const DiameterReport diam = diameter(body);
  std::vector<UnitPoint> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(boundary_sample(body, seed, i));

  std::vector<double> partner_dist(static_cast<std::size_t>(n), 0.0);
  detail::parallel_for(n, [&](int i) {
    partner_dist[static_cast<std::size_t>(i)] =
        farthest_partner(body, pts[i], boundary_tol).second.radians();
  });

  ConstancyReport out;
  out.mode = ConstancyReport::Mode::Diameter;
  out.samples = n;
  if (n == 0) {
    out.w_min = diam.value;
    out.w_max = diam.value;
    out.pass = true;
    return out;
  }
  int imin = 0, imax = 0;
  for (int i = 0; i < n; ++i) {
    if (partner_dist[i] < partner_dist[imin]) imin = i;
    if (partner_dist[i] > partner_dist[imax]) imax = i;
  }
  out.w_min = Angle(partner_dist[imin]);
  out.w_max = Angle(std::min(partner_dist[imax], kPi));
  out.spread = out.w_max.radians() - out.w_min.radians();
  bool all_close = true;
  for (int i = 0; i < n; ++i) {
    if (std::abs(partner_dist[i] - diam.value.radians()) > tol) {
      all_close = false;
      break;
    }
  }
  out.pass = all_close;
  out.min_witness = ConstancyWitness{pts[imin], partner_dist[imin], true};
  out.max_witness = ConstancyWitness{pts[imax], partner_dist[imax], true};
  return out;
}

StrictConvexityReport check_strict_convexity(const SphericalBody& body,
                                             int trials, double tol,
                                             std::uint64_t seed,
                                             double min_separation) {
  const BoundaryGeometry* geom = body.boundary();
  if (geom == nullptr || !geom->has_interior_margin()) {
    throw Error(ErrorCode::NoBoundarySampler,
                "strict-convexity checks need an exact boundary sampler "
                "with an interior margin");
  }
  StrictConvexityReport out;
  out.trials = trials;
  out.pass = true;
  out.min_margin = std::numeric_limits<double>::infinity();

  Rng pair_rng(Rng::derive(seed, 0x5C));
  for (int i = 0; i < trials; ++i) {
    // Uncorrelated sample indices so piecewise samplers revisit the same
    // piece with the right frequency.
    const UnitPoint x = geom->sample(seed, pair_rng.next_u64() >> 1);
    UnitPoint y = geom->sample(seed, pair_rng.next_u64() >> 1);
    int guard = 0;
    while ((x.coords() - y.coords()).norm() < min_separation && guard++ < 64) {
      y = geom->sample(seed, pair_rng.next_u64() >> 1);
    }
    const UnitPoint mid = geodesic_point(x, y, 0.5);
    const double margin = geom->interior_margin(mid);
    if (margin < out.min_margin) {
      out.min_margin = margin;
      out.worst_midpoint = mid;
    }
    if (!(margin > tol)) out.pass = false;
  }
  return out;
}

}  // namespace spherewidth
