#include "spherewidth/search.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "spherewidth/body_io.hpp"
#include "spherewidth/rng.hpp"

namespace spherewidth {

namespace {

// Candidate family: intersections of balls of radius w about perturbed
// odd-gon-like vertex configurations, realized as dense polytopes from
// boundary samples of the intersection. Other families can slot in here.
struct Candidate {
  ConstructorSpec spec;
  std::vector<UnitPoint> boundary;  // exact boundary points of the intersection
  SphericalBody body;
};

std::optional<Candidate> make_candidate(double w, std::uint64_t seed) {
  Rng rng(seed);
  const int d = rng.uniform() < 0.6 ? 2 : 3;
  const int n_centers = d == 2 ? (rng.uniform() < 0.5 ? 3 : 5) : 4;

  // Centers: a regular-ish ring at the circumradius that makes opposite
  // pairs w apart, then a tangent perturbation.
  std::vector<UnitPoint> centers;
  if (d == 2) {
    const int k = (n_centers - 1) / 2;
    const double phi = 2.0 * kPi * k / n_centers;
    auto pair_dist = [&](double r) {
      const double c = std::cos(r) * std::cos(r) +
                       std::sin(r) * std::sin(r) * std::cos(phi);
      return std::acos(std::clamp(c, -1.0, 1.0));
    };
    double lo = 1e-6, hi = kHalfPi;
    if (pair_dist(hi) < w) return std::nullopt;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (pair_dist(mid) < w ? lo : hi) = mid;
    }
    for (int i = 0; i < n_centers; ++i) {
      const double a = 2.0 * kPi * i / n_centers;
      centers.push_back(UnitPoint::normalized(Eigen::Vector3d(
          std::sin(lo) * std::cos(a), std::sin(lo) * std::sin(a), std::cos(lo))));
    }
  } else {
    // A cap cluster with pairwise distances close to w.
    const UnitPoint c = UnitPoint::normalized(rng.gaussian(4));
    const Eigen::MatrixXd basis = tangent_basis(c);
    for (int i = 0; i < n_centers; ++i) {
      Eigen::VectorXd u = basis * rng.gaussian(3);
      u /= u.norm();
      centers.push_back(walk(c, u, w * 0.55));
    }
  }
  const double eps = rng.uniform(0.0, 0.04);
  for (auto& v : centers) {
    const Eigen::MatrixXd basis = tangent_basis(v);
    Eigen::VectorXd u = basis * rng.gaussian(d);
    if (u.norm() < 1e-12) continue;
    u /= u.norm();
    v = walk(v, u, eps * rng.uniform());
  }

  // Boundary of the ball intersection: points at distance exactly w from
  // one center and within w of all others.
  std::vector<UnitPoint> boundary;
  const int per_center = d == 2 ? 160 : 320;
  for (std::size_t ci = 0; ci < centers.size(); ++ci) {
    const Eigen::MatrixXd basis = tangent_basis(centers[ci]);
    for (int s = 0; s < per_center; ++s) {
      const Eigen::VectorXd dir =
          basis * ld_direction(d, Rng::derive(seed, ci + 1), s);
      const UnitPoint x = walk(centers[ci], dir, w);
      bool inside = true;
      for (std::size_t cj = 0; cj < centers.size() && inside; ++cj) {
        if (cj != ci && dist(x, centers[cj]).radians() > w + 1e-12) {
          inside = false;
        }
      }
      if (inside) boundary.push_back(x);
    }
  }
  if (static_cast<int>(boundary.size()) < d + 3) return std::nullopt;

  Candidate cand{ConstructorSpec{}, boundary,
                 SphericalBody::from_polytope(
                     PolytopeBody::from_points(d, boundary))};
  cand.spec.kind = "ball_intersection";
  cand.spec.dim = d;
  cand.spec.seed = seed;
  cand.spec.w = w;
  cand.spec.n = n_centers;
  return cand;
}

}  // namespace

std::vector<SearchRecord> search_gap(Angle w, int trials, std::uint64_t seed) {
  const double wv = w.radians();
  if (!(wv > 0.0 && wv < kHalfPi)) {
    throw Error(ErrorCode::WOutOfRange,
                "for w >= pi/2 constant diameter and constant width are "
                "known to coincide; the search covers w < pi/2 only");
  }
  std::vector<SearchRecord> records;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t cand_seed = Rng::derive(seed, static_cast<std::uint64_t>(t));
    std::optional<Candidate> cand;
    try {
      cand = make_candidate(wv, cand_seed);
    } catch (const Error&) {
      continue;
    }
    if (!cand) continue;
    const double diam_tol = 5e-3;
    ConstancyReport diam_report =
        check_constant_diameter(cand->body, 60, diam_tol, cand_seed, 1e-2);
    if (!diam_report.pass) continue;
    if (std::abs(diameter(cand->body).value.radians() - wv) > 1e-2) continue;
    ConstancyReport width_report =
        check_constant_width(cand->body, 120, 1e-12, cand_seed);
    SearchRecord rec;
    rec.candidate = cand->spec;
    rec.diam_report = diam_report;
    rec.width_report = width_report;
    rec.gap = width_report.spread;
    records.push_back(std::move(rec));
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const SearchRecord& a, const SearchRecord& b) {
                     return a.gap > b.gap;
                   });
  return records;
}

std::string search_records_to_json(const std::vector<SearchRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["candidate"] = nlohmann::json::parse(spec_to_json(r.candidate));
    j["diam_report"] = nlohmann::json::parse(constancy_report_to_json(r.diam_report));
    j["width_report"] =
        nlohmann::json::parse(constancy_report_to_json(r.width_report));
    j["gap"] = r.gap;
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace spherewidth
