#include "spherewidth/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "spherewidth/body_io.hpp"
#include "spherewidth/checkers.hpp"
#include "spherewidth/constructors.hpp"
#include "spherewidth/dual_region.hpp"
#include "spherewidth/lune.hpp"
#include "spherewidth/rng.hpp"
#include "spherewidth/width.hpp"
#include "parallel.hpp"

namespace spherewidth {

namespace {

struct TrialOutcome {
  bool pass = true;
  double residual = 0.0;
  std::string detail;
};

using TrialFn = std::function<TrialOutcome(std::uint64_t, double)>;

// Suite inputs are pure functions of the per-trial seed, so a recorded
// failure replays from its seed alone. Shared bodies use fixed internal
// seeds and are independent of the run seed.

UnitPoint random_unit(Rng& rng, int n) {
  Eigen::VectorXd v = rng.gaussian(n);
  while (v.norm() < 1e-8) v = rng.gaussian(n);
  return UnitPoint::normalized(v);
}

UnitPoint random_in_cap(Rng& rng, const UnitPoint& center, double radius) {
  const Eigen::MatrixXd basis = tangent_basis(center);
  Eigen::VectorXd u = basis * rng.gaussian(static_cast<int>(basis.cols()));
  while (u.norm() < 1e-12) u = basis * rng.gaussian(static_cast<int>(basis.cols()));
  u /= u.norm();
  const double ct = 1.0 - rng.uniform() * (1.0 - std::cos(radius));
  return walk(center, u, std::acos(std::clamp(ct, -1.0, 1.0)));
}

SphericalBody trial_random_body(std::uint64_t seed, int* dim_out = nullptr,
                                double spread_lo = 0.4, double spread_hi = 1.1) {
  Rng rng(seed);
  const int d = rng.uniform() < 0.5 ? 2 : 3;
  const int n = d + 2 + static_cast<int>(rng.uniform() * 10.0);
  const double spread = rng.uniform(spread_lo, spread_hi);
  if (dim_out != nullptr) *dim_out = d;
  return random_body(d, n, Angle(spread), Rng::derive(seed, 0xB0D1));
}

TrialOutcome lemma1_trial(std::uint64_t seed, double tol) {
  SphericalBody body = trial_random_body(seed);
  const PolytopeBody& poly = body.polytope();
  const DualRegion region{body};
  Rng rng(Rng::derive(seed, 1));
  TrialOutcome out;
  for (int q = 0; q < 100; ++q) {
    UnitPoint x = [&] {
      const double mode = rng.uniform();
      if (mode < 0.4) {
        // Nonnegative vertex combination: inside by construction.
        Eigen::VectorXd wts(poly.vertex_count());
        for (int i = 0; i < poly.vertex_count(); ++i) {
          wts[i] = -std::log(1.0 - rng.uniform());
        }
        return UnitPoint::normalized(poly.vertices() * wts);
      }
      if (mode < 0.7) return random_unit(rng, poly.dim() + 1);
      return random_in_cap(rng, poly.inner_point(), rng.uniform(0.1, 2.5));
    }();
    if (poly.contains(x)) {
      // The hull is the intersection of all hemispheres containing it:
      // no containing hemisphere may separate x.
      for (int j = 0; j < 16; ++j) {
        const UnitPoint m = region.sample_boundary(Rng::derive(seed, 7), j);
        const double h = dot(m, x);
        if (h < -tol) {
          out.pass = false;
          out.residual = std::max(out.residual, -h);
          out.detail = "contained point separated by a containing hemisphere";
        }
      }
    } else {
      const Hemisphere sep = poly.separate(x);
      const double margin = poly.support_margin(sep.center());
      const double height = sep.signed_height(x);
      if (margin < -tol || height >= 0.0) {
        out.pass = false;
        out.residual = std::max(out.residual, std::max(-margin, height));
        out.detail = "invalid separation certificate";
      }
    }
  }
  return out;
}

TrialOutcome lemma2_trial(std::uint64_t seed, double tol) {
  int d = 2;
  SphericalBody body = trial_random_body(seed, &d);
  const PolytopeBody& poly = body.polytope();
  Rng rng(Rng::derive(seed, 2));
  TrialOutcome out;
  int exercised = 0;
  for (int attempt = 0; attempt < 24 && exercised < 4; ++attempt) {
    const int size = 2 + static_cast<int>(rng.uniform() * (d - 1));
    std::vector<int> subset;
    while (static_cast<int>(subset.size()) < size) {
      const int j = static_cast<int>(rng.uniform() * poly.vertex_count());
      if (std::find(subset.begin(), subset.end(), j) == subset.end()) {
        subset.push_back(j);
      }
    }
    // Face test: a direction of the dual cone vanishing on the subset and
    // strictly positive elsewhere.
    Eigen::MatrixXd aug(d + 1, poly.vertex_count() + 2 * size);
    aug.leftCols(poly.vertex_count()) = poly.vertices();
    for (int t = 0; t < size; ++t) {
      aug.col(poly.vertex_count() + 2 * t) = poly.vertices().col(subset[t]);
      aug.col(poly.vertex_count() + 2 * t + 1) = -poly.vertices().col(subset[t]);
    }
    Eigen::VectorXd face_dir =
        cone::project_to_dual(aug, random_unit(rng, d + 1).coords());
    if (face_dir.norm() < 1e-8) continue;
    face_dir /= face_dir.norm();
    bool proper = true;
    for (int j = 0; j < poly.vertex_count(); ++j) {
      const bool in_subset =
          std::find(subset.begin(), subset.end(), j) != subset.end();
      const double h = face_dir.dot(poly.vertices().col(j));
      if (!in_subset && h < 1e-7) proper = false;
    }
    if (!proper) continue;

    // Relative-interior point of the face and a supporting hemisphere at it.
    Eigen::VectorXd combo = Eigen::VectorXd::Zero(d + 1);
    for (int t = 0; t < size; ++t) {
      combo += (0.2 + rng.uniform()) * poly.vertices().col(subset[t]);
    }
    const UnitPoint p = UnitPoint::normalized(combo);
    const UnitPoint m = supporting_direction_at(body, p, 1e-9);
    ++exercised;
    for (int t = 0; t < size; ++t) {
      const double h = std::abs(m.coords().dot(poly.vertices().col(subset[t])));
      if (h > tol) {
        out.pass = false;
        out.detail = "face vertex off the supporting boundary";
      }
      out.residual = std::max(out.residual, h);
    }
  }
  return out;
}

TrialOutcome lemma3_trial(std::uint64_t seed, double tol) {
  Rng rng(seed);
  const int d = 2 + static_cast<int>(rng.uniform() * 3.0);  // S^2..S^4
  const UnitPoint g = random_unit(rng, d + 1);
  // Thickness below pi/2 means the centers are more than pi/2 apart.
  const double center_dist = rng.uniform(kHalfPi + 0.05, kPi - 0.05);
  const Eigen::MatrixXd basis = tangent_basis(g);
  Eigen::VectorXd u = basis * rng.gaussian(d);
  u /= u.norm();
  const Lune lune = make_lune(Hemisphere(g), Hemisphere(walk(g, u, center_dist)));
  const UnitPoint& b = lune.second_face_center();
  const Eigen::MatrixXd bt = tangent_basis(b);

  TrialOutcome out;
  for (int s = 0; s < 12; ++s) {
    // Corner directions with decreasing noise; exact corners included.
    const UnitPoint corner = lune.sample_corner(Rng::derive(seed, 3), s);
    Eigen::VectorXd dir = tangent_toward(b, corner);
    const double noise = s % 4 == 0 ? 0.0 : std::pow(10.0, -2.0 * (s % 4) - 2);
    if (noise > 0.0) {
      Eigen::VectorXd z = bt * rng.gaussian(d);
      dir = (dir + noise * z).normalized();
    }
    const UnitPoint x = walk(b, dir, kHalfPi);
    if (!lune.contains(x, 1e-9)) continue;
    const double hg = std::abs(lune.first().signed_height(x));
    const double hh = std::abs(lune.second().signed_height(x));
    out.residual = std::max(out.residual, std::max(hg, hh));
    if (std::max(hg, hh) > tol) {
      out.pass = false;
      out.detail = "lune point at distance pi/2 from the face center is not "
                   "a corner";
    }
  }
  return out;
}

TrialOutcome lemma4_trial(std::uint64_t seed, double tol) {
  Rng rng(seed);
  const int d = 2 + static_cast<int>(rng.uniform() * 3.0);
  const UnitPoint o = random_unit(rng, d + 1);
  const double mu = rng.uniform(0.05, 1.45);
  const Eigen::MatrixXd equator = tangent_basis(o);  // span of {<o,.> = 0}
  Eigen::VectorXd e1 = equator * rng.gaussian(d);
  e1 /= e1.norm();
  const UnitPoint x1 = UnitPoint::normalized(e1);
  // Second equator point at a prescribed arc distance from the first.
  Eigen::MatrixXd span(d + 1, 2);
  span.col(0) = o.coords();
  span.col(1) = x1.coords();
  const Eigen::MatrixXd rest = orthonormal_complement(span);
  Eigen::VectorXd t12 = rest * rng.gaussian(static_cast<int>(rest.cols()));
  t12 /= t12.norm();
  const double arc = rng.uniform(0.1, std::min(kPi - mu - 0.05, 2.6));
  const UnitPoint x2 = walk(x1, t12, arc);
  const UnitPoint x = geodesic_point(x1, x2, rng.uniform());

  auto toward_o = [&](const UnitPoint& z) {
    return walk(z, o.coords(), mu);  // o is already tangent at equator points
  };
  const UnitPoint x1p = toward_o(x1);
  const UnitPoint x2p = toward_o(x2);
  const UnitPoint xp = toward_o(x);

  const double cap = kHalfPi - mu;
  const UnitPoint mid =
      UnitPoint::normalized(x1p.coords() + x2p.coords());
  UnitPoint m = o;  // always satisfies both hypotheses
  for (int attempt = 0; attempt < 64; ++attempt) {
    const UnitPoint cand = random_in_cap(rng, mid, std::min(cap * 1.1, kPi / 2));
    if (dist(x1p, cand).radians() <= cap && dist(x2p, cand).radians() <= cap) {
      m = cand;
      break;
    }
  }
  TrialOutcome out;
  out.residual = dist(xp, m).radians() - cap;
  if (out.residual > tol) {
    out.pass = false;
    out.detail = "hull membership bound violated";
  }
  return out;
}

TrialOutcome lemma5_trial(std::uint64_t seed, double tol) {
  int d = 2;
  SphericalBody body = trial_random_body(seed, &d);
  const PolytopeBody& poly = body.polytope();
  Rng rng(Rng::derive(seed, 5));
  Eigen::VectorXd wts(poly.vertex_count());
  for (int i = 0; i < poly.vertex_count(); ++i) {
    wts[i] = -std::log(1.0 - rng.uniform());
  }
  const UnitPoint x = UnitPoint::normalized(poly.vertices() * wts);

  const std::vector<UnitPoint> chosen = poly.caratheodory(x);
  TrialOutcome out;
  if (static_cast<int>(chosen.size()) > d + 1) {
    out.pass = false;
    out.detail = "caratheodory set exceeds d+1 points";
    out.residual = static_cast<double>(chosen.size());
    return out;
  }
  const std::vector<UnitPoint> extremes = poly.extreme_points();
  for (const auto& c : chosen) {
    bool found = false;
    for (const auto& e : extremes) {
      if (nearly_equal(c, e, 1e-9)) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.pass = false;
      out.detail = "caratheodory member is not extreme";
    }
  }
  Eigen::MatrixXd sub(d + 1, chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) sub.col(i) = chosen[i].coords();
  const double residual = cone::project_to_cone(sub, x.coords()).residual;
  out.residual = std::max(out.residual, residual);
  if (residual > tol) {
    out.pass = false;
    out.detail = "containment residual too large";
  }
  return out;
}

TrialOutcome lemma7_trial(std::uint64_t seed, double tol) {
  SphericalBody body = trial_random_body(seed, nullptr, 1.0, 1.4);
  DiameterReport diam = diameter(body);
  for (int attempt = 1; diam.value.radians() <= kHalfPi + 0.05 && attempt < 200;
       ++attempt) {
    body = trial_random_body(Rng::derive(seed, attempt), nullptr, 1.0, 1.4);
    diam = diameter(body);
  }
  TrialOutcome out;
  if (diam.value.radians() <= kHalfPi + 0.05) {
    out.detail = "no wide body found";  // vacuous, counted as pass
    return out;
  }
  const Hemisphere k = orthogonal_diameter_support(body, diam.p, diam.q);
  const double margin = support_margin(body, k.center());
  out.residual = std::max(out.residual, -margin);
  if (margin < -tol) {
    out.pass = false;
    out.detail = "orthogonal hemisphere does not contain the body";
    return out;
  }
  const WidthReport width = width_at(body, k.center());
  if (width.value.radians() <= kHalfPi) {
    out.pass = false;
    out.detail = "width at the orthogonal hemisphere is not above pi/2";
    out.residual = kHalfPi - width.value.radians();
  }
  return out;
}

// Shared constructor-backed bodies (fixed seeds, independent of run seed).
struct ConstructorSet {
  struct Entry {
    std::string name;
    SphericalBody body;
    double w = 0.0;        // nominal constant width
    double tol = 0.0;      // per-constructor tolerance
    int width_samples = 0; // checker sample count
  };
  std::vector<Entry> entries;
};

std::shared_ptr<const ConstructorSet> constructor_set(int example_samples) {
  auto set = std::make_shared<ConstructorSet>();
  const UnitPoint c2 = UnitPoint::normalized(Eigen::Vector3d(0.3, -0.2, 0.9));
  set->entries.push_back({"ball", ball_body(c2, Angle(0.5)), 1.0, 1e-9, 256});
  set->entries.push_back({"orthant2", orthant_body(2), kHalfPi, 1e-9, 256});
  set->entries.push_back({"orthant3", orthant_body(3), kHalfPi, 1e-9, 256});
  set->entries.push_back(
      {"reuleaux3", reuleaux_odd_gon(3, Angle(1.0), 900, 17), 1.0, 1e-3, 200});
  set->entries.push_back(
      {"reuleaux5", reuleaux_odd_gon(5, Angle(0.8), 1000, 18), 0.8, 1e-3, 200});
  set->entries.push_back({"example_s3",
                          example_s3_body(Angle(1.0), Angle(0.35),
                                          example_samples, 19),
                          1.7, 5e-2, 24});
  return set;
}

TrialOutcome touching_ball_trial(const SphericalBody& body, double w,
                                 std::uint64_t seed, double tol) {
  const UnitPoint p = body.boundary()->sample(seed, 0);
  const auto [center, radius] = inscribed_ball_at(body, p, Angle(w), tol);
  TrialOutcome out;
  const double expected = w - kHalfPi;
  const double len_err = std::abs(dist(p, center).radians() - expected);
  if (std::abs(radius.radians() - expected) > 1e-12 || len_err > 1e-9) {
    out.pass = false;
    out.detail = "touching-ball center is misplaced";
    out.residual = len_err;
    return out;
  }
  const BallBody inner(center, radius);
  Rng s(Rng::derive(seed, 0xBA11));
  for (int i = 0; i < 1000; ++i) {
    const UnitPoint y = inner.boundary_point(Rng::derive(seed, 0xBA11), i);
    const double violation = containment_violation(body, y);
    out.residual = std::max(out.residual, violation);
  }
  if (out.residual > tol) {
    out.pass = false;
    out.detail = "inscribed ball escapes the body";
  }
  return out;
}

TrialOutcome center_lune_trial(const ConstructorSet::Entry& e,
                               std::uint64_t seed, double /*tol*/) {
  const UnitPoint p = boundary_sample(e.body, seed, 1);
  TrialOutcome out;
  Lune lune = width_lune_at(e.body, p, Angle(e.w), e.tol, e.tol);
  const double thick_err = std::abs(lune.thickness().radians() - e.w);
  const double center_err = dist(p, lune.first_face_center()).radians();
  const double m1 = support_margin(e.body, lune.first().center());
  const double m2 = support_margin(e.body, lune.second().center());
  out.residual = std::max({thick_err, center_err, -m1, -m2});
  if (thick_err > std::max(e.tol, 1e-9) || center_err > std::max(e.tol, 1e-9) ||
      m1 < -e.tol || m2 < -e.tol) {
    out.pass = false;
    out.detail = "width lune at " + e.name + " violates the center condition";
  }
  return out;
}

TrialOutcome minimal_lune_centers_trial(const SphericalBody& body, double tol,
                                        std::uint64_t seed) {
  const DualRegion region{body};
  const UnitPoint k = region.sample_boundary(seed, 2);
  const WidthReport rep = width_at(body, k);
  TrialOutcome out;
  const double v1 = containment_violation(body, rep.lune.first_face_center());
  const double v2 = containment_violation(body, rep.lune.second_face_center());
  out.residual = std::max(v1, v2);
  if (out.residual > tol || !rep.converged) {
    out.pass = false;
    out.detail = "minimal-lune center left the body boundary";
  }
  return out;
}

struct Suite {
  TrialFn fn;
};

Suite make_suite(const std::string& name) {
  if (name == "lemma1") return {lemma1_trial};
  if (name == "lemma2") return {lemma2_trial};
  if (name == "lemma3") return {lemma3_trial};
  if (name == "lemma4") return {lemma4_trial};
  if (name == "lemma5") return {lemma5_trial};
  if (name == "lemma7") return {lemma7_trial};
  if (name == "thm-touching-ball") {
    auto body = std::make_shared<SphericalBody>(
        example_s3_body(Angle(1.0), Angle(0.35), 5000, 19));
    return {[body](std::uint64_t seed, double tol) {
      return touching_ball_trial(*body, 1.7, seed, tol);
    }};
  }
  if (name == "thm-strict-convexity") {
    auto set = std::make_shared<ConstructorSet>();
    const UnitPoint c2 = UnitPoint::normalized(Eigen::Vector3d(0.1, 0.4, 0.9));
    set->entries.push_back({"ball", ball_body(c2, Angle(0.6)), 1.2, 0.0, 0});
    set->entries.push_back(
        {"reuleaux3", reuleaux_odd_gon(3, Angle(1.0), 300, 21), 1.0, 0.0, 0});
    auto orthant = std::make_shared<SphericalBody>(orthant_body(2));
    return {[set, orthant](std::uint64_t seed, double tol) {
      TrialOutcome out;
      for (const auto& e : set->entries) {
        const auto* geom = e.body.boundary();
        const UnitPoint x = geom->sample(seed, 0);
        UnitPoint y = geom->sample(seed, 1);
        for (std::uint64_t j = 2; (x.coords() - y.coords()).norm() < 1e-2 && j < 40;
             ++j) {
          y = geom->sample(seed, j);
        }
        const double margin =
            geom->interior_margin(geodesic_point(x, y, 0.5));
        out.residual = std::min(out.residual, margin);
        if (!(margin > tol)) {
          out.pass = false;
          out.detail = e.name + " midpoint fails to be strictly interior";
        }
      }
      // Flat faces must defeat the check: a same-facet pair on the orthant.
      Rng rng(Rng::derive(seed, 9));
      const auto* geom = orthant->boundary();
      const std::uint64_t base = 3 * static_cast<std::uint64_t>(rng.uniform() * 100.0);
      const UnitPoint x = geom->sample(seed, base);
      const UnitPoint y = geom->sample(seed, base + 3);  // same facet (index mod 3)
      const double flat = geom->interior_margin(geodesic_point(x, y, 0.5));
      if (flat > tol + 1e-12) {
        out.pass = false;
        out.detail = "orthant facet midpoint claimed strictly interior";
        out.residual = flat;
      }
      return out;
    }};
  }
  if (name == "thm-center-lune") {
    auto set = constructor_set(1200);
    return {[set](std::uint64_t seed, double tol) {
      const auto& e = set->entries[seed % set->entries.size()];
      return center_lune_trial(e, seed, tol);
    }};
  }
  if (name == "thm-diam-eq-width") {
    auto set = constructor_set(2000);
    return {[set](std::uint64_t seed, double /*tol*/) {
      const auto& e = set->entries[seed % set->entries.size()];
      TrialOutcome out;
      out.residual = std::abs(diameter(e.body).value.radians() - e.w);
      if (out.residual > e.tol) {
        out.pass = false;
        out.detail = e.name + ": diameter differs from the constant width";
      }
      return out;
    }};
  }
  if (name == "thm-width-diam-equivalence") {
    auto set = constructor_set(2000);
    struct Reports {
      std::vector<ConstancyReport> width, diam;
    };
    auto reports = std::make_shared<Reports>();
    for (const auto& e : set->entries) {
      reports->width.push_back(
          check_constant_width(e.body, e.width_samples, e.tol, 101));
      reports->diam.push_back(check_constant_diameter(
          e.body, std::min(e.width_samples, 100), e.tol, 102, e.tol));
    }
    return {[set, reports](std::uint64_t seed, double /*tol*/) {
      const std::size_t i = seed % set->entries.size();
      const auto& e = set->entries[i];
      TrialOutcome out;
      const bool cw = reports->width[i].pass;
      const bool cd = reports->diam[i].pass;
      if (cw && !cd) {
        out.pass = false;
        out.detail = e.name + ": constant width without constant diameter";
        out.residual = reports->diam[i].spread;
      }
      if (e.w >= kHalfPi - 1e-12 && cd && !cw) {
        out.pass = false;
        out.detail =
            e.name + ": constant diameter >= pi/2 without constant width";
        out.residual = reports->width[i].spread;
      }
      return out;
    }};
  }
  if (name == "minimal-lune-centers") {
    auto set = std::make_shared<ConstructorSet>();
    const UnitPoint c2 = UnitPoint::normalized(Eigen::Vector3d(-0.5, 0.3, 0.8));
    set->entries.push_back({"ball", ball_body(c2, Angle(0.9)), 1.8, 1e-9, 0});
    set->entries.push_back({"example_s3",
                            example_s3_body(Angle(1.0), Angle(0.35), 1600, 23),
                            1.7, 5e-2, 0});
    return {[set](std::uint64_t seed, double /*tol*/) {
      const auto& e = set->entries[seed % set->entries.size()];
      return minimal_lune_centers_trial(e.body, e.tol, seed);
    }};
  }
  throw Error(ErrorCode::UnknownSuite, name);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"lemma1",
          "lemma2",
          "lemma3",
          "lemma4",
          "lemma5",
          "lemma7",
          "thm-touching-ball",
          "thm-strict-convexity",
          "thm-center-lune",
          "thm-diam-eq-width",
          "thm-width-diam-equivalence",
          "minimal-lune-centers"};
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      double tol) {
  const Suite suite = make_suite(name);
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::uint64_t> trial_seeds(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) {
    trial_seeds[static_cast<std::size_t>(i)] =
        Rng::derive(seed, static_cast<std::uint64_t>(i));
  }
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  detail::parallel_for(trials, [&](int i) {
    outcomes[static_cast<std::size_t>(i)] =
        suite.fn(trial_seeds[static_cast<std::size_t>(i)], tol);
  });

  SuiteResult result;
  result.suite = name;
  result.trials = trials;
  for (int i = 0; i < trials; ++i) {
    const TrialOutcome& o = outcomes[static_cast<std::size_t>(i)];
    if (o.pass) {
      ++result.passes;
    } else {
      result.failures.push_back(TrialFailure{
          static_cast<std::uint64_t>(i), trial_seeds[static_cast<std::size_t>(i)],
          o.residual, o.detail});
    }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

double replay_trial(const std::string& name, std::uint64_t trial_seed,
                    double tol) {
  const Suite suite = make_suite(name);
  return suite.fn(trial_seed, tol).residual;
}

std::string suite_result_to_json(const SuiteResult& result, bool with_meta) {
  nlohmann::json j;
  j["suite"] = result.suite;
  j["trials"] = result.trials;
  j["passes"] = result.passes;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : result.failures) {
    nlohmann::json fj;
    fj["index"] = f.index;
    fj["seed"] = f.seed;
    fj["residual"] = f.residual;
    fj["detail"] = f.detail;
    fails.push_back(fj);
  }
  j["failures"] = fails;
  if (with_meta) j["wall_seconds"] = result.wall_seconds;
  return j.dump();
}

}  // namespace spherewidth
