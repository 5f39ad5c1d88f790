#include <doctest.h>

#include "spherewidth/body.hpp"
#include "spherewidth/constructors.hpp"
#include "spherewidth/dual_region.hpp"
#include "spherewidth/rng.hpp"

using namespace spherewidth;

namespace {

UnitPoint unit3(double x, double y, double z) {
  return UnitPoint::normalized(Eigen::Vector3d(x, y, z));
}

std::vector<UnitPoint> orthant_verts() {
  return {unit3(1, 0, 0), unit3(0, 1, 0), unit3(0, 0, 1)};
}

}  // namespace

TEST_CASE("polytope construction validates its invariants") {
  CHECK_NOTHROW(PolytopeBody::from_points(2, orthant_verts()));

  const UnitPoint x = unit3(0.6, 0.8, 0.0);
  try {
    PolytopeBody::from_points(2, {x, x.antipode(), unit3(0, 0, 1)});
    FAIL("expected AntipodalPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntipodalPair);
  }

  try {
    PolytopeBody::from_points(2, {unit3(1, 0, 0), unit3(0, 1, 0)});
    FAIL("expected NotFullDimensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullDimensional);
  }

  // Duplicates merge, first occurrence kept.
  const PolytopeBody dup = PolytopeBody::from_points(
      2, {unit3(1, 0, 0), unit3(0, 1, 0), unit3(1, 0, 0), unit3(0, 0, 1)});
  CHECK(dup.vertex_count() == 3);
}

TEST_CASE("membership and separation certify each other") {
  const PolytopeBody body = PolytopeBody::from_points(2, orthant_verts());
  for (int i = 0; i < 3; ++i) CHECK(body.contains(body.vertex(i)));
  const UnitPoint mid = unit3(1, 1, 1);
  CHECK(body.contains(mid));
  CHECK_FALSE(body.contains(mid.antipode()));

  const Hemisphere sep = body.separate(mid.antipode());
  CHECK(body.support_margin(sep.center()) >= -kGeoTol);
  CHECK(sep.signed_height(mid.antipode()) < 0.0);

  // An explicit certificate exists for -e1 (namely H(e1)); the returned one
  // must be just as valid.
  const Hemisphere sep2 = body.separate(unit3(1, 0, 0).antipode());
  CHECK(body.support_margin(sep2.center()) >= -kGeoTol);
  CHECK(sep2.signed_height(unit3(1, 0, 0).antipode()) < 0.0);

  CHECK_THROWS_AS(body.separate(unit3(1, 0, 0)), Error);
}

TEST_CASE("support margins") {
  const PolytopeBody body = PolytopeBody::from_points(2, orthant_verts());
  CHECK(body.support_margin(unit3(1, 0, 0)) == doctest::Approx(0.0));
  CHECK(body.support_margin(unit3(1, 1, 1)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  const BallBody ball(unit3(0, 0, 1), Angle(0.5));
  CHECK(ball.support_margin(unit3(0, 0, 1)) ==
        doctest::Approx(std::cos(0.5)).epsilon(1e-12));
}

TEST_CASE("vertex margin equals the hull minimum over the dual region") {
  // For containing hemispheres (margin >= 0) the minimum over the body of
  // the height equals the vertex minimum; combinations never dip below.
  for (int trial = 0; trial < 25; ++trial) {
    const SphericalBody body =
        random_body(2 + trial % 2, 8 + trial % 6, Angle(0.8), trial);
    const PolytopeBody& poly = body.polytope();
    const DualRegion region(body);
    Rng rng(Rng::derive(53, trial));
    const UnitPoint m = trial % 2 == 0 ? region.sample_boundary(trial, 0)
                                       : region.anchor();
    const double margin = poly.support_margin(m);
    REQUIRE(margin >= -1e-12);
    double sampled = std::numeric_limits<double>::infinity();
    for (int i = 0; i < poly.vertex_count(); ++i) {
      sampled = std::min(sampled, dot(m, poly.vertex(i)));
    }
    for (int s = 0; s < 10000; ++s) {
      Eigen::VectorXd w(poly.vertex_count());
      for (int i = 0; i < poly.vertex_count(); ++i) {
        w[i] = -std::log(1.0 - rng.uniform());
      }
      const UnitPoint x = UnitPoint::normalized(poly.vertices() * w);
      sampled = std::min(sampled, dot(m, x));
    }
    // Vertices are part of the sample set, so the two minima must agree.
    CHECK(std::abs(sampled - margin) <= 1e-9);
  }
}

TEST_CASE("extreme points") {
  const PolytopeBody body = PolytopeBody::from_points(2, orthant_verts());
  CHECK(body.extreme_points().size() == 3);

  auto verts = orthant_verts();
  verts.push_back(unit3(1, 1, 1));  // interior of the hull
  const PolytopeBody padded = PolytopeBody::from_points(2, verts);
  const auto extremes = padded.extreme_points();
  CHECK(extremes.size() == 3);
  for (const auto& e : extremes) {
    bool is_basis = false;
    for (const auto& v : orthant_verts()) {
      if (nearly_equal(e, v, 1e-12)) is_basis = true;
    }
    CHECK(is_basis);
  }
}

TEST_CASE("caratheodory on the orthant body") {
  auto verts = orthant_verts();
  verts.push_back(unit3(1, 1, 1));
  const PolytopeBody body = PolytopeBody::from_points(2, verts);

  const auto single = body.caratheodory(unit3(1, 0, 0));
  CHECK(single.size() == 1);
  CHECK(nearly_equal(single[0], unit3(1, 0, 0), 1e-12));

  const auto edge = body.caratheodory(unit3(1, 1, 0));
  CHECK(edge.size() == 2);

  const auto inner = body.caratheodory(unit3(1, 1, 1));
  CHECK(inner.size() <= 3);
  {
    Eigen::MatrixXd sub(3, inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) sub.col(i) = inner[i].coords();
    CHECK(cone::project_to_cone(sub, unit3(1, 1, 1).coords()).residual <= 1e-9);
  }

  CHECK_THROWS_AS(body.caratheodory(unit3(-1, 0, 0)), Error);
}

TEST_CASE("caratheodory bound and residual on random bodies") {
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 2;
    const SphericalBody body = random_body(d, d + 3 + trial % 7, Angle(0.9),
                                           1000 + trial);
    const PolytopeBody& poly = body.polytope();
    Rng rng(Rng::derive(60, trial));
    Eigen::VectorXd w(poly.vertex_count());
    for (int i = 0; i < poly.vertex_count(); ++i) {
      w[i] = -std::log(1.0 - rng.uniform());
    }
    const UnitPoint x = UnitPoint::normalized(poly.vertices() * w);
    const auto chosen = poly.caratheodory(x);
    CHECK(static_cast<int>(chosen.size()) <= d + 1);
    Eigen::MatrixXd sub(d + 1, chosen.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) sub.col(i) = chosen[i].coords();
    CHECK(cone::project_to_cone(sub, x.coords()).residual <= 1e-9);
    const auto extremes = poly.extreme_points();
    for (const auto& c : chosen) {
      bool found = false;
      for (const auto& e : extremes) {
        if (nearly_equal(c, e, 1e-9)) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("dual region of the orthant is the orthant") {
  const SphericalBody body = orthant_body(2);
  const DualRegion region(body);
  REQUIRE(region.faces().has_value());
  const Eigen::MatrixXd& rays = region.faces()->rays;
  CHECK(rays.cols() == 3);
  for (Eigen::Index i = 0; i < rays.cols(); ++i) {
    int hits = 0;
    for (int j = 0; j < 3; ++j) {
      if ((rays.col(i) - Eigen::Vector3d::Unit(j)).norm() <= 1e-10) ++hits;
    }
    CHECK(hits == 1);
  }
  CHECK(region.margin(region.anchor()) > 0.0);
}

TEST_CASE("dual region of a ball is the concentric shrunken ball") {
  const UnitPoint c = unit3(0.2, -0.4, 0.89);
  const double rho = 0.6;
  const SphericalBody body = ball_body(c, Angle(rho));
  const DualRegion region(body);
  Rng rng(71);
  for (int s = 0; s < 300; ++s) {
    Eigen::VectorXd v = rng.gaussian(3);
    const UnitPoint m = UnitPoint::normalized(v);
    const bool in_region = region.margin(m) >= -1e-12;
    const bool in_shrunken = dist(m, c).radians() <= kHalfPi - rho + 1e-12;
    CHECK(in_region == in_shrunken);
  }
  // Boundary samples are supporting directions.
  for (int s = 0; s < 50; ++s) {
    const UnitPoint m = region.sample_boundary(5, s);
    CHECK(std::abs(region.margin(m)) <= 1e-12);
  }
}

TEST_CASE("dual-region boundary points support polytopes exactly") {
  for (int trial = 0; trial < 20; ++trial) {
    const SphericalBody body = random_body(2 + trial % 2, 10, Angle(0.9),
                                           400 + trial);
    const DualRegion region(body);
    for (int s = 0; s < 20; ++s) {
      const UnitPoint m = region.sample_boundary(trial, s);
      CHECK(std::abs(region.margin(m)) <= 1e-12);
    }
  }
}
