#include <doctest.h>

#include "spherewidth/body_io.hpp"
#include "spherewidth/checkers.hpp"
#include "spherewidth/constructors.hpp"
#include "spherewidth/rng.hpp"
#include "spherewidth/width.hpp"

using namespace spherewidth;

namespace {

UnitPoint unit3(double x, double y, double z) {
  return UnitPoint::normalized(Eigen::Vector3d(x, y, z));
}

}  // namespace

TEST_CASE("ball constructor") {
  const UnitPoint c = unit3(1, 0, 0);
  const SphericalBody body = ball_body(c, Angle(0.5));
  CHECK(thickness(body).value.radians() == doctest::Approx(1.0).epsilon(1e-12));
  for (int s = 0; s < 100; ++s) {
    const UnitPoint x = boundary_sample(body, 4, s);
    CHECK(std::abs(dist(x, c).radians() - 0.5) <= 1e-12);
  }
  CHECK_THROWS_AS(ball_body(c, Angle(kHalfPi)), Error);
  try {
    ball_body(c, Angle(kHalfPi));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RadiusOutOfRange);
  }
}

TEST_CASE("orthant constructor") {
  const SphericalBody d2 = orthant_body(2);
  CHECK(d2.polytope().vertex_count() == 3);
  CHECK(thickness(d2).value.radians() == doctest::Approx(kHalfPi).epsilon(1e-14));

  const SphericalBody d3 = orthant_body(3);
  CHECK(d3.polytope().vertex_count() == 4);
  CHECK(diameter(d3).value.radians() == doctest::Approx(kHalfPi).epsilon(1e-14));

  CHECK_THROWS_AS(orthant_body(1), Error);
  try {
    orthant_body(1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionTooSmall);
  }
}

TEST_CASE("reuleaux vertex equation solves to the requested width") {
  // Oracle: closed form sin^2(r) = (1 - cos w) / (1 - cos phi) from the
  // spherical law of cosines on the circumscribed circle.
  for (auto [n, w] : {std::pair{3, 1.0}, std::pair{5, 0.8}}) {
    const SphericalBody body = reuleaux_odd_gon(n, Angle(w), 10 * n, 1);
    const int k = (n - 1) / 2;
    const auto& poly = body.polytope();
    for (int i = 0; i < n; ++i) {
      const double dv =
          dist(poly.vertex(i), poly.vertex((i + k) % n)).radians();
      CHECK(std::abs(dv - w) <= 1e-10);
    }
    const double phi = 2.0 * kPi * k / n;
    const double sin2r_expected = (1.0 - std::cos(w)) / (1.0 - std::cos(phi));
    const double cos_r = poly.vertex(0)[2];
    CHECK(std::abs((1.0 - cos_r * cos_r) - sin2r_expected) <= 1e-10);
  }
}

TEST_CASE("reuleaux arcs stay at the exact radius from their centers") {
  const int n = 5;
  const double w = 0.8;
  const SphericalBody body = reuleaux_odd_gon(n, Angle(w), 1000, 3);
  const auto& poly = body.polytope();
  const int k = (n - 1) / 2;
  // Every boundary sample is a vertex or lies at distance exactly w from
  // some vertex, and within w of all vertices.
  for (int j = n; j < poly.vertex_count(); ++j) {
    const UnitPoint x = poly.vertex(j);
    double nearest_center = kPi;
    double max_dist = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = dist(x, poly.vertex(i)).radians();
      nearest_center = std::min(nearest_center, std::abs(d - w));
      max_dist = std::max(max_dist, d);
    }
    CHECK(nearest_center <= 1e-10);
    CHECK(max_dist <= w + 1e-10);
  }
  CHECK(std::abs(diameter(body).value.radians() - w) <= 1e-6);
}

TEST_CASE("reuleaux guards") {
  CHECK_THROWS_AS(reuleaux_odd_gon(4, Angle(1.0), 100, 0), Error);
  try {
    reuleaux_odd_gon(4, Angle(1.0), 100, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenN);
  }
  CHECK_THROWS_AS(reuleaux_odd_gon(3, Angle(1.6), 100, 0), Error);
  try {
    reuleaux_odd_gon(3, Angle(1.6), 100, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WidthOutOfRange);
  }
  CHECK_THROWS_AS(reuleaux_odd_gon(5, Angle(0.8), 3, 0), Error);
  // The extended range still refuses widths no circumradius can reach.
  CHECK_THROWS_AS(reuleaux_odd_gon(3, Angle(2.2), 100, 0, true), Error);
  CHECK_NOTHROW(reuleaux_odd_gon(3, Angle(1.8), 100, 0, true));
}

TEST_CASE("s3 example geometry re-derived independently") {
  // Rebuild the canonical construction directly and check the distances
  // the sampled body must inherit.
  const double kappa = 1.0, sigma = 0.35;
  const Eigen::Vector4d c = Eigen::Vector4d::Unit(0);
  const Eigen::Vector4d u1 = Eigen::Vector4d::Unit(1);
  const Eigen::Vector4d u2 = Eigen::Vector4d::Unit(2);
  const Eigen::Vector4d ax = Eigen::Vector4d::Unit(3);
  const double ty = std::acos(std::cos(kappa) / std::cos(kappa / 2));
  const UnitPoint y =
      UnitPoint::normalized(std::cos(ty) * c + std::sin(ty) * ax);
  for (int j = 0; j < 32; ++j) {
    const double th = 2.0 * kPi * j / 32;
    const UnitPoint x = UnitPoint::normalized(
        std::cos(kappa / 2) * c +
        std::sin(kappa / 2) * (std::cos(th) * u1 + std::sin(th) * u2));
    CHECK(std::abs(dist(y, x).radians() - kappa) <= 1e-10);
    const UnitPoint xp = UnitPoint::normalized(
        std::cos(kappa / 2) * c -
        std::sin(kappa / 2) * (std::cos(th) * u1 + std::sin(th) * u2));
    CHECK(std::abs(dist(x, xp).radians() - kappa) <= 1e-12);
    const UnitPoint b = walk(y, tangent_toward(y, x), kappa + sigma);
    const UnitPoint a = walk(y, -tangent_toward(y, x), sigma);
    CHECK(std::abs(dist(a, b).radians() - (kappa + 2 * sigma)) <= 1e-10);
    const UnitPoint d = walk(x, -tangent_toward(x, xp), sigma);
    const UnitPoint dp = walk(xp, -tangent_toward(xp, x), sigma);
    CHECK(std::abs(dist(d, dp).radians() - (kappa + 2 * sigma)) <= 1e-10);
  }
}

TEST_CASE("s3 example body invariants") {
  const SphericalBody body = example_s3_body(Angle(1.0), Angle(0.35), 900, 5);
  // Diameter is realized by the sampled a/b pairs exactly.
  CHECK(std::abs(diameter(body).value.radians() - 1.7) <= 1e-10);
  // Exact boundary samples are essentially on the sampled hull.
  for (int s = 0; s < 40; ++s) {
    const UnitPoint p = boundary_sample(body, 8, s);
    CHECK(containment_violation(body, p) <= 5e-2);
  }

  CHECK_THROWS_AS(example_s3_body(Angle(1.0), Angle(0.6), 900, 5), Error);
  try {
    example_s3_body(Angle(1.0), Angle(0.6), 900, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SigmaOutOfRange);
  }
  CHECK_THROWS_AS(example_s3_body(Angle(1.6), Angle(0.1), 900, 5), Error);
}

TEST_CASE("random bodies are deterministic and valid") {
  const SphericalBody a = random_body(3, 12, Angle(0.8), 42);
  const SphericalBody b = random_body(3, 12, Angle(0.8), 42);
  REQUIRE(a.polytope().vertex_count() == b.polytope().vertex_count());
  CHECK((a.polytope().vertices() - b.polytope().vertices()).norm() == 0.0);
  CHECK(a.polytope().dual_anchor_margin() > 0.0);

  CHECK_THROWS_AS(random_body(2, 3, Angle(0.8), 1), Error);
  try {
    random_body(2, 3, Angle(0.8), 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewPoints);
  }
}

TEST_CASE("perturbation") {
  const SphericalBody orthant = orthant_body(2);
  const SphericalBody same = perturb(orthant, Angle(0.0), 7);
  CHECK((same.polytope().vertices() - orthant.polytope().vertices()).norm() ==
        0.0);

  const SphericalBody moved = perturb(orthant, Angle(0.05), 7);
  const SphericalBody moved2 = perturb(orthant, Angle(0.05), 7);
  CHECK((moved.polytope().vertices() - moved2.polytope().vertices()).norm() ==
        0.0);

  CHECK_THROWS_AS(perturb(orthant, Angle(1.0), 7), Error);
}

TEST_CASE("serialization round-trips every constructor bit-exactly") {
  const std::vector<SphericalBody> bodies = {
      ball_body(unit3(0.3, -0.1, 0.95), Angle(0.4)),
      orthant_body(2),
      orthant_body(3),
      reuleaux_odd_gon(3, Angle(1.0), 120, 2),
      example_s3_body(Angle(0.8), Angle(0.2), 400, 3),
      random_body(2, 10, Angle(0.7), 4),
      perturb(orthant_body(2), Angle(0.03), 5),
  };
  for (const auto& body : bodies) {
    const std::string text = body_to_json(body);
    const SphericalBody back = body_from_json(text);
    CHECK(body_to_json(back) == text);
    if (body.is_polytope()) {
      CHECK((back.polytope().vertices() - body.polytope().vertices()).norm() ==
            0.0);
    } else {
      CHECK(dist(back.ball().center(), body.ball().center()).radians() == 0.0);
    }
  }
}

TEST_CASE("finer sampling does not widen the constancy spread") {
  double last = std::numeric_limits<double>::infinity();
  for (int samples : {500, 1000, 2000}) {
    const SphericalBody body = reuleaux_odd_gon(5, Angle(0.8), samples, 9);
    const ConstancyReport rep = check_constant_width(body, 64, 1e-3, 13);
    CHECK(rep.spread <= last + 1e-9);
    last = rep.spread;
  }
}
