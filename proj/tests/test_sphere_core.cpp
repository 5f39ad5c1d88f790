#include <doctest.h>

#include "spherewidth/hemisphere.hpp"
#include "spherewidth/lune.hpp"
#include "spherewidth/rng.hpp"

using namespace spherewidth;

namespace {

UnitPoint unit3(double x, double y, double z) {
  return UnitPoint::normalized(Eigen::Vector3d(x, y, z));
}

UnitPoint random_point(Rng& rng, int n) {
  Eigen::VectorXd v = rng.gaussian(n);
  while (v.norm() < 1e-8) v = rng.gaussian(n);
  return UnitPoint::normalized(v);
}

}  // namespace

TEST_CASE("unit points validate their invariants") {
  CHECK_THROWS_AS(UnitPoint(Eigen::Vector3d(1.0, 1.0, 0.0)), Error);
  CHECK_THROWS_AS(UnitPoint(Eigen::Vector2d(1.0, 0.0)), Error);
  const UnitPoint p = UnitPoint::normalized(Eigen::Vector3d(3.0, 4.0, 0.0));
  CHECK(p.coords().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.dim() == 2);
}

TEST_CASE("distance basics") {
  const UnitPoint e1 = unit3(1, 0, 0);
  const UnitPoint e2 = unit3(0, 1, 0);
  CHECK(dist(e1, e2).radians() == doctest::Approx(kHalfPi).epsilon(1e-15));
  CHECK(dist(e1, e1).radians() == 0.0);
  CHECK(dist(e1, e1.antipode()).radians() == doctest::Approx(kPi));
  CHECK_THROWS_AS(
      dist(e1, UnitPoint::normalized(Eigen::Vector4d(1, 0, 0, 0))), Error);
}

TEST_CASE("distance is a metric on sampled triples") {
  Rng rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 4;
    const UnitPoint a = random_point(rng, n);
    const UnitPoint b = random_point(rng, n);
    const UnitPoint c = random_point(rng, n);
    CHECK(dist(a, b).radians() == dist(b, a).radians());  // exact symmetry
    CHECK(dist(a, c).radians() <=
          dist(a, b).radians() + dist(b, c).radians() + 1e-12);
  }
}

TEST_CASE("geodesic points") {
  const UnitPoint e1 = unit3(1, 0, 0);
  const UnitPoint e2 = unit3(0, 1, 0);
  CHECK(nearly_equal(geodesic_point(e1, e2, 0.0), e1, 1e-15));
  CHECK(nearly_equal(geodesic_point(e1, e2, 1.0), e2, 1e-15));
  const UnitPoint mid = geodesic_point(e1, e2, 0.5);
  const double s = std::sqrt(0.5);
  CHECK(nearly_equal(mid, unit3(s, s, 0), 1e-12));

  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const UnitPoint a = random_point(rng, 4);
    const UnitPoint b = random_point(rng, 4);
    const double t = rng.uniform();
    const UnitPoint g = geodesic_point(a, b, t);
    CHECK(dist(a, g).radians() ==
          doctest::Approx(t * dist(a, b).radians()).epsilon(1e-10));
  }

  CHECK_THROWS_AS(geodesic_point(e1, e1, 0.5), Error);
  CHECK_THROWS_AS(geodesic_point(e1, e1.antipode(), 0.5), Error);
}

TEST_CASE("ball_in_hemisphere matches the closed-form criterion") {
  Rng rng(11);
  const UnitPoint o = random_point(rng, 3);
  const Eigen::MatrixXd basis = tangent_basis(o);
  auto at_distance = [&](double d) {
    return walk(o, basis.col(0), d);
  };
  CHECK(ball_in_hemisphere(o, Angle(0.3), at_distance(1.2)));
  CHECK(ball_in_hemisphere(o, Angle(0.3), at_distance(kHalfPi - 0.3)));
  CHECK_FALSE(ball_in_hemisphere(o, Angle(0.3), at_distance(1.3)));
  CHECK_THROWS_AS(ball_in_hemisphere(o, Angle(kHalfPi), at_distance(0.5)),
                  Error);

  // Brute force: the deepest ball point toward m decides containment.
  for (int trial = 0; trial < 1000; ++trial) {
    Rng trial_rng(Rng::derive(100, trial));
    const int n = trial % 2 == 0 ? 3 : 4;
    const UnitPoint center = random_point(trial_rng, n);
    const double rho = trial_rng.uniform(0.05, kHalfPi - 0.05);
    const UnitPoint m = random_point(trial_rng, n);
    double worst = 0.0;
    const Eigen::MatrixXd tb = tangent_basis(center);
    for (int s = 0; s < 1000; ++s) {
      Eigen::VectorXd u = tb * trial_rng.gaussian(n - 1);
      if (u.norm() < 1e-12) continue;
      u /= u.norm();
      const UnitPoint x = walk(center, u, rho);
      worst = std::max(worst, dist(x, m).radians());
    }
    const bool brute = worst <= kHalfPi + 1e-9;
    const bool closed = ball_in_hemisphere(center, Angle(rho), m);
    // The sampled max underestimates; disagreement is only possible within
    // the sampling gap of the true criterion.
    const double slack =
        std::abs(dist(center, m).radians() - (kHalfPi - rho));
    if (slack > 1e-2) CHECK(brute == closed);
  }
}

TEST_CASE("lune construction and guards") {
  const UnitPoint e1 = unit3(1, 0, 0);
  const UnitPoint e2 = unit3(0, 1, 0);
  const Lune lune = make_lune(Hemisphere(e1), Hemisphere(e2));
  CHECK(lune.thickness().radians() == doctest::Approx(kHalfPi).epsilon(1e-15));
  CHECK(nearly_equal(lune.first_face_center(), e2, 1e-12));
  CHECK(nearly_equal(lune.second_face_center(), e1, 1e-12));

  CHECK_THROWS_AS(make_lune(Hemisphere(e1), Hemisphere(e1)), Error);
  CHECK_THROWS_AS(make_lune(Hemisphere(e1), Hemisphere(e1.antipode())), Error);
  try {
    make_lune(Hemisphere(e1), Hemisphere(e1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EqualHemispheres);
  }
  try {
    make_lune(Hemisphere(e1), Hemisphere(e1.antipode()));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OppositeHemispheres);
  }
}

TEST_CASE("lune thickness equals the corner angle") {
  // Fixed instances first: centers pi/2 and 3pi/4 apart.
  Rng rng(3);
  for (double gap : {kHalfPi, 3.0 * kPi / 4.0}) {
    const UnitPoint g = random_point(rng, 3);
    const Eigen::MatrixXd tb = tangent_basis(g);
    const Lune lune = make_lune(Hemisphere(g), Hemisphere(walk(g, tb.col(0), gap)));
    const Angle at_corner = corner_angle(lune, lune.corner_pair()[0]);
    CHECK(lune.thickness().radians() ==
          doctest::Approx(kPi - gap).epsilon(1e-12));
    CHECK(lune.thickness().radians() ==
          doctest::Approx(at_corner.radians()).epsilon(1e-12));
  }

  // Thin-lune limit of the closed form.
  {
    const UnitPoint g = random_point(rng, 3);
    const Eigen::MatrixXd tb = tangent_basis(g);
    const Lune lune =
        make_lune(Hemisphere(g), Hemisphere(walk(g, tb.col(1), kPi - 1e-6)));
    CHECK(std::abs(lune.thickness().radians() - 1e-6) <= 1e-9);
  }

  // Seeded lunes across S^2, S^3, S^4, every sampled corner.
  for (int trial = 0; trial < 3000; ++trial) {
    Rng trng(Rng::derive(5, trial));
    const int d = 2 + trial % 3;
    const UnitPoint g = random_point(trng, d + 1);
    const Eigen::MatrixXd tb = tangent_basis(g);
    Eigen::VectorXd u = tb * trng.gaussian(d);
    u /= u.norm();
    const Lune lune = make_lune(
        Hemisphere(g), Hemisphere(walk(g, u, trng.uniform(0.05, kPi - 0.05))));
    for (int c = 0; c < 4; ++c) {
      const UnitPoint r = lune.sample_corner(trial, c);
      CHECK(std::abs(corner_angle(lune, r).radians() -
                     lune.thickness().radians()) <= 1e-9);
    }
  }
}

TEST_CASE("corner primitives") {
  const UnitPoint e1 = unit3(1, 0, 0);
  const UnitPoint e2 = unit3(0, 1, 0);
  const UnitPoint e3 = unit3(0, 0, 1);
  const Lune lune = make_lune(Hemisphere(e1), Hemisphere(e2));
  CHECK(corner_angle(lune, e3).radians() ==
        doctest::Approx(kHalfPi).epsilon(1e-15));
  CHECK_THROWS_AS(corner_angle(lune, e1), Error);

  CHECK(lune_contains(lune, lune.first_face_center()));
  CHECK_FALSE(lune_contains(lune, lune.first_face_center().antipode()));
  for (const auto& corner : lune.corner_pair()) {
    CHECK(lune_contains(lune, corner));
    CHECK(lune.is_corner(corner));
  }

  // On S^3 the corner set is a circle spanned by two basis vectors.
  const Lune l3 = make_lune(
      Hemisphere(UnitPoint::normalized(Eigen::Vector4d(1, 0, 0, 0))),
      Hemisphere(UnitPoint::normalized(Eigen::Vector4d(0, 1, 0, 0))));
  CHECK(l3.corner_basis().cols() == 2);
  CHECK(l3.is_corner(l3.sample_corner(1, 0)));
}

TEST_CASE("points of a thin lune at distance pi/2 from a face center are corners") {
  for (int trial = 0; trial < 300; ++trial) {
    Rng rng(Rng::derive(17, trial));
    const int d = 2 + trial % 3;
    const UnitPoint g = random_point(rng, d + 1);
    const Eigen::MatrixXd tb = tangent_basis(g);
    Eigen::VectorXd u = tb * rng.gaussian(d);
    u /= u.norm();
    const Lune lune = make_lune(
        Hemisphere(g),
        Hemisphere(walk(g, u, rng.uniform(kHalfPi + 0.05, kPi - 0.05))));
    REQUIRE(lune.thickness().radians() < kHalfPi);
    const UnitPoint& b = lune.second_face_center();
    for (int s = 0; s < 8; ++s) {
      const UnitPoint corner = lune.sample_corner(trial, s);
      Eigen::VectorXd dir = tangent_toward(b, corner);
      if (s % 2 == 1) {
        dir = (dir + 1e-8 * rng.gaussian(d + 1)).normalized();
        dir = (dir - dir.dot(b.coords()) * b.coords()).normalized();
      }
      const UnitPoint x = walk(b, dir, kHalfPi);
      if (!lune.contains(x, 1e-9)) continue;
      CHECK(std::abs(lune.first().signed_height(x)) <= 1e-6);
      CHECK(std::abs(lune.second().signed_height(x)) <= 1e-6);
    }
  }
}
