#include <doctest.h>

#include "spherewidth/cone.hpp"
#include "spherewidth/point.hpp"
#include "spherewidth/rng.hpp"

using namespace spherewidth;

namespace {

// Unit generators inside a cap of angular radius `spread` about a random
// center; the center direction then certifies margins >= cos(spread) > 0.
Eigen::MatrixXd random_gens(Rng& rng, int rows, int n, double spread) {
  Eigen::VectorXd c = rng.gaussian(rows);
  c /= c.norm();
  Eigen::MatrixXd out(rows, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd t = rng.gaussian(rows);
    t -= t.dot(c) * c;
    while (t.norm() < 1e-12) {
      t = rng.gaussian(rows);
      t -= t.dot(c) * c;
    }
    t /= t.norm();
    const double theta = spread * rng.uniform();
    out.col(j) = std::cos(theta) * c + std::sin(theta) * t;
  }
  return out;
}

}  // namespace

TEST_CASE("cone projection on axis-aligned cases") {
  Eigen::MatrixXd gens(3, 2);
  gens.col(0) = Eigen::Vector3d(1, 0, 0);
  gens.col(1) = Eigen::Vector3d(0, 1, 0);

  auto inside = cone::project_to_cone(gens, Eigen::Vector3d(2, 3, 0));
  CHECK(inside.residual <= 1e-14);
  CHECK(inside.support.size() == 2);

  auto outside = cone::project_to_cone(gens, Eigen::Vector3d(1, -1, 0));
  CHECK(outside.residual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((outside.point - Eigen::Vector3d(1, 0, 0)).norm() <= 1e-12);

  auto polar = cone::project_to_cone(gens, Eigen::Vector3d(-1, -1, 0));
  CHECK(polar.point.norm() <= 1e-12);
}

TEST_CASE("Moreau decomposition holds on random instances") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = 3 + trial % 2;
    const Eigen::MatrixXd gens = random_gens(rng, rows, 4 + trial % 9, 1.2);
    const Eigen::VectorXd u = rng.gaussian(rows);
    const auto proj = cone::project_to_cone(gens, u);
    // Projection optimality: residual orthogonal to the cone point and
    // nonpositive against every generator.
    const Eigen::VectorXd r = u - proj.point;
    CHECK(std::abs(r.dot(proj.point)) <= 1e-9);
    CHECK((gens.transpose() * r).maxCoeff() <= 1e-9);

    const Eigen::VectorXd dual = cone::project_to_dual(gens, u);
    CHECK((gens.transpose() * dual).minCoeff() >= -1e-9);
    // Moreau: u splits orthogonally between the dual cone and -cone.
    const Eigen::VectorXd polar_part = u - dual;
    CHECK(std::abs(dual.dot(polar_part)) <= 1e-9);
    CHECK((dual - u - cone::project_to_cone(gens, -u).point).norm() <= 1e-9);
  }
}

TEST_CASE("min-norm point of the simplex hull") {
  Eigen::MatrixXd gens = Eigen::MatrixXd::Identity(3, 3);
  const auto mnp = cone::min_norm_point(gens);
  CHECK(mnp.norm == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
  CHECK((mnp.point - Eigen::Vector3d(1, 1, 1) / 3.0).norm() <= 1e-10);

  // Hull through the origin: the certificate margin collapses.
  Eigen::MatrixXd flat(3, 2);
  flat.col(0) = Eigen::Vector3d(1, 0, 0);
  flat.col(1) = Eigen::Vector3d(-1, 0, 0);
  CHECK(cone::min_norm_point(flat).norm <= 1e-9);
}

TEST_CASE("min-norm point certifies the max-margin direction") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 3 + trial % 2;
    const Eigen::MatrixXd gens = random_gens(rng, rows, 5 + trial % 7, 1.1);
    const auto mnp = cone::min_norm_point(gens);
    REQUIRE(mnp.norm > 1e-9);
    const Eigen::VectorXd dir = mnp.point / mnp.norm;
    CHECK((gens.transpose() * dir).minCoeff() >= mnp.norm - 1e-8);
    // Convex weights reproduce the point.
    CHECK(std::abs(mnp.coeffs.sum() - 1.0) <= 1e-9);
    CHECK((gens * mnp.coeffs - mnp.point).norm() <= 1e-9);
  }
}

TEST_CASE("radial exit matches a bisection oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 3 + trial % 2;
    const Eigen::MatrixXd gens = random_gens(rng, rows, 4 + trial % 6, 1.1);
    const auto mnp = cone::min_norm_point(gens);
    REQUIRE(mnp.norm > 1e-6);
    const UnitPoint anchor = UnitPoint::normalized(mnp.point);
    const Eigen::MatrixXd tb = tangent_basis(anchor);
    Eigen::VectorXd u = tb * rng.gaussian(rows - 1);
    u /= u.norm();

    const double theta = cone::radial_exit(gens, anchor.coords(), u);
    auto margin = [&](double t) {
      const UnitPoint m = walk(anchor, u, t);
      return (gens.transpose() * m.coords()).minCoeff();
    };
    // Oracle: bisection on the sign of the margin along the arc.
    double lo = 0.0, hi = kPi;
    REQUIRE(margin(0.0) > 0.0);
    REQUIRE(margin(hi) < 0.0);
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK(theta == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-9));
    CHECK(std::abs(margin(theta)) <= 1e-12);
  }
}
