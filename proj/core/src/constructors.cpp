#include "spherewidth/constructors.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "spherewidth/rng.hpp"

namespace spherewidth {

namespace {

// Interpolates between two unit tangent directions inside their plane.
Eigen::VectorXd slerp_dir(const Eigen::VectorXd& u1, const Eigen::VectorXd& u2,
                          double s) {
  const double c = std::clamp(u1.dot(u2), -1.0, 1.0);
  const double th = std::acos(c);
  if (th < 1e-14) return u1;
  return (std::sin((1.0 - s) * th) * u1 + std::sin(s * th) * u2) / std::sin(th);
}

std::shared_ptr<ConstructorSpec> make_spec(ConstructorSpec spec) {
  return std::make_shared<ConstructorSpec>(std::move(spec));
}

class BallBoundary final : public BoundaryGeometry {
 public:
  explicit BallBoundary(BallBody ball) : ball_(std::move(ball)) {}
  UnitPoint sample(std::uint64_t seed, std::uint64_t index) const override {
    return ball_.boundary_point(seed, index);
  }
  bool has_interior_margin() const override { return true; }
  double interior_margin(const UnitPoint& x) const override {
    return ball_.interior_margin(x);
  }

 private:
  BallBody ball_;
};

class OrthantBoundary final : public BoundaryGeometry {
 public:
  explicit OrthantBoundary(int d) : d_(d) {}
  UnitPoint sample(std::uint64_t seed, std::uint64_t index) const override {
    Rng rng(Rng::derive(seed, index));
    const int facet = static_cast<int>(index % static_cast<std::uint64_t>(d_ + 1));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(d_ + 1);
    double norm2 = 0.0;
    for (int i = 0; i <= d_; ++i) {
      if (i == facet) continue;
      x[i] = std::abs(rng.normal());
      norm2 += x[i] * x[i];
    }
    if (norm2 < 1e-24) x[(facet + 1) % (d_ + 1)] = 1.0;
    return UnitPoint::normalized(x);
  }
  bool has_interior_margin() const override { return true; }
  double interior_margin(const UnitPoint& x) const override {
    // Angular distance to the nearest coordinate great sphere.
    double m = kHalfPi;
    for (int i = 0; i <= d_; ++i) {
      m = std::min(m, std::asin(std::clamp(x[i], -1.0, 1.0)));
    }
    return m;
  }

 private:
  int d_;
};

// Exact arc structure of a Reuleaux odd-gon: arc i has center vertex i and
// runs at radius w between the two opposite vertices.
class ReuleauxBoundary final : public BoundaryGeometry {
 public:
  ReuleauxBoundary(std::vector<UnitPoint> verts, double w)
      : verts_(std::move(verts)), w_(w) {
    const int n = static_cast<int>(verts_.size());
    const int k = (n - 1) / 2;
    for (int i = 0; i < n; ++i) {
      const UnitPoint& c = verts_[static_cast<std::size_t>(i)];
      const UnitPoint& a = verts_[static_cast<std::size_t>((i + k) % n)];
      const UnitPoint& b = verts_[static_cast<std::size_t>((i + k + 1) % n)];
      t_start_.push_back(tangent_toward(c, a));
      t_end_.push_back(tangent_toward(c, b));
    }
  }

  UnitPoint arc_point(int arc, double s) const {
    const UnitPoint& c = verts_[static_cast<std::size_t>(arc)];
    return walk(c,
                slerp_dir(t_start_[static_cast<std::size_t>(arc)],
                          t_end_[static_cast<std::size_t>(arc)], s),
                w_);
  }

  UnitPoint sample(std::uint64_t seed, std::uint64_t index) const override {
    Rng rng(Rng::derive(seed, index));
    const int arc = static_cast<int>(index % verts_.size());
    return arc_point(arc, rng.uniform());
  }

  bool has_interior_margin() const override { return true; }
  double interior_margin(const UnitPoint& x) const override {
    // The body is the intersection of the balls of radius w about the
    // vertices.
    double m = kPi;
    for (const auto& v : verts_) {
      m = std::min(m, w_ - dist(x, v).radians());
    }
    return m;
  }

  int arc_count() const { return static_cast<int>(verts_.size()); }

 private:
  std::vector<UnitPoint> verts_;
  double w_;
  std::vector<Eigen::VectorXd> t_start_;
  std::vector<Eigen::VectorXd> t_end_;
};

// Exact boundary pieces of the S^3 example body, in rotated coordinates.
class ExampleS3Boundary final : public BoundaryGeometry {
 public:
  struct Frame {
    UnitPoint apex;            // the point equidistant from the circle
    Eigen::VectorXd cap_axis;  // unit tangent there toward the circle side
    Eigen::MatrixXd cap_perp;  // 4 x 2, completes the tangent basis
    double alpha;              // cone half-angle of the circle directions
    double kappa;
    double sigma;
  };

  explicit ExampleS3Boundary(Frame f) : f_(std::move(f)) {}

  UnitPoint sample(std::uint64_t seed, std::uint64_t index) const override {
    Rng rng(Rng::derive(seed, index));
    const int piece = static_cast<int>(index % 4);
    const double u = rng.uniform();
    const double psi = 2.0 * kPi * rng.uniform();
    const Eigen::VectorXd ring =
        std::cos(psi) * f_.cap_perp.col(0) + std::sin(psi) * f_.cap_perp.col(1);
    if (piece == 0 || piece == 1) {
      // Caps about the apex; area-uniform in the polar angle.
      const double phi = f_.alpha * std::sqrt(u);
      const double sgn = piece == 0 ? -1.0 : 1.0;
      const double rad =
          piece == 0 ? f_.sigma : f_.kappa + f_.sigma;
      const Eigen::VectorXd dir =
          std::cos(phi) * sgn * f_.cap_axis + std::sin(phi) * ring;
      return walk(f_.apex, dir, rad);
    }
    // Arc families: pick the circle position by psi and the arc parameter
    // by u.
    const Eigen::VectorXd tx = std::cos(f_.alpha) * f_.cap_axis +
                               std::sin(f_.alpha) * ring;
    const UnitPoint x = walk(f_.apex, tx, f_.kappa);
    const Eigen::VectorXd tx2 = std::cos(f_.alpha) * f_.cap_axis -
                                std::sin(f_.alpha) * ring;
    const UnitPoint xp = walk(f_.apex, tx2, f_.kappa);
    const UnitPoint b = walk(f_.apex, tx, f_.kappa + f_.sigma);
    const UnitPoint a = walk(f_.apex, -tx, f_.sigma);
    const UnitPoint d = walk(x, -tangent_toward(x, xp), f_.sigma);
    const UnitPoint dp = walk(xp, -tangent_toward(xp, x), f_.sigma);
    if (piece == 2) {
      const Eigen::VectorXd dir =
          slerp_dir(tangent_toward(x, b), tangent_toward(x, d), u);
      return walk(x, dir, f_.sigma);
    }
    const Eigen::VectorXd dir =
        slerp_dir(tangent_toward(x, a), tangent_toward(x, dp), u);
    return walk(x, dir, f_.kappa + f_.sigma);
  }

 private:
  Frame f_;
};

}  // namespace

SphericalBody ball_body(const UnitPoint& center, Angle rho) {
  BallBody ball(center, rho);
  ConstructorSpec spec;
  spec.kind = "ball";
  spec.dim = center.dim();
  spec.rho = rho.radians();
  spec.center.assign(center.coords().data(),
                     center.coords().data() + center.coords().size());
  return SphericalBody::from_ball(ball)
      .with_boundary(std::make_shared<BallBoundary>(ball))
      .with_provenance(make_spec(std::move(spec)));
}

SphericalBody orthant_body(int d) {
  if (d < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "orthant bodies need d >= 2");
  }
  std::vector<UnitPoint> verts;
  for (int i = 0; i <= d; ++i) {
    verts.emplace_back(Eigen::VectorXd::Unit(d + 1, i));
  }
  ConstructorSpec spec;
  spec.kind = "orthant";
  spec.dim = d;
  return SphericalBody::from_polytope(PolytopeBody::from_points(d, verts))
      .with_boundary(std::make_shared<OrthantBoundary>(d))
      .with_provenance(make_spec(std::move(spec)));
}

SphericalBody reuleaux_odd_gon(int n, Angle w, int samples, std::uint64_t seed,
                               bool extended_range) {
  if (n % 2 == 0) {
    throw Error(ErrorCode::EvenN, "Reuleaux polygons need an odd vertex count");
  }
  if (n < 3) {
    throw Error(ErrorCode::TooFewPoints, "need n >= 3 vertices");
  }
  if (samples < n) {
    throw Error(ErrorCode::TooFewPoints, "need samples >= n");
  }
  const double wv = w.radians();
  if (!(wv > 0.0) || (!extended_range && wv >= kHalfPi)) {
    throw Error(ErrorCode::WidthOutOfRange,
                "default width range is (0, pi/2); pass extended_range to "
                "exceed it");
  }
  const int k = (n - 1) / 2;
  const double phi = 2.0 * kPi * k / n;

  // Circumradius r such that offset-k vertex pairs sit at distance w,
  // solved by bisection on the spherical law of cosines.
  auto pair_dist = [&](double r) {
    const double c = std::cos(r) * std::cos(r) +
                     std::sin(r) * std::sin(r) * std::cos(phi);
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  double lo = 1e-9, hi = kHalfPi;
  if (pair_dist(hi) < wv) {
    throw Error(ErrorCode::NoSolution,
                "no circumradius reaches the requested width");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (pair_dist(mid) < wv ? lo : hi) = mid;
  }
  const double r = 0.5 * (lo + hi);

  std::vector<UnitPoint> verts;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * i / n;
    Eigen::Vector3d v(std::sin(r) * std::cos(a), std::sin(r) * std::sin(a),
                      std::cos(r));
    verts.push_back(UnitPoint::normalized(v));
  }

  auto boundary = std::make_shared<ReuleauxBoundary>(verts, wv);
  std::vector<UnitPoint> pts = verts;
  const int per_arc = samples / n;
  for (int arc = 0; arc < n; ++arc) {
    for (int j = 0; j < per_arc; ++j) {
      pts.push_back(boundary->arc_point(arc, static_cast<double>(j) / per_arc));
    }
  }

  ConstructorSpec spec;
  spec.kind = "reuleaux";
  spec.dim = 2;
  spec.n = n;
  spec.w = wv;
  spec.samples = samples;
  spec.seed = seed;
  return SphericalBody::from_polytope(PolytopeBody::from_points(2, pts))
      .with_boundary(boundary)
      .with_provenance(make_spec(std::move(spec)));
}

SphericalBody example_s3_body(Angle kappa, Angle sigma, int samples,
                              std::uint64_t seed) {
  const double kv = kappa.radians();
  const double sv = sigma.radians();
  if (!(kv > 0.0 && kv < kHalfPi)) {
    throw Error(ErrorCode::KappaOutOfRange, "need 0 < kappa < pi/2");
  }
  if (!(sv > 0.0 && sv <= kHalfPi - kv + 1e-15)) {
    throw Error(ErrorCode::SigmaOutOfRange, "need 0 < sigma <= pi/2 - kappa");
  }
  if (samples < 64) {
    throw Error(ErrorCode::TooFewPoints, "need samples >= 64");
  }

  // Canonical frame: circle of spherical radius kappa/2 about e1 in the
  // (e2, e3) plane, apex on the e1-e4 axis at distance kappa from it.
  const Eigen::Vector4d c = Eigen::Vector4d::Unit(0);
  const Eigen::Vector4d u1 = Eigen::Vector4d::Unit(1);
  const Eigen::Vector4d u2 = Eigen::Vector4d::Unit(2);
  const Eigen::Vector4d ax = Eigen::Vector4d::Unit(3);
  const double ty = std::acos(std::cos(kv) / std::cos(kv / 2.0));
  const UnitPoint apex =
      UnitPoint::normalized(std::cos(ty) * c + std::sin(ty) * ax);

  auto circle_point = [&](double theta) {
    return UnitPoint::normalized(
        std::cos(kv / 2.0) * c +
        std::sin(kv / 2.0) * (std::cos(theta) * u1 + std::sin(theta) * u2));
  };

  // Tangent directions at the apex toward the circle form a cone of fixed
  // half-angle alpha about a fixed axis.
  const Eigen::VectorXd t0 = tangent_toward(apex, circle_point(0.0));
  const Eigen::VectorXd t_half = tangent_toward(apex, circle_point(kPi));
  Eigen::VectorXd cap_axis = (t0 + t_half) / 2.0;
  cap_axis /= cap_axis.norm();
  const double alpha = std::acos(std::clamp(t0.dot(cap_axis), -1.0, 1.0));

  Eigen::MatrixXd span(4, 2);
  span.col(0) = apex.coords();
  span.col(1) = cap_axis;
  const Eigen::MatrixXd cap_perp = orthonormal_complement(span);

  auto tangent_at = [&](double theta) -> Eigen::VectorXd {
    return std::cos(alpha) * cap_axis +
           std::sin(alpha) * (std::cos(theta) * cap_perp.col(0) +
                              std::sin(theta) * cap_perp.col(1));
  };

  // Grid sizes: even azimuth count shared by all pieces so that opposite
  // circle points and the a/b rims land on the grid exactly.
  int nx = static_cast<int>(std::lround(std::sqrt(samples / 4.0)));
  nx = std::max(8, nx + (nx % 2));
  const int nring = std::max(3, samples / (4 * nx));
  const int narc = std::max(3, samples / (4 * nx));

  std::vector<UnitPoint> pts;
  // Caps bounded by the a- and b-circles, rim rings included.
  for (int cap = 0; cap < 2; ++cap) {
    const double sgn = cap == 0 ? -1.0 : 1.0;
    const double rad = cap == 0 ? sv : kv + sv;
    for (int i = 0; i < nring; ++i) {
      const double phi = alpha * i / (nring - 1);
      if (i == 0) {
        pts.push_back(walk(apex, sgn * cap_axis, rad));
        continue;
      }
      for (int j = 0; j < nx; ++j) {
        const double psi = 2.0 * kPi * j / nx;
        const Eigen::VectorXd dir =
            std::cos(phi) * sgn * cap_axis +
            std::sin(phi) * (std::cos(psi) * cap_perp.col(0) +
                             std::sin(psi) * cap_perp.col(1));
        pts.push_back(walk(apex, dir, rad));
      }
    }
  }
  // Arc families through each sampled circle position.
  for (int j = 0; j < nx; ++j) {
    const double theta = 2.0 * kPi * j / nx;
    const Eigen::VectorXd tx = tangent_at(theta);
    const Eigen::VectorXd tx_op = tangent_at(theta + kPi);
    const UnitPoint x = walk(apex, tx, kv);
    const UnitPoint xp = walk(apex, tx_op, kv);
    const UnitPoint b = walk(apex, tx, kv + sv);
    const UnitPoint a = walk(apex, -tx, sv);
    const UnitPoint d = walk(x, -tangent_toward(x, xp), sv);
    const UnitPoint dp = walk(xp, -tangent_toward(xp, x), sv);
    const Eigen::VectorXd cb = tangent_toward(x, b);
    const Eigen::VectorXd cd = tangent_toward(x, d);
    const Eigen::VectorXd da = tangent_toward(x, a);
    const Eigen::VectorXd ddp = tangent_toward(x, dp);
    for (int t = 0; t < narc; ++t) {
      const double s = static_cast<double>(t) / (narc - 1);
      pts.push_back(walk(x, slerp_dir(cb, cd, s), sv));
      pts.push_back(walk(x, slerp_dir(da, ddp, s), kv + sv));
    }
  }

  // Seeded random rotation applied last; the canonical frame is only a
  // reproducible construction device.
  Rng rng(Rng::derive(seed, 0x50f4));
  Eigen::Matrix4d g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(g);
  Eigen::Matrix4d q = qr.householderQ();
  const Eigen::Matrix4d rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 4; ++i) {
    if (rmat(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  if (q.determinant() < 0.0) q.col(3) = -q.col(3);

  std::vector<UnitPoint> rotated;
  rotated.reserve(pts.size());
  for (const auto& p : pts) {
    rotated.push_back(UnitPoint::normalized(q * p.coords()));
  }

  ExampleS3Boundary::Frame frame{UnitPoint::normalized(q * apex.coords()),
                                 q * cap_axis, q * cap_perp, alpha, kv, sv};

  ConstructorSpec spec;
  spec.kind = "example_s3";
  spec.dim = 3;
  spec.kappa = kv;
  spec.sigma = sv;
  spec.samples = samples;
  spec.seed = seed;
  return SphericalBody::from_polytope(PolytopeBody::from_points(3, rotated))
      .with_boundary(std::make_shared<ExampleS3Boundary>(std::move(frame)))
      .with_provenance(make_spec(std::move(spec)));
}

SphericalBody random_body(int d, int n_points, Angle spread,
                          std::uint64_t seed) {
  if (d < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "bodies live on S^d, d >= 2");
  }
  if (n_points < d + 2) {
    throw Error(ErrorCode::TooFewPoints,
                "need n_points >= d + 2 for a full-dimensional hull");
  }
  const double sp = spread.radians();
  if (!(sp > 0.0 && sp < kHalfPi)) {
    throw Error(ErrorCode::AngleOutOfRange, "need 0 < spread < pi/2");
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
    Eigen::VectorXd cv = rng.gaussian(d + 1);
    while (cv.norm() < 1e-8) cv = rng.gaussian(d + 1);
    const UnitPoint center = UnitPoint::normalized(cv);
    const Eigen::MatrixXd basis = tangent_basis(center);
    std::vector<UnitPoint> pts;
    for (int i = 0; i < n_points; ++i) {
      Eigen::VectorXd u = basis * rng.gaussian(d);
      while (u.norm() < 1e-12) u = basis * rng.gaussian(d);
      u /= u.norm();
      const double ct = 1.0 - rng.uniform() * (1.0 - std::cos(sp));
      pts.push_back(walk(center, u, std::acos(std::clamp(ct, -1.0, 1.0))));
    }
    try {
      ConstructorSpec spec;
      spec.kind = "random";
      spec.dim = d;
      spec.n_points = n_points;
      spec.spread = sp;
      spec.seed = seed;
      return SphericalBody::from_polytope(PolytopeBody::from_points(d, pts))
          .with_provenance(make_spec(std::move(spec)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFullDimensional || attempt == 63) throw;
    }
  }
  throw Error(ErrorCode::NotFullDimensional, "random cap never spanned");
}

SphericalBody perturb(const SphericalBody& body, Angle eps,
                      std::uint64_t seed) {
  if (!body.is_polytope()) {
    throw Error(ErrorCode::InvariantViolation,
                "perturbation applies to polytope bodies");
  }
  if (eps.radians() >= kPi / 4.0) {
    throw Error(ErrorCode::AngleOutOfRange, "need eps < pi/4");
  }
  const PolytopeBody& poly = body.polytope();
  std::vector<UnitPoint> pts;
  for (int i = 0; i < poly.vertex_count(); ++i) {
    const UnitPoint v = poly.vertex(i);
    if (eps.radians() == 0.0) {
      pts.push_back(v);
      continue;
    }
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    const Eigen::MatrixXd basis = tangent_basis(v);
    Eigen::VectorXd u = basis * rng.gaussian(poly.dim());
    while (u.norm() < 1e-12) u = basis * rng.gaussian(poly.dim());
    u /= u.norm();
    pts.push_back(walk(v, u, eps.radians() * rng.uniform()));
  }
  try {
    ConstructorSpec spec;
    spec.kind = "perturb";
    spec.dim = poly.dim();
    spec.eps = eps.radians();
    spec.seed = seed;
    if (body.provenance()) {
      spec.base = std::make_shared<ConstructorSpec>(*body.provenance());
    }
    return SphericalBody::from_polytope(
               PolytopeBody::from_points(poly.dim(), pts))
        .with_provenance(make_spec(std::move(spec)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AngleOutOfRange) throw;
    throw Error(ErrorCode::InvariantViolation,
                std::string("perturbed set is no longer a valid body: ") +
                    e.what());
  }
}

SphericalBody build_body(const ConstructorSpec& spec) {
  if (spec.kind == "ball") {
    Eigen::VectorXd c(static_cast<Eigen::Index>(spec.center.size()));
    for (std::size_t i = 0; i < spec.center.size(); ++i) c[i] = spec.center[i];
    return ball_body(UnitPoint::normalized(c), Angle(spec.rho));
  }
  if (spec.kind == "orthant") return orthant_body(spec.dim);
  if (spec.kind == "reuleaux") {
    return reuleaux_odd_gon(spec.n, Angle(spec.w), spec.samples, spec.seed);
  }
  if (spec.kind == "example_s3") {
    return example_s3_body(Angle(spec.kappa), Angle(spec.sigma), spec.samples,
                           spec.seed);
  }
  if (spec.kind == "random") {
    return random_body(spec.dim, spec.n_points, Angle(spec.spread), spec.seed);
  }
  if (spec.kind == "perturb") {
    if (!spec.base) {
      throw Error(ErrorCode::SchemaError, "perturb spec needs a base spec");
    }
    return perturb(build_body(*spec.base), Angle(spec.eps), spec.seed);
  }
  throw Error(ErrorCode::SchemaError, "unknown constructor kind: " + spec.kind);
}

}  // namespace spherewidth
