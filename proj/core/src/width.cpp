#include "spherewidth/width.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include <Eigen/Dense>

#include "spherewidth/cone.hpp"
#include "spherewidth/dual_region.hpp"
#include "spherewidth/rng.hpp"

namespace spherewidth {

namespace {

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Angle width_from_cos(double t) {
  return Angle(kPi - std::acos(std::clamp(t, -1.0, 1.0)));
}

WidthReport make_report(const UnitPoint& k, const UnitPoint& witness,
                        bool converged, double residual) {
  const double t = dot(k, witness);
  return WidthReport{width_from_cos(t), witness,
                     make_lune(Hemisphere(k), Hemisphere(witness)), converged,
                     residual};
}

// Minimum of <k, .> over the extreme rays of the dual cone; exact whenever
// the optimum is at or above zero (the region then lies in H(k) and the
// distance from k is geodesically convex, so the farthest point is a ray).
struct RayMin {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd ray;
};

RayMin min_over_rays(const DualFaces& faces, const Eigen::VectorXd& k) {
  RayMin best;
  for (Eigen::Index i = 0; i < faces.rays.cols(); ++i) {
    const double t = k.dot(faces.rays.col(i));
    if (t < best.value - 1e-12 ||
        (t < best.value + 1e-12 && best.ray.size() > 0 &&
         lex_less(faces.rays.col(i), best.ray))) {
      best.value = t;
      best.ray = faces.rays.col(i);
    }
  }
  return best;
}

struct DescentResult {
  Eigen::VectorXd m;
  double value = std::numeric_limits<double>::infinity();
  bool converged = false;
  double residual = 0.0;
};

// Projected descent of <k, m> over the dual cone intersected with the
// sphere. Feasibility is restored after every step by projecting onto the
// dual cone and renormalizing (both preserve cone membership).
DescentResult projected_descent(const Eigen::MatrixXd& gens,
                                const Eigen::VectorXd& k, Eigen::VectorXd m,
                                int max_iters, double step_tol) {
  DescentResult out;
  double f = k.dot(m);
  double eta = 0.25;
  double last_step = 1.0;
  for (int it = 0; it < max_iters; ++it) {
    const Eigen::VectorXd grad = k - f * m;  // tangential gradient
    Eigen::VectorXd trial = m - eta * grad;
    Eigen::VectorXd projected = cone::project_to_dual(gens, trial);
    const double pn = projected.norm();
    if (pn < 1e-14) {
      eta *= 0.5;
      if (eta < 1e-14) break;
      continue;
    }
    projected /= pn;
    const double ft = k.dot(projected);
    if (ft < f - 1e-16) {
      last_step = (projected - m).norm();
      m = projected;
      f = ft;
      eta = std::min(eta * 1.4, 2.0);
      if (last_step < step_tol) {
        out.converged = true;
        break;
      }
    } else {
      eta *= 0.5;
      if (eta < 1e-14) {
        out.converged = last_step < 1e-6;
        break;
      }
    }
  }
  out.m = m;
  out.value = f;
  out.residual = last_step;
  return out;
}

constexpr int kDescentStarts = 32;
constexpr double kDescentStepTol = 1e-10;
constexpr int kDescentIters = 600;
constexpr std::uint64_t kDescentSeed = 0x5EEDull;

WidthReport width_at_polytope(const SphericalBody& body, const UnitPoint& k) {
  const PolytopeBody& poly = body.polytope();
  const Eigen::MatrixXd& v = poly.vertices();
  const Eigen::VectorXd& kv = k.coords();

  // Optimum below pi/2: one Euclidean projection of -k onto the dual cone
  // finds it (the projection's active set is the optimal face and its
  // direction the per-face critical point).
  const auto proj = cone::project_to_cone(v, kv);
  const Eigen::VectorXd q = proj.point - kv;  // = Pi_D(-k)
  if (q.norm() > 1e-9) {
    const UnitPoint witness = UnitPoint::normalized(q);
    return make_report(k, witness, true,
                       std::abs(poly.support_margin(witness)));
  }

  // Optimum at or above pi/2: it sits on an extreme ray of the dual cone.
  if (poly.dual_faces()) {
    const RayMin best = min_over_rays(*poly.dual_faces(), kv);
    const UnitPoint witness = UnitPoint::normalized(best.ray);
    return make_report(k, witness, true,
                       std::abs(poly.support_margin(witness)));
  }

  // Ray enumeration out of budget: seeded multi-start projected descent.
  DualRegion region{body};
  DescentResult best;
  for (int s = 0; s < kDescentStarts; ++s) {
    const UnitPoint start = region.sample_boundary(kDescentSeed, s);
    DescentResult r = projected_descent(v, kv, start.coords(), kDescentIters,
                                        kDescentStepTol);
    if (r.value < best.value - 1e-12 ||
        (r.value < best.value + 1e-12 &&
         (best.m.size() == 0 || lex_less(r.m, best.m)))) {
      best = r;
    }
  }
  const UnitPoint witness = UnitPoint::normalized(best.m);
  return make_report(k, witness, best.converged,
                     std::max(best.residual, std::abs(poly.support_margin(witness))));
}

}  // namespace

WidthReport width_at(const SphericalBody& body, const UnitPoint& k) {
  const double margin = support_margin(body, k);
  if (std::abs(margin) > kGeoTol) {
    throw Error(ErrorCode::NotSupporting,
                "H(k) must support the body; margin = " + std::to_string(margin));
  }
  if (!body.is_polytope()) {
    const BallBody& ball = body.ball();
    const double two_rho = 2.0 * ball.radius().radians();
    const UnitPoint witness =
        walk(k, tangent_toward(k, ball.center()), kPi - two_rho);
    return make_report(k, witness, true,
                       std::abs(ball.support_margin(witness)));
  }
  return width_at_polytope(body, k);
}

WidthReport thickness(const SphericalBody& body, int n_starts,
                      std::uint64_t seed) {
  if (!body.is_polytope()) {
    // Balls have the same width in every direction.
    const BallBody& ball = body.ball();
    const Eigen::MatrixXd basis = tangent_basis(ball.center());
    const UnitPoint k =
        walk(ball.center(), basis.col(0), kHalfPi - ball.radius().radians());
    return width_at(body, k);
  }

  const PolytopeBody& poly = body.polytope();
  if (poly.dual_faces()) {
    // width_at(.) as a function of k is a min of linear functions, hence
    // concave; its minimum over the dual region sits at an extreme ray.
    const DualFaces& faces = *poly.dual_faces();
    WidthReport best =
        width_at(body, UnitPoint::normalized(faces.rays.col(0)));
    for (Eigen::Index i = 1; i < faces.rays.cols(); ++i) {
      WidthReport r = width_at(body, UnitPoint::normalized(faces.rays.col(i)));
      if (r.value.radians() < best.value.radians() - 1e-13 ||
          (r.value.radians() < best.value.radians() + 1e-13 &&
           lex_less(r.lune.first().center().coords(),
                    best.lune.first().center().coords()))) {
        best = r;
      }
    }
    return best;
  }

  // Seeded multi-start compass search over the dual-region boundary.
  DualRegion region{body};
  const Eigen::MatrixXd basis = tangent_basis(region.anchor());
  const int tdim = static_cast<int>(basis.cols());
  auto eval = [&](const Eigen::VectorXd& dir) {
    return width_at(body, region.boundary_toward(dir));
  };
  WidthReport best = eval(basis.col(0));
  for (int s = 0; s < n_starts; ++s) {
    Eigen::VectorXd dir = basis * ld_direction(tdim, seed, s);
    WidthReport cur = eval(dir);
    double step = 0.4;
    while (step > 1e-7) {
      bool improved = false;
      for (int axis = 0; axis < tdim && !improved; ++axis) {
        for (double sign : {1.0, -1.0}) {
          Eigen::VectorXd cand = dir + sign * step * basis.col(axis % tdim);
          cand -= cand.dot(region.anchor().coords()) * region.anchor().coords();
          if (cand.norm() < 1e-12) continue;
          cand /= cand.norm();
          WidthReport r = eval(cand);
          if (r.value.radians() < cur.value.radians() - 1e-14) {
            cur = r;
            dir = cand;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (cur.value.radians() < best.value.radians()) best = cur;
  }
  return best;
}

namespace {

// Faces of the polytope boundary, as vertex index sets: the dual-cone rays
// give the facets (their active vertex sets), and lower faces come from
// pairs inside facets. Extra in-body subsets are harmless for a maximum.
std::vector<std::vector<int>> boundary_face_sets(const PolytopeBody& poly) {
  std::vector<std::vector<int>> faces;
  const DualFaces& df = *poly.dual_faces();
  if (poly.dim() == 2) {
    const int h = static_cast<int>(df.edge_vertex.size());
    for (int i = 0; i < h; ++i) {
      faces.push_back({df.edge_vertex[i], df.edge_vertex[(i + 1) % h]});
    }
    return faces;
  }
  std::set<std::vector<int>> seen;
  for (const auto& facet : df.ray_active) {
    if (facet.size() < 2) continue;
    if (seen.insert(facet).second) faces.push_back(facet);
    for (std::size_t a = 0; a < facet.size(); ++a) {
      for (std::size_t b = a + 1; b < facet.size(); ++b) {
        std::vector<int> edge{facet[a], facet[b]};
        if (seen.insert(edge).second) faces.push_back(edge);
      }
    }
  }
  return faces;
}

// Largest distance between two faces: the subspace optimum comes from the
// top singular pair of the basis product; it counts only when both
// directions land inside the face cones (otherwise a smaller face pair
// carries the optimum).
struct FacePair {
  double min_dot = 2.0;
  Eigen::VectorXd x, y;
};

FacePair face_pair_min_dot(const Eigen::MatrixXd& fa, const Eigen::MatrixXd& fb) {
  FacePair out;
  Eigen::JacobiSVD<Eigen::MatrixXd> sa(fa, Eigen::ComputeThinU);
  Eigen::JacobiSVD<Eigen::MatrixXd> sb(fb, Eigen::ComputeThinU);
  const Eigen::MatrixXd ba = sa.matrixU().leftCols(sa.rank());
  const Eigen::MatrixXd bb = sb.matrixU().leftCols(sb.rank());
  Eigen::JacobiSVD<Eigen::MatrixXd> cross(
      ba.transpose() * bb, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (cross.singularValues().size() == 0) return out;
  const double sigma = cross.singularValues()[0];
  Eigen::VectorXd x = ba * cross.matrixU().col(0);
  Eigen::VectorXd y = -bb * cross.matrixV().col(0);
  if (cone::project_to_cone(fa, x).residual > 1e-9) {
    x = -x;
    y = -y;
    if (cone::project_to_cone(fa, x).residual > 1e-9) return out;
  }
  if (cone::project_to_cone(fb, y).residual > 1e-9) return out;
  out.min_dot = -sigma;
  out.x = x;
  out.y = y;
  return out;
}

}  // namespace

DiameterReport diameter(const SphericalBody& body) {
  if (!body.is_polytope()) {
    const BallBody& ball = body.ball();
    const Eigen::MatrixXd basis = tangent_basis(ball.center());
    const Eigen::VectorXd u = basis.col(0);
    return DiameterReport{Angle(2.0 * ball.radius().radians()),
                          walk(ball.center(), u, ball.radius().radians()),
                          walk(ball.center(), -u, ball.radius().radians())};
  }
  const PolytopeBody& poly = body.polytope();
  const Eigen::MatrixXd& v = poly.vertices();
  const Eigen::Index n = v.cols();
  double best = 1.0;
  Eigen::Index bi = 0, bj = 0;
  const Eigen::Index block = 512;
  for (Eigen::Index i0 = 0; i0 < n; i0 += block) {
    const Eigen::Index bw = std::min(block, n - i0);
    const Eigen::MatrixXd g = v.middleCols(i0, bw).transpose() * v;
    for (Eigen::Index a = 0; a < bw; ++a) {
      for (Eigen::Index j = i0 + a + 1; j < n; ++j) {
        if (g(a, j) < best) {
          best = g(a, j);
          bi = i0 + a;
          bj = j;
        }
      }
    }
  }
  UnitPoint p{v.col(bi)};
  UnitPoint q{v.col(bj)};

  // Beyond a quarter turn the distance stops being geodesically convex and
  // the maximum may move into face interiors; sweep face pairs exactly.
  if (best < kGeoTol && poly.dual_faces()) {
    std::vector<std::vector<int>> faces = boundary_face_sets(poly);
    for (Eigen::Index i = 0; i < n; ++i) faces.push_back({static_cast<int>(i)});
    std::vector<Eigen::MatrixXd> cols;
    cols.reserve(faces.size());
    for (const auto& f : faces) {
      Eigen::MatrixXd m(v.rows(), f.size());
      for (std::size_t t = 0; t < f.size(); ++t) m.col(t) = v.col(f[t]);
      cols.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < faces.size(); ++a) {
      for (std::size_t b = a; b < faces.size(); ++b) {
        if (faces[a].size() == 1 && faces[b].size() == 1) continue;
        const FacePair fp = face_pair_min_dot(cols[a], cols[b]);
        if (fp.min_dot < best) {
          best = fp.min_dot;
          p = UnitPoint::normalized(fp.x);
          q = UnitPoint::normalized(fp.y);
        }
      }
    }
  }
  return DiameterReport{Angle(std::acos(std::clamp(best, -1.0, 1.0))), p, q};
}

Hemisphere orthogonal_diameter_support(const SphericalBody& body,
                                       const UnitPoint& p, const UnitPoint& q,
                                       double tol) {
  const DiameterReport diam = diameter(body);
  if (std::abs(dist(p, q).radians() - diam.value.radians()) > tol) {
    throw Error(ErrorCode::NotADiameterPair,
                "|pq| does not realize the diameter");
  }
  // The point at distance pi/2 from p on the arc through q is the tangent
  // direction itself.
  return Hemisphere(UnitPoint::normalized(tangent_toward(p, q)));
}

namespace {

constexpr int kSubsetBudget = 200000;

// Farthest-point candidates on faces: the antipodal foot of p on the span
// of a vertex subset, kept when it lies in the subset's cone.
void face_candidates(const Eigen::MatrixXd& v, const Eigen::VectorXd& p,
                     int subset_size, std::vector<Eigen::VectorXd>& out) {
  const int n = static_cast<int>(v.cols());
  std::vector<int> idx(subset_size);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == subset_size) {
      Eigen::MatrixXd sub(v.rows(), subset_size);
      for (int t = 0; t < subset_size; ++t) sub.col(t) = v.col(idx[t]);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub, Eigen::ComputeThinU);
      int rank = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()[i] > 1e-10 * svd.singularValues()[0]) ++rank;
      }
      if (rank < subset_size) return;
      const Eigen::MatrixXd basis = svd.matrixU().leftCols(rank);
      Eigen::VectorXd foot = basis * (basis.transpose() * p);
      if (foot.norm() < 1e-12) return;
      foot = -foot / foot.norm();
      if (cone::project_to_cone(sub, foot).residual <= 1e-9) {
        out.push_back(foot);
      }
      return;
    }
    for (int j = start; j <= n - (subset_size - depth); ++j) {
      idx[depth] = j;
      rec(j + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::pair<UnitPoint, Angle> farthest_partner(const SphericalBody& body,
                                             const UnitPoint& p,
                                             double boundary_tol) {
  if (!body.is_polytope()) {
    const BallBody& ball = body.ball();
    if (std::abs(dist(p, ball.center()).radians() - ball.radius().radians()) >
        boundary_tol) {
      throw Error(ErrorCode::NotOnBoundary, "point is not on the ball boundary");
    }
    const UnitPoint q =
        walk(ball.center(), -tangent_toward(ball.center(), p),
             ball.radius().radians());
    return {q, dist(p, q)};
  }
  if (!on_boundary(body, p, boundary_tol)) {
    throw Error(ErrorCode::NotOnBoundary, "point is not on the body boundary");
  }
  const Eigen::MatrixXd& v = body.polytope().vertices();
  const int n = static_cast<int>(v.cols());
  const int d = body.dim();

  Eigen::VectorXd dots = v.transpose() * p.coords();
  Eigen::Index bi;
  double best = dots.minCoeff(&bi);
  Eigen::VectorXd bestq = v.col(bi);

  // Interior-of-face critical points, enumerated within budget.
  double subsets = 0.0;
  for (int s = 2; s <= d; ++s) {
    double c = 1.0;
    for (int t = 0; t < s; ++t) c = c * (n - t) / (t + 1);
    subsets += c;
  }
  if (subsets <= kSubsetBudget) {
    std::vector<Eigen::VectorXd> cands;
    for (int s = 2; s <= d; ++s) face_candidates(v, p.coords(), s, cands);
    for (const auto& c : cands) {
      const double t = c.dot(p.coords());
      if (t < best) {
        best = t;
        bestq = c;
      }
    }
  }
  const UnitPoint q = UnitPoint::normalized(bestq);
  return {q, dist(p, q)};
}

std::pair<UnitPoint, Angle> inscribed_ball_at(const SphericalBody& body,
                                              const UnitPoint& p, Angle w,
                                              double boundary_tol) {
  if (w.radians() <= kHalfPi) {
    throw Error(ErrorCode::WidthNotAboveHalfPi,
                "inscribed touching balls need constant width > pi/2");
  }
  const UnitPoint support_center = supporting_direction_at(body, p, boundary_tol);
  const double r = w.radians() - kHalfPi;
  // support_center is orthogonal to p, so it is the tangent direction of
  // the arc from p toward it.
  const UnitPoint center =
      UnitPoint::normalized(std::cos(r) * p.coords() +
                            std::sin(r) * support_center.coords());
  return {center, Angle(r)};
}

Lune width_lune_at(const SphericalBody& body, const UnitPoint& p, Angle w,
                   double boundary_tol, double margin_tol) {
  const double cw = std::cos(w.radians());
  const double sw = std::sin(w.radians());
  auto forced_second = [&](const Eigen::VectorXd& k) {
    // Second hemisphere center placed so that p is exactly the center of
    // the first bounding hemisphere of the lune H(k) cap H(k*).
    return UnitPoint::normalized(-cw * k + sw * p.coords());
  };

  if (!body.is_polytope()) {
    const UnitPoint k = supporting_direction_at(body, p, boundary_tol);
    const UnitPoint second = forced_second(k.coords());
    if (support_margin(body, second) < -margin_tol) {
      throw Error(ErrorCode::CenterConditionFailed,
                  "the supporting hemisphere at p yields no containing lune");
    }
    return make_lune(Hemisphere(k), Hemisphere(second));
  }

  const PolytopeBody& poly = body.polytope();
  if (containment_violation(body, p) > boundary_tol) {
    throw Error(ErrorCode::NotOnBoundary, "point is outside the body");
  }
  const Eigen::MatrixXd& v = poly.vertices();

  auto score = [&](const Eigen::VectorXd& k) {
    return poly.support_margin(UnitPoint::normalized(forced_second(k).coords()));
  };

  // Candidate supporting directions in the normal cone at p.
  std::vector<Eigen::VectorXd> starts;
  {
    const Eigen::VectorXd probe = p.coords() - poly.inner_point().coords();
    Eigen::VectorXd m = cone::project_to_dual_slice(v, p.coords(), probe);
    if (m.norm() > 1e-10) starts.push_back(m / m.norm());
    for (int t = 0; t < 12; ++t) {
      Rng rng(Rng::derive(0xFACEu, t));
      m = cone::project_to_dual_slice(v, p.coords(), rng.gaussian(poly.dim() + 1));
      if (m.norm() > 1e-10) starts.push_back(m / m.norm());
    }
  }
  if (starts.empty()) {
    throw Error(ErrorCode::NotOnBoundary,
                "no supporting hemisphere through p");
  }

  Eigen::VectorXd best_k = starts[0];
  double best_score = score(starts[0]);
  for (const auto& k0 : starts) {
    // Projected subgradient ascent of the containment margin over the
    // normal cone.
    Eigen::VectorXd k = k0;
    double cur = score(k);
    double eta = 0.3;
    for (int it = 0; it < 160 && eta > 1e-12; ++it) {
      const UnitPoint second = UnitPoint::normalized(forced_second(k).coords());
      Eigen::VectorXd heights = v.transpose() * second.coords();
      Eigen::Index jmin;
      heights.minCoeff(&jmin);
      Eigen::VectorXd grad = -cw * v.col(jmin);
      grad -= grad.dot(k) * k;
      grad -= grad.dot(p.coords()) * p.coords();
      Eigen::VectorXd trial = k + eta * grad;
      Eigen::VectorXd projected = cone::project_to_dual_slice(v, p.coords(), trial);
      if (projected.norm() < 1e-12) {
        eta *= 0.5;
        continue;
      }
      projected /= projected.norm();
      const double s = score(projected);
      if (s > cur + 1e-16) {
        k = projected;
        cur = s;
        eta = std::min(eta * 1.3, 1.0);
      } else {
        eta *= 0.5;
      }
    }
    if (cur > best_score) {
      best_score = cur;
      best_k = k;
    }
  }
  if (best_score < -margin_tol) {
    throw Error(ErrorCode::CenterConditionFailed,
                "no supporting hemisphere at p yields a containing lune of "
                "the requested thickness");
  }
  // Remove the solver's residual p-component so that p is the bounding
  // center of the returned lune to machine precision.
  best_k -= best_k.dot(p.coords()) * p.coords();
  best_k /= best_k.norm();
  return make_lune(Hemisphere(UnitPoint::normalized(best_k)),
                   Hemisphere(forced_second(best_k)));
}

}  // namespace spherewidth
