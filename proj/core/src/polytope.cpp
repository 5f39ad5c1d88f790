#include "spherewidth/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "spherewidth/rng.hpp"

namespace spherewidth {

namespace {

// Stable dedup at chordal tolerance tol: first occurrence wins. Window
// search on the first coordinate keeps this near-linear.
std::vector<int> dedup_indices(const Eigen::MatrixXd& pts, double tol) {
  std::vector<int> keep;
  std::multimap<double, int> by_x0;
  for (int j = 0; j < pts.cols(); ++j) {
    const double x0 = pts(0, j);
    auto lo = by_x0.lower_bound(x0 - tol);
    auto hi = by_x0.upper_bound(x0 + tol);
    bool dup = false;
    for (auto it = lo; it != hi; ++it) {
      if ((pts.col(j) - pts.col(it->second)).norm() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      keep.push_back(j);
      by_x0.emplace(x0, j);
    }
  }
  return keep;
}

// Ordered hull of an S^2 body via the gnomonic chart at a direction with
// strictly positive heights over all vertices (geodesics map to lines).
std::vector<int> hull_order_s2(const Eigen::MatrixXd& v,
                               const Eigen::VectorXd& chart_center) {
  const int n = static_cast<int>(v.cols());
  Eigen::MatrixXd basis(3, 2);
  {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(chart_center);
    basis = Eigen::MatrixXd(qr.householderQ()).rightCols(2);
  }
  std::vector<std::array<double, 2>> pl(n);
  for (int j = 0; j < n; ++j) {
    const double h = chart_center.dot(v.col(j));
    const Eigen::Vector3d p = v.col(j) / h;
    pl[j] = {basis.col(0).dot(p), basis.col(1).dot(p)};
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pl[a][0] != pl[b][0]) return pl[a][0] < pl[b][0];
    return pl[a][1] < pl[b][1];
  });
  auto cross = [&](int o, int a, int b) {
    return (pl[a][0] - pl[o][0]) * (pl[b][1] - pl[o][1]) -
           (pl[a][1] - pl[o][1]) * (pl[b][0] - pl[o][0]);
  };
  std::vector<int> hull;
  const std::vector<int> reversed(idx.rbegin(), idx.rend());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (int j : pass == 0 ? idx : reversed) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull.back(), j) <= 0.0) {
        hull.pop_back();
      }
      hull.push_back(j);
    }
    hull.pop_back();
  }
  return hull;
}

// Unit vector orthogonal to three vectors in R^4 (Hodge dual expansion).
Eigen::Vector4d orthogonal4(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                            const Eigen::Vector4d& c) {
  Eigen::Vector4d out;
  Eigen::Matrix3d m;
  double sign = 1.0;
  for (int i = 0; i < 4; ++i) {
    int col = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      m(0, col) = a[j];
      m(1, col) = b[j];
      m(2, col) = c[j];
      ++col;
    }
    out[i] = sign * m.determinant();
    sign = -sign;
  }
  return out;
}

constexpr int kFaceBudget = 200000;  // max vertex subsets enumerated

std::optional<DualFaces> compute_dual_faces(const Eigen::MatrixXd& v, int dim,
                                            const Eigen::VectorXd& dual_anchor) {
  const int n = static_cast<int>(v.cols());
  DualFaces faces;
  if (dim == 2) {
    std::vector<int> hull = hull_order_s2(v, dual_anchor);
    const int h = static_cast<int>(hull.size());
    if (h < 3) return std::nullopt;
    faces.rays.resize(3, h);
    faces.edge_vertex.resize(h);
    for (int i = 0; i < h; ++i) {
      const Eigen::Vector3d a = v.col(hull[i]);
      const Eigen::Vector3d b = v.col(hull[(i + 1) % h]);
      Eigen::Vector3d r = a.cross(b);
      const double nr = r.norm();
      if (nr < 1e-14) return std::nullopt;
      r /= nr;
      if (r.dot(dual_anchor) < 0.0) r = -r;  // orientation toward the region
      faces.rays.col(i) = r;
      // The edge from ray i-1 to ray i lies on the circle orthogonal to
      // hull vertex i; record per-ray leading vertex instead.
      faces.edge_vertex[i] = hull[i];
    }
    // Feasibility: convexity of the hull makes all rays valid, but guard
    // against numerically reflex inputs.
    for (int i = 0; i < h; ++i) {
      if ((v.transpose() * faces.rays.col(i)).minCoeff() < -1e-9) {
        return std::nullopt;
      }
    }
    return faces;
  }
  if (dim == 3) {
    const double triples = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
    if (triples > kFaceBudget) return std::nullopt;
    std::vector<Eigen::Vector4d> rays;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          Eigen::Vector4d r = orthogonal4(v.col(i), v.col(j), v.col(k));
          const double nr = r.norm();
          if (nr < 1e-10) continue;
          r /= nr;
          for (int s = 0; s < 2; ++s, r = -r) {
            if ((v.transpose() * r).minCoeff() >= -1e-10) {
              bool seen = false;
              for (const auto& q : rays) {
                if (q.dot(r) > 1.0 - 1e-12) {
                  seen = true;
                  break;
                }
              }
              if (!seen) rays.push_back(r);
              break;
            }
          }
        }
      }
    }
    if (rays.empty()) return std::nullopt;
    faces.rays.resize(4, static_cast<Eigen::Index>(rays.size()));
    faces.ray_active.resize(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      faces.rays.col(static_cast<Eigen::Index>(i)) = rays[i];
      Eigen::VectorXd heights = v.transpose() * rays[i];
      for (int j = 0; j < n; ++j) {
        if (std::abs(heights[j]) <= 1e-9) faces.ray_active[i].push_back(j);
      }
    }
    return faces;
  }
  return std::nullopt;
}

}  // namespace

PolytopeBody PolytopeBody::from_points(int dim,
                                       const std::vector<UnitPoint>& points) {
  if (points.empty()) {
    throw Error(ErrorCode::TooFewPoints, "need at least one point");
  }
  if (dim < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "bodies live on S^d, d >= 2");
  }
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point on S^" + std::to_string(p.dim()) + ", body on S^" +
                      std::to_string(dim));
    }
  }
  Eigen::MatrixXd raw(dim + 1, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    raw.col(static_cast<Eigen::Index>(j)) = points[j].coords();
  }
  const std::vector<int> keep = dedup_indices(raw, kGeoTol);
  Eigen::MatrixXd v(dim + 1, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    v.col(static_cast<Eigen::Index>(j)) = raw.col(keep[j]);
  }
  const int n = static_cast<int>(v.cols());

  // Open-hemisphere certificate: the min-norm point of the vertex hull
  // yields the max-margin direction. A margin above kGeoTol also excludes
  // antipodal pairs at that tolerance.
  const cone::MinNorm mnp = cone::min_norm_point(v);
  Eigen::VectorXd anchor_vec;
  double margin = 0.0;
  if (mnp.norm > kGeoTol) {
    anchor_vec = mnp.point / mnp.norm;
    margin = (v.transpose() * anchor_vec).minCoeff();
  }
  if (margin <= kGeoTol) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if ((v.col(i) + v.col(j)).norm() <= kGeoTol) {
          throw Error(ErrorCode::AntipodalPair,
                      "vertices " + std::to_string(i) + " and " +
                          std::to_string(j) + " are antipodal");
        }
      }
    }
    throw Error(ErrorCode::NotInOpenHemisphere,
                "no direction has positive height over all vertices");
  }

  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(v.transpose());
    const double smax = svd.singularValues()[0];
    const double smin = svd.singularValues()[svd.singularValues().size() - 1];
    if (svd.singularValues().size() < dim + 1 || smin <= 1e-9 * smax) {
      throw Error(ErrorCode::NotFullDimensional,
                  "vertex span does not fill R^" + std::to_string(dim + 1));
    }
  }

  PolytopeBody body;
  body.dim_ = dim;
  body.vertices_ = std::move(v);
  body.inner_point_ = UnitPoint::normalized(body.vertices_.rowwise().sum());
  body.dual_anchor_ = UnitPoint(anchor_vec);
  body.dual_anchor_margin_ = margin;
  body.dual_faces_ =
      compute_dual_faces(body.vertices_, dim, body.dual_anchor_.coords());
  return body;
}

std::vector<UnitPoint> PolytopeBody::vertex_list() const {
  std::vector<UnitPoint> out;
  out.reserve(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) out.push_back(vertex(i));
  return out;
}

double PolytopeBody::support_margin(const UnitPoint& m) const {
  if (m.dim() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "direction dimension mismatch");
  }
  return (vertices_.transpose() * m.coords()).minCoeff();
}

bool PolytopeBody::contains(const UnitPoint& x, double tol) const {
  if (x.dim() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  }
  return cone::project_to_cone(vertices_, x.coords()).residual <= tol;
}

double PolytopeBody::containment_violation(const UnitPoint& x) const {
  const auto proj = cone::project_to_cone(vertices_, x.coords());
  if (proj.residual <= kConeTol) return 0.0;
  const double pn = proj.point.norm();
  if (pn < 1e-12) return kHalfPi;
  return std::acos(std::clamp(x.coords().dot(proj.point / pn), -1.0, 1.0));
}

Hemisphere PolytopeBody::separate(const UnitPoint& x) const {
  const auto proj = cone::project_to_cone(vertices_, x.coords());
  if (proj.residual <= kGeoTol) {
    throw Error(ErrorCode::PointIsInside, "no separating hemisphere exists");
  }
  // x - projection is nonpositive on every generator and positive on x.
  const Eigen::VectorXd r = x.coords() - proj.point;
  return Hemisphere(UnitPoint::normalized(-r));
}

std::vector<int> PolytopeBody::extreme_indices() const {
  const int n = vertex_count();
  std::vector<int> out;
  Eigen::MatrixXd others(dim_ + 1, n - 1);
  for (int i = 0; i < n; ++i) {
    int col = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.col(col++) = vertices_.col(j);
    }
    if (cone::project_to_cone(others, vertices_.col(i)).residual > kGeoTol) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<UnitPoint> PolytopeBody::extreme_points() const {
  std::vector<UnitPoint> out;
  for (int i : extreme_indices()) out.push_back(vertex(i));
  return out;
}

namespace {

// Caratheodory decomposition by the inductive recursion: walk the arc from
// an extreme point through x to the boundary, identify the support face
// from a separating direction just outside, and recurse on that face in its
// own span. Falls back to the basic nonnegative solution over the extreme
// points (same size bound) if the recursion degrades numerically.
struct CaraLevel {
  Eigen::MatrixXd verts;     // k x m, unit columns, spanning R^k
  std::vector<int> ids;      // original vertex indices
};

bool cara_recurse(const CaraLevel& level, const Eigen::VectorXd& x,
                  std::vector<int>& out, int depth) {
  const int m = static_cast<int>(level.verts.cols());
  const Eigen::Index k = level.verts.rows();
  if (depth > static_cast<int>(k) + 2) return false;
  for (int j = 0; j < m; ++j) {
    if ((level.verts.col(j) - x).norm() <= 1e-9) {
      out.push_back(level.ids[j]);
      return true;
    }
  }
  if (k <= 1 || m == 1) return false;

  // Extreme columns at this level.
  std::vector<int> ext;
  {
    Eigen::MatrixXd others(k, m - 1);
    for (int i = 0; i < m; ++i) {
      int col = 0;
      for (int j = 0; j < m; ++j) {
        if (j != i) others.col(col++) = level.verts.col(j);
      }
      if (m == 1 ||
          cone::project_to_cone(others, level.verts.col(i)).residual > 1e-9) {
        ext.push_back(i);
      }
    }
  }
  if (ext.empty()) return false;

  // Boundary probe at x: a nonzero direction of D cap x-perp supports here.
  // A +- basis sweep cannot miss a nontrivial normal cone.
  auto boundary_direction = [&](const Eigen::VectorXd& at) -> Eigen::VectorXd {
    Eigen::VectorXd best = Eigen::VectorXd::Zero(k);
    for (Eigen::Index t = 0; t < k; ++t) {
      for (double sign : {1.0, -1.0}) {
        const Eigen::VectorXd cand = cone::project_to_dual_slice(
            level.verts, at, sign * Eigen::VectorXd::Unit(k, t));
        if (cand.norm() > best.norm()) best = cand;
      }
    }
    return best;
  };

  Eigen::VectorXd f = x;
  bool x_on_boundary = false;
  {
    Eigen::VectorXd mdir = boundary_direction(x);
    x_on_boundary = mdir.norm() > 1e-7;
  }

  int e_idx = -1;
  Eigen::VectorXd sep;
  if (x_on_boundary) {
    sep = boundary_direction(x);
  } else {
    // Interior: pick the extreme point farthest from x and walk past x to
    // the exit of the arc.
    double best_d = -2.0;
    for (int j : ext) {
      const double c = level.verts.col(j).dot(x);
      if (-c > best_d && (level.verts.col(j) - x).norm() > 1e-9) {
        best_d = -c;
        e_idx = j;
      }
    }
    if (e_idx < 0) return false;
    const Eigen::VectorXd e = level.verts.col(e_idx);
    Eigen::VectorXd tan = x - e.dot(x) * e;
    if (tan.norm() < 1e-12) return false;
    tan /= tan.norm();
    const double beta_x = std::acos(std::clamp(e.dot(x), -1.0, 1.0));
    auto inside = [&](double beta) {
      Eigen::VectorXd p = std::cos(beta) * e + std::sin(beta) * tan;
      return cone::project_to_cone(level.verts, p).residual <= 1e-11;
    };
    double lo = beta_x, hi = beta_x;
    double step = 0.1;
    while (hi < kPi - 1e-6 && inside(std::min(hi + step, kPi - 1e-6))) {
      hi = std::min(hi + step, kPi - 1e-6);
      step *= 2.0;
    }
    hi = std::min(hi + step, kPi - 1e-6);
    if (inside(hi)) return false;  // never exits: degenerate
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
    }
    f = (std::cos(lo) * e + std::sin(lo) * tan).normalized();
    const Eigen::VectorXd f_out = (std::cos(hi) * e + std::sin(hi) * tan).normalized();
    const auto proj_out = cone::project_to_cone(level.verts, f_out);
    if (proj_out.residual > 1e-16) {
      sep = f_out - proj_out.point;  // supporting direction at the exit
    } else {
      sep = boundary_direction(f);
    }
  }
  if (sep.norm() < 1e-14) return false;
  sep /= sep.norm();

  // Support face: vertices on the boundary of H(sep).
  std::vector<int> face;
  Eigen::VectorXd heights = level.verts.transpose() * sep;
  for (int j = 0; j < m; ++j) {
    if (std::abs(heights[j]) <= 1e-7) face.push_back(j);
  }
  if (face.empty() || static_cast<int>(face.size()) == m) return false;

  // Project the face (and f) into its own span and recurse.
  Eigen::MatrixXd fv(k, face.size());
  for (std::size_t j = 0; j < face.size(); ++j) fv.col(j) = level.verts.col(face[j]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(fv, Eigen::ComputeThinU);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > 1e-9 * svd.singularValues()[0]) ++rank;
  }
  if (rank == 0 || rank >= static_cast<int>(k)) return false;
  const Eigen::MatrixXd basis = svd.matrixU().leftCols(rank);
  CaraLevel next;
  next.verts.resize(rank, face.size());
  for (std::size_t j = 0; j < face.size(); ++j) {
    Eigen::VectorXd c = basis.transpose() * fv.col(j);
    const double nc = c.norm();
    if (nc < 1e-9) return false;
    next.verts.col(j) = c / nc;
    next.ids.push_back(level.ids[face[j]]);
  }
  Eigen::VectorXd fl = basis.transpose() * f;
  if (fl.norm() < 1e-9) return false;
  fl /= fl.norm();

  if (!cara_recurse(next, fl, out, depth + 1)) return false;
  if (!x_on_boundary) out.push_back(level.ids[e_idx]);
  return true;
}

}  // namespace

std::vector<UnitPoint> PolytopeBody::caratheodory(const UnitPoint& x) const {
  if (x.dim() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  }
  if (!contains(x)) {
    throw Error(ErrorCode::PointIsOutside, "point is outside the body");
  }
  const std::vector<int> ext = extreme_indices();
  Eigen::MatrixXd extv(dim_ + 1, ext.size());
  for (std::size_t j = 0; j < ext.size(); ++j) extv.col(j) = vertices_.col(ext[j]);

  std::vector<int> chosen;
  CaraLevel top;
  top.verts = extv;
  top.ids.assign(ext.begin(), ext.end());
  bool ok = cara_recurse(top, x.coords(), chosen, 0);
  if (ok && static_cast<int>(chosen.size()) <= dim_ + 1) {
    Eigen::MatrixXd sub(dim_ + 1, chosen.size());
    for (std::size_t j = 0; j < chosen.size(); ++j) sub.col(j) = vertices_.col(chosen[j]);
    ok = cone::project_to_cone(sub, x.coords()).residual <= 1e-10;
  } else {
    ok = false;
  }
  if (!ok) {
    // Basic nonnegative solution over the extreme points: its support is
    // linearly independent, hence at most d+1 members.
    const auto proj = cone::project_to_cone(extv, x.coords());
    chosen.clear();
    for (int s : proj.support) chosen.push_back(ext[static_cast<std::size_t>(s)]);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<UnitPoint> out;
  for (int idx : chosen) out.push_back(vertex(idx));
  return out;
}

}  // namespace spherewidth
