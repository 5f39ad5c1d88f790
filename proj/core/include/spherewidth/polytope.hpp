#pragma once

#include <optional>
#include <vector>

#include "spherewidth/cone.hpp"
#include "spherewidth/hemisphere.hpp"
#include "spherewidth/point.hpp"

namespace spherewidth {

// Face description of the dual cone D = {m : <v_i, m> >= 0}, available for
// d <= 3 while the subset enumeration stays within budget. Extreme rays of D
// are the supporting directions that touch the body along a facet.
struct DualFaces {
  Eigen::MatrixXd rays;  // (d+1) x r, unit columns
  // d == 2: rays are ordered around the region boundary; edge k joins rays
  // k and k+1 (mod r) and lies on the great circle orthogonal to the hull
  // vertex recorded here.
  std::vector<int> edge_vertex;
  // d == 3: per-ray list of vertex indices active on it.
  std::vector<std::vector<int>> ray_active;
};

// Convex body on S^d given as the cone hull of unit vertices intersected
// with the sphere. Vertices are deduplicated at construction; the body must
// avoid antipodal pairs, fit in an open hemisphere and span R^{d+1}.
class PolytopeBody {
 public:
  static PolytopeBody from_points(int dim, const std::vector<UnitPoint>& points);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.cols()); }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  UnitPoint vertex(int i) const { return UnitPoint(vertices_.col(i)); }
  std::vector<UnitPoint> vertex_list() const;

  // A strictly interior point of the body (normalized vertex sum).
  const UnitPoint& inner_point() const { return inner_point_; }

  // Strictly interior point of the dual region, with its margin.
  const UnitPoint& dual_anchor() const { return dual_anchor_; }
  double dual_anchor_margin() const { return dual_anchor_margin_; }

  // min over vertices of <m, v>; >= 0 iff H(m) contains the body,
  // ~0 iff H(m) supports it.
  double support_margin(const UnitPoint& m) const;

  bool contains(const UnitPoint& x, double tol = kGeoTol) const;

  // Angular distance from x to the body; 0 when inside.
  double containment_violation(const UnitPoint& x) const;

  // Hemisphere containing the body with x strictly outside. Throws
  // PointIsInside when contains(x) holds.
  Hemisphere separate(const UnitPoint& x) const;

  // Indices of vertices not contained in the hull of the others.
  std::vector<int> extreme_indices() const;
  std::vector<UnitPoint> extreme_points() const;

  // At most d+1 extreme points whose hull contains x (throws PointIsOutside).
  std::vector<UnitPoint> caratheodory(const UnitPoint& x) const;

  const std::optional<DualFaces>& dual_faces() const { return dual_faces_; }

 private:
  PolytopeBody() = default;

  int dim_ = 0;
  Eigen::MatrixXd vertices_;  // (d+1) x n
  UnitPoint inner_point_{Eigen::Vector3d(1, 0, 0)};
  UnitPoint dual_anchor_{Eigen::Vector3d(1, 0, 0)};
  double dual_anchor_margin_ = 0.0;
  std::optional<DualFaces> dual_faces_;
};

}  // namespace spherewidth
