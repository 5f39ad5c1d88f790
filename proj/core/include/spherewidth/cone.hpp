#pragma once

#include <vector>

#include <Eigen/Core>

#include "spherewidth/constants.hpp"

namespace spherewidth::cone {

// Result of projecting a point onto cone(generators).
struct Projection {
  Eigen::VectorXd point;      // nearest point of the cone
  Eigen::VectorXd coeffs;     // sparse nonnegative weights, |support| <= rows
  std::vector<int> support;   // generator indices with positive weight
  double residual = 0.0;      // Euclidean distance to the cone
  bool converged = true;
};

// Euclidean projection of target onto cone(columns of gens), solved as
// nonnegative least squares with an active-set method. Generators are unit
// columns of a (d+1) x n matrix.
Projection project_to_cone(const Eigen::MatrixXd& gens,
                           const Eigen::VectorXd& target);

// Projection onto the dual cone D = {m : gens^T m >= 0} via the Moreau
// decomposition: Pi_D(u) = u + Pi_cone(-u).
Eigen::VectorXd project_to_dual(const Eigen::MatrixXd& gens,
                                const Eigen::VectorXd& u);

// Projection onto D intersected with the hyperplane {m : <p, m> = 0};
// realized by projecting onto the dual of cone(gens, p, -p).
Eigen::VectorXd project_to_dual_slice(const Eigen::MatrixXd& gens,
                                      const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& u);

// Minimum-norm point of conv(columns of gens) (Wolfe's method).
struct MinNorm {
  Eigen::VectorXd point;
  Eigen::VectorXd coeffs;  // convex weights over all columns
  double norm = 0.0;
  bool converged = true;
};
MinNorm min_norm_point(const Eigen::MatrixXd& gens);

// First arc length theta > 0 at which min_i <gens_i, walk(anchor, u, theta)>
// hits zero. The anchor must satisfy gens^T anchor > 0 strictly; then every
// constraint is a sinusoid with a closed-form first root.
double radial_exit(const Eigen::VectorXd& anchor_heights,
                   const Eigen::VectorXd& tangent_heights);

inline double radial_exit(const Eigen::MatrixXd& gens,
                          const Eigen::VectorXd& anchor,
                          const Eigen::VectorXd& tangent) {
  return radial_exit(gens.transpose() * anchor, gens.transpose() * tangent);
}

}  // namespace spherewidth::cone
