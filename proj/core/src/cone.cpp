#include "spherewidth/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace spherewidth::cone {

namespace {

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m,
                               const std::vector<int>& idx) {
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col(i) = m.col(idx[i]);
  return out;
}

}  // namespace

Projection project_to_cone(const Eigen::MatrixXd& gens,
                           const Eigen::VectorXd& target) {
  const Eigen::Index rows = gens.rows();
  const Eigen::Index n = gens.cols();
  Projection out;
  out.point = Eigen::VectorXd::Zero(rows);
  out.coeffs = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    out.residual = target.norm();
    return out;
  }

  // Lawson-Hanson active set. The passive set stays linearly independent,
  // so it never exceeds rows columns.
  std::vector<int> passive;
  std::vector<char> in_passive(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);  // weights on passive set
  Eigen::VectorXd residual_vec = target;
  const double scale = std::max(1.0, target.norm());
  const double grad_tol = 1e-13 * scale;

  const int max_outer = 8 * static_cast<int>(rows) + 32;
  int outer = 0;
  while (outer++ < max_outer) {
    Eigen::VectorXd w = gens.transpose() * residual_vec;
    int best = -1;
    double best_w = grad_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
        best_w = w[j];
        best = static_cast<int>(j);
      }
    }
    if (best < 0) break;
    passive.push_back(best);
    in_passive[static_cast<std::size_t>(best)] = 1;

    // Inner loop: least squares on the passive set, clipping negatives.
    int inner_guard = 0;
    while (inner_guard++ < 4 * static_cast<int>(rows) + 16) {
      Eigen::MatrixXd mp = select_columns(gens, passive);
      Eigen::VectorXd s = mp.colPivHouseholderQr().solve(target);
      bool all_pos = true;
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s[i] <= 1e-14) {
          all_pos = false;
          break;
        }
      }
      if (all_pos) {
        for (std::size_t i = 0; i < passive.size(); ++i) z[passive[i]] = s[i];
        break;
      }
      double alpha = 1.0;
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s[i] <= 1e-14) {
          const double zi = z[passive[static_cast<std::size_t>(i)]];
          const double denom = zi - s[i];
          if (denom > 0.0) alpha = std::min(alpha, zi / denom);
        }
      }
      std::vector<int> next;
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        const int j = passive[static_cast<std::size_t>(i)];
        z[j] += alpha * (s[i] - z[j]);
        if (z[j] > 1e-14) {
          next.push_back(j);
        } else {
          z[j] = 0.0;
          in_passive[static_cast<std::size_t>(j)] = 0;
        }
      }
      passive = std::move(next);
      if (passive.empty()) break;
    }

    if (passive.empty()) {
      residual_vec = target;
      continue;
    }
    Eigen::MatrixXd mp = select_columns(gens, passive);
    Eigen::VectorXd zp(passive.size());
    for (std::size_t i = 0; i < passive.size(); ++i) zp[i] = z[passive[i]];
    residual_vec = target - mp * zp;
  }

  out.converged = outer <= max_outer;
  out.support = passive;
  for (int j : passive) out.coeffs[j] = z[j];
  if (!passive.empty()) {
    Eigen::MatrixXd mp = select_columns(gens, passive);
    Eigen::VectorXd zp(passive.size());
    for (std::size_t i = 0; i < passive.size(); ++i) zp[i] = z[passive[i]];
    out.point = mp * zp;
  }
  out.residual = (target - out.point).norm();
  return out;
}

Eigen::VectorXd project_to_dual(const Eigen::MatrixXd& gens,
                                const Eigen::VectorXd& u) {
  return u + project_to_cone(gens, -u).point;
}

Eigen::VectorXd project_to_dual_slice(const Eigen::MatrixXd& gens,
                                      const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& u) {
  Eigen::MatrixXd aug(gens.rows(), gens.cols() + 2);
  aug.leftCols(gens.cols()) = gens;
  aug.col(gens.cols()) = p;
  aug.col(gens.cols() + 1) = -p;
  return project_to_dual(aug, u);
}

MinNorm min_norm_point(const Eigen::MatrixXd& gens) {
  const Eigen::Index n = gens.cols();
  const Eigen::Index rows = gens.rows();
  MinNorm out;
  out.coeffs = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    out.point = Eigen::VectorXd::Zero(rows);
    return out;
  }

  // Wolfe's method over corrals of affinely independent columns.
  std::vector<int> corral{0};
  Eigen::VectorXd alpha = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd x = gens.col(0);

  const int max_outer = 16 * static_cast<int>(rows + n) + 64;
  for (int outer = 0; outer < max_outer; ++outer) {
    // Linear minimization oracle.
    Eigen::VectorXd scores = gens.transpose() * x;
    Eigen::Index j;
    const double mn = scores.minCoeff(&j);
    if (mn >= x.squaredNorm() - 1e-14 * (1.0 + x.squaredNorm())) break;
    if (std::find(corral.begin(), corral.end(), static_cast<int>(j)) !=
        corral.end()) {
      break;  // numerical stall
    }
    corral.push_back(static_cast<int>(j));
    Eigen::VectorXd a2(corral.size());
    a2.head(alpha.size()) = alpha;
    a2[alpha.size()] = 0.0;
    alpha = a2;

    int guard = 0;
    while (guard++ < 4 * static_cast<int>(rows) + 16) {
      // Affine minimizer over the corral: bordered Gram system.
      const Eigen::Index k = static_cast<Eigen::Index>(corral.size());
      Eigen::MatrixXd s = select_columns(gens, corral);
      Eigen::MatrixXd sys(k + 1, k + 1);
      sys.topLeftCorner(k, k) = s.transpose() * s;
      sys.topRightCorner(k, 1).setOnes();
      sys.bottomLeftCorner(1, k).setOnes();
      sys(k, k) = 0.0;
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      rhs[k] = 1.0;
      Eigen::VectorXd sol = sys.fullPivLu().solve(rhs);
      Eigen::VectorXd beta = sol.head(k);

      if (beta.minCoeff() > 1e-12) {
        alpha = beta;
        x = s * alpha;
        break;
      }
      double theta = 1.0;
      for (Eigen::Index i = 0; i < k; ++i) {
        if (beta[i] <= 1e-12) {
          const double denom = alpha[i] - beta[i];
          if (denom > 0.0) theta = std::min(theta, alpha[i] / denom);
        }
      }
      alpha = alpha + theta * (beta - alpha);
      std::vector<int> next;
      std::vector<double> next_a;
      for (Eigen::Index i = 0; i < k; ++i) {
        if (alpha[i] > 1e-12) {
          next.push_back(corral[static_cast<std::size_t>(i)]);
          next_a.push_back(alpha[i]);
        }
      }
      corral = std::move(next);
      alpha = Eigen::Map<Eigen::VectorXd>(next_a.data(),
                                          static_cast<Eigen::Index>(next_a.size()));
      if (corral.empty()) {
        corral.push_back(static_cast<int>(j));
        alpha = Eigen::VectorXd::Ones(1);
      }
      Eigen::MatrixXd sc = select_columns(gens, corral);
      x = sc * alpha;
    }
  }

  out.point = x;
  out.norm = x.norm();
  for (std::size_t i = 0; i < corral.size(); ++i) out.coeffs[corral[i]] = alpha[i];
  return out;
}

double radial_exit(const Eigen::VectorXd& anchor_heights,
                   const Eigen::VectorXd& tangent_heights) {
  // Each constraint is A cos(theta) + B sin(theta) with A > 0; its first
  // positive root is atan2(B, A) + pi/2.
  double theta = kPi;
  for (Eigen::Index i = 0; i < anchor_heights.size(); ++i) {
    const double t = std::atan2(tangent_heights[i], anchor_heights[i]) + kHalfPi;
    if (t < theta) theta = t;
  }
  return theta;
}

}  // namespace spherewidth::cone
