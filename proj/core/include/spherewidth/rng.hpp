#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Core>

#include "spherewidth/constants.hpp"

namespace spherewidth {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Counter-based generator: every draw is a pure function of (seed, counter),
// so independent consumers can sample disjoint deterministic streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(detail::splitmix64(seed ^ (0x6a09e667f3bcc909ULL + stream))) {}

  // Derives a child seed; used for per-trial and per-sample streams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return detail::splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  }

  std::uint64_t next_u64() {
    state_ = detail::splitmix64(state_);
    return state_;
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Marsaglia polar method; avoids trig for platform-stable streams.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  Eigen::VectorXd gaussian(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Additive low-discrepancy sequences (Kronecker / R_d with the plastic
// constant), used where coverage matters more than independence.
inline double ld_frac(double alpha, std::uint64_t index, double offset) {
  double v = offset + alpha * static_cast<double>(index % (1ULL << 52));
  return v - std::floor(v);
}

// k-dimensional R-sequence point in [0,1)^k, offset derived from seed.
inline Eigen::VectorXd ld_point(int k, std::uint64_t seed, std::uint64_t index) {
  // gamma_k is the unique real root of x^{k+1} = x + 1.
  double g = 1.5;
  for (int it = 0; it < 40; ++it) g = std::pow(1.0 + g, 1.0 / (k + 1));
  Eigen::VectorXd p(k);
  double a = 1.0;
  for (int i = 0; i < k; ++i) {
    a /= g;
    const double off =
        static_cast<double>(detail::splitmix64(seed + 77 * i) >> 11) * 0x1.0p-53;
    p[i] = ld_frac(a, index, off);
  }
  return p;
}

// Low-discrepancy unit direction in R^n. n == 2 uses the golden-angle
// sequence, n == 3 an area-preserving R_2 map; beyond that a seeded
// Gaussian direction (coverage is still deterministic).
Eigen::VectorXd ld_direction(int n, std::uint64_t seed, std::uint64_t index);

}  // namespace spherewidth
