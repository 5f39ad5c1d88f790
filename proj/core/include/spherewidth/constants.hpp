#pragma once

#include <numbers>

namespace spherewidth {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Unit-vector normalization tolerance.
inline constexpr double kUnitEps = 1e-12;

// Geometric predicate tolerance (membership, supporting, dedup).
inline constexpr double kGeoTol = 1e-9;

// Internal residual tolerance for cone feasibility solves.
inline constexpr double kConeTol = 1e-12;

// Caller-visible defaults: boundary-point sampling tolerance, width
// tolerance, checker tolerance. Sampled constructors need looser values.
inline constexpr double kBoundaryTolDefault = 1e-6;
inline constexpr double kWidthTolDefault = 1e-6;
inline constexpr double kCheckerTolDefault = 1e-3;

}  // namespace spherewidth
