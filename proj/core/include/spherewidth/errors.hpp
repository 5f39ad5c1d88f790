#pragma once

#include <stdexcept>
#include <string>

namespace spherewidth {

enum class ErrorCode {
  DimensionMismatch,
  NotAUnitVector,
  AngleOutOfRange,
  DegenerateGeodesic,
  EqualHemispheres,
  OppositeHemispheres,
  NotACorner,
  AntipodalPair,
  NotInOpenHemisphere,
  NotFullDimensional,
  PointIsInside,
  PointIsOutside,
  NotSupporting,
  NotConverged,
  NotADiameterPair,
  WidthNotAboveHalfPi,
  NotOnBoundary,
  NoBoundarySampler,
  CenterConditionFailed,
  RadiusOutOfRange,
  DimensionTooSmall,
  EvenN,
  WidthOutOfRange,
  NoSolution,
  KappaOutOfRange,
  SigmaOutOfRange,
  TooFewPoints,
  InvariantViolation,
  UnknownSuite,
  WOutOfRange,
  SchemaError,
  VersionMismatch,
  IoError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spherewidth
