#pragma once

#include <string>
#include <vector>

#include "spherewidth/constants.hpp"

#include <cstdint>

namespace spherewidth {

struct TrialFailure {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;   // per-trial derived seed; replaying it reproduces
  double residual = 0.0;    // the residual bit-for-bit
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int trials = 0;
  int passes = 0;
  std::vector<TrialFailure> failures;
  double wall_seconds = 0.0;
};

// Named property suites. Each executes `trials` deterministic instances at
// tolerance tol; trials run in parallel up to SPHEREWIDTH_THREADS with
// pre-generated per-trial seeds, results ordered by trial index.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      double tol);

// Re-runs a single trial of the suite and returns its residual (replay).
double replay_trial(const std::string& name, std::uint64_t trial_seed,
                    double tol);

// wall_seconds is emitted only when with_meta is set, so reports are
// byte-identical across runs.
std::string suite_result_to_json(const SuiteResult& result, bool with_meta);

}  // namespace spherewidth
