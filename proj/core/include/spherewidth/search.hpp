#pragma once

#include <string>
#include <vector>

#include "spherewidth/checkers.hpp"
#include "spherewidth/constructors.hpp"

namespace spherewidth {

// One constant-diameter candidate that survived the diameter checker,
// together with the width spread it exhibited.
struct SearchRecord {
  ConstructorSpec candidate;
  ConstancyReport diam_report;
  ConstancyReport width_report;
  double gap = 0.0;  // width spread of a constant-diameter body
};

// Searches seeded perturbed ball-intersection bodies on S^2 and S^3 with
// target diameter w < pi/2, keeps those passing the constant-diameter
// checker and records their constant-width spread, sorted by descending
// gap. No assertion is made about the outcome. Throws WOutOfRange for
// w >= pi/2, where constant diameter and constant width are known to
// coincide.
std::vector<SearchRecord> search_gap(Angle w, int trials, std::uint64_t seed);

std::string search_records_to_json(const std::vector<SearchRecord>& records);

}  // namespace spherewidth
