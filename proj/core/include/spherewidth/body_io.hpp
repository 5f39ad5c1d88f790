#pragma once

#include <string>

#include "spherewidth/checkers.hpp"
#include "spherewidth/constructors.hpp"
#include "spherewidth/width.hpp"

namespace spherewidth {

// Body file format, format_version 1:
//   {"format_version":1, "dim":d, "kind":"polytope", "vertices":[[...],...]}
//   {"format_version":1, "dim":d, "kind":"ball", "center":[...], "radius":r}
// plus an optional "constructor" with the originating ConstructorSpec.
// Throws SchemaError (with a JSON-pointer location) / VersionMismatch.
SphericalBody body_from_json(const std::string& text);
std::string body_to_json(const SphericalBody& body);

SphericalBody read_body(const std::string& path);
void write_body(const SphericalBody& body, const std::string& path);

ConstructorSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ConstructorSpec& spec);

std::string width_report_to_json(const WidthReport& report);
std::string diameter_report_to_json(const DiameterReport& report);
std::string constancy_report_to_json(const ConstancyReport& report);

}  // namespace spherewidth
