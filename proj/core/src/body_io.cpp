#include "spherewidth/body_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spherewidth {

namespace {

using nlohmann::json;

json point_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd point_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) {
    throw Error(ErrorCode::SchemaError, where + ": expected a number array");
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw Error(ErrorCode::SchemaError,
                  where + "/" + std::to_string(i) + ": expected a number");
    }
    v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return v;
}

// Files written by this library carry unit vectors bit-exactly; keep their
// bits. Hand-written files get one renormalization of slack.
UnitPoint unit_from_json(const json& arr, const std::string& where) {
  const Eigen::VectorXd v = point_from_json(arr, where);
  const double n = v.norm();
  if (std::abs(n - 1.0) <= kUnitEps) return UnitPoint(v);
  if (std::abs(n - 1.0) <= 1e-6) return UnitPoint::normalized(v);
  throw Error(ErrorCode::SchemaError, where + ": not a unit vector");
}

json spec_to_json_obj(const ConstructorSpec& spec) {
  json j;
  j["kind"] = spec.kind;
  j["dim"] = spec.dim;
  j["seed"] = spec.seed;
  json params = json::object();
  if (spec.kind == "ball") {
    params["center"] = spec.center;
    params["rho"] = spec.rho;
  } else if (spec.kind == "reuleaux") {
    params["n"] = spec.n;
    params["w"] = spec.w;
    params["samples"] = spec.samples;
  } else if (spec.kind == "example_s3") {
    params["kappa"] = spec.kappa;
    params["sigma"] = spec.sigma;
    params["samples"] = spec.samples;
  } else if (spec.kind == "random") {
    params["n_points"] = spec.n_points;
    params["spread"] = spec.spread;
  } else if (spec.kind == "perturb") {
    params["eps"] = spec.eps;
    if (spec.base) params["base"] = spec_to_json_obj(*spec.base);
  } else if (spec.kind == "ball_intersection") {
    params["n"] = spec.n;
    params["w"] = spec.w;
  }
  j["params"] = params;
  return j;
}

template <typename T>
T require_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::SchemaError, where + "/" + key + ": missing");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::SchemaError, where + "/" + key + ": wrong type");
  }
}

ConstructorSpec spec_from_json_obj(const json& j, const std::string& where) {
  ConstructorSpec spec;
  spec.kind = require_field<std::string>(j, "kind", where);
  spec.dim = require_field<int>(j, "dim", where);
  if (j.contains("seed")) spec.seed = require_field<std::uint64_t>(j, "seed", where);
  const json params = j.contains("params") ? j.at("params") : json::object();
  const std::string pw = where + "/params";
  if (spec.kind == "ball") {
    spec.center = require_field<std::vector<double>>(params, "center", pw);
    spec.rho = require_field<double>(params, "rho", pw);
  } else if (spec.kind == "reuleaux") {
    spec.n = require_field<int>(params, "n", pw);
    spec.w = require_field<double>(params, "w", pw);
    spec.samples = require_field<int>(params, "samples", pw);
  } else if (spec.kind == "example_s3") {
    spec.kappa = require_field<double>(params, "kappa", pw);
    spec.sigma = require_field<double>(params, "sigma", pw);
    spec.samples = require_field<int>(params, "samples", pw);
  } else if (spec.kind == "random") {
    spec.n_points = require_field<int>(params, "n_points", pw);
    spec.spread = require_field<double>(params, "spread", pw);
  } else if (spec.kind == "perturb") {
    spec.eps = require_field<double>(params, "eps", pw);
    if (params.contains("base")) {
      spec.base = std::make_shared<ConstructorSpec>(
          spec_from_json_obj(params.at("base"), pw + "/base"));
    }
  } else if (spec.kind == "ball_intersection") {
    spec.n = require_field<int>(params, "n", pw);
    spec.w = require_field<double>(params, "w", pw);
  } else if (spec.kind != "orthant") {
    throw Error(ErrorCode::SchemaError,
                where + "/kind: unknown constructor kind " + spec.kind);
  }
  return spec;
}

json witness_to_json(const std::optional<ConstancyWitness>& w) {
  if (!w) return nullptr;
  json j;
  j["where"] = point_to_json(w->where.coords());
  j["value"] = w->value;
  j["converged"] = w->converged;
  return j;
}

}  // namespace

std::string spec_to_json(const ConstructorSpec& spec) {
  return spec_to_json_obj(spec).dump();
}

ConstructorSpec spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("parse failure: ") + e.what());
  }
  return spec_from_json_obj(j, "");
}

std::string body_to_json(const SphericalBody& body) {
  json j;
  j["format_version"] = 1;
  j["dim"] = body.dim();
  if (body.is_polytope()) {
    j["kind"] = "polytope";
    json verts = json::array();
    const Eigen::MatrixXd& v = body.polytope().vertices();
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      verts.push_back(point_to_json(v.col(c)));
    }
    j["vertices"] = verts;
  } else {
    j["kind"] = "ball";
    j["center"] = point_to_json(body.ball().center().coords());
    j["radius"] = body.ball().radius().radians();
  }
  if (body.provenance()) j["constructor"] = spec_to_json_obj(*body.provenance());
  return j.dump();
}

SphericalBody body_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("parse failure: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::SchemaError, ": expected an object");
  }
  const int version = require_field<int>(j, "format_version", "");
  if (version != 1) {
    throw Error(ErrorCode::VersionMismatch,
                "format_version " + std::to_string(version) + " not supported");
  }
  const int dim = require_field<int>(j, "dim", "");
  const std::string kind = require_field<std::string>(j, "kind", "");

  SphericalBody body = [&] {
    if (kind == "polytope") {
      if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw Error(ErrorCode::SchemaError, "/vertices: missing or not an array");
      }
      std::vector<UnitPoint> pts;
      const json& verts = j.at("vertices");
      for (std::size_t i = 0; i < verts.size(); ++i) {
        pts.push_back(unit_from_json(verts[i], "/vertices/" + std::to_string(i)));
      }
      return SphericalBody::from_polytope(PolytopeBody::from_points(dim, pts));
    }
    if (kind == "ball") {
      const UnitPoint c = unit_from_json(
          j.contains("center") ? j.at("center") : json(), "/center");
      const double r = require_field<double>(j, "radius", "");
      return SphericalBody::from_ball(BallBody(c, Angle(r)));
    }
    throw Error(ErrorCode::SchemaError, "/kind: expected polytope or ball");
  }();

  if (j.contains("constructor")) {
    auto spec = std::make_shared<ConstructorSpec>(
        spec_from_json_obj(j.at("constructor"), "/constructor"));
    // Rebuilding from the spec restores exact boundary geometry.
    try {
      SphericalBody rebuilt = build_body(*spec);
      if (rebuilt.boundary() != nullptr) {
        body = body.with_boundary(rebuilt.boundary_ptr());
      }
    } catch (const Error&) {
      // Keep the raw geometry when the spec no longer rebuilds.
    }
    body = body.with_provenance(spec);
  }
  return body;
}

SphericalBody read_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return body_from_json(buf.str());
}

void write_body(const SphericalBody& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  }
  out << body_to_json(body) << "\n";
}

std::string width_report_to_json(const WidthReport& report) {
  json j;
  j["value"] = report.value.radians();
  j["witness_m"] = point_to_json(report.witness.coords());
  json lune;
  lune["first_center"] = point_to_json(report.lune.first().center().coords());
  lune["second_center"] = point_to_json(report.lune.second().center().coords());
  lune["thickness"] = report.lune.thickness().radians();
  lune["first_face_center"] =
      point_to_json(report.lune.first_face_center().coords());
  lune["second_face_center"] =
      point_to_json(report.lune.second_face_center().coords());
  j["lune"] = lune;
  j["converged"] = report.converged;
  j["residual"] = report.residual;
  return j.dump();
}

std::string diameter_report_to_json(const DiameterReport& report) {
  json j;
  j["value"] = report.value.radians();
  j["p"] = point_to_json(report.p.coords());
  j["q"] = point_to_json(report.q.coords());
  return j.dump();
}

std::string constancy_report_to_json(const ConstancyReport& report) {
  json j;
  j["mode"] = report.mode == ConstancyReport::Mode::Width ? "width" : "diameter";
  j["w_min"] = report.w_min.radians();
  j["w_max"] = report.w_max.radians();
  j["spread"] = report.spread;
  j["samples"] = report.samples;
  j["pass"] = report.pass;
  j["non_converged"] = report.non_converged;
  j["witness_min"] = witness_to_json(report.min_witness);
  j["witness_max"] = witness_to_json(report.max_witness);
  return j.dump();
}

}  // namespace spherewidth
