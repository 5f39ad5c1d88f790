// spherewidth: widths, thicknesses, diameters and constancy checks for
// convex bodies on the sphere.
//
// Exit codes: 0 success/pass, 1 check failed, 2 usage error, 3 numerical
// non-convergence.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spherewidth/body_io.hpp"
#include "spherewidth/checkers.hpp"
#include "spherewidth/constructors.hpp"
#include "spherewidth/dual_region.hpp"
#include "spherewidth/search.hpp"
#include "spherewidth/suites.hpp"
#include "spherewidth/version.hpp"
#include "spherewidth/width.hpp"

namespace {

using namespace spherewidth;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

struct OutputOptions {
  std::string out_path;
  bool no_meta = false;
};

void emit(const std::string& payload, const OutputOptions& opts) {
  std::string text = payload;
  if (!opts.no_meta) {
    json j = json::parse(payload);
    json meta;
    meta["version"] = kVersion;
    meta["unix_time"] = static_cast<long long>(std::time(nullptr));
    j["meta"] = meta;
    text = j.dump();
  }
  if (opts.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(opts.out_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + opts.out_path);
    out << text << "\n";
  }
}

UnitPoint parse_direction(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return UnitPoint::normalized(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical convex bodies: widths, lunes and constancy checks"};
  app.require_subcommand(1);

  OutputOptions out_opts;
  app.add_option("--out", out_opts.out_path, "write the JSON report here")
      ->capture_default_str();
  app.add_flag("--no-meta", out_opts.no_meta,
               "omit version/timestamp metadata for byte-stable output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a body from a constructor");
  std::string gen_kind, gen_spec_path;
  int gen_dim = 2, gen_n = 3, gen_samples = 1000, gen_npoints = 12;
  double gen_rho = 0.5, gen_w = 1.0, gen_kappa = 1.0, gen_sigma = 0.35,
         gen_spread = 0.8, gen_eps = 0.05;
  std::uint64_t gen_seed = 0;
  std::string gen_center, gen_base;
  gen->add_option("--kind", gen_kind,
                  "ball|orthant|reuleaux|example_s3|random|perturb");
  gen->add_option("--spec", gen_spec_path, "constructor spec JSON file");
  gen->add_option("--dim", gen_dim);
  gen->add_option("--rho", gen_rho);
  gen->add_option("--center", gen_center, "comma-separated center for ball");
  gen->add_option("--n", gen_n);
  gen->add_option("--w", gen_w);
  gen->add_option("--samples", gen_samples);
  gen->add_option("--kappa", gen_kappa);
  gen->add_option("--sigma", gen_sigma);
  gen->add_option("--n-points", gen_npoints);
  gen->add_option("--spread", gen_spread);
  gen->add_option("--eps", gen_eps);
  gen->add_option("--base", gen_base, "body JSON to perturb");
  gen->add_option("--seed", gen_seed);

  // width / thickness / diameter
  auto* width_cmd = app.add_subcommand("width", "width determined by --dir");
  std::string body_path, dir_csv;
  width_cmd->add_option("--body", body_path)->required();
  width_cmd->add_option("--dir", dir_csv, "supporting hemisphere center")
      ->required();

  auto* thick_cmd = app.add_subcommand("thickness", "smallest width");
  std::string thick_body;
  int thick_starts = 32;
  std::uint64_t thick_seed = 0;
  thick_cmd->add_option("--body", thick_body)->required();
  thick_cmd->add_option("--starts", thick_starts);
  thick_cmd->add_option("--seed", thick_seed);

  auto* diam_cmd = app.add_subcommand("diameter", "max pairwise distance");
  std::string diam_body;
  diam_cmd->add_option("--body", diam_body)->required();

  // check
  auto* check_cmd =
      app.add_subcommand("check", "constant width / diameter checker");
  std::string check_body, check_mode = "width";
  int check_samples = 200;
  double check_tol = kCheckerTolDefault, check_boundary_tol = kBoundaryTolDefault;
  std::uint64_t check_seed = 0;
  check_cmd->add_option("--body", check_body)->required();
  check_cmd->add_option("--mode", check_mode, "width|diameter");
  check_cmd->add_option("--samples", check_samples);
  check_cmd->add_option("--tol", check_tol);
  check_cmd->add_option("--boundary-tol", check_boundary_tol);
  check_cmd->add_option("--seed", check_seed);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  std::string suite_name;
  int verify_trials = 100;
  double verify_tol = 1e-9;
  std::uint64_t verify_seed = 0;
  verify_cmd->add_option("suite", suite_name, "suite name")->required();
  verify_cmd->add_option("--trials", verify_trials);
  verify_cmd->add_option("--tol", verify_tol);
  verify_cmd->add_option("--seed", verify_seed);

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "hunt for constant-diameter bodies with width spread");
  double search_w = 1.2;
  int search_trials = 50;
  std::uint64_t search_seed = 0;
  search_cmd->add_option("--w", search_w)->required();
  search_cmd->add_option("--trials", search_trials);
  search_cmd->add_option("--seed", search_seed);

  // info
  auto* info_cmd = app.add_subcommand("info", "body summary");
  std::string info_body;
  int dump_boundary = 0;
  info_cmd->add_option("--body", info_body)->required();
  info_cmd->add_option("--dump-boundary", dump_boundary,
                       "also dump N boundary points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      ConstructorSpec spec;
      if (!gen_spec_path.empty()) {
        std::ifstream in(gen_spec_path);
        if (!in) throw Error(ErrorCode::IoError, "cannot open " + gen_spec_path);
        std::stringstream ss;
        ss << in.rdbuf();
        spec = spec_from_json(ss.str());
      } else {
        spec.kind = gen_kind;
        spec.dim = gen_dim;
        spec.seed = gen_seed;
        spec.rho = gen_rho;
        spec.n = gen_n;
        spec.w = gen_w;
        spec.samples = gen_samples;
        spec.kappa = gen_kappa;
        spec.sigma = gen_sigma;
        spec.n_points = gen_npoints;
        spec.spread = gen_spread;
        spec.eps = gen_eps;
        if (!gen_center.empty()) {
          const UnitPoint c = parse_direction(gen_center);
          spec.center.assign(c.coords().data(),
                             c.coords().data() + c.coords().size());
        } else if (spec.kind == "ball") {
          spec.center.assign(static_cast<std::size_t>(gen_dim) + 1, 0.0);
          spec.center[0] = 1.0;
        }
      }
      SphericalBody body = [&] {
        if (spec.kind == "perturb" && !gen_base.empty()) {
          return perturb(read_body(gen_base), Angle(spec.eps), spec.seed);
        }
        return build_body(spec);
      }();
      emit(body_to_json(body), out_opts);
      return kExitPass;
    }

    if (width_cmd->parsed()) {
      const SphericalBody body = read_body(body_path);
      const WidthReport rep = width_at(body, parse_direction(dir_csv));
      emit(width_report_to_json(rep), out_opts);
      return rep.converged ? kExitPass : kExitNotConverged;
    }

    if (thick_cmd->parsed()) {
      const SphericalBody body = read_body(thick_body);
      const WidthReport rep = thickness(body, thick_starts, thick_seed);
      emit(width_report_to_json(rep), out_opts);
      return rep.converged ? kExitPass : kExitNotConverged;
    }

    if (diam_cmd->parsed()) {
      const SphericalBody body = read_body(diam_body);
      emit(diameter_report_to_json(diameter(body)), out_opts);
      return kExitPass;
    }

    if (check_cmd->parsed()) {
      const SphericalBody body = read_body(check_body);
      ConstancyReport rep;
      if (check_mode == "width") {
        rep = check_constant_width(body, check_samples, check_tol, check_seed);
      } else if (check_mode == "diameter") {
        rep = check_constant_diameter(body, check_samples, check_tol,
                                      check_seed, check_boundary_tol);
      } else {
        std::cerr << "unknown --mode " << check_mode << "\n";
        return kExitUsage;
      }
      emit(constancy_report_to_json(rep), out_opts);
      if (rep.non_converged > 0) return kExitNotConverged;
      return rep.pass ? kExitPass : kExitCheckFailed;
    }

    if (verify_cmd->parsed()) {
      const SuiteResult r =
          run_suite(suite_name, verify_trials, verify_seed, verify_tol);
      emit(suite_result_to_json(r, !out_opts.no_meta), out_opts);
      return r.failures.empty() ? kExitPass : kExitCheckFailed;
    }

    if (search_cmd->parsed()) {
      const auto records = search_gap(Angle(search_w), search_trials, search_seed);
      emit(search_records_to_json(records), out_opts);
      return kExitPass;
    }

    if (info_cmd->parsed()) {
      const SphericalBody body = read_body(info_body);
      json j;
      j["dim"] = body.dim();
      j["kind"] = body.is_polytope() ? "polytope" : "ball";
      if (body.is_polytope()) {
        j["vertices"] = body.polytope().vertex_count();
        j["dual_anchor_margin"] = body.polytope().dual_anchor_margin();
      } else {
        j["radius"] = body.ball().radius().radians();
      }
      const DiameterReport diam = diameter(body);
      j["diameter"] = diam.value.radians();
      j["has_exact_boundary"] = body.boundary() != nullptr;
      if (dump_boundary > 0) {
        json pts = json::array();
        for (int i = 0; i < dump_boundary; ++i) {
          const UnitPoint p = boundary_sample(body, 0, i);
          json arr = json::array();
          for (Eigen::Index k = 0; k < p.coords().size(); ++k) {
            arr.push_back(p.coords()[k]);
          }
          pts.push_back(arr);
        }
        j["boundary"] = pts;
      }
      emit(j.dump(), out_opts);
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotConverged:
        return kExitNotConverged;
      case ErrorCode::SchemaError:
      case ErrorCode::VersionMismatch:
      case ErrorCode::IoError:
      case ErrorCode::UnknownSuite:
      case ErrorCode::WOutOfRange:
      case ErrorCode::NotSupporting:
        return kExitUsage;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
