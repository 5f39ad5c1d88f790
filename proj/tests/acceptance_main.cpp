// Acceptance suite: every release criterion runs at its pinned tolerance
// and prints one pass/fail line. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spherewidth/body_io.hpp"
#include "spherewidth/checkers.hpp"
#include "spherewidth/constructors.hpp"
#include "spherewidth/dual_region.hpp"
#include "spherewidth/lune.hpp"
#include "spherewidth/search.hpp"
#include "spherewidth/suites.hpp"
#include "spherewidth/width.hpp"

using namespace spherewidth;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int num, const char* name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("criterion %2d %-28s [%s] %s (%.2fs)\n", num, name,
              pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

UnitPoint rand_point(Rng& rng, int n) {
  Eigen::VectorXd v = rng.gaussian(n);
  while (v.norm() < 1e-8) v = rng.gaussian(n);
  return UnitPoint::normalized(v);
}

// 1. Lune thickness consistency: closed form vs corner angle, 1e4 lunes on
//    S^2, S^3, S^4, within 1e-9, under 5 s.
void criterion1() {
  Timer timer;
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    Rng rng(Rng::derive(0xC1, trial));
    const int d = 2 + trial % 3;
    const UnitPoint g = rand_point(rng, d + 1);
    const Eigen::MatrixXd tb = tangent_basis(g);
    Eigen::VectorXd u = tb * rng.gaussian(d);
    u /= u.norm();
    const Lune lune = make_lune(
        Hemisphere(g), Hemisphere(walk(g, u, rng.uniform(1e-3, kPi - 1e-3))));
    for (int c = 0; c < 3; ++c) {
      const UnitPoint corner = lune.sample_corner(trial, c);
      worst = std::max(worst, std::abs(corner_angle(lune, corner).radians() -
                                       lune.thickness().radians()));
    }
  }
  const double secs = timer.seconds();
  std::ostringstream detail;
  detail << "max |corner angle - thickness| = " << worst;
  report(1, "lune-thickness-consistency", worst <= 1e-9 && secs < 5.0,
         detail.str(), secs);
}

// 2. Hull-membership bound for shifted balls: 1e4 instances within 1e-9,
//    under 5 s.
void criterion2() {
  Timer timer;
  const SuiteResult r = run_suite("lemma4", 10000, 1, 1e-9);
  const double secs = timer.seconds();
  std::ostringstream detail;
  detail << r.passes << "/" << r.trials << " instances";
  report(2, "hull-membership-bound", r.passes == r.trials && secs < 5.0,
         detail.str(), secs);
}

// 3. Width oracle equivalence: exact solver vs 1e5-sample brute force on
//    100 seeded S^2/S^3 polytopes, within 1e-4, under 60 s.
void criterion3() {
  Timer timer;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 2;
    Rng rng(Rng::derive(0xC3, trial));
    const SphericalBody body =
        random_body(d, d + 4 + static_cast<int>(rng.uniform() * 14.0),
                    Angle(rng.uniform(0.5, 1.1)), 9000 + trial);
    const DualRegion region(body);
    const UnitPoint k = region.sample_boundary(trial, 0);
    const WidthReport rep = width_at(body, k);
    const double oracle = testing::width_oracle(body, k, 100000);
    worst = std::max(worst, std::abs(rep.value.radians() - oracle));
  }
  const double secs = timer.seconds();
  std::ostringstream detail;
  detail << "max |exact - oracle| = " << worst;
  report(3, "width-oracle-equivalence", worst <= 1e-4 && secs < 60.0,
         detail.str(), secs);
}

struct NamedBody {
  std::string name;
  SphericalBody body;
  double w;
  double tol;
  int dirs;
  ConstancyReport width_report;
};

std::vector<NamedBody>& criterion_bodies() {
  static std::vector<NamedBody> bodies = [] {
    std::vector<NamedBody> out;
    out.push_back({"ball(0.5)",
                   ball_body(UnitPoint::normalized(Eigen::Vector3d(0.2, 0.1, 0.97)),
                             Angle(0.5)),
                   1.0, 1e-9, 1000, {}});
    out.push_back({"orthant(2)", orthant_body(2), kHalfPi, 1e-9, 1000, {}});
    out.push_back({"orthant(3)", orthant_body(3), kHalfPi, 1e-9, 1000, {}});
    out.push_back({"reuleaux(3,1.0)", reuleaux_odd_gon(3, Angle(1.0), 2000, 7),
                   1.0, 1e-3, 400, {}});
    out.push_back({"reuleaux(5,0.8)", reuleaux_odd_gon(5, Angle(0.8), 2000, 8),
                   0.8, 1e-3, 400, {}});
    out.push_back({"example_s3(1.0,0.35)",
                   example_s3_body(Angle(1.0), Angle(0.35), 5000, 9), 1.7,
                   5e-2, 48, {}});
    return out;
  }();
  return bodies;
}

// 4. Constant-width constructors at their pinned spreads and widths.
void criterion4() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  for (auto& e : criterion_bodies()) {
    e.width_report = check_constant_width(e.body, e.dirs, e.tol, 299);
    const double center_err =
        std::max(std::abs(e.width_report.w_min.radians() - e.w),
                 std::abs(e.width_report.w_max.radians() - e.w));
    const bool ok =
        e.width_report.pass && e.width_report.spread <= e.tol && center_err <= e.tol;
    if (!ok) pass = false;
    detail << e.name << " spread=" << e.width_report.spread << " ";
  }
  report(4, "constant-width-constructors", pass && timer.seconds() < 120.0,
         detail.str(), timer.seconds());
}

// 5. Diameter equals the constant width on every criterion-4 body.
void criterion5() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  for (const auto& e : criterion_bodies()) {
    const double diam = diameter(e.body).value.radians();
    if (std::abs(diam - e.w) > e.tol) {
      pass = false;
      detail << e.name << " |diam-w|=" << std::abs(diam - e.w) << " ";
    }
  }
  if (pass) detail << "all |diam - w| within per-constructor tolerance";
  report(5, "diameter-equals-width", pass, detail.str(), timer.seconds());
}

// 6. Touching balls inscribed at 50 boundary points of the wide S^3 body.
void criterion6() {
  Timer timer;
  const double expected = 1.7 - kHalfPi;
  bool pass = std::abs(expected - 0.129204) <= 1e-6;
  const SuiteResult r = run_suite("thm-touching-ball", 50, 3, 5e-2);
  if (r.passes != r.trials) pass = false;
  std::ostringstream detail;
  detail << r.passes << "/" << r.trials << " boundary points, radius "
         << expected;
  report(6, "inscribed-touching-ball", pass, detail.str(), timer.seconds());
}

// 7. Strict convexity holds on ball and Reuleaux below pi/2 and fails on
//    the orthant.
void criterion7() {
  Timer timer;
  const SphericalBody ball =
      ball_body(UnitPoint::normalized(Eigen::Vector3d(0.4, 0.2, 0.89)),
                Angle(0.6));
  const SphericalBody r3 = reuleaux_odd_gon(3, Angle(1.0), 2000, 7);
  const SphericalBody r5 = reuleaux_odd_gon(5, Angle(0.8), 2000, 8);
  const StrictConvexityReport a = check_strict_convexity(ball, 1000, 0.0, 11);
  const StrictConvexityReport b = check_strict_convexity(r3, 1000, 0.0, 12);
  const StrictConvexityReport c = check_strict_convexity(r5, 1000, 0.0, 13);
  const StrictConvexityReport flat =
      check_strict_convexity(orthant_body(2), 1000, 0.0, 14);
  const bool pass = a.pass && b.pass && c.pass && !flat.pass &&
                    a.min_margin > 0.0 && b.min_margin > 0.0 &&
                    c.min_margin > 0.0;
  std::ostringstream detail;
  detail << "min margins " << a.min_margin << ", " << b.min_margin << ", "
         << c.min_margin << "; orthant fails: " << (!flat.pass ? "yes" : "no");
  report(7, "strict-convexity", pass, detail.str(), timer.seconds());
}

// 8. Constant width implies constant diameter on every criterion-4 body;
//    constant diameter at w >= pi/2 implies constant width (orthant and the
//    S^3 example).
void criterion8() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  for (const auto& e : criterion_bodies()) {
    const ConstancyReport cd =
        check_constant_diameter(e.body, 100, e.tol, 301, e.tol);
    if (e.width_report.pass && !cd.pass) {
      pass = false;
      detail << e.name << ": CW without CD; ";
    }
    if (e.w >= kHalfPi - 1e-12 && cd.pass && !e.width_report.pass) {
      pass = false;
      detail << e.name << ": CD at w>=pi/2 without CW; ";
    }
  }
  if (pass) detail << "equivalence holds on all constructor bodies";
  report(8, "width-diameter-equivalence", pass, detail.str(), timer.seconds());
}

// 9. Caratheodory bound: 1e3 random instances, at most d+1 extreme points,
//    residual within 1e-9.
void criterion9() {
  Timer timer;
  const SuiteResult r = run_suite("lemma5", 1000, 5, 1e-9);
  std::ostringstream detail;
  detail << r.passes << "/" << r.trials << " instances";
  report(9, "caratheodory-bound", r.passes == r.trials, detail.str(),
         timer.seconds());
}

// 10. Diameter-orthogonal hemispheres support wide bodies and determine
//     widths above pi/2: 100 seeded bodies.
void criterion10() {
  Timer timer;
  const SuiteResult r = run_suite("lemma7", 100, 7, 1e-9);
  std::ostringstream detail;
  detail << r.passes << "/" << r.trials << " bodies";
  report(10, "diameter-orthogonal-support", r.passes == r.trials, detail.str(),
         timer.seconds());
}

// 11. Determinism: suites, checkers and search reports are byte-identical
//     across reruns; the CLI repeats byte-identically when available.
void criterion11() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;

  for (const char* name : {"lemma1", "lemma3", "lemma4", "thm-diam-eq-width"}) {
    const std::string a = suite_result_to_json(run_suite(name, 8, 21, 1e-6), false);
    const std::string b = suite_result_to_json(run_suite(name, 8, 21, 1e-6), false);
    if (a != b) {
      pass = false;
      detail << name << " differs; ";
    }
  }
  {
    const SphericalBody body = reuleaux_odd_gon(3, Angle(1.0), 500, 3);
    const std::string a =
        constancy_report_to_json(check_constant_width(body, 50, 1e-3, 5));
    const std::string b =
        constancy_report_to_json(check_constant_width(body, 50, 1e-3, 5));
    if (a != b) {
      pass = false;
      detail << "width checker differs; ";
    }
  }
  {
    const std::string a = search_records_to_json(search_gap(Angle(1.2), 6, 7));
    const std::string b = search_records_to_json(search_gap(Angle(1.2), 6, 7));
    if (a != b) {
      pass = false;
      detail << "search differs; ";
    }
  }
  if (const char* cli = std::getenv("SPHEREWIDTH_CLI")) {
    auto run_cli = [&](const std::string& out) {
      const std::string cmd = std::string(cli) +
                              " verify lemma4 --trials 40 --seed 4 --tol 1e-9 "
                              "--no-meta --out " +
                              out;
      return std::system(cmd.c_str());
    };
    const int rc1 = run_cli("acc_cli_a.json");
    const int rc2 = run_cli("acc_cli_b.json");
    std::ifstream fa("acc_cli_a.json"), fb("acc_cli_b.json");
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    if (rc1 != 0 || rc2 != 0 || sa.str().empty() || sa.str() != sb.str()) {
      pass = false;
      detail << "CLI reruns differ; ";
    }
    std::remove("acc_cli_a.json");
    std::remove("acc_cli_b.json");
  } else {
    detail << "(CLI not in env, in-process only) ";
  }
  if (pass) detail << "byte-identical reruns";
  report(11, "determinism", pass, detail.str(), timer.seconds());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
