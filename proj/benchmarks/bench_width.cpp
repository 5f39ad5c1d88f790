#include <benchmark/benchmark.h>

#include "spherewidth/constructors.hpp"
#include "spherewidth/dual_region.hpp"
#include "spherewidth/rng.hpp"
#include "spherewidth/width.hpp"

using namespace spherewidth;

namespace {

SphericalBody bench_polytope(int d, int n) {
  return random_body(d, n, Angle(0.9), 12345);
}

void BM_Dist(benchmark::State& state) {
  Rng rng(1);
  const UnitPoint a = UnitPoint::normalized(rng.gaussian(4));
  const UnitPoint b = UnitPoint::normalized(rng.gaussian(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist(a, b).radians());
  }
}
BENCHMARK(BM_Dist);

void BM_ConeProjection(benchmark::State& state) {
  const SphericalBody body = bench_polytope(3, static_cast<int>(state.range(0)));
  const Eigen::MatrixXd& v = body.polytope().vertices();
  Rng rng(2);
  const Eigen::VectorXd u = rng.gaussian(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cone::project_to_cone(v, u).residual);
  }
}
BENCHMARK(BM_ConeProjection)->Arg(16)->Arg(256)->Arg(4096);

void BM_Contains(benchmark::State& state) {
  const SphericalBody body = bench_polytope(3, static_cast<int>(state.range(0)));
  const UnitPoint x = body.polytope().inner_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains(body, x));
  }
}
BENCHMARK(BM_Contains)->Arg(16)->Arg(1024);

void BM_WidthAtExact(benchmark::State& state) {
  const SphericalBody body = bench_polytope(static_cast<int>(state.range(0)), 24);
  const DualRegion region(body);
  const UnitPoint k = region.sample_boundary(3, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(width_at(body, k).value.radians());
  }
}
BENCHMARK(BM_WidthAtExact)->Arg(2)->Arg(3);

void BM_WidthAtIterative(benchmark::State& state) {
  const SphericalBody body =
      example_s3_body(Angle(1.0), Angle(0.35), static_cast<int>(state.range(0)), 4);
  const DualRegion region(body);
  const UnitPoint k = region.sample_boundary(5, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(width_at(body, k).value.radians());
  }
}
BENCHMARK(BM_WidthAtIterative)->Unit(benchmark::kMillisecond)->Arg(600)->Arg(2400);

void BM_Diameter(benchmark::State& state) {
  const SphericalBody body =
      reuleaux_odd_gon(5, Angle(0.8), static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diameter(body).value.radians());
  }
}
BENCHMARK(BM_Diameter)->Arg(500)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
