#include <benchmark/benchmark.h>

#include "cylbif/analysis.hpp"
#include "cylbif/bifurcation.hpp"
#include "cylbif/delaunay.hpp"
#include "cylbif/pdecheck.hpp"
#include "cylbif/specfun.hpp"
#include "cylbif/spectrum.hpp"

namespace {

using namespace cylbif;

void BM_BesselJ(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 2;
  double s = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_j(nu, s));
    s = s < nu + 20 ? s + 0.37 : 0.5;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(21)->Arg(200)->Arg(2000);

void BM_BesselIRatio(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_i_ratio(3.5, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_BesselIRatio)->Arg(1)->Arg(30)->Arg(1000);

void BM_BesselZero(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(analysis::bessel_zero(nu, 1));
}
BENCHMARK(BM_BesselZero)->Arg(0)->Arg(40)->Arg(2000);

void BM_Sigma1(benchmark::State& state) {
  const auto& d = spectrum::eigen_data(static_cast<int>(state.range(0)));
  double T = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::sigma1(d, T));
    T = T < 30 ? T * 1.01 : 0.3;
  }
}
BENCHMARK(BM_Sigma1)->Arg(2)->Arg(10)->Arg(202);

void BM_Sigma1ViaOde(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::sigma1_via_ode(4, 2.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Sigma1ViaOde)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_TNu(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bifurcation::t_nu(n));
}
BENCHMARK(BM_TNu)->Arg(2)->Arg(42)->Arg(2002);

void BM_DelaunayProfile(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delaunay::delaunay_profile(0.5, samples));
}
BENCHMARK(BM_DelaunayProfile)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_FirstEigenpair(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto grid = pdecheck::MeridianGrid::cosine(2, 3.0, 1e-2, 1, m, m);
  for (auto _ : state) benchmark::DoNotOptimize(pdecheck::first_eigenpair(grid));
}
BENCHMARK(BM_FirstEigenpair)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
