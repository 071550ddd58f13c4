#include <benchmark/benchmark.h>

#include <cmath>

#include "xychain/correlators.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/oracle.hpp"
#include "xychain/quadrature.hpp"
#include "xychain/rdm.hpp"

namespace {

xychain::ModelParams make_params(double a, double t) {
  xychain::ModelParams p;
  p.gamma = 0.5;
  p.field_a = a;
  p.time_t = t;
  p.temperature = xychain::Temperature::zero();
  return p;
}

void BM_QuadratureOscillatory(benchmark::State& state) {
  const double t = double(state.range(0));
  for (auto _ : state) {
    const xychain::QuadResult r = xychain::integrate(
        [t](double phi) { return std::cos(2.0 * t * std::sin(phi)); },
        xychain::kDefaultAbsTol, 2.0 * t);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_QuadratureOscillatory)->Arg(1)->Arg(10)->Arg(100);

void BM_CorrelatorSetPoint(benchmark::State& state) {
  const xychain::ModelParams p = make_params(0.5, double(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xychain::correlator_set(p));
  }
}
BENCHMARK(BM_CorrelatorSetPoint)->Arg(1)->Arg(10);

void BM_FullPipelinePoint(benchmark::State& state) {
  const xychain::ModelParams p = make_params(0.5, 1.0);
  for (auto _ : state) {
    const xychain::CorrelatorSet set = xychain::correlator_set(p);
    const xychain::EntanglementResult ent =
        xychain::negativity(xychain::two_site_rdm(set));
    benchmark::DoNotOptimize(ent.log_negativity);
  }
}
BENCHMARK(BM_FullPipelinePoint);

void BM_FreeFermionChain(benchmark::State& state) {
  const xychain::ModelParams p = make_params(0.5, 1.0);
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xychain::free_fermion_observables(n, p));
  }
}
BENCHMARK(BM_FreeFermionChain)->Arg(256)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
