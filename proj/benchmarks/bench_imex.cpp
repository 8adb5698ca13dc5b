#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "nldg/imex.hpp"

using namespace nldg;

namespace {

// Whole runs to a short final time; steps scale like N.
void BM_ImexBurgers(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  ProblemSpec p = make_problem(ProblemId::ex5);
  p.final_time = 0.2;
  KernelSpec ks = make_kernel(0.5, std::numbers::pi / 6);
  ImexOptions opt;
  int steps = 0;
  for (auto _ : state) {
    ImexResult r = imex_evolve(p, N, 2, PenaltyVariant::nip(), ks, opt);
    steps = r.steps;
    benchmark::DoNotOptimize(r.u.coeffs.data());
  }
  state.counters["steps"] = steps;
}
BENCHMARK(BM_ImexBurgers)->Arg(48)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_ConvectionResidual(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  SpacePtr V = make_space(build_mesh(0.0, 2 * std::numbers::pi, N, 0.5, BcMode::periodic), 2);
  DGField u = project(V, [](double x) { return std::sin(x); });
  FluxFunction F = burgers_flux();
  for (auto _ : state) benchmark::DoNotOptimize(convection_residual(u, FluxKind::lax_friedrichs, F));
}
BENCHMARK(BM_ConvectionResidual)->Arg(120)->Arg(960);

}  // namespace
