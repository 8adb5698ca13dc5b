#include <benchmark/benchmark.h>

#include <numbers>

#include "nldg/assembly.hpp"
#include "nldg/steady.hpp"

using namespace nldg;

namespace {

// args: N, k, alpha * 10
void BM_AssembleForms(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  const double alpha = state.range(2) / 10.0, delta = std::numbers::pi / 6;
  SpacePtr V = make_space(build_mesh(0.0, std::numbers::pi, N, delta, BcMode::volume_constraint), k);
  KernelSpec ks = make_kernel(alpha, delta);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_forms(V, ks));
  state.counters["dofs"] = V->n_dof();
}
BENCHMARK(BM_AssembleForms)->Args({24, 1, 5})->Args({96, 1, 5})->Args({96, 3, 5})->Args({96, 3, 25})
    ->Unit(benchmark::kMillisecond);

void BM_SteadySolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  ProblemSpec p = make_problem(ProblemId::ex1);
  KernelSpec ks = make_kernel(0.5, std::numbers::pi / 6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_steady(p, N, k, PenaltyVariant::nip(), ks));
}
BENCHMARK(BM_SteadySolve)->Args({48, 1})->Args({96, 2})->Unit(benchmark::kMillisecond);

}  // namespace
