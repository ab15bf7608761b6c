#include <benchmark/benchmark.h>

#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/dynamics.hpp"
#include "bogodiag/fock.hpp"
#include "bogodiag/quadratic_model.hpp"
#include "bogodiag/random.hpp"
#include "bogodiag/tddiag.hpp"

using namespace bogodiag;

namespace {

QuadraticHamiltonian make_instance(index_t n) {
  Rng rng(2024 + static_cast<std::uint64_t>(n));
  return random_instance(n, rng, 0.6);
}

void BM_Diagonalize(benchmark::State& state) {
  auto q = make_instance(state.range(0));
  for (auto _ : state) {
    auto res = diagonalize(q);
    benchmark::DoNotOptimize(res.ground_energy);
  }
}
BENCHMARK(BM_Diagonalize)->Arg(4)->Arg(16)->Arg(64)->Arg(128);

void BM_Classify(benchmark::State& state) {
  auto q = make_instance(state.range(0));
  for (auto _ : state) {
    auto rep = classify(q);
    benchmark::DoNotOptimize(rep.norm_g);
  }
}
BENCHMARK(BM_Classify)->Arg(16)->Arg(64)->Arg(128);

void BM_FockAssemble(benchmark::State& state) {
  auto q = make_instance(2);
  TruncatedFock f(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto h = assemble(q, f, AssemblyForm::normal_ordered);
    benchmark::DoNotOptimize(h.matrix(0, 0));
  }
}
BENCHMARK(BM_FockAssemble)->Arg(10)->Arg(20)->Arg(30);

void BM_FockSpectrum(benchmark::State& state) {
  auto q = make_instance(2);
  TruncatedFock f(2, static_cast<int>(state.range(0)));
  auto h = assemble(q, f, AssemblyForm::normal_ordered);
  for (auto _ : state) {
    auto spec = exact_spectrum(h, 3);
    benchmark::DoNotOptimize(spec[0]);
  }
}
BENCHMARK(BM_FockSpectrum)->Arg(10)->Arg(20)->Arg(30);

void BM_EvolveSteps(benchmark::State& state) {
  const index_t n = state.range(0);
  auto q = make_instance(n);
  DynamicsProblem p;
  p.n = n;
  p.h_of_t = [h = q.h](double) { return h; };
  p.k2_of_t = [k = q.k](double) { return k; };
  p.horizon = 0.1;
  p.dt = 1e-3;
  auto s0 = vacuum_state(n);
  for (auto _ : state) {
    auto traj = evolve(p, s0);
    benchmark::DoNotOptimize(traj.states.back().gamma(0, 0));
  }
}
BENCHMARK(BM_EvolveSteps)->Arg(2)->Arg(8)->Arg(32);

void BM_GeneratorToTransform(benchmark::State& state) {
  const index_t n = state.range(0);
  Rng rng(7);
  PairingGenerator g{n, 0.3 * random_symmetric(n, rng)};
  for (auto _ : state) {
    auto t = generator_to_transform(g);
    benchmark::DoNotOptimize(t.u(0, 0));
  }
}
BENCHMARK(BM_GeneratorToTransform)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
