// Serial vs OpenMP kernels on dense registers.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qmg/analysis.hpp"
#include "qmg/kernels.hpp"
#include "qmg/parallel.hpp"

namespace {

std::vector<qmg::Complex> random_amplitudes(int n_qubits) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> d;
  std::vector<qmg::Complex> v(std::size_t{1} << n_qubits);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

const qmg::kernels::Matrix2 kHadamardLike = qmg::strategy_unitary({1.0, 0.3, -0.7}).entries();

void BM_Apply1qSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = random_amplitudes(n);
  for (auto _ : state) {
    for (int bit = 0; bit < n; ++bit) qmg::kernels::serial::apply_1q(amps, bit, kHadamardLike);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * n * static_cast<std::int64_t>(amps.size()));
}

void BM_Apply1qParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = random_amplitudes(n);
  for (auto _ : state) {
    for (int bit = 0; bit < n; ++bit) qmg::kernels::parallel::apply_1q(amps, bit, kHadamardLike);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * n * static_cast<std::int64_t>(amps.size()));
}

// Density-matrix sized registers (2n qubits) are where the parallel path pays.
BENCHMARK(BM_Apply1qSerial)->DenseRange(8, 24, 4);
BENCHMARK(BM_Apply1qParallel)->DenseRange(8, 24, 4);

void BM_GridSerial(benchmark::State& state) {
  const qmg::MinorityGame game(qmg::GameSpec{6, qmg::InitialStateRecipe{}});
  const auto profile = qmg::StrategyProfile::symmetric(6, qmg::ghz_equilibrium_strategy(6));
  const auto rest = game.others_applied(profile, 1);
  for (auto _ : state) {
    auto v = qmg::parallel::serial_map(4096, [&](std::size_t k) {
      return game.deviation_payoff(rest, 1, {3.0 * static_cast<double>(k) / 4096, 0.1, -0.1});
    });
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_GridParallel(benchmark::State& state) {
  const qmg::MinorityGame game(qmg::GameSpec{6, qmg::InitialStateRecipe{}});
  const auto profile = qmg::StrategyProfile::symmetric(6, qmg::ghz_equilibrium_strategy(6));
  const auto rest = game.others_applied(profile, 1);
  for (auto _ : state) {
    auto v = qmg::parallel::parallel_map(4096, [&](std::size_t k) {
      return game.deviation_payoff(rest, 1, {3.0 * static_cast<double>(k) / 4096, 0.1, -0.1});
    });
    benchmark::DoNotOptimize(v.data());
  }
}

BENCHMARK(BM_GridSerial);
BENCHMARK(BM_GridParallel);

}  // namespace

BENCHMARK_MAIN();
