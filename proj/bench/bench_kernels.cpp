// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "torus_riesz/dpp.hpp"
#include "torus_riesz/energy.hpp"
#include "torus_riesz/pair_sum.hpp"
#include "torus_riesz/reference.hpp"

namespace {

using namespace torus_riesz;

const SpectralSupport& disk_support(double n) {
  static const Lattice hex = named_lattice("hexagonal", true);
  static std::map<double, SpectralSupport> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, support_scaled_domain(hex, DomainSpec::unit_mass_ball(2, 1.0), n)).first;
  }
  return it->second;
}

void BM_PairSumSerial(benchmark::State& state) {
  const Matrix& w = disk_support(static_cast<double>(state.range(0))).dual_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(reference::pair_sum(w, 1.0));
}

void BM_PairSumParallel(benchmark::State& state) {
  const Matrix& w = disk_support(static_cast<double>(state.range(0))).dual_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(pair_sum_direct(w, 1.0));
}

void BM_PairSumFFT(benchmark::State& state) {
  const SpectralSupport& supp = disk_support(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_sum_fft(supp, 1.0));
}

void BM_EnergySerial(benchmark::State& state) {
  const SpectralSupport& supp = disk_support(static_cast<double>(state.range(0)));
  const TorusConfiguration cfg = sample(supp, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(reference::periodic_energy(supp.lattice(), cfg, 1.0));
}

void BM_EnergyParallel(benchmark::State& state) {
  const SpectralSupport& supp = disk_support(static_cast<double>(state.range(0)));
  const TorusConfiguration cfg = sample(supp, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(periodic_energy(supp.lattice(), cfg, 1.0));
}

void BM_MonteCarloSerial(benchmark::State& state) {
  const SpectralSupport shell = support_shell(2, 25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::mc_expected_energy(shell, 1.0, state.range(0), 0).mean);
  }
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const SpectralSupport shell = support_shell(2, 25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_expected_energy(shell, 1.0, state.range(0), 0).mean);
  }
}

}  // namespace

BENCHMARK(BM_PairSumSerial)->Arg(1000)->Arg(4000);
BENCHMARK(BM_PairSumParallel)->Arg(1000)->Arg(4000);
BENCHMARK(BM_PairSumFFT)->Arg(1000)->Arg(4000);
BENCHMARK(BM_EnergySerial)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyParallel)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
