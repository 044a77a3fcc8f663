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

#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <random>

#include "torus_riesz/asymptotics.hpp"
#include "torus_riesz/dpp.hpp"
#include "torus_riesz/energy.hpp"
#include "torus_riesz/error.hpp"
#include "torus_riesz/pair_sum.hpp"
#include "torus_riesz/parallel.hpp"
#include "torus_riesz/reference.hpp"

using namespace torus_riesz;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Restores the OpenMP thread count on scope exit.
struct ThreadCount {
  explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved); }
  int saved;
};

const int kThreadCounts[] = {1, 2, 3, 8};

}  // namespace

TEST_CASE("chunked sum is independent of the thread count") {
  std::vector<double> values(100003);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double& v : values) v = u(rng) * std::exp(20.0 * u(rng));
  auto term = [&](std::int64_t i) { return values[static_cast<std::size_t>(i)]; };
  double first = 0.0;
  for (int threads : kThreadCounts) {
    ThreadCount tc(threads);
    const double total = chunked_sum(static_cast<std::int64_t>(values.size()), term);
    if (threads == 1) first = total;
    CHECK(total == first);
  }
  CHECK_THROWS_AS(chunked_sum(1000, [](std::int64_t i) -> double {
                    if (i == 777) throw Error(ErrorCode::DomainError, "boom");
                    return 1.0;
                  }),
                  Error);
}

TEST_CASE("pair sums: parallel, serial and FFT agree") {
  const Lattice hex = named_lattice("hexagonal", true);
  const SpectralSupport supp = support_scaled_domain(hex, DomainSpec::unit_mass_ball(2, 1.0), 900);
  for (double a : {0.3, 1.0, 1.7}) {
    const double par = pair_sum_direct(supp.dual_vectors(), a);
    CHECK(rel(reference::pair_sum(supp.dual_vectors(), a), par) < 1e-12);
    CHECK(rel(pair_sum_fft(supp, a), par) < 1e-11);
    for (int threads : kThreadCounts) {
      ThreadCount tc(threads);
      CHECK(pair_sum_direct(supp.dual_vectors(), a) == par);
    }
  }
  const SpectralSupport box = support_box(3, 3);
  CHECK(rel(pair_sum_fft(box, 0.8), pair_sum_direct(box.dual_vectors(), 0.8)) < 1e-11);

  const DifferenceCounts dc = difference_counts(support_box(1, 2));
  double total = 0.0;
  for (std::size_t i = 0; i < dc.deltas.size(); ++i) {
    if (dc.deltas[i][0] == 0) continue;
    CHECK(dc.counts[i] == 5.0 - std::abs(static_cast<double>(dc.deltas[i][0])));
    total += dc.counts[i];
  }
  CHECK(total == 20.0);
}

TEST_CASE("periodic energy: parallel and serial agree") {
  const Lattice hex = named_lattice("hexagonal", true);
  const SpectralSupport supp = support_scaled_domain(hex, DomainSpec::unit_mass_ball(2, 1.0), 40);
  const TorusConfiguration cfg = sample(supp, 3, 0);
  const double par = periodic_energy(hex, cfg, 1.0);
  CHECK(rel(reference::periodic_energy(hex, cfg, 1.0), par) < 1e-12);
  for (int threads : kThreadCounts) {
    ThreadCount tc(threads);
    CHECK(periodic_energy(hex, cfg, 1.0) == par);
  }
}

TEST_CASE("Monte Carlo runs are reproducible for any thread count") {
  const SpectralSupport shell = support_shell(2, 5);
  const MCReport ref = reference::mc_expected_energy(shell, 1.0, 120, 11);
  std::vector<TorusConfiguration> first;
  for (int threads : kThreadCounts) {
    ThreadCount tc(threads);
    const MCReport mc = mc_expected_energy(shell, 1.0, 120, 11);
    REQUIRE(mc.samples.size() == ref.samples.size());
    for (std::size_t i = 0; i < mc.samples.size(); ++i) {
      CHECK(rel(mc.samples[i], ref.samples[i]) < 1e-12);
    }
    CHECK(rel(mc.mean, ref.mean) < 1e-12);

    const auto batch = sample_replicas(shell, 11, 16);
    if (first.empty()) first = batch;
    for (std::size_t r = 0; r < batch.size(); ++r) {
      for (std::size_t p = 0; p < batch[r].points.size(); ++p) {
        CHECK(batch[r].points[p].coeffs == first[r].points[p].coeffs);
      }
    }
    const MCReport integral = riesz_double_integral_mc(DomainSpec::unit_mass_cube(2, 1.0), 1.0,
                                                       1.0, 20000, 4);
    static double integral_first = integral.mean;
    CHECK(integral.mean == integral_first);
  }
}
