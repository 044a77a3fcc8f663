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

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "torus_riesz/dpp.hpp"
#include "torus_riesz/error.hpp"
#include "torus_riesz/specfun.hpp"

using namespace torus_riesz;
namespace sf = torus_riesz::specfun;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::DomainError;
}

TorusPoint point(const Lattice& l, std::initializer_list<double> c) {
  Vector v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double x : c) v[i++] = x;
  return torus_point_from_coeffs(v, l);
}

double dirichlet(int n, double x) {
  const double den = std::sin(x / 2);
  if (std::abs(den) < 1e-14) return 2.0 * n + 1.0;
  return std::sin((n + 0.5) * x) / den;
}

}  // namespace

TEST_CASE("box and shell supports") {
  CHECK(support_box(1, 1).trace() == 3);
  CHECK(support_box(2, 2).trace() == 25);
  const SpectralSupport origin = support_box(3, 0);
  CHECK(origin.trace() == 1);
  CHECK(origin.coeffs()[0].isZero());

  const SpectralSupport s4 = support_shell(2, 4);
  CHECK(s4.trace() == 4);
  for (const auto& k : s4.coeffs()) CHECK(k.squaredNorm() == 4);
  CHECK(support_shell(2, 1).trace() == 4);
  CHECK(support_shell(2, 25).trace() == 12);  // r_2(25)
  CHECK(support_shell(3, 3).trace() == 8);
  CHECK(code_of([] { support_shell(2, 3); }) == ErrorCode::EmptyShell);
  CHECK(code_of([] { support_shell(3, 7); }) == ErrorCode::EmptyShell);

  const Lattice z1 = named_lattice("Z1", false);
  CHECK(code_of([&] {
          SpectralSupport(z1, {IntVector::Constant(1, 2), IntVector::Constant(1, 2)});
        }) == ErrorCode::DomainError);
  CHECK(code_of([&] { SpectralSupport(z1, {}); }) == ErrorCode::DomainError);
}

TEST_CASE("scaled-domain supports") {
  const Lattice z2 = named_lattice("Z2", false);
  const DomainSpec disk = DomainSpec::unit_mass_ball(2, 1.0);
  CHECK(disk.volume() == doctest::Approx(1.0).epsilon(1e-12));
  const SpectralSupport s100 = support_scaled_domain(z2, disk, 100.0);
  CHECK(std::abs(s100.trace() / 100.0 - 1.0) < 0.15);

  const SpectralSupport tiny = support_scaled_domain(z2, DomainSpec::ball(2, 0.3), 1.0);
  CHECK(tiny.trace() == 1);

  // Strict interior: the radius-1 disk excludes (±1, 0) and (0, ±1).
  CHECK(support_scaled_domain(z2, DomainSpec::ball(2, 1.0), 1.0).trace() == 1);

  const Lattice hex = named_lattice("hexagonal", true);
  double prev_gap = INFINITY;
  for (double n : {1e2, 1e3, 1e4}) {
    const double gap = std::abs(support_scaled_domain(hex, disk, n).trace() / n - 1.0);
    CHECK(gap < 0.15);
    CHECK(gap <= prev_gap + 0.01);
    prev_gap = gap;
  }
  CHECK(prev_gap < 0.02);
}

TEST_CASE("kernel values") {
  const Lattice z1 = named_lattice("Z1", false);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n : {1, 3}) {
    const SpectralSupport box = support_box(1, n);
    for (int i = 0; i < 10; ++i) {
      const double a = u(rng), b = u(rng);
      const auto k = kernel_eval(box, point(z1, {a}), point(z1, {b}));
      CHECK(std::abs(k.real() - dirichlet(n, 2.0 * sf::kPi * (a - b))) < 1e-10);
      CHECK(std::abs(k.imag()) < 1e-10);
    }
  }
  const Lattice z2 = named_lattice("Z2", false);
  const SpectralSupport box2 = support_box(2, 2);
  for (int i = 0; i < 10; ++i) {
    const double a1 = u(rng), a2 = u(rng), b1 = u(rng), b2 = u(rng);
    const auto k = kernel_eval(box2, point(z2, {a1, a2}), point(z2, {b1, b2}));
    const double prod =
        dirichlet(2, 2.0 * sf::kPi * (a1 - b1)) * dirichlet(2, 2.0 * sf::kPi * (a2 - b2));
    CHECK(std::abs(k.real() - prod) < 1e-10);
  }

  const Lattice hex = named_lattice("hexagonal", true);
  const SpectralSupport shell = support_scaled_domain(hex, DomainSpec::unit_mass_ball(2, 1.0), 30);
  for (int i = 0; i < 20; ++i) {
    const TorusPoint p = point(hex, {u(rng), u(rng)});
    const TorusPoint q = point(hex, {u(rng), u(rng)});
    CHECK(std::abs(kernel_eval(shell, p, p) - std::complex<double>(shell.trace(), 0.0)) < 1e-12);
    CHECK(std::abs(kernel_eval(shell, p, q) - std::conj(kernel_eval(shell, q, p))) < 1e-12);
    const double h1 = u(rng), h2 = u(rng);
    const TorusPoint ph = point(hex, {std::fmod(p.coeffs[0] + h1, 1.0), std::fmod(p.coeffs[1] + h2, 1.0)});
    const TorusPoint qh = point(hex, {std::fmod(q.coeffs[0] + h1, 1.0), std::fmod(q.coeffs[1] + h2, 1.0)});
    CHECK(std::abs(kernel_eval(shell, ph, qh) - kernel_eval(shell, p, q)) < 1e-10);
  }
}

TEST_CASE("sampler output shape and determinism") {
  const SpectralSupport shell = support_shell(2, 25);
  const TorusConfiguration a = sample(shell, 42, 3);
  const TorusConfiguration b = sample(shell, 42, 3);
  const TorusConfiguration c = sample(shell, 42, 4);
  REQUIRE(a.points.size() == shell.trace());
  bool differs = false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].coeffs == b.points[i].coeffs);
    CHECK(a.points[i].coeffs.minCoeff() >= 0.0);
    CHECK(a.points[i].coeffs.maxCoeff() < 1.0);
    differs = differs || a.points[i].coeffs != c.points[i].coeffs;
  }
  CHECK(differs);

  const auto batch = sample_replicas(shell, 42, 6);
  REQUIRE(batch.size() == 6);
  CHECK(batch[3].points[5].coeffs == a.points[5].coeffs);
  CHECK(batch[3].replica == 3);
}

TEST_CASE("sampled Gram matrices are positive semidefinite") {
  const Lattice hex = named_lattice("hexagonal", true);
  const SpectralSupport supp = support_scaled_domain(hex, DomainSpec::unit_mass_ball(2, 1.0), 40);
  for (std::uint64_t r = 0; r < 20; ++r) {
    const TorusConfiguration cfg = sample(supp, 9, r);
    const Eigen::MatrixXcd k = kernel_matrix(supp, cfg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(k);
    CHECK(es.eigenvalues().minCoeff() >= -1e-8 * supp.trace());
  }
}

TEST_CASE("single-point process is uniform") {
  const SpectralSupport one = support_box(2, 0);
  const int n = 10000;
  int left = 0;
  for (int r = 0; r < n; ++r) left += sample(one, 5, r).points[0].coeffs[0] < 0.5;
  const double p = static_cast<double>(left) / n;
  CHECK(std::abs(p - 0.5) < 3.0 * std::sqrt(0.25 / n));
}

TEST_CASE("first intensity equals t_N times the box measure") {
  const SpectralSupport supp = support_shell(2, 5);  // t_N = 8
  const int n = 10000;
  const double lo0 = 0.1, hi0 = 0.45, lo1 = 0.3, hi1 = 0.9;
  double sum = 0.0, sum2 = 0.0;
  for (int r = 0; r < n; ++r) {
    int count = 0;
    for (const auto& p : sample(supp, 17, r).points) {
      count += p.coeffs[0] > lo0 && p.coeffs[0] < hi0 && p.coeffs[1] > lo1 && p.coeffs[1] < hi1;
    }
    sum += count;
    sum2 += count * count;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1));
  CHECK(std::abs(mean - 8.0 * (hi0 - lo0) * (hi1 - lo1)) < 3.0 * se);
}

TEST_CASE("first and last points share a distribution") {
  const SpectralSupport supp = support_box(1, 2);
  const int n = 5000;
  std::vector<double> first(n), last(n);
  for (int r = 0; r < n; ++r) {
    const auto cfg = sample(supp, 23, r);
    first[r] = cfg.points.front().coeffs[0];
    last[r] = cfg.points.back().coeffs[0];
  }
  std::sort(first.begin(), first.end());
  std::sort(last.begin(), last.end());
  double ks = 0.0;
  std::size_t i = 0, j = 0;
  while (i < first.size() && j < last.size()) {
    if (first[i] <= last[j]) ++i; else ++j;
    ks = std::max(ks, std::abs(static_cast<double>(i) - static_cast<double>(j)) / n);
  }
  CHECK(ks < 1.628 * std::sqrt(2.0 / n));  // α = 0.01
}

TEST_CASE("rejection budget") {
  SamplerOptions opts;
  opts.max_attempts_per_point = 1;
  CHECK(code_of([&] { sample(support_box(1, 10), 1, 0, opts); }) ==
        ErrorCode::RejectionBudgetExceeded);
}

TEST_CASE("pair-gap histogram follows the two-point intensity") {
  const SpectralSupport box = support_box(1, 1);
  const int n = 10000;
  const int bins = 10;
  std::vector<double> sum(bins, 0.0), sum2(bins, 0.0);
  for (int r = 0; r < n; ++r) {
    const auto cfg = sample(box, 31, r);
    std::vector<int> count(bins, 0);
    for (const auto& p : cfg.points) {
      for (const auto& q : cfg.points) {
        if (&p == &q) continue;
        double g = p.coeffs[0] - q.coeffs[0];
        g -= std::floor(g);
        ++count[std::min(bins - 1, static_cast<int>(g * bins))];
      }
    }
    for (int b = 0; b < bins; ++b) {
      sum[b] += count[b];
      sum2[b] += count[b] * count[b];
    }
  }
  for (int b = 0; b < bins; ++b) {
    const double mean = sum[b] / n;
    const double se = std::sqrt((sum2[b] / n - mean * mean) / (n - 1));
    INFO("bin " << b);
    CHECK(std::abs(mean - oracle::box1_pair_gap_mass(b / 10.0, (b + 1) / 10.0)) < 3.0 * se);
  }
}
