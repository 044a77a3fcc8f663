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

#include "torus_riesz/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "torus_riesz/error.hpp"
#include "torus_riesz/pair_sum.hpp"

namespace torus_riesz {

namespace {

double interaction_exponent(const Lattice& lattice, double s) {
  const int d = lattice.dim();
  if (!(s > 0.0 && s < d)) {
    throw Error(ErrorCode::DomainError, "s must lie in (0, d), got " + std::to_string(s));
  }
  return d - s;
}

std::vector<LatticeVector> checked_pool(const Lattice& lattice, std::size_t t_n, double radius) {
  if (t_n == 0) throw Error(ErrorCode::DomainError, "support size must be positive");
  std::vector<LatticeVector> pool = candidate_pool(lattice, radius);
  if (pool.size() < t_n) {
    throw Error(ErrorCode::PoolTooSmall, "pool of radius " + std::to_string(radius) + " has " +
                                             std::to_string(pool.size()) + " points, need " +
                                             std::to_string(t_n));
  }
  return pool;
}

SpectralSupport support_from(const Lattice& lattice, const std::vector<LatticeVector>& pool,
                             const std::vector<std::size_t>& picks) {
  std::vector<IntVector> coeffs;
  coeffs.reserve(picks.size());
  for (std::size_t i : picks) coeffs.push_back(pool[i].coeffs);
  return SpectralSupport(lattice, std::move(coeffs));
}

}  // namespace

std::vector<LatticeVector> candidate_pool(const Lattice& lattice, double radius) {
  const Lattice dual = lattice.dual();
  std::vector<LatticeVector> pool = enumerate_ball(dual, Vector::Zero(dual.dim()), radius);
  // Bucket norms so that equal-length vectors compare equal despite roundoff.
  auto bucket = [](double n2) { return std::llround(n2 * 1e9); };
  std::sort(pool.begin(), pool.end(), [&](const LatticeVector& a, const LatticeVector& b) {
    const auto ka = bucket(a.norm_sq);
    const auto kb = bucket(b.norm_sq);
    if (ka != kb) return ka < kb;
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
  });
  return pool;
}

SpectralSupport ball_support(const Lattice& lattice, std::size_t t_n, double radius) {
  const std::vector<LatticeVector> pool = checked_pool(lattice, t_n, radius);
  std::vector<std::size_t> picks(t_n);
  for (std::size_t i = 0; i < t_n; ++i) picks[i] = i;
  return support_from(lattice, pool, picks);
}

SpectralSupport greedy_support_optimizer(const Lattice& lattice, std::size_t t_n, double s,
                                         double candidate_radius) {
  const double a = interaction_exponent(lattice, s);
  const std::vector<LatticeVector> pool = checked_pool(lattice, t_n, candidate_radius);
  const std::size_t m = pool.size();

  std::vector<double> gain(m, 0.0);
  std::vector<bool> taken(m, false);
  std::vector<std::size_t> picks{0};  // pool[0] is the origin
  taken[0] = true;
  while (picks.size() < t_n) {
    const Vector& last = pool[picks.back()].cartesian;
    std::size_t best = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (taken[i]) continue;
      gain[i] += std::pow((pool[i].cartesian - last).squaredNorm(), -0.5 * a);
      if (best == m || gain[i] > gain[best] * (1.0 + 1e-12)) best = i;
    }
    taken[best] = true;
    picks.push_back(best);
  }

  SpectralSupport greedy = support_from(lattice, pool, picks);
  std::vector<std::size_t> ball(t_n);
  for (std::size_t i = 0; i < t_n; ++i) ball[i] = i;
  SpectralSupport centred = support_from(lattice, pool, ball);
  if (pair_sum_direct(greedy.dual_vectors(), a) >= pair_sum_direct(centred.dual_vectors(), a)) {
    return greedy;
  }
  return centred;
}

SpectralSupport exhaustive_support_optimizer(const Lattice& lattice, std::size_t t_n, double s,
                                             double candidate_radius) {
  const double a = interaction_exponent(lattice, s);
  const std::vector<LatticeVector> pool = checked_pool(lattice, t_n, candidate_radius);
  const std::size_t m = pool.size();

  double subsets = 1.0;
  for (std::size_t i = 0; i < t_n; ++i) subsets = subsets * (m - i) / (i + 1);
  if (subsets > 1e7) {
    throw Error(ErrorCode::CapExceeded, "exhaustive search over more than 10^7 subsets");
  }

  Matrix w(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, i) = 0.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      w(i, j) = w(j, i) = std::pow((pool[i].cartesian - pool[j].cartesian).squaredNorm(), -0.5 * a);
    }
  }

  std::vector<std::size_t> idx(t_n);
  for (std::size_t i = 0; i < t_n; ++i) idx[i] = i;
  std::vector<std::size_t> best = idx;
  double best_value = -1.0;
  for (;;) {
    double value = 0.0;
    for (std::size_t i = 0; i < t_n; ++i) {
      for (std::size_t j = i + 1; j < t_n; ++j) value += w(idx[i], idx[j]);
    }
    if (value > best_value * (1.0 + 1e-12)) {
      best_value = value;
      best = idx;
    }
    // Next combination in lexicographic order.
    std::size_t k = t_n;
    while (k > 0 && idx[k - 1] == m - t_n + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < t_n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return support_from(lattice, pool, best);
}

}  // namespace torus_riesz
