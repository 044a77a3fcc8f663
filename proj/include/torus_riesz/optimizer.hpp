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

#pragma once

#include <cstddef>
#include <vector>

#include "torus_riesz/dpp.hpp"

namespace torus_riesz {

/// Candidate frequencies Λ* ∩ closed ball(radius), ordered by norm and then
/// lexicographically by dual coefficients.
std::vector<LatticeVector> candidate_pool(const Lattice& lattice, double radius);

/// The first `t_n` pool entries: the centred-ball support of that size.
SpectralSupport ball_support(const Lattice& lattice, std::size_t t_n, double radius);

/// Greedy maximisation of Σ_{w≠w'} |w - w'|^{s-d}: start from 0 and add the
/// candidate with the largest marginal gain (earliest pool entry on ties).
/// Returns the better of the greedy and the ball support. Throws
/// Error(PoolTooSmall) if the pool has fewer than `t_n` points.
SpectralSupport greedy_support_optimizer(const Lattice& lattice, std::size_t t_n, double s,
                                         double candidate_radius);

/// Exact maximiser over all t_n-subsets of the pool. Exponential; meant for
/// cross-checks on tiny pools (Error(CapExceeded) beyond 10^7 subsets).
SpectralSupport exhaustive_support_optimizer(const Lattice& lattice, std::size_t t_n, double s,
                                             double candidate_radius);

}  // namespace torus_riesz
