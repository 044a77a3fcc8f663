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

// Single-threaded counterparts of the OpenMP kernels. They use plain
// left-to-right accumulation and exist for tests and benchmarks.

#include <cstddef>
#include <cstdint>

#include "torus_riesz/energy.hpp"

namespace torus_riesz::reference {

double pair_sum(const Matrix& points, double exponent);

double periodic_energy(const Lattice& lattice, const TorusConfiguration& config, double s,
                       const EwaldSettings& settings = {});

MCReport mc_expected_energy(const SpectralSupport& support, double s, std::size_t replicas,
                            std::uint64_t seed, const EwaldSettings& settings = {});

}  // namespace torus_riesz::reference
