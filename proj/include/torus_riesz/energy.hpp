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
#include <cstdint>
#include <vector>

#include "torus_riesz/dpp.hpp"
#include "torus_riesz/ewald.hpp"
#include "torus_riesz/quadrature.hpp"

namespace torus_riesz {

struct EnergyReport {
  double s = 0.0;
  std::size_t t_n = 0;
  double closed_form = 0.0;
  double poisson_baseline = 0.0;
  double pair_sum = 0.0;        // Σ_{w≠w'} |w - w'|^{s-d}
  double prefactor_pole = 0.0;  // 2π^{d/2} / (Γ(s/2)(d-s)|Λ|)
  double prefactor_pair = 0.0;  // π^{s-d/2} Γ((d-s)/2) / (Γ(s/2)|Λ|)
};

struct MCReport {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t replicas = 0;
  std::uint64_t seed = 0;
  std::vector<double> samples;  // per replica, in replica order
};

/// Σ_{k≠j} F_{s,Λ}(x_k - x_j). Throws Error(CoincidentPoints) if two points
/// are within kCoincidenceRadius on the torus.
double periodic_energy(const Lattice& lattice, const TorusConfiguration& config, double s,
                       const EwaldSettings& settings = {});

/// Requires 0 < s < d, else Error(DomainError).
EnergyReport expected_energy_closed(const SpectralSupport& support, double s);

double poisson_baseline(std::size_t n, double s, const Lattice& lattice);

/// Prefactors of the closed form; both require 0 < s < d.
double energy_pole_prefactor(int d, double covolume, double s);
double energy_pair_prefactor(int d, double covolume, double s);

struct QuadratureSpec {
  double exclusion_radius = 1e-4;  // Cartesian radius handled analytically
  double rel_tol = 1e-10;
  unsigned max_depth = 15;
  double target_rel_error = 1e-6;
  EwaldSettings ewald{};
};

/// Expected energy as pole·t² - ∫_Ω |K(u,0)|² F(u) dμ(u) by adaptive
/// quadrature. Only d ∈ {1, 2}. Throws Error(QuadratureFailure) if the
/// error estimate misses `target_rel_error`.
QuadratureResult expected_energy_quadrature(const SpectralSupport& support, double s,
                                            const QuadratureSpec& spec = {});

/// Mean of periodic_energy over `replicas` samples. Requires replicas ≥ 100.
MCReport mc_expected_energy(const SpectralSupport& support, double s, std::size_t replicas,
                            std::uint64_t seed, const EwaldSettings& settings = {});

/// Mean and standard error of `values` (sample variance, n-1).
MCReport summarize(std::vector<double> values, std::uint64_t seed);

}  // namespace torus_riesz
