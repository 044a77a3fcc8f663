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

#include "torus_riesz/domain.hpp"
#include "torus_riesz/energy.hpp"
#include "torus_riesz/lattice.hpp"

namespace torus_riesz {

/// ∫_0^∞ J_{d/2}(x)² x^{-1-s} dx in closed Gamma / ₂F₁ form, 0 < s < d.
double bessel_square_integral(int d, double s);

/// Same integral by quadrature: u² substitution on [0, 1], Gauss–Legendre
/// on π-length panels up to `cutoff`, then the asymptotic tail (mean part
/// plus the leading oscillatory boundary term).
double bessel_square_integral_quadrature(int d, double s, double cutoff = 400.0);

/// I(t) = ∫∫_{D×D} |x - y|^{-t} dν dν for the ball D of volume 1/covolume,
/// ν = covolume · Lebesgue. Requires 0 < t < d.
double riesz_double_integral_ball(int d, double t, double covolume);

/// Monte Carlo estimate of the same functional for any domain. Pairs are
/// (x, x + z) with x uniform in D and z drawn with density ∝ |z|^{-t} on the
/// ball of radius diam(D), so every sample is bounded.
MCReport riesz_double_integral_mc(const DomainSpec& domain, double t, double covolume,
                                  std::size_t samples, std::uint64_t seed);

/// -d [2π (d/ω_{d-1})^{1/d}]^s ∫_0^∞ J_{d/2}² x^{-1-s} dx, for 0 < s < d.
double a_constant(double s, int d);

struct AsymptoticReport {
  double s = 0.0;
  int d = 0;
  double leading_coeff = 0.0;  // coefficient of t_N²
  double second_coeff = 0.0;   // coefficient of t_N^{1+s/d}
  double a_sd = 0.0;
  double c_upper_bound = 0.0;
  double riesz_integral = 0.0;  // I(d - s)
  double riesz_integral_std_error = 0.0;
  /// Two-term prediction pole·t² + second·t^{1+s/d}.
  double predict(double t_n) const;
};

struct AsymptoticOptions {
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 0;
};

/// Throws Error(VolumeMismatch) unless |D||Λ| = 1 within 1e-9. Balls use
/// the closed form; other domains use riesz_double_integral_mc.
AsymptoticReport expected_energy_asymptotic(const Lattice& lattice, const DomainSpec& domain,
                                            double s, const AsymptoticOptions& options = {});

double c_upper_bound(const Lattice& lattice, const DomainSpec& domain, double s,
                     const AsymptoticOptions& options = {});

}  // namespace torus_riesz
