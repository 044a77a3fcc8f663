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

#include "torus_riesz/lattice.hpp"

namespace torus_riesz {

/// Truncation policy shared by every lattice sum.
///
/// Sums are accumulated over shells of width 0.5 in Cartesian norm. A sum
/// stops once `consecutive_negligible_shells` successive shells each
/// contribute less than `rel_tol` times the running magnitude.
struct EwaldSettings {
  double rel_tol = 1e-10;
  int consecutive_negligible_shells = 3;
  std::size_t shell_cap = 1'000'000;

  /// Throws Error(DomainError) if rel_tol is outside (0, 1e-4] or a cap is
  /// not positive.
  void validate() const;
};

struct ZetaValue {
  double value = 0.0;
  std::size_t direct_sum_terms = 0;
  std::size_t dual_sum_terms = 0;
};

/// F_{s,Λ}(x): the lattice sum of the heat-kernel tail ∫_1^∞ plus the
/// Poisson-resummed head ∫_0^1, i.e.
///
///   F = (1/Γ(s/2)) [ Σ_v Γ(s/2, |x+v|²) |x+v|^{-s}
///                    + (π^{d/2}/|Λ|) Σ_{w≠0} cos(2π⟨x,w⟩)
///                        Γ((d-s)/2, π²|w|²) (π²|w|²)^{-(d-s)/2} ].
///
/// F is entire in s and equals ζ_Λ(s;x) + pole_term(s) for s > d. Requires
/// s > 0; throws Error(NearSingularity) if x is within 1e-9 of Λ.
ZetaValue f_s_lambda(const Lattice& lattice, double s, const TorusPoint& x,
                     const EwaldSettings& settings = {});
ZetaValue f_s_lambda(const Lattice& lattice, double s, const Vector& x,
                     const EwaldSettings& settings = {});

/// ζ_Λ(s;x) = Σ_v |x+v|^{-s} for s > d, evaluated through F minus the pole
/// term. Throws Error(DomainError) if s <= d.
ZetaValue epstein_hurwitz(const Lattice& lattice, double s, const TorusPoint& x,
                          const EwaldSettings& settings = {});

struct DirectSum {
  double value = 0.0;       // truncated sum plus tail-integral correction
  double tail_bound = 0.0;  // size of the correction applied
  double radius = 0.0;
  std::size_t terms = 0;
};

/// ζ_Λ(s;x) by plain shell summation of |x+v|^{-s} out to the radius where
/// the tail integral (ω_{d-1}/|Λ|) R^{d-s}/(s-d) drops below rel_tol times
/// the sum, or `max_terms` is reached. Slow; kept as an independent route.
DirectSum epstein_hurwitz_direct(const Lattice& lattice, double s, const TorusPoint& x,
                                 double rel_tol = 1e-8, std::size_t max_terms = 4'000'000);

/// Epstein zeta ζ_Λ(s) = Σ_{v≠0} |v|^{-s}, analytically continued to s ≠ d:
///
///   Γ(s/2) ζ_Λ(s) = Σ_{v≠0} Γ(s/2,|v|²)|v|^{-s} - 2/s + (2π^{d/2}/|Λ|)/(s-d)
///                   + (π^{d/2}/|Λ|) Σ_{w≠0} Γ((d-s)/2, π²|w|²)(π²|w|²)^{-(d-s)/2}.
///
/// Returns exactly -1 at s = 0 and 0 at s = -2, -4, ...
/// Throws Error(PoleArgument) at s = d.
ZetaValue epstein_zeta(const Lattice& lattice, double s, const EwaldSettings& settings = {});

/// 2π^{d/2} / (|Λ| Γ(s/2) (d - s)). Throws Error(PoleArgument) at s = d.
double pole_term(const Lattice& lattice, double s);
double pole_term(int d, double covolume, double s);

}  // namespace torus_riesz
