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

// Real-argument special functions in double precision.

namespace torus_riesz::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Gamma function. Lanczos approximation, reflection below 1/2.
/// Throws Error(PoleArgument) at 0, -1, -2, ...
double gamma(double a);

/// 1/Gamma(a); zero at the poles of Gamma instead of throwing.
double rgamma(double a);

/// log|Gamma(a)|.
double log_abs_gamma(double a);

/// Upper incomplete gamma Γ(a, x) = ∫_x^∞ t^{a-1} e^{-t} dt.
///
/// a > 0 with x >= 0, or any real a <= 0 with x > 0 (needed for the dual
/// Ewald sum when s > d). Series below x = a + 1, Lentz continued fraction
/// above; a small-a rewrite keeps Γ(a) - γ(a,x) from cancelling.
SpecFunResult upper_incomplete_gamma_e(double a, double x);
double upper_incomplete_gamma(double a, double x);

/// Bessel J_ν(x) for integer or half-integer ν in [0, 50], x >= 0.
SpecFunResult bessel_j_e(double nu, double x);
double bessel_j(double nu, double x);

double riemann_zeta(double s);
double dirichlet_beta(double s);

/// 2F1(a, b; c; 1) by Gauss summation. Requires c - a - b > 0.
double gauss_2f1_unit(double a, double b, double c);

/// ω_{d-1} = 2π^{d/2}/Γ(d/2), the surface measure of the unit sphere in R^d.
double sphere_surface(int d);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

}  // namespace torus_riesz::specfun
