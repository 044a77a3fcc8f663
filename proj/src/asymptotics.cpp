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

#include "torus_riesz/asymptotics.hpp"

#include <cmath>
#include <string>

#include "torus_riesz/error.hpp"
#include "torus_riesz/ewald.hpp"
#include "torus_riesz/parallel.hpp"
#include "torus_riesz/quadrature.hpp"
#include "torus_riesz/rng.hpp"
#include "torus_riesz/specfun.hpp"

namespace torus_riesz {

namespace {

using specfun::gamma;
using specfun::kPi;

void require_open_range(double value, int d, const char* what) {
  if (!(value > 0.0 && value < d)) {
    throw Error(ErrorCode::DomainError, std::string(what) + " must lie in (0, d), got " +
                                            std::to_string(value) + " with d = " +
                                            std::to_string(d));
  }
}

void require_unit_mass(const Lattice& lattice, const DomainSpec& domain) {
  if (domain.dim() != lattice.dim()) {
    throw Error(ErrorCode::DomainError, "domain and lattice dimensions differ");
  }
  const double mass = domain.volume() * lattice.covolume();
  if (!(std::abs(mass - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::VolumeMismatch,
                "|D||Λ| = " + std::to_string(mass) + ", expected 1 within 1e-9");
  }
}

// 2π (d / ω_{d-1})^{1/d}: the radius scale of the unit-volume ball in
// frequency units.
double ball_scale(int d) {
  return 2.0 * kPi * std::pow(d / specfun::sphere_surface(d), 1.0 / d);
}

// Uniform direction on the unit sphere in ℝ^d.
Vector random_direction(int d, PhiloxStream& rng) {
  Vector v(d);
  double n2 = 0.0;
  do {
    for (int i = 0; i < d; ++i) v[i] = rng.normal();
    n2 = v.squaredNorm();
  } while (n2 == 0.0);
  return v / std::sqrt(n2);
}

}  // namespace

double bessel_square_integral(int d, double s) {
  require_open_range(s, d, "s");
  const double nu = 0.5 * d;
  return gamma(0.5 * (d - s)) /
         (std::pow(2.0, d + 1) * gamma(nu + 1.0) * gamma(0.5 * s + 1.0)) *
         specfun::gauss_2f1_unit(0.5 * (d - s), 0.5 * (d + 1), d + 1.0);
}

double bessel_square_integral_quadrature(int d, double s, double cutoff) {
  require_open_range(s, d, "s");
  const double nu = 0.5 * d;
  auto integrand = [&](double x) {
    const double j = specfun::bessel_j(nu, x);
    return j * j * std::pow(x, -1.0 - s);
  };

  // x = u² removes the power singularity at the origin.
  double total =
      integrate_adaptive([&](double u) { return 2.0 * u * integrand(u * u); }, 0.0, 1.0, 1e-13)
          .value;

  const int panels = static_cast<int>(std::ceil((cutoff - 1.0) / kPi));
  const double top = 1.0 + panels * kPi;
  for (int k = 0; k < panels; ++k) {
    total += integrate_gauss_legendre(integrand, 1.0 + k * kPi, 1.0 + (k + 1) * kPi);
  }

  // J_ν² ≈ (1/(πx)) [1 + (μ-1)/(8x²) + cos(2χ) + ...], χ = x - νπ/2 - π/4.
  const double mu = 4.0 * nu * nu;
  const double mean_tail = (std::pow(top, -1.0 - s) / (1.0 + s) +
                            (mu - 1.0) / 8.0 * std::pow(top, -3.0 - s) / (3.0 + s)) /
                           kPi;
  const double chi = top - 0.5 * nu * kPi - 0.25 * kPi;
  const double oscillating_tail = -std::pow(top, -2.0 - s) * std::sin(2.0 * chi) / (2.0 * kPi);
  return total + mean_tail + oscillating_tail;
}

double riesz_double_integral_ball(int d, double t, double covolume) {
  require_open_range(t, d, "t");
  if (!(covolume > 0.0)) throw Error(ErrorCode::DomainError, "covolume must be positive");
  const double s = d - t;
  return d * std::pow(ball_scale(d), s) * bessel_square_integral(d, s) * gamma(0.5 * s) *
         std::pow(covolume, 1.0 - s / d) / (std::pow(kPi, s - 0.5 * d) * gamma(0.5 * t));
}

MCReport riesz_double_integral_mc(const DomainSpec& domain, double t, double covolume,
                                  std::size_t samples, std::uint64_t seed) {
  const int d = domain.dim();
  require_open_range(t, d, "t");
  if (samples < 2) throw Error(ErrorCode::DomainError, "need at least two samples");
  const double reach = 2.0 * domain.circumradius();
  // Normalizer of |z|^{-t} on the ball of radius `reach`.
  const double z_norm = specfun::sphere_surface(d) * std::pow(reach, d - t) / (d - t);
  const double scale = covolume * covolume * domain.volume() * z_norm;

  const auto n = static_cast<std::int64_t>(samples);
  const std::int64_t chunks = std::min<std::int64_t>(n, kReductionChunks);
  // Each chunk owns one RNG stream, so the estimate ignores the thread count.
  const double hits = chunked_sum(chunks, [&](std::int64_t c) {
    PhiloxStream rng(seed, static_cast<std::uint64_t>(c));
    const std::int64_t lo = n * c / chunks;
    const std::int64_t hi = n * (c + 1) / chunks;
    double count = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) {
      const Vector x = domain.sample(rng);
      const double rho = reach * std::pow(rng.uniform(), 1.0 / (d - t));
      if (domain.contains(x + rho * random_direction(d, rng))) count += 1.0;
    }
    return count;
  });

  MCReport r;
  r.seed = seed;
  r.replicas = samples;
  const double p = hits / static_cast<double>(samples);
  r.mean = scale * p;
  r.std_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(samples - 1));
  return r;
}

double a_constant(double s, int d) {
  require_open_range(s, d, "s");
  return -d * std::pow(ball_scale(d), s) * bessel_square_integral(d, s);
}

double AsymptoticReport::predict(double t_n) const {
  return leading_coeff * t_n * t_n + second_coeff * std::pow(t_n, 1.0 + s / d);
}

AsymptoticReport expected_energy_asymptotic(const Lattice& lattice, const DomainSpec& domain,
                                            double s, const AsymptoticOptions& options) {
  require_unit_mass(lattice, domain);
  const int d = lattice.dim();
  require_open_range(s, d, "s");
  const double covol = lattice.covolume();

  AsymptoticReport r;
  r.s = s;
  r.d = d;
  r.leading_coeff = energy_pole_prefactor(d, covol, s);
  r.a_sd = a_constant(s, d);
  if (domain.kind() == DomainSpec::Kind::Ball) {
    r.riesz_integral = riesz_double_integral_ball(d, d - s, covol);
  } else {
    const MCReport mc =
        riesz_double_integral_mc(domain, d - s, covol, options.mc_samples, options.seed);
    r.riesz_integral = mc.mean;
    r.riesz_integral_std_error = mc.std_error;
  }
  r.second_coeff = -energy_pair_prefactor(d, covol, s) * r.riesz_integral;
  r.c_upper_bound = r.second_coeff * std::pow(covol, s / d);
  return r;
}

double c_upper_bound(const Lattice& lattice, const DomainSpec& domain, double s,
                     const AsymptoticOptions& options) {
  return expected_energy_asymptotic(lattice, domain, s, options).c_upper_bound;
}

}  // namespace torus_riesz
