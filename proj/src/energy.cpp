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

#include "torus_riesz/energy.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <string>

#include "torus_riesz/error.hpp"
#include "torus_riesz/pair_sum.hpp"
#include "torus_riesz/parallel.hpp"
#include "torus_riesz/specfun.hpp"

namespace torus_riesz {

namespace {

using specfun::kPi;

void require_subcritical(int d, double s) {
  if (!(s > 0.0 && s < d)) {
    throw Error(ErrorCode::DomainError,
                "s must lie in (0, d) with d = " + std::to_string(d) + ", got " + std::to_string(s));
  }
}

// |K(c, 0)|² for coefficient-coordinate displacement c.
double kernel_abs_sq(const std::vector<IntVector>& coeffs, const Vector& c) {
  double re = 0.0;
  double im = 0.0;
  for (const auto& k : coeffs) {
    double phase = 0.0;
    for (int i = 0; i < c.size(); ++i) phase += static_cast<double>(k[i]) * c[i];
    phase -= std::floor(phase);
    re += std::cos(2.0 * kPi * phase);
    im += std::sin(2.0 * kPi * phase);
  }
  return re * re + im * im;
}

void check_quadrature(const QuadratureResult& r, double scale, double target) {
  if (!std::isfinite(r.value) || !(r.error <= target * scale)) {
    throw Error(ErrorCode::QuadratureFailure,
                "error estimate " + std::to_string(r.error) + " exceeds target " +
                    std::to_string(target * scale));
  }
}

// ∫_Ω |K|² F dμ for d = 1. Symmetric in c, so twice the half-cell integral.
QuadratureResult kernel_weighted_mean_1d(const SpectralSupport& support, double s,
                                         const QuadratureSpec& spec) {
  const Lattice& lattice = support.lattice();
  const double a = std::abs(lattice.basis()(0, 0));
  const double t = static_cast<double>(support.trace());
  const double delta_c = spec.exclusion_radius / a;
  const auto& coeffs = support.coeffs();

  auto f_at = [&](double c) {
    Vector x(1);
    x[0] = a * c;
    return f_s_lambda(lattice, s, x, spec.ewald).value;
  };

  // Inside |u| < δ: F ≈ |u|^{-s} + (F(δ) - δ^{-s}) and |K|² ≈ t².
  const double regular = f_at(delta_c) - std::pow(spec.exclusion_radius, -s);
  const double inner =
      t * t * (std::pow(a, -s) * std::pow(delta_c, 1.0 - s) / (1.0 - s) + delta_c * regular);

  auto integrand = [&](double y) {
    const double c = std::exp(y);
    Vector cv(1);
    cv[0] = c;
    return kernel_abs_sq(coeffs, cv) * f_at(c) * c;
  };
  QuadratureResult outer = integrate_adaptive(integrand, std::log(delta_c), std::log(0.5),
                                              spec.rel_tol, spec.max_depth);
  return {2.0 * (inner + outer.value), 2.0 * outer.error};
}

// d = 2: four triangles with apex at the origin, each mapped by c = ρ·p(τ).
QuadratureResult kernel_weighted_mean_2d(const SpectralSupport& support, double s,
                                         const QuadratureSpec& spec) {
  const Lattice& lattice = support.lattice();
  const Matrix& basis = lattice.basis();
  const double t = static_cast<double>(support.trace());
  const auto& coeffs = support.coeffs();
  const double delta = spec.exclusion_radius;

  const std::array<std::array<double, 4>, 4> sides = {{
      {0.5, -0.5, 0.5, 0.5},
      {0.5, 0.5, -0.5, 0.5},
      {-0.5, 0.5, -0.5, -0.5},
      {-0.5, -0.5, 0.5, -0.5},
  }};

  QuadratureResult total;
  for (const auto& side : sides) {
    Vector p0(2), p1(2);
    p0 << side[0], side[1];
    p1 << side[2], side[3];
    const double jac = std::abs(p0[0] * (p1[1] - p0[1]) - p0[1] * (p1[0] - p0[0]));

    double inner_err = 0.0;
    auto over_tau = [&](double tau) {
      const Vector p = p0 + tau * (p1 - p0);
      const Vector ap = basis * p;
      const double len = ap.norm();
      const double rho0 = delta / len;
      const double regular =
          f_s_lambda(lattice, s, Vector(rho0 * ap), spec.ewald).value - std::pow(delta, -s);
      const double near = t * t *
                          (std::pow(len, -s) * std::pow(rho0, 2.0 - s) / (2.0 - s) +
                           0.5 * rho0 * rho0 * regular);
      auto over_rho = [&](double y) {
        const double rho = std::exp(y);
        const Vector c = rho * p;
        return kernel_abs_sq(coeffs, c) *
               f_s_lambda(lattice, s, Vector(basis * c), spec.ewald).value * rho * rho;
      };
      QuadratureResult far =
          integrate_adaptive(over_rho, std::log(rho0), 0.0, spec.rel_tol, spec.max_depth);
      inner_err += far.error;
      return near + far.value;
    };
    QuadratureResult side_result =
        integrate_adaptive(over_tau, 0.0, 1.0, spec.rel_tol, spec.max_depth);
    total.value += jac * side_result.value;
    total.error += jac * (side_result.error + inner_err);
  }
  return total;
}

}  // namespace

double energy_pole_prefactor(int d, double covolume, double s) {
  require_subcritical(d, s);
  return pole_term(d, covolume, s);
}

double energy_pair_prefactor(int d, double covolume, double s) {
  require_subcritical(d, s);
  return std::pow(kPi, s - 0.5 * d) * specfun::gamma(0.5 * (d - s)) * specfun::rgamma(0.5 * s) /
         covolume;
}

double periodic_energy(const Lattice& lattice, const TorusConfiguration& config, double s,
                       const EwaldSettings& settings) {
  const auto& pts = config.points;
  const auto n = static_cast<std::int64_t>(pts.size());
  for (std::int64_t k = 0; k < n; ++k) {
    for (std::int64_t j = k + 1; j < n; ++j) {
      const Vector diff = pts[static_cast<std::size_t>(k)].cartesian -
                          pts[static_cast<std::size_t>(j)].cartesian;
      if (distance_to_lattice(lattice, diff) < kCoincidenceRadius) {
        throw Error(ErrorCode::CoincidentPoints, "points " + std::to_string(k) + " and " +
                                                     std::to_string(j) + " coincide on the torus");
      }
    }
  }
  const double half = chunked_sum(n, [&](std::int64_t k) {
    double acc = 0.0;
    for (std::int64_t j = k + 1; j < n; ++j) {
      const Vector diff = pts[static_cast<std::size_t>(k)].cartesian -
                          pts[static_cast<std::size_t>(j)].cartesian;
      acc += f_s_lambda(lattice, s, diff, settings).value;
    }
    return acc;
  });
  return 2.0 * half;
}

EnergyReport expected_energy_closed(const SpectralSupport& support, double s) {
  const Lattice& lattice = support.lattice();
  const int d = lattice.dim();
  require_subcritical(d, s);
  EnergyReport r;
  r.s = s;
  r.t_n = support.trace();
  const double t = static_cast<double>(r.t_n);
  r.prefactor_pole = energy_pole_prefactor(d, lattice.covolume(), s);
  r.prefactor_pair = energy_pair_prefactor(d, lattice.covolume(), s);
  r.pair_sum = r.t_n > 1 ? pair_sum(support, d - s) : 0.0;
  r.poisson_baseline = r.prefactor_pole * (t * t - t);
  r.closed_form = r.poisson_baseline - r.prefactor_pair * r.pair_sum;
  return r;
}

double poisson_baseline(std::size_t n, double s, const Lattice& lattice) {
  const double t = static_cast<double>(n);
  return energy_pole_prefactor(lattice.dim(), lattice.covolume(), s) * (t * t - t);
}

QuadratureResult expected_energy_quadrature(const SpectralSupport& support, double s,
                                            const QuadratureSpec& spec) {
  const int d = support.dim();
  require_subcritical(d, s);
  if (d > 2) {
    throw Error(ErrorCode::DomainError, "quadrature validator supports d = 1 and d = 2 only");
  }
  const double t = static_cast<double>(support.trace());
  const double pole = pole_term(support.lattice(), s);
  const QuadratureResult mean =
      d == 1 ? kernel_weighted_mean_1d(support, s, spec) : kernel_weighted_mean_2d(support, s, spec);
  QuadratureResult out{pole * t * t - mean.value, mean.error};
  // Absolute floor keeps t = 1 (exact cancellation) well posed.
  check_quadrature(out, std::abs(out.value) + 1e-4 * std::abs(pole) * t * t, spec.target_rel_error);
  return out;
}

MCReport summarize(std::vector<double> values, std::uint64_t seed) {
  MCReport r;
  r.seed = seed;
  r.replicas = values.size();
  if (values.empty()) return r;
  double sum = 0.0;
  for (double v : values) sum += v;
  r.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - r.mean) * (v - r.mean);
    r.std_error = std::sqrt(ss / static_cast<double>(values.size() - 1) /
                            static_cast<double>(values.size()));
  }
  r.samples = std::move(values);
  return r;
}

MCReport mc_expected_energy(const SpectralSupport& support, double s, std::size_t replicas,
                            std::uint64_t seed, const EwaldSettings& settings) {
  if (replicas < 100) {
    throw Error(ErrorCode::DomainError, "Monte Carlo needs at least 100 replicas");
  }
  settings.validate();
  std::vector<double> energies(replicas, 0.0);
  std::exception_ptr failure;
  const auto m = static_cast<std::int64_t>(replicas);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < m; ++r) {
    try {
      const TorusConfiguration cfg = sample(support, seed, static_cast<std::uint64_t>(r));
      energies[static_cast<std::size_t>(r)] = periodic_energy(support.lattice(), cfg, s, settings);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(std::move(energies), seed);
}

}  // namespace torus_riesz
