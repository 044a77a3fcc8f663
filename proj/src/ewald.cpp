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

#include "torus_riesz/ewald.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "torus_riesz/error.hpp"
#include "torus_riesz/specfun.hpp"

namespace torus_riesz {

namespace {

using specfun::kPi;

constexpr double kShellWidth = 0.5;

struct ShellSum {
  double value = 0.0;
  std::size_t terms = 0;
};

// Σ term(v, |v - center|) over lattice vectors, shell by shell in the
// distance to `center`. `radial_bound(r)` bounds |term| for any vector at
// distance >= r and decides when empty shells are negligible.
template <class Term, class Bound>
ShellSum shell_sum(const Lattice& lattice, const Vector& center, bool skip_origin, Term term,
                   Bound radial_bound, double ref_scale, const EwaldSettings& settings) {
  const int d = lattice.dim();
  const double omega = specfun::sphere_surface(d);
  double radius = 3.0;  // grown by 1.5x until the truncation rule fires
  int next_shell = 0;
  int consecutive = 0;
  ShellSum out;

  std::vector<std::size_t> order;
  std::vector<double> dist;
  for (;;) {
    const auto pts = enumerate_ball(lattice, center, radius, 4 * settings.shell_cap);
    dist.resize(pts.size());
    order.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) dist[i] = (pts[i].cartesian - center).norm();
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

    const int complete_shells = static_cast<int>(std::floor(radius / kShellWidth));
    std::size_t cursor = 0;
    while (cursor < order.size() && dist[order[cursor]] < next_shell * kShellWidth) ++cursor;

    for (int k = next_shell; k < complete_shells; ++k) {
      const double outer = (k + 1) * kShellWidth;
      double shell_value = 0.0;
      double shell_abs = 0.0;
      std::size_t count = 0;
      while (cursor < order.size() && dist[order[cursor]] < outer) {
        const auto& v = pts[order[cursor]];
        const double r = dist[order[cursor]];
        ++cursor;
        if (skip_origin && v.coeffs.isZero()) continue;
        const double t = term(v, r);
        shell_value += t;
        shell_abs += std::abs(t);
        ++count;
      }
      out.value += shell_value;
      out.terms += count;
      if (out.terms > settings.shell_cap) {
        throw Error(ErrorCode::CapExceeded,
                    "lattice sum needed more than " + std::to_string(settings.shell_cap) + " terms");
      }
      const double scale = std::max(std::abs(out.value), ref_scale);
      bool negligible = false;
      if (count > 0) {
        negligible = shell_abs < settings.rel_tol * scale;
      } else {
        const double inner = k * kShellWidth;
        const double expected =
            1.0 + omega * std::pow(outer, d - 1) * kShellWidth / lattice.covolume();
        negligible = inner > 0.0 && radial_bound(inner) * expected < settings.rel_tol * scale;
      }
      consecutive = negligible ? consecutive + 1 : 0;
      if (consecutive >= settings.consecutive_negligible_shells) return out;
    }
    next_shell = complete_shells;
    radius *= 1.5;
  }
}

void check_s(double s) {
  if (!std::isfinite(s)) throw Error(ErrorCode::DomainError, "s must be finite");
}

// cos(2π k·c) with the phase reduced mod 1 first.
double cos_two_pi(const IntVector& k, const Vector& c) {
  double phase = 0.0;
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    const double p = static_cast<double>(k[i]) * c[i];
    phase += p - std::round(p);
  }
  phase -= std::round(phase);
  return std::cos(2.0 * kPi * phase);
}

// ∫_1^∞ e^{-q t} t^{a-1} dt = q^{-a} Γ(a, q), for q > 0.
double heat_tail(double a, double q) {
  return std::pow(q, -a) * specfun::upper_incomplete_gamma(a, q);
}

// Σ_{w≠0} weight(w) Γ((d-s)/2, π²|w|²)(π²|w|²)^{-(d-s)/2} over the dual lattice.
template <class Phase>
ShellSum dual_sum(const Lattice& lattice, double s, Phase phase, double ref_scale,
                  const EwaldSettings& settings) {
  const Lattice dual = lattice.dual();
  const double a = 0.5 * (lattice.dim() - s);
  auto radial = [a](double r) { return heat_tail(a, kPi * kPi * r * r); };
  auto term = [&](const LatticeVector& w, double r) { return phase(w) * radial(r); };
  return shell_sum(dual, Vector::Zero(lattice.dim()), true, term, radial, ref_scale, settings);
}

}  // namespace

void EwaldSettings::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4)) {
    throw Error(ErrorCode::DomainError, "rel_tol must lie in (0, 1e-4]");
  }
  if (consecutive_negligible_shells < 1 || shell_cap < 1) {
    throw Error(ErrorCode::DomainError, "shell caps must be positive");
  }
}

double pole_term(int d, double covolume, double s) {
  if (s == d) throw Error(ErrorCode::PoleArgument, "pole term is singular at s = d");
  return 2.0 * std::pow(kPi, 0.5 * d) * specfun::rgamma(0.5 * s) / (covolume * (d - s));
}

double pole_term(const Lattice& lattice, double s) {
  return pole_term(lattice.dim(), lattice.covolume(), s);
}

ZetaValue f_s_lambda(const Lattice& lattice, double s, const TorusPoint& x,
                     const EwaldSettings& settings) {
  settings.validate();
  check_s(s);
  if (!(s > 0.0)) throw Error(ErrorCode::DomainError, "F_{s,Λ} is evaluated for s > 0");
  const int d = lattice.dim();
  const double a = 0.5 * s;

  auto radial = [a](double r) { return heat_tail(a, r * r); };
  auto direct_term = [&](const LatticeVector&, double r) {
    if (r < kCoincidenceRadius) {
      throw Error(ErrorCode::NearSingularity, "x lies within 1e-9 of a lattice point");
    }
    return radial(r);
  };
  const ShellSum direct =
      shell_sum(lattice, Vector(-x.cartesian), false, direct_term, radial, 0.0, settings);

  const double dual_prefactor = std::pow(kPi, 0.5 * d) / lattice.covolume();
  const Vector& c = x.coeffs;
  auto phase = [&c](const LatticeVector& w) { return cos_two_pi(w.coeffs, c); };
  const ShellSum dual =
      dual_sum(lattice, s, phase, std::abs(direct.value) / dual_prefactor, settings);

  ZetaValue out;
  out.value = (direct.value + dual_prefactor * dual.value) * specfun::rgamma(a);
  out.direct_sum_terms = direct.terms;
  out.dual_sum_terms = dual.terms;
  return out;
}

ZetaValue f_s_lambda(const Lattice& lattice, double s, const Vector& x,
                     const EwaldSettings& settings) {
  return f_s_lambda(lattice, s, reduce(x, lattice), settings);
}

ZetaValue epstein_hurwitz(const Lattice& lattice, double s, const TorusPoint& x,
                          const EwaldSettings& settings) {
  if (!(s > lattice.dim())) {
    throw Error(ErrorCode::DomainError, "the Epstein–Hurwitz lattice sum converges only for s > d");
  }
  ZetaValue f = f_s_lambda(lattice, s, x, settings);
  f.value -= pole_term(lattice, s);
  return f;
}

DirectSum epstein_hurwitz_direct(const Lattice& lattice, double s, const TorusPoint& x,
                                 double rel_tol, std::size_t max_terms) {
  const int d = lattice.dim();
  if (!(s > d)) {
    throw Error(ErrorCode::DomainError, "the Epstein–Hurwitz lattice sum converges only for s > d");
  }
  const double density = specfun::sphere_surface(d) / lattice.covolume();
  auto tail = [&](double r) { return density * std::pow(r, d - s) / (s - d); };

  // Largest radius whose ball holds about max_terms points.
  const double r_cap = std::pow(max_terms * d / density, 1.0 / d);
  double radius = std::max(2.0 * lattice.covering_bound(), 4.0);
  DirectSum out;
  for (;;) {
    const auto pts = enumerate_ball(lattice, Vector(-x.cartesian), radius, 2 * max_terms);
    double sum = 0.0;
    for (const auto& v : pts) {
      const double r = (v.cartesian + x.cartesian).norm();
      if (r < kCoincidenceRadius) {
        throw Error(ErrorCode::NearSingularity, "x lies within 1e-9 of a lattice point");
      }
      sum += std::pow(r, -s);
    }
    out.value = sum + tail(radius);
    out.tail_bound = tail(radius);
    out.radius = radius;
    out.terms = pts.size();
    if (out.tail_bound < rel_tol * std::abs(out.value) || radius >= r_cap) return out;
    radius = std::min(2.0 * radius, r_cap);
  }
}

ZetaValue epstein_zeta(const Lattice& lattice, double s, const EwaldSettings& settings) {
  settings.validate();
  check_s(s);
  const int d = lattice.dim();
  if (s == d) throw Error(ErrorCode::PoleArgument, "the Epstein zeta function has a pole at s = d");
  if (s == 0.0) return {-1.0, 0, 0};
  if (s < 0.0 && std::floor(0.5 * s) == 0.5 * s) return {0.0, 0, 0};

  const double a = 0.5 * s;
  const double covolume = lattice.covolume();
  const double dual_prefactor = std::pow(kPi, 0.5 * d) / covolume;
  const double constants = -2.0 / s + 2.0 * dual_prefactor / (s - d);

  auto radial = [a](double r) { return heat_tail(a, r * r); };
  auto direct_term = [&](const LatticeVector&, double r) { return radial(r); };
  const ShellSum direct = shell_sum(lattice, Vector::Zero(d), true, direct_term, radial,
                                    std::abs(constants), settings);

  auto phase = [](const LatticeVector&) { return 1.0; };
  const double ref = (std::abs(direct.value) + std::abs(constants)) / dual_prefactor;
  const ShellSum dual = dual_sum(lattice, s, phase, ref, settings);

  ZetaValue out;
  out.value = (direct.value + constants + dual_prefactor * dual.value) * specfun::rgamma(a);
  out.direct_sum_terms = direct.terms;
  out.dual_sum_terms = dual.terms;
  return out;
}

}  // namespace torus_riesz
