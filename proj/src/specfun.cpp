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

#include "torus_riesz/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "torus_riesz/error.hpp"

namespace torus_riesz::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

// sin(πa) with argument reduction done before multiplying by π.
double sin_pi(double a) {
  const double r = a - 2.0 * std::round(0.5 * a);  // r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  return std::sin(kPi * r);
}

double lanczos_series(double z) {
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
  return sum;
}

// Γ(a) for a >= 0.5.
double gamma_right(double a) {
  const double z = a - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half = 0.5 * (z + 0.5);
  const double p = std::pow(t, half);
  return std::sqrt(2.0 * kPi) * p * (p * std::exp(-t)) * lanczos_series(z);
}

double log_gamma_right(double a) {
  const double z = a - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

// ζ(k) for k = 2..kZetaTableSize+1, used by the small-a expansion of lgamma(1+a).
constexpr int kZetaTableSize = 64;

const std::vector<double>& zeta_integer_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kZetaTableSize);
    for (int k = 0; k < kZetaTableSize; ++k) t[k] = riemann_zeta(k + 2.0);
    return t;
  }();
  return table;
}

// (Γ(1+a) - 1)/a, accurate as a -> 0.
double gamma1pm1_over_a(double a) {
  if (std::abs(a) < 0.5) {
    const auto& zeta = zeta_integer_table();
    double lg = -kEulerGamma * a;
    double pw = -a;  // (-a)^k
    for (int k = 2; k < kZetaTableSize + 2; ++k) {
      pw *= -a;
      const double term = zeta[k - 2] * pw / k;
      lg += term;
      if (std::abs(term) < kEps * std::abs(lg)) break;
    }
    if (a == 0.0) return -kEulerGamma;
    return std::expm1(lg) / a;
  }
  return (gamma(1.0 + a) - 1.0) / a;
}

// γ(a, x)/(x^a e^{-x}) by the power series; a > 0.
double lower_series_scaled(double a, double x, double* err) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) {
      *err = 4.0 * kEps * std::abs(sum) * (n + 1);
      return sum;
    }
  }
  throw Error(ErrorCode::QuadratureFailure, "incomplete gamma series did not converge");
}

// Γ(a, x)/(x^a e^{-x}) by modified Lentz on Legendre's continued fraction.
double upper_cf_scaled(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = std::abs(b) < kTiny ? 1.0 / kTiny : 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw Error(ErrorCode::QuadratureFailure, "incomplete gamma continued fraction did not converge");
}

// Γ(a, x) for 0 < a < 1 and small x without the Γ(a) - γ(a,x) cancellation:
// Γ(a,x) = (Γ(1+a)-1)/a - (x^a - 1)/a - Σ_{n>=1} (-1)^n x^{a+n} / (n! (a+n)).
double upper_small_a(double a, double x) {
  const double lx = std::log(x);
  double tail = 0.0;
  double term = 1.0;  // (-1)^n x^n / n!
  for (int n = 1; n < 500; ++n) {
    term *= -x / n;
    const double add = term / (a + n);
    tail += add;
    if (std::abs(add) < kEps * std::abs(tail)) break;
  }
  return gamma1pm1_over_a(a) - std::expm1(a * lx) / a - std::exp(a * lx) * tail;
}

// E1(x) = Γ(0, x) for 0 < x < 1.
double exp_integral_e1_small(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= -x / k;
    const double add = -term / k;
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// Alternating-series acceleration weights (Cohen–Rodriguez Villegas–Zagier /
// Borwein): Σ (-1)^k a_k ≈ Σ_k w_k a_k.
constexpr int kAltTerms = 60;

const std::array<double, kAltTerms>& alternating_weights() {
  static const std::array<double, kAltTerms> w = [] {
    std::array<double, kAltTerms> out{};
    const int n = kAltTerms;
    double dd = std::pow(3.0 + std::sqrt(8.0), n);
    dd = 0.5 * (dd + 1.0 / dd);
    double b = -1.0;
    double c = -dd;
    for (int k = 0; k < n; ++k) {
      c = b - c;
      out[k] = c / dd;
      b = b * (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return out;
  }();
  return w;
}

double eta_positive(double s) {
  const auto& w = alternating_weights();
  double sum = 0.0;
  for (int k = 0; k < kAltTerms; ++k) sum += w[k] * std::pow(k + 1.0, -s);
  return sum;
}

double beta_positive(double s) {
  const auto& w = alternating_weights();
  double sum = 0.0;
  for (int k = 0; k < kAltTerms; ++k) sum += w[k] * std::pow(2.0 * k + 1.0, -s);
  return sum;
}

bool is_half_or_whole(double nu) { return std::floor(2.0 * nu) == 2.0 * nu; }

double bessel_series(double nu, double x, double* err) {
  const double hx = 0.5 * x;
  double term = std::pow(hx, nu) * rgamma(nu + 1.0);
  double sum = term;
  double biggest = std::abs(term);
  const double q = -hx * hx;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    biggest = std::max(biggest, std::abs(term));
    if (std::abs(term) < 1e-18 * biggest && k > hx) break;
  }
  *err = 8.0 * kEps * biggest;
  return sum;
}

// Miller's backward recurrence, normalized by the J_0 sum rule for integer
// orders and by the closed forms of J_{±1/2} for half-integer orders.
double bessel_miller(double nu, double x, double* err) {
  const bool half = std::floor(nu) != nu;
  const double frac = half ? 0.5 : 0.0;
  const int top = static_cast<int>(std::ceil(std::max(nu, x))) + 30 +
                  static_cast<int>(std::ceil(12.0 * std::cbrt(x)));
  double jp1 = 0.0;
  double j = 1e-30;
  double target = 0.0;
  double even_sum = 0.0;  // J_0 + 2 Σ J_{2k}, integer orders
  double jhalf = 0.0;
  double jmhalf = 0.0;
  for (int m = top; m >= (half ? 0 : 1); --m) {
    const double mu = m + frac;  // j holds J_mu
    if (mu == nu) target = j;
    if (!half && m % 2 == 0) even_sum += 2.0 * j;
    if (half && m == 0) jhalf = j;
    const double jm1 = (2.0 * mu / x) * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      target *= 1e-250;
      even_sum *= 1e-250;
      jhalf *= 1e-250;
    }
  }
  double scale = 0.0;
  if (half) {
    jmhalf = j;  // J_{-1/2}
    const double pref = std::sqrt(2.0 / (kPi * x));
    const double s = pref * std::sin(x);
    const double c = pref * std::cos(x);
    scale = std::abs(s) > std::abs(c) ? s / jhalf : c / jmhalf;
  } else {
    if (nu == 0.0) target = j;
    even_sum += j;  // J_0
    scale = 1.0 / even_sum;
  }
  *err = 64.0 * kEps * std::max(1.0, std::sqrt(x));
  return target * scale;
}

}  // namespace

double gamma(double a) {
  if (std::isnan(a)) throw Error(ErrorCode::DomainError, "gamma of NaN");
  if (is_nonpositive_integer(a)) {
    throw Error(ErrorCode::PoleArgument, "gamma has a pole at " + std::to_string(a));
  }
  if (a < 0.5) return kPi / (sin_pi(a) * gamma_right(1.0 - a));
  return gamma_right(a);
}

double rgamma(double a) {
  if (is_nonpositive_integer(a)) return 0.0;
  if (a < 0.5) return sin_pi(a) * gamma_right(1.0 - a) / kPi;
  if (a > 171.0) return 0.0;
  return 1.0 / gamma_right(a);
}

double log_abs_gamma(double a) {
  if (is_nonpositive_integer(a)) {
    throw Error(ErrorCode::PoleArgument, "log gamma has a pole at " + std::to_string(a));
  }
  if (a < 0.5) return std::log(kPi / std::abs(sin_pi(a))) - log_gamma_right(1.0 - a);
  return log_gamma_right(a);
}

SpecFunResult upper_incomplete_gamma_e(double a, double x) {
  if (std::isnan(a) || std::isnan(x) || x < 0.0 || a > 170.0) {
    throw Error(ErrorCode::DomainError,
                "incomplete gamma needs x >= 0 and a <= 170 (a=" + std::to_string(a) +
                    ", x=" + std::to_string(x) + ")");
  }
  if (x == 0.0) {
    if (a <= 0.0) throw Error(ErrorCode::DomainError, "Γ(a, 0) diverges for a <= 0");
    const double g = gamma(a);
    return {g, 4.0 * kEps * std::abs(g)};
  }
  if (std::isinf(x)) return {0.0, 0.0};

  const double log_prefactor = a * std::log(x) - x;
  if (a > 0.0) {
    if (x >= a + 1.0) {
      const double v = std::exp(log_prefactor) * upper_cf_scaled(a, x);
      return {v, (8.0 + std::abs(log_prefactor)) * kEps * v};
    }
    if (a < 1.0) {
      const double v = upper_small_a(a, x);
      return {v, 32.0 * kEps * (std::abs(v) + 1.0 / a)};
    }
    double err = 0.0;
    const double lower = std::exp(log_prefactor) * lower_series_scaled(a, x, &err);
    const double g = gamma(a);
    const double v = g - lower;
    return {v, 8.0 * kEps * g + err * std::exp(log_prefactor)};
  }

  // a <= 0.
  if (x >= 1.0) {
    const double v = std::exp(log_prefactor) * upper_cf_scaled(a, x);
    return {v, (8.0 + std::abs(log_prefactor)) * kEps * std::abs(v)};
  }
  const double start = a - std::floor(a);  // in [0, 1)
  double b = start;
  double g = start == 0.0 ? exp_integral_e1_small(x) : upper_small_a(start, x);
  const double ex = std::exp(-x);
  int steps = 0;
  while (b > a + 0.5) {
    // Γ(b-1, x) = (Γ(b, x) - x^{b-1} e^{-x}) / (b - 1)
    g = (g - std::pow(x, b - 1.0) * ex) / (b - 1.0);
    b -= 1.0;
    ++steps;
  }
  return {g, 32.0 * kEps * (steps + 1) * std::abs(g)};
}

double upper_incomplete_gamma(double a, double x) { return upper_incomplete_gamma_e(a, x).value; }

SpecFunResult bessel_j_e(double nu, double x) {
  if (std::isnan(x) || x < 0.0 || !(nu >= 0.0) || nu > 50.0 || !is_half_or_whole(nu)) {
    throw Error(ErrorCode::DomainError, "bessel_j needs integer or half-integer order in [0, 50] and x >= 0");
  }
  if (x == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0};
  double err = 0.0;
  double v = 0.0;
  if (x <= 12.0 || x < 0.5 * nu) {
    v = bessel_series(nu, x, &err);
  } else {
    v = bessel_miller(nu, x, &err);
  }
  return {v, err};
}

double bessel_j(double nu, double x) { return bessel_j_e(nu, x).value; }

double riemann_zeta(double s) {
  if (std::isnan(s)) throw Error(ErrorCode::DomainError, "zeta of NaN");
  if (s == 1.0) throw Error(ErrorCode::PoleArgument, "riemann zeta has a pole at s = 1");
  if (s == 0.0) return -0.5;
  if (s < 0.0) {
    if (s == std::floor(s) && std::fmod(-s, 2.0) == 0.0) return 0.0;  // trivial zeros
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sin_pi(0.5 * s) * gamma(1.0 - s) *
           riemann_zeta(1.0 - s);
  }
  if (s > 60.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
  return eta_positive(s) / (-std::expm1((1.0 - s) * std::log(2.0)));
}

double dirichlet_beta(double s) {
  if (std::isnan(s)) throw Error(ErrorCode::DomainError, "beta of NaN");
  if (s >= 0.0) {
    if (s > 60.0) return 1.0 - std::pow(3.0, -s);
    return beta_positive(s);
  }
  // β(s) = (2/π)^{1-s} cos(πs/2) Γ(1-s) β(1-s)
  return std::pow(2.0 / kPi, 1.0 - s) * sin_pi(0.5 * s + 0.5) * gamma(1.0 - s) *
         dirichlet_beta(1.0 - s);
}

double gauss_2f1_unit(double a, double b, double c) {
  if (is_nonpositive_integer(c)) {
    throw Error(ErrorCode::DomainError, "2F1 undefined for c a nonpositive integer");
  }
  if (!(c - a - b > 0.0)) {
    throw Error(ErrorCode::DivergentSeries, "2F1(a,b;c;1) diverges when c - a - b <= 0");
  }
  if (a == 0.0 || b == 0.0) return 1.0;
  const double rc = rgamma(c - a) * rgamma(c - b);
  if (rc == 0.0) return 0.0;
  const double sign = (gamma(c) > 0 ? 1.0 : -1.0) * (gamma(c - a - b) > 0 ? 1.0 : -1.0) *
                      (rc > 0 ? 1.0 : -1.0);
  const double log_mag = log_abs_gamma(c) + log_abs_gamma(c - a - b) - log_abs_gamma(c - a) -
                         log_abs_gamma(c - b);
  if (std::abs(log_mag) < 600.0 && c < 170.0 && c - a - b < 170.0) {
    return gamma(c) * gamma(c - a - b) * rc;
  }
  return sign * std::exp(log_mag);
}

double sphere_surface(int d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "dimension must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * d) / gamma(0.5 * d);
}

double unit_ball_volume(int d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "dimension must be >= 1");
  return std::pow(kPi, 0.5 * d) / gamma(0.5 * d + 1.0);
}

}  // namespace torus_riesz::specfun
