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

#include "torus_riesz/dpp.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <string>

#include "torus_riesz/error.hpp"
#include "torus_riesz/rng.hpp"
#include "torus_riesz/specfun.hpp"

namespace torus_riesz {

namespace {

using specfun::kPi;

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

double reduced_phase(const IntVector& k, const Vector& c) {
  double phase = 0.0;
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    const double p = static_cast<double>(k[i]) * c[i];
    phase += p - std::round(p);
  }
  return phase - std::round(phase);
}

void fill_features(const std::vector<IntVector>& coeffs, const Vector& c, Eigen::VectorXcd& phi) {
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const double theta = 2.0 * kPi * reduced_phase(coeffs[j], c);
    phi[static_cast<Eigen::Index>(j)] = {std::cos(theta), std::sin(theta)};
  }
}

}  // namespace

SpectralSupport::SpectralSupport(Lattice lattice, std::vector<IntVector> dual_coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(dual_coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DomainError, "spectral support must be non-empty");
  const int d = lattice_.dim();
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& k : coeffs_) {
    if (k.size() != d) throw Error(ErrorCode::DomainError, "support vector has wrong dimension");
    if (!seen.insert(std::vector<std::int64_t>(k.data(), k.data() + d)).second) {
      throw Error(ErrorCode::DomainError, "support contains a duplicate frequency");
    }
  }
  dual_vectors_.resize(d, static_cast<Eigen::Index>(coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    dual_vectors_.col(static_cast<Eigen::Index>(j)) =
        lattice_.dual_basis() * coeffs_[j].cast<double>();
  }
}

SpectralSupport support_box(int d, int n) {
  if (d < 1 || n < 0) throw Error(ErrorCode::DomainError, "support_box needs d >= 1 and n >= 0");
  std::vector<IntVector> out;
  IntVector k = IntVector::Constant(d, -n);
  for (;;) {
    out.push_back(k);
    int i = 0;
    while (i < d && k[i] == n) k[i++] = -n;
    if (i == d) break;
    ++k[i];
  }
  return SpectralSupport(Lattice(Matrix::Identity(d, d)), std::move(out));
}

SpectralSupport support_shell(int d, std::int64_t norm_sq) {
  if (d < 1 || norm_sq < 0) throw Error(ErrorCode::DomainError, "support_shell needs d >= 1, N >= 0");
  Lattice zd(Matrix::Identity(d, d));
  const auto pts = enumerate_ball(zd, Vector::Zero(d), std::sqrt(static_cast<double>(norm_sq)) + 0.5);
  std::vector<IntVector> out;
  for (const auto& v : pts) {
    if (v.coeffs.squaredNorm() == norm_sq) out.push_back(v.coeffs);
  }
  if (out.empty()) {
    throw Error(ErrorCode::EmptyShell,
                std::to_string(norm_sq) + " is not a sum of " + std::to_string(d) + " squares");
  }
  std::sort(out.begin(), out.end(), lex_less);
  return SpectralSupport(std::move(zd), std::move(out));
}

SpectralSupport support_scaled_domain(const Lattice& lattice, const DomainSpec& domain, double n,
                                      std::size_t cap) {
  if (domain.dim() != lattice.dim()) throw Error(ErrorCode::DomainError, "domain dimension mismatch");
  if (!(n > 0.0)) throw Error(ErrorCode::DomainError, "N must be positive");
  const double scale = std::pow(n, 1.0 / lattice.dim());
  const Lattice dual = lattice.dual();
  const auto pts =
      enumerate_ball(dual, Vector::Zero(lattice.dim()), scale * domain.circumradius(), cap);
  std::vector<IntVector> out;
  for (const auto& w : pts) {
    if (domain.contains(w.cartesian / scale)) out.push_back(w.coeffs);
  }
  if (out.empty()) throw Error(ErrorCode::DomainError, "scaled domain contains no dual vector");
  std::sort(out.begin(), out.end(), lex_less);
  return SpectralSupport(lattice, std::move(out));
}

std::complex<double> kernel_eval(const SpectralSupport& support, const TorusPoint& u,
                                 const TorusPoint& v) {
  const Vector diff = u.coeffs - v.coeffs;
  double re = 0.0;
  double im = 0.0;
  for (const auto& k : support.coeffs()) {
    const double theta = 2.0 * kPi * reduced_phase(k, diff);
    re += std::cos(theta);
    im += std::sin(theta);
  }
  return {re, im};
}

Eigen::MatrixXcd kernel_matrix(const SpectralSupport& support, const TorusConfiguration& config) {
  const auto n = static_cast<Eigen::Index>(config.points.size());
  Eigen::MatrixXcd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = kernel_eval(support, config.points[i], config.points[j]);
  }
  return k;
}

TorusConfiguration sample(const SpectralSupport& support, std::uint64_t seed, std::uint64_t replica,
                          const SamplerOptions& options) {
  const auto t = static_cast<Eigen::Index>(support.trace());
  const int d = support.dim();
  const Lattice& lattice = support.lattice();
  PhiloxStream rng(seed, replica);

  TorusConfiguration config;
  config.seed = seed;
  config.replica = replica;
  config.points.reserve(static_cast<std::size_t>(t));

  Eigen::MatrixXcd basis(t, t);  // orthonormal columns spanning φ(x_1..x_k)
  Eigen::VectorXcd phi(t);
  Eigen::VectorXcd proj(t);
  Vector c(d);

  for (Eigen::Index k = 0; k < t; ++k) {
    std::uint64_t attempts = 0;
    for (;;) {
      if (++attempts > options.max_attempts_per_point) {
        throw Error(ErrorCode::RejectionBudgetExceeded,
                    "point " + std::to_string(k + 1) + " of " + std::to_string(t) +
                        " was not accepted within " + std::to_string(options.max_attempts_per_point) +
                        " proposals");
      }
      for (int i = 0; i < d; ++i) c[i] = rng.uniform();
      const double u = rng.uniform();
      fill_features(support.coeffs(), c, phi);
      double residual = static_cast<double>(t);
      if (k > 0) {
        proj.head(k).noalias() = basis.leftCols(k).adjoint() * phi;
        residual -= proj.head(k).squaredNorm();
      }
      if (u * static_cast<double>(t) < residual) break;
    }
    config.points.push_back(torus_point_from_coeffs(c, lattice));

    // Modified Gram–Schmidt, repeated once when cancellation is severe.
    Eigen::VectorXcd r = phi;
    const double phi_norm = r.norm();
    for (int pass = 0; pass < 2; ++pass) {
      const double before = r.norm();
      for (Eigen::Index j = 0; j < k; ++j) r -= basis.col(j) * basis.col(j).dot(r);
      if (r.norm() > 0.5 * before) break;
    }
    const double rn = r.norm();
    if (!(rn > 1e-8 * phi_norm)) {
      throw Error(ErrorCode::RejectionBudgetExceeded,
                  "accepted point is numerically in the span of earlier points");
    }
    basis.col(k) = r / rn;
  }
  return config;
}

std::vector<TorusConfiguration> sample_replicas(const SpectralSupport& support, std::uint64_t seed,
                                                std::size_t count, const SamplerOptions& options) {
  std::vector<TorusConfiguration> out(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < n; ++r) {
    try {
      out[static_cast<std::size_t>(r)] = sample(support, seed, static_cast<std::uint64_t>(r), options);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace torus_riesz
