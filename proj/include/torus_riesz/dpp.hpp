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

#include <complex>
#include <cstdint>
#include <vector>

#include "torus_riesz/domain.hpp"
#include "torus_riesz/lattice.hpp"

namespace torus_riesz {

/// A finite set of dual-lattice frequencies. Its indicator is the spectral
/// weight of the translation-invariant projection kernel
///
///   K(u, v) = Σ_{w in support} exp(2πi⟨u - v, w⟩),
///
/// whose trace (the number of points of the process) is the support size.
class SpectralSupport {
 public:
  /// `dual_coeffs` are integer coordinates in the dual basis. Throws
  /// Error(DomainError) on an empty set, a duplicate, or a dimension
  /// mismatch.
  SpectralSupport(Lattice lattice, std::vector<IntVector> dual_coeffs);

  const Lattice& lattice() const { return lattice_; }
  int dim() const { return lattice_.dim(); }
  std::size_t trace() const { return coeffs_.size(); }
  const std::vector<IntVector>& coeffs() const { return coeffs_; }
  /// d x t matrix whose columns are the Cartesian dual vectors.
  const Matrix& dual_vectors() const { return dual_vectors_; }

 private:
  Lattice lattice_;
  std::vector<IntVector> coeffs_;
  Matrix dual_vectors_;
};

struct TorusConfiguration {
  std::vector<TorusPoint> points;
  std::uint64_t seed = 0;
  std::uint64_t replica = 0;
};

/// {λ in Z^d : ||λ||_∞ <= n} on the torus R^d/Z^d; trace (2n+1)^d.
SpectralSupport support_box(int d, int n);

/// {λ in Z^d : ||λ||² = N}; trace r_d(N). Throws Error(EmptyShell) when N is
/// not a sum of d squares.
SpectralSupport support_shell(int d, std::int64_t norm_sq);

/// Λ* ∩ N^{1/d} D, with D open (strict interior).
SpectralSupport support_scaled_domain(const Lattice& lattice, const DomainSpec& domain, double n,
                                      std::size_t cap = kDefaultEnumerationCap);

/// K(u, v). K(u, u) equals the trace.
std::complex<double> kernel_eval(const SpectralSupport& support, const TorusPoint& u,
                                 const TorusPoint& v);

/// [K(x_i, x_j)]_{ij}.
Eigen::MatrixXcd kernel_matrix(const SpectralSupport& support, const TorusConfiguration& config);

struct SamplerOptions {
  std::uint64_t max_attempts_per_point = 1'000'000;
};

/// Exact sample of the projection DPP by the sequential chain rule.
///
/// Point k+1 has density ||φ(x) - P_k φ(x)||² / (t - k) with respect to the
/// normalized measure on the torus, where φ(x) = (exp(2πi⟨x,w⟩))_w and P_k
/// projects onto the span of φ(x_1..x_k). Since ||φ(x)||² = t everywhere,
/// rejection from the uniform proposal with envelope t/(t-k) is exact.
/// Replica r draws from the Philox stream (seed, r).
/// Throws Error(RejectionBudgetExceeded) if a point needs more attempts than
/// allowed.
TorusConfiguration sample(const SpectralSupport& support, std::uint64_t seed,
                          std::uint64_t replica = 0, const SamplerOptions& options = {});

/// Replicas 0..count-1, in parallel; identical output for any thread count.
std::vector<TorusConfiguration> sample_replicas(const SpectralSupport& support, std::uint64_t seed,
                                                std::size_t count,
                                                const SamplerOptions& options = {});

}  // namespace torus_riesz
