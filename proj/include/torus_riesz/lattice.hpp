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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace torus_riesz {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// A full-rank lattice A·Z^d in R^d.
///
/// The basis vectors are the *columns* of A. The fundamental domain is the
/// half-open coefficient cube [0,1)^d mapped through A. Instances are
/// immutable once built and safe to share between threads.
class Lattice {
 public:
  /// Throws Error(SingularBasis) when the matrix is not square or
  /// |det A| <= 1e-12.
  explicit Lattice(const Matrix& basis);

  int dim() const { return static_cast<int>(basis_.rows()); }
  const Matrix& basis() const { return basis_; }
  /// (A^t)^{-1}; its columns generate the dual lattice.
  const Matrix& dual_basis() const { return dual_basis_; }
  /// A^{-1}, maps Cartesian coordinates to basis coefficients.
  const Matrix& inverse_basis() const { return inverse_basis_; }
  const Matrix& gram() const { return gram_; }
  double covolume() const { return covolume_; }

  Lattice dual() const { return Lattice(dual_basis_); }
  Lattice scaled(double factor) const { return Lattice(factor * basis_); }

  Vector to_cartesian(const IntVector& coeffs) const;
  Vector coefficients_of(const Vector& x) const { return inverse_basis_ * x; }

  /// Half the sum of the basis column norms. Every point of R^d lies within
  /// this distance of some lattice point.
  double covering_bound() const;

  /// Upper-triangular R with gram = R^t R.
  const Matrix& cholesky_upper() const { return cholesky_upper_; }

 private:
  Matrix basis_;
  Matrix dual_basis_;
  Matrix inverse_basis_;
  Matrix gram_;
  Matrix cholesky_upper_;
  double covolume_;
};

struct LatticeVector {
  IntVector coeffs;
  Vector cartesian;
  double norm_sq = 0.0;
};

/// A point of the flat torus R^d / Λ, stored by its representative in the
/// fundamental domain.
struct TorusPoint {
  Vector coeffs;     // entries in [0,1)
  Vector cartesian;  // basis * coeffs
};

Lattice build_lattice(const Matrix& basis);

/// Lattices by name: "Z<d>" (e.g. "Z1", "Z3"), "hexagonal", "D4", "E8", or
/// "gram:<path>" for a whitespace-separated Gram matrix file. When
/// `normalize_covolume` is set the basis is rescaled to covolume 1.
Lattice named_lattice(std::string_view name, bool normalize_covolume);

/// Basis from a symmetric positive definite Gram matrix (upper Cholesky
/// factor). Throws Error(BadGramFile) if the matrix is not SPD.
Lattice lattice_from_gram(const Matrix& gram);

/// Gram matrix text format: optional '#' comment lines, then d rows of d
/// numbers.
Lattice lattice_from_gram_file(const std::string& path);

Lattice normalize_covolume(const Lattice& lattice);

TorusPoint reduce(const Vector& x, const Lattice& lattice);
TorusPoint torus_point_from_coeffs(const Vector& coeffs, const Lattice& lattice);

/// All v in Λ with |v - center| <= radius.
///
/// Coordinates are bounded by the coefficient box
/// |k_i - (A^{-1}c)_i| <= radius * ||row_i(A^{-1})||, tightened level by level
/// with the Cholesky factor of the Gram matrix. Throws Error(CapExceeded) if
/// more than `cap` points qualify.
std::vector<LatticeVector> enumerate_ball(const Lattice& lattice,
                                          const Vector& center, double radius,
                                          std::size_t cap = kDefaultEnumerationCap);

/// Length of the shortest nonzero lattice vector.
double shortest_vector(const Lattice& lattice);

/// min over v in Λ of |x - v|.
double distance_to_lattice(const Lattice& lattice, const Vector& x);

}  // namespace torus_riesz
