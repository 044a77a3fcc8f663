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

#include "torus_riesz/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "torus_riesz/error.hpp"

namespace torus_riesz {

namespace {

constexpr double kSingularThreshold = 1e-12;

Matrix hexagonal_basis() {
  Matrix a(2, 2);
  a << 1.0, 0.5,
       0.0, std::sqrt(3.0) / 2.0;
  return a;
}

Matrix d4_basis() {
  Matrix a(4, 4);
  // columns (1,-1,0,0), (0,1,-1,0), (0,0,1,-1), (0,0,1,1)
  a <<  1,  0,  0, 0,
       -1,  1,  0, 0,
        0, -1,  1, 1,
        0,  0, -1, 1;
  return a;
}

Matrix e8_basis() {
  // Even coordinate system; rows listed here are the basis vectors.
  Matrix rows(8, 8);
  rows.setZero();
  rows(0, 0) = 2.0;
  for (int i = 1; i < 7; ++i) {
    rows(i, i - 1) = -1.0;
    rows(i, i) = 1.0;
  }
  rows.row(7).setConstant(0.5);
  return rows.transpose();
}

}  // namespace

Lattice::Lattice(const Matrix& basis) : basis_(basis) {
  if (basis.rows() == 0 || basis.rows() != basis.cols()) {
    throw Error(ErrorCode::SingularBasis, "basis matrix must be square and non-empty");
  }
  if (!basis.allFinite()) {
    throw Error(ErrorCode::SingularBasis, "basis matrix has non-finite entries");
  }
  const double det = basis.determinant();
  if (!(std::abs(det) > kSingularThreshold)) {
    throw Error(ErrorCode::SingularBasis,
                "|det A| = " + std::to_string(std::abs(det)) + " is below 1e-12");
  }
  covolume_ = std::abs(det);
  Eigen::PartialPivLU<Matrix> lu(basis_);
  inverse_basis_ = lu.inverse();
  dual_basis_ = inverse_basis_.transpose();
  gram_ = basis_.transpose() * basis_;
  Eigen::LLT<Matrix> llt(gram_);
  cholesky_upper_ = llt.matrixU();
}

Vector Lattice::to_cartesian(const IntVector& coeffs) const {
  return basis_ * coeffs.cast<double>();
}

double Lattice::covering_bound() const {
  double total = 0.0;
  for (int j = 0; j < dim(); ++j) total += basis_.col(j).norm();
  return 0.5 * total;
}

Lattice build_lattice(const Matrix& basis) { return Lattice(basis); }

Lattice normalize_covolume(const Lattice& lattice) {
  const double factor = std::pow(lattice.covolume(), -1.0 / lattice.dim());
  return lattice.scaled(factor);
}

Lattice lattice_from_gram(const Matrix& gram) {
  if (gram.rows() == 0 || gram.rows() != gram.cols()) {
    throw Error(ErrorCode::BadGramFile, "Gram matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  if (!((gram - gram.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale)) {
    throw Error(ErrorCode::BadGramFile, "Gram matrix is not symmetric");
  }
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::BadGramFile, "Gram matrix is not positive definite");
  }
  Matrix upper = llt.matrixU();
  try {
    return Lattice(upper);
  } catch (const Error&) {
    throw Error(ErrorCode::BadGramFile, "Gram matrix is numerically singular");
  }
}

Lattice lattice_from_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadGramFile, "cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::BadGramFile, "non-numeric entry '" + tok + "' in " + path);
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  const auto d = rows.size();
  if (d == 0) throw Error(ErrorCode::BadGramFile, "empty Gram file " + path);
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) {
      throw Error(ErrorCode::BadGramFile,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(d));
    }
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = rows[i][j];
  }
  return lattice_from_gram(gram);
}

Lattice named_lattice(std::string_view name, bool normalize) {
  auto finish = [normalize](const Lattice& l) { return normalize ? normalize_covolume(l) : l; };
  if (name.starts_with("gram:")) {
    return finish(lattice_from_gram_file(std::string(name.substr(5))));
  }
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'z')) {
    int d = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), d);
    if (ec == std::errc() && ptr == name.data() + name.size() && d >= 1 && d <= 64) {
      return finish(Lattice(Matrix::Identity(d, d)));
    }
  }
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "hexagonal" || lower == "triangular" || lower == "a2") {
    return finish(Lattice(hexagonal_basis()));
  }
  if (lower == "d4") return finish(Lattice(d4_basis()));
  if (lower == "e8") return finish(Lattice(e8_basis()));
  throw Error(ErrorCode::DomainError, "unknown lattice name '" + std::string(name) + "'");
}

TorusPoint torus_point_from_coeffs(const Vector& coeffs, const Lattice& lattice) {
  TorusPoint p;
  p.coeffs.resize(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    double f = coeffs[i] - std::floor(coeffs[i]);
    if (f >= 1.0) f = 0.0;  // rounding of tiny negatives
    p.coeffs[i] = f;
  }
  p.cartesian = lattice.basis() * p.coeffs;
  return p;
}

TorusPoint reduce(const Vector& x, const Lattice& lattice) {
  return torus_point_from_coeffs(lattice.coefficients_of(x), lattice);
}

std::vector<LatticeVector> enumerate_ball(const Lattice& lattice, const Vector& center,
                                          double radius, std::size_t cap) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::DomainError, "enumeration radius must be finite and >= 0");
  }
  const int d = lattice.dim();
  const Matrix& r = lattice.cholesky_upper();
  const Matrix& inv = lattice.inverse_basis();
  const Vector c0 = inv * center;
  const double r2 = radius * radius;
  const double accept = r2 * (1.0 + 1e-12) + 1e-300;
  // Pruning bounds are widened slightly; the final test below is exact.
  const double prune = r2 * (1.0 + 1e-9) + 1e-24;

  std::vector<double> box(d);
  for (int i = 0; i < d; ++i) box[i] = radius * inv.row(i).norm() * (1.0 + 1e-9) + 1e-12;

  std::vector<LatticeVector> out;
  IntVector k(d);
  std::function<void(int, double)> descend = [&](int level, double used) {
    double partial = 0.0;
    for (int j = level + 1; j < d; ++j) partial += r(level, j) * (static_cast<double>(k[j]) - c0[j]);
    const double rem = std::max(0.0, prune - used);
    const double half = std::sqrt(rem) / r(level, level);
    const double mid = c0[level] - partial / r(level, level);
    const double lo = std::max(mid - half, c0[level] - box[level]);
    const double hi = std::min(mid + half, c0[level] + box[level]);
    for (auto ki = static_cast<std::int64_t>(std::ceil(lo));
         static_cast<double>(ki) <= hi; ++ki) {
      k[level] = ki;
      const double t = r(level, level) * (static_cast<double>(ki) - c0[level]) + partial;
      const double next = used + t * t;
      if (next > prune) continue;
      if (level > 0) {
        descend(level - 1, next);
        continue;
      }
      LatticeVector v;
      v.coeffs = k;
      v.cartesian = lattice.to_cartesian(k);
      if ((v.cartesian - center).squaredNorm() > accept) continue;
      v.norm_sq = v.cartesian.squaredNorm();
      if (out.size() >= cap) {
        throw Error(ErrorCode::CapExceeded,
                    "ball enumeration exceeded cap of " + std::to_string(cap) + " points");
      }
      out.push_back(std::move(v));
    }
  };
  descend(d - 1, 0.0);
  return out;
}

double shortest_vector(const Lattice& lattice) {
  double radius = std::numeric_limits<double>::infinity();
  for (int j = 0; j < lattice.dim(); ++j) radius = std::min(radius, lattice.basis().col(j).norm());
  const auto pts = enumerate_ball(lattice, Vector::Zero(lattice.dim()), radius);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : pts) {
    if (v.coeffs.isZero()) continue;
    best = std::min(best, v.norm_sq);
  }
  return std::sqrt(best);
}

double distance_to_lattice(const Lattice& lattice, const Vector& x) {
  const TorusPoint p = reduce(x, lattice);
  // The origin is within |p| of p, so the nearest lattice point is too.
  const double bound = p.cartesian.norm();
  const auto pts = enumerate_ball(lattice, p.cartesian, bound);
  double best = bound;
  for (const auto& v : pts) best = std::min(best, (p.cartesian - v.cartesian).norm());
  return best;
}

}  // namespace torus_riesz
