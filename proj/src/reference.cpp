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

#include "torus_riesz/reference.hpp"

#include <cmath>
#include <vector>

#include "torus_riesz/error.hpp"

namespace torus_riesz::reference {

double pair_sum(const Matrix& points, double exponent) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < points.cols(); ++j) {
      total += std::pow((points.col(i) - points.col(j)).squaredNorm(), -0.5 * exponent);
    }
  }
  return 2.0 * total;
}

double periodic_energy(const Lattice& lattice, const TorusConfiguration& config, double s,
                       const EwaldSettings& settings) {
  const auto& pts = config.points;
  double total = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (std::size_t j = k + 1; j < pts.size(); ++j) {
      const Vector diff = pts[k].cartesian - pts[j].cartesian;
      if (distance_to_lattice(lattice, diff) < kCoincidenceRadius) {
        throw Error(ErrorCode::CoincidentPoints, "two points coincide on the torus");
      }
      total += f_s_lambda(lattice, s, diff, settings).value;
    }
  }
  return 2.0 * total;
}

MCReport mc_expected_energy(const SpectralSupport& support, double s, std::size_t replicas,
                            std::uint64_t seed, const EwaldSettings& settings) {
  if (replicas < 100) {
    throw Error(ErrorCode::DomainError, "Monte Carlo needs at least 100 replicas");
  }
  std::vector<double> energies;
  energies.reserve(replicas);
  for (std::size_t r = 0; r < replicas; ++r) {
    const TorusConfiguration cfg = sample(support, seed, r);
    energies.push_back(reference::periodic_energy(support.lattice(), cfg, s, settings));
  }
  return summarize(std::move(energies), seed);
}

}  // namespace torus_riesz::reference
