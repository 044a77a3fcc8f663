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

#include "torus_riesz/pair_sum.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "torus_riesz/error.hpp"
#include "torus_riesz/parallel.hpp"

namespace torus_riesz {

namespace {

// FFTW planning is not thread-safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

double pair_sum_direct(const Matrix& points, double exponent) {
  const auto n = static_cast<std::int64_t>(points.cols());
  // Row i pairs with j > i; rows are the work items.
  const double half = chunked_sum(n, [&](std::int64_t i) {
    double acc = 0.0;
    for (std::int64_t j = i + 1; j < n; ++j) {
      acc += std::pow((points.col(i) - points.col(j)).squaredNorm(), -0.5 * exponent);
    }
    return acc;
  });
  return 2.0 * half;
}

DifferenceCounts difference_counts(const SpectralSupport& support, std::size_t max_cells) {
  const int d = support.dim();
  const auto& coeffs = support.coeffs();
  IntVector lo = coeffs.front();
  IntVector hi = coeffs.front();
  for (const auto& k : coeffs) {
    lo = lo.cwiseMin(k);
    hi = hi.cwiseMax(k);
  }
  std::vector<int> extent(d);
  std::vector<int> size(d);
  std::size_t cells = 1;
  for (int i = 0; i < d; ++i) {
    extent[i] = static_cast<int>(hi[i] - lo[i] + 1);
    size[i] = 2 * extent[i];  // room for differences in [-(L-1), L-1] without wrap
    cells *= static_cast<std::size_t>(size[i]);
    if (cells > max_cells) {
      throw Error(ErrorCode::CapExceeded,
                  "difference histogram grid exceeds " + std::to_string(max_cells) + " cells");
    }
  }
  std::size_t complex_cells = cells / static_cast<std::size_t>(size[d - 1]) *
                              static_cast<std::size_t>(size[d - 1] / 2 + 1);

  double* grid = fftw_alloc_real(cells);
  fftw_complex* spec = fftw_alloc_complex(complex_cells);
  fftw_plan forward;
  fftw_plan backward;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    forward = fftw_plan_dft_r2c(d, size.data(), grid, spec, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r(d, size.data(), spec, grid, FFTW_ESTIMATE);
  }

  auto flat = [&](const IntVector& idx) {
    std::size_t off = 0;
    for (int i = 0; i < d; ++i) {
      const std::int64_t m = ((idx[i] % size[i]) + size[i]) % size[i];
      off = off * static_cast<std::size_t>(size[i]) + static_cast<std::size_t>(m);
    }
    return off;
  };

  std::fill(grid, grid + cells, 0.0);
  for (const auto& k : coeffs) grid[flat(k - lo)] = 1.0;
  fftw_execute(forward);
  for (std::size_t i = 0; i < complex_cells; ++i) {
    const double re = spec[i][0];
    const double im = spec[i][1];
    spec[i][0] = re * re + im * im;
    spec[i][1] = 0.0;
  }
  fftw_execute(backward);

  DifferenceCounts out;
  const double norm = 1.0 / static_cast<double>(cells);
  IntVector delta(d);
  for (int i = 0; i < d; ++i) delta[i] = -(extent[i] - 1);
  for (;;) {
    if (!delta.isZero()) {
      const double c = std::round(grid[flat(delta)] * norm);
      if (c > 0.0) {
        out.deltas.push_back(delta);
        out.counts.push_back(c);
      }
    }
    int i = d - 1;
    while (i >= 0 && delta[i] == extent[i] - 1) {
      delta[i] = -(extent[i] - 1);
      --i;
    }
    if (i < 0) break;
    ++delta[i];
  }

  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  fftw_free(grid);
  fftw_free(spec);
  return out;
}

double pair_sum_fft(const SpectralSupport& support, double exponent) {
  const DifferenceCounts hist = difference_counts(support);
  const Matrix& dual = support.lattice().dual_basis();
  const auto n = static_cast<std::int64_t>(hist.deltas.size());
  return chunked_sum(n, [&](std::int64_t i) {
    const auto idx = static_cast<std::size_t>(i);
    const double r2 = (dual * hist.deltas[idx].cast<double>()).squaredNorm();
    return hist.counts[idx] * std::pow(r2, -0.5 * exponent);
  });
}

double pair_sum(const SpectralSupport& support, double exponent) {
  if (support.trace() <= kDirectPairSumLimit) return pair_sum_direct(support.dual_vectors(), exponent);
  return pair_sum_fft(support, exponent);
}

}  // namespace torus_riesz
