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
#include <vector>

#include "torus_riesz/dpp.hpp"

namespace torus_riesz {

/// Σ_{w≠w'} |w - w'|^{-exponent} over the support (ordered pairs).
///
/// Small supports use the direct O(t²) kernel. Large ones histogram the
/// difference vectors by FFT autocorrelation of the support indicator on its
/// coefficient bounding box and then sum count(δ)·|δ|^{-exponent}.
double pair_sum(const SpectralSupport& support, double exponent);

/// Direct OpenMP kernel over the columns of `points` (each unordered pair
/// once, doubled).
double pair_sum_direct(const Matrix& points, double exponent);

/// Integer difference-vector counts {δ: #{(w,w') : w - w' = δ}} for δ ≠ 0,
/// via FFT autocorrelation. Throws Error(CapExceeded) if the padded grid
/// would exceed `max_cells`.
struct DifferenceCounts {
  std::vector<IntVector> deltas;
  std::vector<double> counts;
};
DifferenceCounts difference_counts(const SpectralSupport& support,
                                   std::size_t max_cells = std::size_t{1} << 26);

double pair_sum_fft(const SpectralSupport& support, double exponent);

/// Supports larger than this use the FFT route.
inline constexpr std::size_t kDirectPairSumLimit = 3000;

}  // namespace torus_riesz
