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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <vector>

namespace torus_riesz {

// Number of fixed work chunks for reductions. The partition depends only on
// the problem size, so results are bit-identical for every thread count.
inline constexpr std::int64_t kReductionChunks = 256;

/// Σ_{i<n} term(i) reduced in a thread-count independent order. Exceptions
/// thrown by `term` are rethrown on the calling thread.
template <class Term>
double chunked_sum(std::int64_t n, Term&& term) {
  if (n <= 0) return 0.0;
  const std::int64_t chunks = std::min(n, kReductionChunks);
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = n * c / chunks;
    const std::int64_t hi = n * (c + 1) / chunks;
    double acc = 0.0;
    try {
      for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
    partial[static_cast<std::size_t>(c)] = acc;
  }
  if (failure) std::rethrow_exception(failure);
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace torus_riesz
