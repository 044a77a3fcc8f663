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

#include <array>
#include <cstdint>
#include <limits>

namespace torus_riesz {

/// Philox4x32-10 counter-based generator.
///
/// A stream is identified by (seed, stream_id): the seed is the key and the
/// stream id occupies the upper half of the 128-bit counter, so replica r of
/// a Monte Carlo run draws the same numbers no matter which thread runs it.
/// Satisfies UniformRandomBitGenerator.
class PhiloxStream {
 public:
  using result_type = std::uint32_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal (Box–Muller, both values used).
  double normal();

  std::uint64_t draws() const { return position_; }

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                            std::array<std::uint32_t, 2> key);

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;  // 32-bit words consumed
  std::array<std::uint32_t, 4> buffer_{};
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace torus_riesz
