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

#include <string>

#include "torus_riesz/lattice.hpp"
#include "torus_riesz/rng.hpp"

namespace torus_riesz {

/// An open, origin-centred region of R^d: a ball, an axis-aligned box, or an
/// axis-aligned ellipsoid.
class DomainSpec {
 public:
  enum class Kind { Ball, Box, Ellipsoid };

  static DomainSpec ball(int d, double radius);
  /// Box (-h_1, h_1) x ... x (-h_d, h_d).
  static DomainSpec box(const Vector& half_widths);
  static DomainSpec ellipsoid(const Vector& semi_axes);

  /// Ball / cube with |D| = 1/covolume, the normalization |D||Λ| = 1.
  static DomainSpec unit_mass_ball(int d, double covolume);
  static DomainSpec unit_mass_cube(int d, double covolume);

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(axes_.size()); }
  /// Radius (repeated) for a ball, half-widths for a box, semi-axes for an
  /// ellipsoid.
  const Vector& axes() const { return axes_; }
  double volume() const { return volume_; }
  /// Radius of the smallest origin-centred ball containing the domain.
  double circumradius() const;

  /// Strict interior membership, with the boundary pushed in by 1e-12
  /// (relative).
  bool contains(const Vector& x) const;

  /// Uniform point in the domain.
  Vector sample(PhiloxStream& rng) const;

  std::string describe() const;

 private:
  DomainSpec(Kind kind, Vector axes);

  Kind kind_;
  Vector axes_;
  double volume_;
};

}  // namespace torus_riesz
