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

#include "torus_riesz/domain.hpp"

#include <cmath>
#include <sstream>

#include "torus_riesz/error.hpp"
#include "torus_riesz/specfun.hpp"

namespace torus_riesz {

namespace {

constexpr double kBoundarySlack = 1e-12;

}  // namespace

DomainSpec::DomainSpec(Kind kind, Vector axes) : kind_(kind), axes_(std::move(axes)) {
  if (axes_.size() < 1) throw Error(ErrorCode::DomainError, "domain dimension must be >= 1");
  for (Eigen::Index i = 0; i < axes_.size(); ++i) {
    if (!(axes_[i] > 0.0) || !std::isfinite(axes_[i])) {
      throw Error(ErrorCode::DomainError, "domain extents must be positive and finite");
    }
  }
  const double prod = axes_.prod();
  switch (kind_) {
    case Kind::Box:
      volume_ = std::pow(2.0, static_cast<double>(axes_.size())) * prod;
      break;
    case Kind::Ball:
    case Kind::Ellipsoid:
      volume_ = specfun::unit_ball_volume(static_cast<int>(axes_.size())) * prod;
      break;
  }
}

DomainSpec DomainSpec::ball(int d, double radius) {
  if (d < 1) throw Error(ErrorCode::DomainError, "domain dimension must be >= 1");
  return DomainSpec(Kind::Ball, Vector::Constant(d, radius));
}

DomainSpec DomainSpec::box(const Vector& half_widths) { return DomainSpec(Kind::Box, half_widths); }

DomainSpec DomainSpec::ellipsoid(const Vector& semi_axes) {
  return DomainSpec(Kind::Ellipsoid, semi_axes);
}

DomainSpec DomainSpec::unit_mass_ball(int d, double covolume) {
  // ω_{d-1} r^d / d = 1/|Λ|
  const double r = std::pow(d / (specfun::sphere_surface(d) * covolume), 1.0 / d);
  return ball(d, r);
}

DomainSpec DomainSpec::unit_mass_cube(int d, double covolume) {
  return box(Vector::Constant(d, 0.5 * std::pow(covolume, -1.0 / d)));
}

double DomainSpec::circumradius() const {
  switch (kind_) {
    case Kind::Box: return axes_.norm();
    case Kind::Ball:
    case Kind::Ellipsoid: return axes_.maxCoeff();
  }
  return 0.0;
}

bool DomainSpec::contains(const Vector& x) const {
  if (x.size() != axes_.size()) throw Error(ErrorCode::DomainError, "dimension mismatch");
  const double limit = 1.0 - kBoundarySlack;
  if (kind_ == Kind::Box) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (!(std::abs(x[i]) < axes_[i] * limit)) return false;
    }
    return true;
  }
  const double q = x.cwiseQuotient(axes_).squaredNorm();
  return q < limit * limit;
}

Vector DomainSpec::sample(PhiloxStream& rng) const {
  const int d = dim();
  Vector x(d);
  if (kind_ == Kind::Box) {
    for (int i = 0; i < d; ++i) x[i] = (2.0 * rng.uniform() - 1.0) * axes_[i];
    return x;
  }
  if (d == 1) {
    x[0] = (2.0 * rng.uniform() - 1.0) * axes_[0];
    return x;
  }
  for (int i = 0; i < d; ++i) x[i] = rng.normal();
  const double n = x.norm();
  const double r = std::pow(rng.uniform(), 1.0 / d);
  return (r / n) * x.cwiseProduct(axes_);
}

std::string DomainSpec::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Ball: out << "ball(r=" << axes_[0] << ")"; break;
    case Kind::Box: out << "box(half-widths=" << axes_.transpose() << ")"; break;
    case Kind::Ellipsoid: out << "ellipsoid(semi-axes=" << axes_.transpose() << ")"; break;
  }
  return out.str();
}

}  // namespace torus_riesz
