// Copyright 2026 The Menger Knots Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "menger/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "menger/errors.hpp"

namespace menger {

Radius::Radius(double value) : value_(value) {
  if (!(value > 0.0)) {
    throw DomainError("radius must be positive, got " + std::to_string(value));
  }
}

Radius Radius::from_curvature(double curvature) {
  if (curvature == 0.0) return infinite();
  return Radius(1.0 / curvature);
}

namespace {

void require_distinct(const Point3& a, const Point3& b, const Point3& c) {
  if (a == b || b == c || a == c) {
    throw DomainError("circumradius requires three pairwise distinct points");
  }
}

}  // namespace

double menger_curvature(const Point3& a, const Point3& b, const Point3& c) {
  require_distinct(a, b, c);
  const double ab = distance(a, b);
  const double bc = distance(b, c);
  const double ca = distance(c, a);
  return menger_curvature_kernel(ab, bc, ca, norm(cross(b - a, c - a)));
}

Radius circumradius(const Point3& a, const Point3& b, const Point3& c) {
  return Radius::from_curvature(menger_curvature(a, b, c));
}

Radius tangent_point_radius(const Point3& x, const Vec3& t, const Point3& y) {
  if (x == y) throw DomainError("tangent-point radius requires y != x");
  if (!(std::abs(norm(t) - 1.0) <= 1e-9)) {
    throw DomainError("tangent-point radius requires a unit tangent");
  }
  return Radius::from_curvature(tangent_point_curvature_kernel(t, y - x));
}

double intrinsic_distance(double s, double t) {
  if (!(s >= 0.0 && s < 1.0 && t >= 0.0 && t < 1.0)) {
    throw DomainError("intrinsic distance arguments must lie in [0,1)");
  }
  const double d = std::abs(s - t);
  return std::min(d, 1.0 - d);
}

}  // namespace menger
