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

#pragma once

#include <cmath>
#include <limits>

#include "menger/vec3.hpp"

namespace menger {

/// Extended positive radius: either a finite positive value or +infinity
/// (straight/degenerate configurations). Never zero or negative.
class Radius {
 public:
  /// Throws DomainError unless `value > 0` (NaN rejected, +inf accepted).
  explicit Radius(double value);

  static Radius infinite() {
    return Radius(std::numeric_limits<double>::infinity());
  }
  /// Radius with the given curvature 1/R; curvature 0 maps to +infinity.
  static Radius from_curvature(double curvature);

  double value() const { return value_; }
  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  /// 1/R, exactly 0 for an infinite radius.
  double curvature() const { return is_infinite() ? 0.0 : 1.0 / value_; }

  friend bool operator==(const Radius&, const Radius&) = default;
  friend auto operator<=>(const Radius& a, const Radius& b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_;
};

// Triples whose doubled area falls below this multiple of |b-a||c-a| are
// treated as collinear.
inline constexpr double kCollinearTolerance = 1e-14;

/// Menger curvature 1/R(a,b,c) from the three side lengths and the norm of
/// (b-a)x(c-a). No validation; 0 for (near) collinear triples. All
/// evaluators funnel through this kernel so that shared triples produce
/// bit-identical values.
inline double menger_curvature_kernel(double ab, double bc, double ca,
                                      double cross_norm) {
  // Area = cross_norm / 2; collinear when Area < tol * |ab| * |ca|.
  if (cross_norm < 2.0 * kCollinearTolerance * ab * ca) return 0.0;
  return 2.0 * cross_norm / (ab * bc * ca);
}

/// Radius of the circle through three pairwise distinct points.
/// Throws DomainError on repeated points.
Radius circumradius(const Point3& a, const Point3& b, const Point3& c);

/// 1/circumradius; 0 for collinear triples.
double menger_curvature(const Point3& a, const Point3& b, const Point3& c);

/// Radius of the circle through x and y that is tangent to the unit vector t
/// at x. Infinite when y lies on the tangent line.
Radius tangent_point_radius(const Point3& x, const Vec3& t, const Point3& y);

/// Inverse tangent-point radius 2 dist(y, x + R t) / |y-x|^2 without checks;
/// 0 when y-x is (numerically) parallel to t.
inline double tangent_point_curvature_kernel(const Vec3& t, const Vec3& y_minus_x) {
  const double d2 = norm2(y_minus_x);
  const double off_line = norm(cross(t, y_minus_x));
  if (off_line < kCollinearTolerance * std::sqrt(d2)) return 0.0;
  return 2.0 * off_line / d2;
}

/// Shorter arclength distance between parameters s,t on a unit-length loop.
double intrinsic_distance(double s, double t);

}  // namespace menger
