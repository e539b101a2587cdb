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

#include "menger/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "menger/errors.hpp"
#include "menger/random.hpp"

namespace menger {

PolygonalLoop PolygonalLoop::from_vertices(std::vector<Point3> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw ConstructionError("a loop needs at least 3 vertices, got " +
                            std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(points[i])) {
      throw ConstructionError("vertex " + std::to_string(i) +
                              " has a non-finite coordinate");
    }
  }

  PolygonalLoop loop;
  loop.edge_lengths_.resize(n);
  loop.cum_arclength_.resize(n);
  loop.tangents_.resize(n);
  double running = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 edge = points[(i + 1) % n] - points[i];
    const double len = norm(edge);
    if (!(len > 0.0)) {
      throw ConstructionError("edge " + std::to_string(i) + " (vertex " +
                              std::to_string(i) + " to " +
                              std::to_string((i + 1) % n) +
                              ") has zero length");
    }
    loop.edge_lengths_[i] = len;
    loop.tangents_[i] = edge / len;
    loop.cum_arclength_[i] = running;
    running += len;
  }
  loop.total_length_ = running;
  loop.vertices_ = std::move(points);
  return loop;
}

Point3 PolygonalLoop::edge_midpoint(std::size_t i) const {
  const Point3& a = vertices_[i];
  const Point3& b = vertices_[(i + 1) % size()];
  return a + 0.5 * (b - a);
}

std::vector<SamplePoint> PolygonalLoop::sample_points() const {
  std::vector<SamplePoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    double s = (cum_arclength_[i] + 0.5 * edge_lengths_[i]) / total_length_;
    if (s >= 1.0) s = std::nextafter(1.0, 0.0);
    out.push_back({s, edge_midpoint(i), tangents_[i], edge_lengths_[i]});
  }
  return out;
}

PolygonalLoop map_vertices(const PolygonalLoop& loop,
                           const std::function<Point3(const Point3&)>& f) {
  std::vector<Point3> pts;
  pts.reserve(loop.size());
  for (const Point3& v : loop.vertices()) pts.push_back(f(v));
  return PolygonalLoop::from_vertices(std::move(pts));
}

PolygonalLoop reversed(const PolygonalLoop& loop) {
  const auto v = loop.vertices();
  std::vector<Point3> pts;
  pts.reserve(v.size());
  pts.push_back(v[0]);
  for (std::size_t i = v.size() - 1; i > 0; --i) pts.push_back(v[i]);
  return PolygonalLoop::from_vertices(std::move(pts));
}

PolygonalLoop normalize_to_C(const PolygonalLoop& loop) {
  const double scale = 1.0 / loop.total_length();
  const Point3 anchor = loop.vertices()[0];
  std::vector<Point3> pts;
  pts.reserve(loop.size());
  for (const Point3& v : loop.vertices()) pts.push_back((v - anchor) * scale);
  pts[0] = Point3{};
  return PolygonalLoop::from_vertices(std::move(pts));
}

PolygonalLoop normalize_barycentric(const PolygonalLoop& loop) {
  const double scale = 1.0 / loop.total_length();
  Vec3 center;
  for (const Point3& v : loop.vertices()) center += v;
  center = center / static_cast<double>(loop.size());
  std::vector<Point3> pts;
  pts.reserve(loop.size());
  for (const Point3& v : loop.vertices()) pts.push_back((v - center) * scale);
  return PolygonalLoop::from_vertices(std::move(pts));
}

PolygonalLoop resample_uniform(const PolygonalLoop& loop, int m) {
  if (m < 3) throw DomainError("resample_uniform needs m >= 3");
  const auto verts = loop.vertices();
  const auto lens = loop.edge_lengths();
  const auto cum = loop.cum_arclength();
  const std::size_t n = loop.size();
  const double total = loop.total_length();

  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(m));
  std::size_t edge = 0;
  for (int k = 0; k < m; ++k) {
    const double target = total * static_cast<double>(k) / m;
    while (edge + 1 < n && cum[edge + 1] <= target) ++edge;
    const double t = std::clamp((target - cum[edge]) / lens[edge], 0.0, 1.0);
    const Point3& a = verts[edge];
    const Point3& b = verts[(edge + 1) % n];
    pts.push_back(a + t * (b - a));
  }
  return PolygonalLoop::from_vertices(std::move(pts));
}

PolygonalLoop gen_circle(int n) {
  if (n < 3) throw DomainError("gen_circle needs n >= 3");
  const double radius = 1.0 / (2.0 * std::numbers::pi);
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    pts.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
  }
  return normalize_to_C(PolygonalLoop::from_vertices(std::move(pts)));
}

PolygonalLoop gen_torus_knot(int p, int q, int n, double major_radius,
                             double minor_radius) {
  if (p < 1 || q < 1) {
    throw DomainError("torus knot needs p, q >= 1 (got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q) + ")");
  }
  if (std::gcd(p, q) != 1) {
    throw DomainError("torus knot needs gcd(p, q) = 1; otherwise it is a link");
  }
  if (n < 3) throw DomainError("torus knot needs n >= 3");
  if (!(minor_radius > 0.0 && major_radius > minor_radius)) {
    throw DomainError("torus knot needs R > r > 0");
  }
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const double rho = major_radius + minor_radius * std::cos(q * theta);
    pts.push_back({rho * std::cos(p * theta), rho * std::sin(p * theta),
                   -minor_radius * std::sin(q * theta)});
  }
  return normalize_to_C(PolygonalLoop::from_vertices(std::move(pts)));
}

PolygonalLoop gen_figure_eight_knot(int n) {
  if (n < 3) throw DomainError("figure-eight knot needs n >= 3");
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const double rho = 2.0 + std::cos(2.0 * t);
    pts.push_back({rho * std::cos(3.0 * t), rho * std::sin(3.0 * t),
                   std::sin(4.0 * t)});
  }
  return normalize_to_C(PolygonalLoop::from_vertices(std::move(pts)));
}

PolygonalLoop gen_pinched(double gap, int n) {
  if (n < 3) throw DomainError("pinched loop needs n >= 3");
  if (!(gap > 0.0 && gap < 1.0 / std::numbers::pi)) {
    throw DomainError("pinched loop needs 0 < gap < 1/pi");
  }
  const double r = 0.5 * gap;
  const double cap = std::numbers::pi * r;
  const double strand = 0.5 * (1.0 - 2.0 * cap);

  // Lower strand left to right, right cap, upper strand right to left,
  // left cap.
  auto at = [&](double u) -> Point3 {
    if (u < strand) return {u, -r, 0.0};
    u -= strand;
    if (u < cap) {
      const double a = u / r;
      return {strand + r * std::sin(a), -r * std::cos(a), 0.0};
    }
    u -= cap;
    if (u < strand) return {strand - u, r, 0.0};
    u -= strand;
    const double a = u / r;
    return {-r * std::sin(a), r * std::cos(a), 0.0};
  };

  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pts.push_back(at(static_cast<double>(k) / n));
  return normalize_to_C(PolygonalLoop::from_vertices(std::move(pts)));
}

PolygonalLoop perturb(const PolygonalLoop& loop, double amplitude,
                      std::uint64_t seed) {
  if (!(amplitude >= 0.0)) throw DomainError("perturb needs amplitude >= 0");
  SplitMix64 rng(seed);
  std::vector<Point3> pts(loop.vertices().begin(), loop.vertices().end());
  for (Point3& v : pts) {
    Vec3 d;
    do {
      d = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0,
           2.0 * rng.uniform() - 1.0};
    } while (norm2(d) > 1.0);
    v += amplitude * d;
  }
  return normalize_to_C(PolygonalLoop::from_vertices(std::move(pts)));
}

}  // namespace menger
