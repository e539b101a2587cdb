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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "menger/vec3.hpp"

namespace menger {

/// Quadrature node on a loop: the midpoint of one edge.
struct SamplePoint {
  double s;          // arclength fraction of the midpoint, in [0,1)
  Point3 position;
  Vec3 tangent;      // direction of the containing edge
  double weight;     // length of the containing edge
};

/// Closed polygon; edge i joins vertex i to vertex (i+1) mod n.
/// Immutable once built; all caches are derived from the vertices.
class PolygonalLoop {
 public:
  /// Throws ConstructionError for n < 3, non-finite coordinates or a
  /// zero-length edge (the message names the edge index).
  static PolygonalLoop from_vertices(std::vector<Point3> points);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Point3> vertices() const { return vertices_; }
  std::span<const double> edge_lengths() const { return edge_lengths_; }
  /// cum_arclength()[i] is the arclength at vertex i; entry 0 is 0.
  std::span<const double> cum_arclength() const { return cum_arclength_; }
  std::span<const Vec3> tangents() const { return tangents_; }
  double total_length() const { return total_length_; }

  Point3 edge_midpoint(std::size_t i) const;
  std::vector<SamplePoint> sample_points() const;

 private:
  PolygonalLoop() = default;

  std::vector<Point3> vertices_;
  std::vector<double> edge_lengths_;
  std::vector<double> cum_arclength_;
  std::vector<Vec3> tangents_;
  double total_length_ = 0.0;
};

/// Applies f to every vertex and rebuilds the loop.
PolygonalLoop map_vertices(const PolygonalLoop& loop,
                           const std::function<Point3(const Point3&)>& f);

/// Same trace traversed backwards, starting from the same vertex.
PolygonalLoop reversed(const PolygonalLoop& loop);

/// Scales to unit length and moves vertex 0 to the origin.
PolygonalLoop normalize_to_C(const PolygonalLoop& loop);

/// Scales to unit length and moves the vertex barycenter to the origin.
PolygonalLoop normalize_barycentric(const PolygonalLoop& loop);

/// m vertices at arclengths k/m * L along the trace, starting at vertex 0.
PolygonalLoop resample_uniform(const PolygonalLoop& loop, int m);

/// Regular n-gon inscribed in the unit-circumference circle (z = 0),
/// normalized to unit length.
PolygonalLoop gen_circle(int n);

/// (p,q) torus knot sampled at n uniform parameter values theta_k = 2 pi k/n:
///   ((R + r cos q theta) cos p theta, (R + r cos q theta) sin p theta,
///    -r sin q theta),
/// normalized to unit length. (2,3) is a trefoil.
PolygonalLoop gen_torus_knot(int p, int q, int n, double major_radius = 2.0,
                             double minor_radius = 1.0);

/// Figure-eight knot, ((2 + cos 2t) cos 3t, (2 + cos 2t) sin 3t, sin 4t),
/// sampled at n uniform parameter values and normalized.
PolygonalLoop gen_figure_eight_knot(int n);

/// Pinched stadium of unit length: two straight strands at distance `gap`
/// closed off by half-circles of diameter `gap`. As gap -> 0 the loop
/// converges to a doubly traversed segment. Vertices are placed at uniform
/// arclength starting from the start of the lower strand, then the loop is
/// normalized. Requires 0 < gap < 1/pi.
PolygonalLoop gen_pinched(double gap, int n);

/// Adds to every vertex a displacement drawn uniformly from the ball of
/// radius `amplitude` (SplitMix64 stream seeded with `seed`, rejection
/// sampling from the cube), then normalizes.
PolygonalLoop perturb(const PolygonalLoop& loop, double amplitude,
                      std::uint64_t seed);

// File format: {"vertices": [[x,y,z], ...], "closed": true}.
PolygonalLoop loop_from_json(const std::string& text);
std::string loop_to_json(const PolygonalLoop& loop);
PolygonalLoop read_loop(const std::string& path);
void write_loop(const std::string& path, const PolygonalLoop& loop);

}  // namespace menger
