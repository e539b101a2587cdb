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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "menger/curve.hpp"
#include "menger/errors.hpp"
#include "menger/geom.hpp"
#include "menger/radii.hpp"
#include "oracles.hpp"

using namespace menger;

namespace {

constexpr double kInvTwoPi = 1.0 / (2.0 * std::numbers::pi);

// Circumradius of the edge midpoints of gen_circle(n): the midpoint polygon
// of a regular unit-perimeter n-gon sits on a circle of radius
// 1/(2 n tan(pi/n)).
double midpoint_circle_radius(int n) {
  return 1.0 / (2.0 * n * std::tan(std::numbers::pi / n));
}

}  // namespace

TEST_CASE("radii on the discretized circle") {
  const auto circle = gen_circle(256);
  const double expected = midpoint_circle_radius(256);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{3, 200}, std::pair{100, 228}}) {
    CHECK(oracle::rel_diff(rho_pair(circle, i, j).value(), expected) < 1e-10);
  }
  CHECK(oracle::rel_diff(rho_global(circle, 17).value(), expected) < 1e-10);
  CHECK(oracle::rel_diff(thickness(circle).value(), expected) < 1e-10);
  // The node circle is 8e-6 below the continuum radius at n = 256.
  CHECK(std::abs(thickness(circle).value() - kInvTwoPi) < 1e-5);
  CHECK(ropelength(circle) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-4));
}

TEST_CASE("triangle loops have a single node triple") {
  const auto tri = PolygonalLoop::from_vertices({{0, 0, 0}, {4, 0, 0}, {1, 3, 0}});
  const Point3 m0 = tri.edge_midpoint(0), m1 = tri.edge_midpoint(1), m2 = tri.edge_midpoint(2);
  const double r = circumradius(m0, m1, m2).value();
  CHECK(rho_pair(tri, 0, 1).value() == r);
  for (std::size_t i = 0; i < 3; ++i) CHECK(rho_global(tri, i).value() == r);
  CHECK(thickness(tri).value() == r);

  // Unit-perimeter equilateral triangle: nodes form the medial triangle of
  // side 1/6, so Delta = 1/(6 sqrt 3).
  const double s = 1.0 / 3.0;
  const auto eq = PolygonalLoop::from_vertices({{0, 0, 0}, {s, 0, 0}, {s / 2, s * std::sqrt(3.0) / 2, 0}});
  CHECK(thickness(eq).value() == doctest::Approx(1.0 / (6.0 * std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("argument validation") {
  const auto circle = gen_circle(16);
  CHECK_THROWS_AS(rho_pair(circle, 3, 3), DomainError);
  CHECK_THROWS_AS(rho_pair(circle, 3, 16), DomainError);
  CHECK_THROWS_AS(rho_global(circle, 16), DomainError);
}

TEST_CASE("nested infima over the same node set") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto loop = oracle::random_loop(24, seed, 0.04);
    const std::size_t n = loop.size();
    const double delta = thickness(loop).value();
    double min_global = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      const double g = rho_global(loop, i).value();
      min_global = std::min(min_global, g);
      CHECK(delta <= g);
      double min_pair = INFINITY;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double pr = rho_pair(loop, i, j).value();
        CHECK(g <= pr);
        CHECK(pr == rho_pair(loop, j, i).value());
        min_pair = std::min(min_pair, pr);
      }
      CHECK(g == min_pair);
    }
    CHECK(delta == min_global);
  }
}

TEST_CASE("pruned thickness scan matches brute force") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto loop = oracle::random_loop(20 + 3 * static_cast<int>(seed), seed, 0.06);
    const double delta = thickness(loop).value();
    CHECK(oracle::rel_diff(1.0 / delta, oracle::inverse_thickness(loop)) < 1e-10);

    const RadiusField global = compute_radius_field(loop, RadiusKind::kGlobal, 1);
    double best = INFINITY;
    for (std::size_t i = 0; i < global.size(); ++i) best = std::min(best, global.at(i).value());
    CHECK(best == delta);
  }
  const auto trefoil = gen_torus_knot(2, 3, 48);
  CHECK(oracle::rel_diff(1.0 / thickness(trefoil).value(), oracle::inverse_thickness(trefoil)) <
        1e-10);
}

TEST_CASE("radius fields") {
  const auto loop = oracle::random_loop(18, 8);
  const auto pairwise = compute_radius_field(loop, RadiusKind::kPairwise, 3);
  CHECK(pairwise.kind() == RadiusKind::kPairwise);
  CHECK(pairwise.size() == 18 * 18);
  CHECK(pairwise.at(2, 9) == rho_pair(loop, 2, 9));
  CHECK(pairwise.at(9, 2) == pairwise.at(2, 9));
  const auto global = compute_radius_field(loop, RadiusKind::kGlobal, 2);
  CHECK(global.at(5) == rho_global(loop, 5));
  const auto thick = compute_radius_field(loop, RadiusKind::kThickness);
  CHECK(thick.size() == 1);
  CHECK(thick.at(0) == thickness(loop));
}

TEST_CASE("thickness under rigid motions and scaling") {
  const auto loop = gen_torus_knot(2, 3, 64);
  const double delta = thickness(loop).value();
  const oracle::RigidMotion motion(31);
  CHECK(oracle::rel_diff(thickness(map_vertices(loop, motion)).value(), delta) < 1e-10);
  const double lambda = 3.7;
  const auto scaled = map_vertices(loop, [&](const Point3& p) { return lambda * p; });
  CHECK(oracle::rel_diff(thickness(scaled).value(), lambda * delta) < 1e-12);
  CHECK(oracle::rel_diff(ropelength(scaled), ropelength(loop)) < 1e-12);
}

TEST_CASE("trefoil is thinner than the circle") {
  const auto trefoil = gen_torus_knot(2, 3, 256, 2, 1);
  CHECK(thickness(trefoil).value() < kInvTwoPi);
  CHECK(ropelength(trefoil) > 2 * std::numbers::pi);
}

TEST_CASE("circle thickness refinement") {
  double previous = 0.0;
  for (int n : {16, 32, 64, 128, 256}) {
    const double delta = thickness(gen_circle(n)).value();
    CHECK(delta > previous);
    CHECK(delta < kInvTwoPi);
    if (n >= 64) CHECK(delta == doctest::Approx(kInvTwoPi).epsilon(0.01));
    previous = delta;
  }
}
