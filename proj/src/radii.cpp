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

#include "menger/radii.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "menger/errors.hpp"
#include "menger/parallel.hpp"
#include "node_table.hpp"

namespace menger {

namespace detail {

std::vector<double> pair_curvature_table(const NodeTable& nodes, int workers) {
  const std::size_t n = nodes.size();
  std::vector<double> table(n * n, 0.0);
  for_each_block(n, workers, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double best = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        best = std::max(best, nodes.curvature(i, j, k));
      }
      table[i * n + j] = best;
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) table[i * n + j] = table[j * n + i];
  }
  return table;
}

std::vector<double> global_curvatures(const std::vector<double>& pair_table,
                                      std::size_t n) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) out[i] = std::max(out[i], pair_table[i * n + j]);
    }
  }
  return out;
}

double max_triple_curvature(const NodeTable& nodes) {
  const std::size_t n = nodes.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return nodes.dist(a.first, a.second) < nodes.dist(b.first, b.second);
  });

  // R(a,b,c) >= |a-b|/2, so once half the pair distance exceeds the best
  // radius found no later pair can improve it. The 1e-12 margin keeps
  // rounding in the computed radius from making the pruning lossy.
  double best = 0.0;
  for (const auto& [i, j] : pairs) {
    if (0.5 * nodes.dist(i, j) * best > 1.0 + 1e-12) break;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      best = std::max(best, nodes.curvature(i, j, k));
    }
  }
  return best;
}

}  // namespace detail

Radius rho_pair(const PolygonalLoop& loop, std::size_t i, std::size_t j) {
  const std::size_t n = loop.size();
  if (i >= n || j >= n) throw DomainError("node index out of range");
  if (i == j) throw DomainError("rho_pair needs two distinct nodes");
  const detail::NodeTable nodes(loop);
  double best = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    best = std::max(best, nodes.curvature(i, j, k));
  }
  return Radius::from_curvature(best);
}

Radius rho_global(const PolygonalLoop& loop, std::size_t i) {
  const std::size_t n = loop.size();
  if (i >= n) throw DomainError("node index out of range");
  const detail::NodeTable nodes(loop);
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (k == i) continue;
      best = std::max(best, nodes.curvature(i, j, k));
    }
  }
  return Radius::from_curvature(best);
}

Radius thickness(const PolygonalLoop& loop) {
  const detail::NodeTable nodes(loop);
  return Radius::from_curvature(detail::max_triple_curvature(nodes));
}

double ropelength(const PolygonalLoop& loop) {
  return loop.total_length() / thickness(loop).value();
}

RadiusField compute_radius_field(const PolygonalLoop& loop, RadiusKind kind,
                                 int workers) {
  const detail::NodeTable nodes(loop);
  const std::size_t n = nodes.size();
  switch (kind) {
    case RadiusKind::kPairwise:
      return {kind, n, detail::pair_curvature_table(nodes, workers)};
    case RadiusKind::kGlobal:
      return {kind, n,
              detail::global_curvatures(detail::pair_curvature_table(nodes, workers), n)};
    case RadiusKind::kThickness:
      return {kind, n, {detail::max_triple_curvature(nodes)}};
  }
  throw DomainError("unknown radius kind");
}

}  // namespace menger
