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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "menger/curve.hpp"
#include "menger/geom.hpp"

namespace menger::detail {

/// Edge-midpoint quadrature nodes of a loop with their pairwise distances.
/// Triple curvatures are always evaluated with sorted indices so that every
/// caller sees the same bits for the same unordered triple.
class NodeTable {
 public:
  explicit NodeTable(const PolygonalLoop& loop) : n_(loop.size()) {
    pos_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) pos_.push_back(loop.edge_midpoint(i));
    weight_.assign(loop.edge_lengths().begin(), loop.edge_lengths().end());
    tangent_.assign(loop.tangents().begin(), loop.tangents().end());
    dist_.assign(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double d = distance(pos_[i], pos_[j]);
        dist_[i * n_ + j] = d;
        dist_[j * n_ + i] = d;
      }
    }
  }

  std::size_t size() const { return n_; }
  const Point3& pos(std::size_t i) const { return pos_[i]; }
  const Vec3& tangent(std::size_t i) const { return tangent_[i]; }
  double weight(std::size_t i) const { return weight_[i]; }
  double dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }

  /// 1/R for distinct indices; requires i < j < k.
  double curvature_sorted(std::size_t i, std::size_t j, std::size_t k) const {
    const double ab = dist(i, j);
    const double bc = dist(j, k);
    const double ca = dist(i, k);
    if (ab == 0.0 || bc == 0.0 || ca == 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    const Vec3 u = pos_[j] - pos_[i];
    const Vec3 v = pos_[k] - pos_[i];
    return menger_curvature_kernel(ab, bc, ca, norm(cross(u, v)));
  }

  /// 1/R for distinct indices in any order.
  double curvature(std::size_t i, std::size_t j, std::size_t k) const {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return curvature_sorted(i, j, k);
  }

 private:
  std::size_t n_;
  std::vector<Point3> pos_;
  std::vector<Vec3> tangent_;
  std::vector<double> weight_;
  std::vector<double> dist_;
};

/// x^p with a multiplication (plus one sqrt) path for small integer and
/// half-integer exponents.
class Power {
 public:
  explicit Power(double p) : p_(p) {
    if (p >= 0.0 && p <= 64.0) {
      const double twice = 2.0 * p;
      if (twice == std::floor(twice)) {
        int_exp_ = static_cast<int>(std::floor(p));
        half_ = (twice - 2.0 * int_exp_) != 0.0;
      }
    }
  }

  double operator()(double x) const {
    if (int_exp_ < 0) return std::pow(x, p_);
    double result = half_ ? std::sqrt(x) : 1.0;
    double base = x;
    for (int e = int_exp_; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return result;
  }

 private:
  double p_;
  int int_exp_ = -1;
  bool half_ = false;
};

/// Per-pair maxima of the triple curvature, i.e. 1/rho(i,j); the diagonal
/// holds 0. Rows are computed in parallel; symmetric by construction.
std::vector<double> pair_curvature_table(const NodeTable& nodes, int workers);

/// Row maxima of a pair table, i.e. 1/rho_G(i).
std::vector<double> global_curvatures(const std::vector<double>& pair_table,
                                      std::size_t n);

/// Maximum triple curvature (1/thickness) via the distance-sorted pruned scan.
double max_triple_curvature(const NodeTable& nodes);

}  // namespace menger::detail
