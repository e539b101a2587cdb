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

#include <cstddef>
#include <vector>

#include "menger/curve.hpp"
#include "menger/geom.hpp"

namespace menger {

// Infimal radii over the edge-midpoint node set of a loop. Node i is the
// midpoint of edge i.

/// min over k not in {i,j} of R(node_i, node_j, node_k). Throws on i == j.
Radius rho_pair(const PolygonalLoop& loop, std::size_t i, std::size_t j);

/// min over distinct j,k not equal to i of R(node_i, node_j, node_k).
Radius rho_global(const PolygonalLoop& loop, std::size_t i);

/// Global minimum of R over all node triples.
Radius thickness(const PolygonalLoop& loop);

/// total_length / thickness; 1/thickness on unit loops.
double ropelength(const PolygonalLoop& loop);

enum class RadiusKind { kPairwise, kGlobal, kThickness };

/// Table of infimal radii of one kind: n x n for kPairwise (diagonal is
/// infinite and meaningless), n entries for kGlobal, one for kThickness.
class RadiusField {
 public:
  RadiusField(RadiusKind kind, std::size_t n, std::vector<double> curvatures)
      : kind_(kind), n_(n), curvatures_(std::move(curvatures)) {}

  RadiusKind kind() const { return kind_; }
  std::size_t nodes() const { return n_; }
  Radius at(std::size_t i) const { return Radius::from_curvature(curvatures_[i]); }
  Radius at(std::size_t i, std::size_t j) const { return at(i * n_ + j); }
  std::size_t size() const { return curvatures_.size(); }

 private:
  RadiusKind kind_;
  std::size_t n_;
  std::vector<double> curvatures_;
};

RadiusField compute_radius_field(const PolygonalLoop& loop, RadiusKind kind,
                                 int workers = 0);

}  // namespace menger
