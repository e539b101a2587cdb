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

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "menger/curve.hpp"
#include "menger/energies.hpp"

namespace menger {

struct FlowConfig {
  EnergySpec energy{EnergyKind::kMenger, 3.0};
  int max_iters = 500;
  double grad_tol = 1e-6;
  /// Largest vertex displacement of the first trial step of each line search.
  double step_init = 1e-2;
  double backtrack_factor = 0.5;
  int max_backtracks = 40;
  /// Write a snapshot every k accepted iterations (and at iteration 0); 0 = off.
  int snapshot_every = 0;
  std::string snapshot_prefix = "snapshot";
  double fd_step = 1e-6;
  int workers = 0;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

enum class FlowStatus { kConverged, kMaxIters, kStalled };
std::string_view flow_status_name(FlowStatus status);

struct FlowRecord {
  int iter;
  double energy;
  double grad_norm;
  double step;
};

struct FlowState {
  explicit FlowState(PolygonalLoop start) : loop(std::move(start)) {}

  PolygonalLoop loop;
  int iter = 0;
  std::vector<double> energy_history;
  double last_grad_norm = 0.0;
  FlowStatus status = FlowStatus::kMaxIters;
  std::vector<FlowRecord> log;
  std::vector<std::string> snapshots;
};

using VertexField = std::vector<Vec3>;

/// The energy of the loop rescaled to unit length. This is the functional
/// the flow descends: it agrees with the energy on unit loops and is
/// invariant under scaling and translation everywhere.
double normalized_energy(const PolygonalLoop& loop, const EnergySpec& energy,
                         int workers = 1);

/// Central finite-difference gradient of normalized_energy with respect to
/// every vertex coordinate. The step is halved (at most 10 times) for a
/// vertex whose adjacent edges are shorter than 4 * fd_step.
VertexField gradient(const PolygonalLoop& loop, const EnergySpec& energy,
                     double fd_step, int workers = 0);

/// Removes the components along the 7 infinitesimal similarity motions
/// (translations, rotations about the barycenter, scaling).
VertexField project_similarity_modes(const PolygonalLoop& loop, VertexField field);

double field_norm(const VertexField& field);

/// Projected gradient descent with backtracking line search. Each accepted
/// step is renormalized to unit length with the barycenter at the origin;
/// the returned loop is re-pinned with vertex 0 at the origin.
FlowState relax(const PolygonalLoop& loop, const FlowConfig& config);

/// CSV with header iter,energy,grad_norm,step.
void write_flow_log(std::ostream& out, const FlowState& state);

}  // namespace menger
