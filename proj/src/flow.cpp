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

#include "menger/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "menger/errors.hpp"
#include "menger/parallel.hpp"

namespace menger {

namespace {

constexpr int kMaxStepHalvings = 10;

double& coord(Vec3& v, int c) { return c == 0 ? v.x : (c == 1 ? v.y : v.z); }

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void FlowConfig::validate() const {
  if (max_iters < 1) throw DomainError("flow needs max_iters >= 1");
  if (!(grad_tol > 0.0)) throw DomainError("flow needs grad_tol > 0");
  if (!(step_init > 0.0)) throw DomainError("flow needs step_init > 0");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw DomainError("flow needs 0 < backtrack_factor < 1");
  }
  if (!(fd_step > 0.0)) throw DomainError("flow needs fd_step > 0");
  if (snapshot_every < 0) throw DomainError("flow needs snapshot_every >= 0");
  if (max_backtracks < 1) throw DomainError("flow needs max_backtracks >= 1");
  if (takes_exponent(energy.kind) && !(energy.p >= 1.0)) {
    throw DomainError("flow energy exponent must satisfy p >= 1");
  }
}

std::string_view flow_status_name(FlowStatus status) {
  switch (status) {
    case FlowStatus::kConverged: return "converged";
    case FlowStatus::kMaxIters: return "max-iters";
    case FlowStatus::kStalled: return "stalled";
  }
  return "?";
}

double normalized_energy(const PolygonalLoop& loop, const EnergySpec& energy,
                         int workers) {
  return evaluate(normalize_to_C(loop), energy, workers).value;
}

VertexField gradient(const PolygonalLoop& loop, const EnergySpec& energy,
                     double fd_step, int workers) {
  if (!(fd_step > 0.0)) throw DomainError("gradient needs fd_step > 0");
  const std::size_t n = loop.size();
  const auto verts = loop.vertices();
  const auto lens = loop.edge_lengths();
  VertexField grad(n);

  // Each vertex is one task; the energy itself runs single-threaded so the
  // fan-out happens at this level only.
  for_each_block(n, workers, [&](std::size_t v) {
    const double adjacent = std::min(lens[v], lens[(v + n - 1) % n]);
    double h = fd_step;
    int halvings = 0;
    while (4.0 * h > adjacent) {
      if (++halvings > kMaxStepHalvings) {
        throw DomainError("finite-difference step collides at vertex " +
                          std::to_string(v));
      }
      h *= 0.5;
    }
    std::vector<Point3> pts(verts.begin(), verts.end());
    for (int c = 0; c < 3; ++c) {
      const double base = coord(pts[v], c);
      coord(pts[v], c) = base + h;
      const double plus = normalized_energy(PolygonalLoop::from_vertices(pts), energy, 1);
      coord(pts[v], c) = base - h;
      const double minus = normalized_energy(PolygonalLoop::from_vertices(pts), energy, 1);
      coord(pts[v], c) = base;
      coord(grad[v], c) = (plus - minus) / (2.0 * h);
    }
  });
  return grad;
}

VertexField project_similarity_modes(const PolygonalLoop& loop, VertexField field) {
  const std::size_t n = loop.size();
  const auto verts = loop.vertices();
  Vec3 center;
  for (const Point3& v : verts) center += v;
  center = center / static_cast<double>(n);

  // Modes: 3 translations, 3 rotations, 1 dilation, orthonormalized by
  // modified Gram-Schmidt.
  std::vector<VertexField> basis;
  const std::array<Vec3, 3> axes{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  for (const Vec3& a : axes) basis.emplace_back(n, a);
  for (const Vec3& a : axes) {
    VertexField m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = cross(a, verts[i] - center);
    basis.push_back(std::move(m));
  }
  {
    VertexField m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = verts[i] - center;
    basis.push_back(std::move(m));
  }

  auto inner = [&](const VertexField& a, const VertexField& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += dot(a[i], b[i]);
    return s;
  };

  std::vector<VertexField> ortho;
  for (VertexField m : basis) {
    for (const VertexField& q : ortho) {
      const double c = inner(m, q);
      for (std::size_t i = 0; i < n; ++i) m[i] -= c * q[i];
    }
    const double len = std::sqrt(inner(m, m));
    if (len < 1e-12) continue;  // e.g. rotation about the axis of a planar loop's symmetry
    for (Vec3& x : m) x = x / len;
    ortho.push_back(std::move(m));
  }
  for (const VertexField& q : ortho) {
    const double c = inner(field, q);
    for (std::size_t i = 0; i < n; ++i) field[i] -= c * q[i];
  }
  return field;
}

double field_norm(const VertexField& field) {
  double s = 0.0;
  for (const Vec3& v : field) s += norm2(v);
  return std::sqrt(s);
}

FlowState relax(const PolygonalLoop& loop, const FlowConfig& config) {
  config.validate();
  FlowState state(normalize_barycentric(loop));
  double energy = normalized_energy(state.loop, config.energy, config.workers);
  state.energy_history.push_back(energy);

  auto snapshot = [&](int iter) {
    if (config.snapshot_every <= 0 || iter % config.snapshot_every != 0) return;
    const std::string path = config.snapshot_prefix + "_" + std::to_string(iter) + ".json";
    write_loop(path, normalize_to_C(state.loop));
    state.snapshots.push_back(path);
  };
  snapshot(0);

  state.status = FlowStatus::kMaxIters;
  for (int iter = 0; iter < config.max_iters; ++iter) {
    const VertexField grad = project_similarity_modes(
        state.loop, gradient(state.loop, config.energy, config.fd_step, config.workers));
    state.last_grad_norm = field_norm(grad);
    if (state.last_grad_norm <= config.grad_tol) {
      state.status = FlowStatus::kConverged;
      break;
    }
    double largest = 0.0;
    for (const Vec3& g : grad) largest = std::max(largest, norm(g));

    const auto verts = state.loop.vertices();
    double step = config.step_init;
    bool accepted = false;
    for (int bt = 0; bt < config.max_backtracks; ++bt, step *= config.backtrack_factor) {
      std::vector<Point3> pts(verts.begin(), verts.end());
      for (std::size_t i = 0; i < pts.size(); ++i) pts[i] -= (step / largest) * grad[i];
      double trial_energy = 0.0;
      PolygonalLoop trial = state.loop;
      try {
        trial = normalize_barycentric(PolygonalLoop::from_vertices(std::move(pts)));
      } catch (const ConstructionError&) {
        continue;  // the step collapsed an edge
      }
      // The discrete energies reward merging neighbouring nodes; refuse steps
      // that leave no room for the finite-difference stencil.
      const auto lens = trial.edge_lengths();
      if (*std::min_element(lens.begin(), lens.end()) < 4.0 * config.fd_step) continue;
      trial_energy = normalized_energy(trial, config.energy, config.workers);
      if (trial_energy < energy) {
        state.loop = std::move(trial);
        energy = trial_energy;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      state.status = FlowStatus::kStalled;
      break;
    }
    state.iter = iter + 1;
    state.energy_history.push_back(energy);
    state.log.push_back({state.iter, energy, state.last_grad_norm, step});
    snapshot(state.iter);
  }

  state.loop = normalize_to_C(state.loop);
  return state;
}

void write_flow_log(std::ostream& out, const FlowState& state) {
  out << "iter,energy,grad_norm,step\n";
  out << 0 << ',' << format_g17(state.energy_history.front()) << ",,\n";
  for (const FlowRecord& r : state.log) {
    out << r.iter << ',' << format_g17(r.energy) << ',' << format_g17(r.grad_norm)
        << ',' << format_g17(r.step) << '\n';
  }
}

}  // namespace menger
