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

#include "menger/energies.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "menger/errors.hpp"
#include "menger/geom.hpp"
#include "menger/parallel.hpp"
#include "menger/radii.hpp"
#include "menger/summation.hpp"
#include "node_table.hpp"

namespace menger {

namespace {

using detail::NodeTable;
using detail::Power;
using Clock = std::chrono::steady_clock;

// Outer-index block sizes for the reductions. Fixed so that the summation
// order never depends on the worker count.
constexpr std::size_t kTripleBlock = 1;
constexpr std::size_t kPairBlock = 8;

void require_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError("energy exponent must satisfy p >= 1, got " +
                      std::to_string(p));
  }
}

EnergyReport make_report(EnergyKind kind, std::optional<double> p, double value,
                         std::size_t n, Clock::time_point start) {
  EnergyReport r;
  r.name = std::string(energy_name(kind));
  r.p = p;
  r.value = value;
  r.n = n;
  r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

double menger_sum(const NodeTable& nodes, double p, int workers) {
  const std::size_t n = nodes.size();
  const Power pw(p);
  // Unordered triples i < j < k, each standing for its 6 orderings.
  const double half = blocked_sum(n, kTripleBlock, workers, [&](std::size_t i, NeumaierSum& acc) {
    const double wi = nodes.weight(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double wij = wi * nodes.weight(j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const double c = nodes.curvature_sorted(i, j, k);
        if (c > 0.0) acc.add(wij * nodes.weight(k) * pw(c));
      }
    }
  });
  return 6.0 * half;
}

double rho_sum(const NodeTable& nodes, const std::vector<double>& pair_table,
               double p, int workers) {
  const std::size_t n = nodes.size();
  const Power pw(p);
  const double half = blocked_sum(n, kPairBlock, workers, [&](std::size_t i, NeumaierSum& acc) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = pair_table[i * n + j];
      if (c > 0.0) acc.add(nodes.weight(i) * nodes.weight(j) * pw(c));
    }
  });
  return 2.0 * half;
}

double global_sum(const NodeTable& nodes, const std::vector<double>& global,
                  double p) {
  const Power pw(p);
  NeumaierSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (global[i] > 0.0) acc.add(nodes.weight(i) * pw(global[i]));
  }
  return acc.value();
}

}  // namespace

bool takes_exponent(EnergyKind kind) {
  return scale_invariant_exponent(kind).has_value();
}

std::string_view energy_name(EnergyKind kind) {
  switch (kind) {
    case EnergyKind::kMenger: return "Mp";
    case EnergyKind::kRho: return "Ip";
    case EnergyKind::kGlobalRadius: return "Up";
    case EnergyKind::kTangentPoint: return "Ep";
    case EnergyKind::kTangentPointSym: return "EpSym";
    case EnergyKind::kMoebius: return "Moebius";
    case EnergyKind::kTotalCurvature: return "TK";
    case EnergyKind::kAcn: return "acn";
    case EnergyKind::kThickness: return "thickness";
    case EnergyKind::kRopelength: return "ropelength";
  }
  return "?";
}

EnergyKind parse_energy_name(std::string_view name) {
  for (EnergyKind k :
       {EnergyKind::kMenger, EnergyKind::kRho, EnergyKind::kGlobalRadius,
        EnergyKind::kTangentPoint, EnergyKind::kTangentPointSym,
        EnergyKind::kMoebius, EnergyKind::kTotalCurvature, EnergyKind::kAcn,
        EnergyKind::kThickness, EnergyKind::kRopelength}) {
    if (energy_name(k) == name) return k;
  }
  throw DomainError("unknown energy name '" + std::string(name) +
                    "' (expected Mp, Ip, Up, Ep, EpSym, Moebius, TK, acn, "
                    "thickness or ropelength)");
}

std::optional<double> scale_invariant_exponent(EnergyKind kind) {
  switch (kind) {
    case EnergyKind::kMenger: return 3.0;
    case EnergyKind::kRho:
    case EnergyKind::kTangentPoint:
    case EnergyKind::kTangentPointSym: return 2.0;
    case EnergyKind::kGlobalRadius: return 1.0;
    default: return std::nullopt;
  }
}

EnergyReport menger_energy(const PolygonalLoop& loop, double p, int workers) {
  require_exponent(p);
  const auto start = Clock::now();
  const NodeTable nodes(loop);
  return make_report(EnergyKind::kMenger, p, menger_sum(nodes, p, workers),
                     nodes.size(), start);
}

EnergyReport rho_energy(const PolygonalLoop& loop, double p, int workers) {
  require_exponent(p);
  const auto start = Clock::now();
  const NodeTable nodes(loop);
  const auto table = detail::pair_curvature_table(nodes, workers);
  return make_report(EnergyKind::kRho, p, rho_sum(nodes, table, p, workers),
                     nodes.size(), start);
}

EnergyReport global_radius_energy(const PolygonalLoop& loop, double p,
                                  int workers) {
  require_exponent(p);
  const auto start = Clock::now();
  const NodeTable nodes(loop);
  const auto global = detail::global_curvatures(
      detail::pair_curvature_table(nodes, workers), nodes.size());
  return make_report(EnergyKind::kGlobalRadius, p, global_sum(nodes, global, p),
                     nodes.size(), start);
}

EnergyReport tangent_point_energy(const PolygonalLoop& loop, double p,
                                  bool symmetrized, int workers) {
  require_exponent(p);
  const auto start = Clock::now();
  const NodeTable nodes(loop);
  const std::size_t n = nodes.size();
  double value = 0.0;
  if (!symmetrized) {
    // r_tp is not symmetric, so every ordered pair is visited.
    const Power pw(p);
    value = blocked_sum(n, kPairBlock, workers, [&](std::size_t i, NeumaierSum& acc) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double c = tangent_point_curvature_kernel(
            nodes.tangent(i), nodes.pos(j) - nodes.pos(i));
        if (c > 0.0) acc.add(nodes.weight(i) * nodes.weight(j) * pw(c));
      }
    });
  } else {
    const Power pw(0.5 * p);
    const double half = blocked_sum(n, kPairBlock, workers, [&](std::size_t i, NeumaierSum& acc) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec3 d = nodes.pos(j) - nodes.pos(i);
        const double cij = tangent_point_curvature_kernel(nodes.tangent(i), d);
        const double cji = tangent_point_curvature_kernel(nodes.tangent(j), -d);
        const double prod = cij * cji;
        if (prod > 0.0) acc.add(nodes.weight(i) * nodes.weight(j) * pw(prod));
      }
    });
    value = 2.0 * half;
  }
  return make_report(symmetrized ? EnergyKind::kTangentPointSym
                                 : EnergyKind::kTangentPoint,
                     p, value, n, start);
}

EnergyReport moebius_energy(const PolygonalLoop& loop, int workers) {
  if (!(std::abs(loop.total_length() - 1.0) <= 1e-9)) {
    throw DomainError("Moebius energy needs a unit-length loop, got length " +
                      std::to_string(loop.total_length()));
  }
  const auto start = Clock::now();
  const NodeTable nodes(loop);
  const auto samples = loop.sample_points();
  const std::size_t n = nodes.size();
  const double half = blocked_sum(n, kPairBlock, workers, [&](std::size_t i, NeumaierSum& acc) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double chord = nodes.dist(i, j);
      const double arc = intrinsic_distance(samples[i].s, samples[j].s);
      acc.add(nodes.weight(i) * nodes.weight(j) *
              (1.0 / (chord * chord) - 1.0 / (arc * arc)));
    }
  });
  return make_report(EnergyKind::kMoebius, std::nullopt,
                     std::max(0.0, 2.0 * half), n, start);
}

EnergyReport total_curvature(const PolygonalLoop& loop) {
  const auto start = Clock::now();
  const auto t = loop.tangents();
  const std::size_t n = loop.size();
  NeumaierSum acc;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& prev = t[(i + n - 1) % n];
    acc.add(std::atan2(norm(cross(prev, t[i])), dot(prev, t[i])));
  }
  return make_report(EnergyKind::kTotalCurvature, std::nullopt, acc.value(), n,
                     start);
}

EnergyReport average_crossing_number(const PolygonalLoop& loop, int workers) {
  const auto start = Clock::now();
  const NodeTable nodes(loop);
  const std::size_t n = nodes.size();
  const double half = blocked_sum(n, kPairBlock, workers, [&](std::size_t i, NeumaierSum& acc) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 d = nodes.pos(j) - nodes.pos(i);
      const double r = nodes.dist(i, j);
      const double triple =
          std::abs(dot(cross(nodes.tangent(i), nodes.tangent(j)), d));
      acc.add(nodes.weight(i) * nodes.weight(j) * triple / (r * r * r));
    }
  });
  return make_report(EnergyKind::kAcn, std::nullopt,
                     2.0 * half / (4.0 * std::numbers::pi), n, start);
}

EnergyReport evaluate(const PolygonalLoop& loop, const EnergySpec& spec,
                      int workers) {
  switch (spec.kind) {
    case EnergyKind::kMenger: return menger_energy(loop, spec.p, workers);
    case EnergyKind::kRho: return rho_energy(loop, spec.p, workers);
    case EnergyKind::kGlobalRadius:
      return global_radius_energy(loop, spec.p, workers);
    case EnergyKind::kTangentPoint:
      return tangent_point_energy(loop, spec.p, false, workers);
    case EnergyKind::kTangentPointSym:
      return tangent_point_energy(loop, spec.p, true, workers);
    case EnergyKind::kMoebius: return moebius_energy(loop, workers);
    case EnergyKind::kTotalCurvature: return total_curvature(loop);
    case EnergyKind::kAcn: return average_crossing_number(loop, workers);
    case EnergyKind::kThickness:
    case EnergyKind::kRopelength: {
      const auto start = Clock::now();
      const double delta = thickness(loop).value();
      const double value = spec.kind == EnergyKind::kThickness
                               ? delta
                               : loop.total_length() / delta;
      return make_report(spec.kind, std::nullopt, value, loop.size(), start);
    }
  }
  throw DomainError("unknown energy kind");
}

OrderingChain ordering_chain(const PolygonalLoop& loop, double p, int workers) {
  require_exponent(p);
  const NodeTable nodes(loop);
  const auto table = detail::pair_curvature_table(nodes, workers);
  const auto global = detail::global_curvatures(table, nodes.size());
  double inv_delta = 0.0;
  for (double g : global) inv_delta = std::max(inv_delta, g);
  return {menger_sum(nodes, p, workers), rho_sum(nodes, table, p, workers),
          global_sum(nodes, global, p), std::pow(inv_delta, p), inv_delta};
}

}  // namespace menger
