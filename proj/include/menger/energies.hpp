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

#include <optional>
#include <string>
#include <string_view>

#include "menger/curve.hpp"

namespace menger {

// Discrete knot energies. Quadrature nodes are edge midpoints weighted by
// edge length; sums skip every term with a repeated node index. Results are
// bit-identical for every worker count (`workers <= 0` uses the default).

enum class EnergyKind {
  kMenger,          // Mp:  triple integral of R^-p
  kRho,             // Ip:  double integral of rho^-p
  kGlobalRadius,    // Up:  single integral of rho_G^-p
  kTangentPoint,    // Ep
  kTangentPointSym, // EpSym
  kMoebius,
  kTotalCurvature,  // TK
  kAcn,
  kThickness,
  kRopelength,
};

/// Energy selector as used by the CLI and the flow.
struct EnergySpec {
  EnergyKind kind;
  double p = 0.0;  // ignored by kinds without an exponent
};

bool takes_exponent(EnergyKind kind);
/// CLI vocabulary: Mp, Ip, Up, Ep, EpSym, Moebius, TK, acn, thickness,
/// ropelength.
std::string_view energy_name(EnergyKind kind);
/// Throws DomainError for names outside the vocabulary.
EnergyKind parse_energy_name(std::string_view name);
/// Exponent at which the energy is scale-invariant (3 for Mp, 2 for Ip, Ep
/// and EpSym, 1 for Up); nullopt for kinds without an exponent.
std::optional<double> scale_invariant_exponent(EnergyKind kind);

struct EnergyReport {
  std::string name;
  std::optional<double> p;
  double value = 0.0;
  std::size_t n = 0;
  double wall_time = 0.0;  // seconds
  std::string node_rule = "edge-midpoint";
};

// All exponent-taking energies throw DomainError for p < 1.
EnergyReport menger_energy(const PolygonalLoop& loop, double p, int workers = 0);
EnergyReport rho_energy(const PolygonalLoop& loop, double p, int workers = 0);
EnergyReport global_radius_energy(const PolygonalLoop& loop, double p,
                                  int workers = 0);
EnergyReport tangent_point_energy(const PolygonalLoop& loop, double p,
                                  bool symmetrized, int workers = 0);
/// Requires unit length (|L - 1| <= 1e-9); the total is floored at 0.
EnergyReport moebius_energy(const PolygonalLoop& loop, int workers = 0);
/// Sum of exterior turning angles.
EnergyReport total_curvature(const PolygonalLoop& loop);
EnergyReport average_crossing_number(const PolygonalLoop& loop, int workers = 0);

/// Dispatches on spec.kind. thickness and ropelength report Delta and L/Delta.
EnergyReport evaluate(const PolygonalLoop& loop, const EnergySpec& spec,
                      int workers = 0);

/// The four members of the ordering chain on one shared node set, computed
/// from a single pair-curvature table.
struct OrderingChain {
  double menger;
  double rho;
  double global_radius;
  double inverse_thickness_pow;  // 1/Delta^p
  double inverse_thickness;      // 1/Delta
};
OrderingChain ordering_chain(const PolygonalLoop& loop, double p, int workers = 0);

}  // namespace menger
