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

#include <string>
#include <utility>
#include <vector>

#include "menger/curve.hpp"

namespace menger {

enum class Relation {
  kAtMost,    // measured <= expected + tolerance
  kAtLeast,   // measured >= expected - tolerance
  kLess,      // measured <  expected
  kGreater,   // measured >  expected
  kRelative,  // |measured - expected| <= tolerance * |expected|
  kAbsolute,  // |measured - expected| <= tolerance
};

/// Where the expected value comes from: a proven inequality, a value computed
/// independently (refinement, extrapolation), or an elementary identity.
enum class Provenance { kTheorem, kDerived, kTrivial };

struct Measurement {
  std::string quantity;
  double measured;
  double expected;
  double tolerance;
  Relation relation;
  Provenance provenance;
  bool passed;
};

Measurement measure(std::string quantity, double measured, Relation relation,
                    double expected, double tolerance, Provenance provenance);

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::vector<Measurement> measurements;

  void add(Measurement m);
  std::vector<Measurement> failures() const;
};

/// M_p <= I_p <= U_p <= 1/Delta^p for each p, with relative slack 1e-12.
CheckResult check_ordering(const PolygonalLoop& loop, const std::vector<double>& p_list,
                           int workers = 0);

/// p-th roots of M_p, I_p and U_p are non-decreasing along the schedule
/// (relative slack 1e-10) and within 5% of 1/Delta at the largest p.
/// Requires an increasing schedule with maximum >= 32.
CheckResult check_p_limits(const PolygonalLoop& loop, const std::vector<double>& p_schedule,
                           int workers = 0);

/// Evaluates M_4, I_3, U_2, E_3, E_Moeb, TK and 1/Delta on gen_pinched(gap, n)
/// for a strictly decreasing gap list. The five repulsive energies must grow
/// strictly and by at least 10x overall; TK must grow by less than 2x; 1/Delta
/// must grow by at least 1.9x per halving of the gap.
CheckResult check_charge_blowup(const std::vector<double>& gaps, int n, int workers = 0);

/// TK of the (2,3) torus knot and the figure-eight knot is >= 4 pi, TK of
/// the circle is 2 pi to 1e-12, and every curve respects TK >= 2 pi.
/// Requires n >= 64.
CheckResult check_fary_milnor(int n);

/// On gen_circle(n): M_3, I_2, U_1 approach (2 pi)^p with empirical order
/// >= 0.9 between consecutive n; Delta increases monotonically to within 1%
/// of 1/(2 pi); the Richardson extrapolation of E_Moeb over the last two
/// entries of `moebius_schedule` lands in 4 +- 0.05.
CheckResult check_circle_convergence(const std::vector<int>& n_schedule,
                                     const std::vector<int>& moebius_schedule,
                                     int workers = 0);

/// Richardson extrapolation assuming error ~ C/n: (n2 v2 - n1 v1)/(n2 - n1).
double richardson_first_order(int n1, double v1, int n2, double v2);

std::string report_json(const std::vector<CheckResult>& results);
std::string report_table(const std::vector<CheckResult>& results);

}  // namespace menger
