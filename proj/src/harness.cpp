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

#include "menger/harness.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "menger/energies.hpp"
#include "menger/errors.hpp"
#include "menger/radii.hpp"

namespace menger {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOrderingSlack = 1e-12;
constexpr double kMonotoneSlack = 1e-10;
constexpr double kLimitTolerance = 0.05;
constexpr double kChargeGrowth = 10.0;
constexpr double kTotalCurvatureGrowth = 2.0;
constexpr double kThicknessGrowthPerHalving = 1.9;
constexpr double kMinOrder = 0.9;
constexpr double kMoebiusCircle = 4.0;
constexpr double kMoebiusTolerance = 0.05;

std::string short_g(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string p_label(const char* name, double p) {
  std::ostringstream s;
  s << name << "[p=" << p << "]";
  return s.str();
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::kAtMost: return "<=";
    case Relation::kAtLeast: return ">=";
    case Relation::kLess: return "<";
    case Relation::kGreater: return ">";
    case Relation::kRelative: return "~rel";
    case Relation::kAbsolute: return "~abs";
  }
  return "?";
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kTheorem: return "theorem";
    case Provenance::kDerived: return "derived";
    case Provenance::kTrivial: return "trivial";
  }
  return "?";
}

}  // namespace

Measurement measure(std::string quantity, double measured, Relation relation,
                    double expected, double tolerance, Provenance provenance) {
  bool ok = false;
  switch (relation) {
    case Relation::kAtMost: ok = measured <= expected + tolerance; break;
    case Relation::kAtLeast: ok = measured >= expected - tolerance; break;
    case Relation::kLess: ok = measured < expected; break;
    case Relation::kGreater: ok = measured > expected; break;
    case Relation::kRelative:
      ok = std::abs(measured - expected) <= tolerance * std::abs(expected);
      break;
    case Relation::kAbsolute: ok = std::abs(measured - expected) <= tolerance; break;
  }
  return {std::move(quantity), measured, expected, tolerance, relation, provenance, ok};
}

void CheckResult::add(Measurement m) {
  passed = passed && m.passed;
  measurements.push_back(std::move(m));
}

std::vector<Measurement> CheckResult::failures() const {
  std::vector<Measurement> out;
  for (const Measurement& m : measurements) {
    if (!m.passed) out.push_back(m);
  }
  return out;
}

CheckResult check_ordering(const PolygonalLoop& loop, const std::vector<double>& p_list,
                           int workers) {
  CheckResult result("ordering");
  for (double p : p_list) {
    const OrderingChain c = ordering_chain(loop, p, workers);
    const auto slack = [](double bound) { return kOrderingSlack * std::max(1.0, std::abs(bound)); };
    result.add(measure(p_label("M<=I", p), c.menger, Relation::kAtMost, c.rho,
                       slack(c.rho), Provenance::kTheorem));
    result.add(measure(p_label("I<=U", p), c.rho, Relation::kAtMost, c.global_radius,
                       slack(c.global_radius), Provenance::kTheorem));
    result.add(measure(p_label("U<=1/Delta^p", p), c.global_radius, Relation::kAtMost,
                       c.inverse_thickness_pow, slack(c.inverse_thickness_pow),
                       Provenance::kTheorem));
  }
  return result;
}

CheckResult check_p_limits(const PolygonalLoop& loop, const std::vector<double>& p_schedule,
                           int workers) {
  if (p_schedule.empty() || p_schedule.back() < 32.0) {
    throw DomainError("p-limit check needs a schedule reaching p >= 32");
  }
  for (std::size_t k = 1; k < p_schedule.size(); ++k) {
    if (!(p_schedule[k] > p_schedule[k - 1])) {
      throw DomainError("p-limit check needs an increasing schedule");
    }
  }

  CheckResult result("plimits");
  std::vector<double> roots[3];
  double inverse_thickness = 0.0;
  for (double p : p_schedule) {
    const OrderingChain c = ordering_chain(loop, p, workers);
    roots[0].push_back(std::pow(c.menger, 1.0 / p));
    roots[1].push_back(std::pow(c.rho, 1.0 / p));
    roots[2].push_back(std::pow(c.global_radius, 1.0 / p));
    inverse_thickness = c.inverse_thickness;
  }

  const char* names[3] = {"M", "I", "U"};
  for (int e = 0; e < 3; ++e) {
    for (std::size_t k = 1; k < p_schedule.size(); ++k) {
      const double prev = roots[e][k - 1];
      result.add(measure(p_label((std::string(names[e]) + "^(1/p) non-decreasing").c_str(),
                                 p_schedule[k]),
                         roots[e][k], Relation::kAtLeast, prev, kMonotoneSlack * prev,
                         Provenance::kTheorem));
    }
    result.add(measure(std::string(names[e]) + "^(1/p) at p_max vs 1/Delta",
                       roots[e].back(), Relation::kRelative, inverse_thickness,
                       kLimitTolerance, Provenance::kTheorem));
  }
  return result;
}

CheckResult check_charge_blowup(const std::vector<double>& gaps, int n, int workers) {
  if (gaps.size() < 2) throw DomainError("charge check needs at least two gaps");
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    if (!(gaps[k] > 0.0) || (k > 0 && !(gaps[k] < gaps[k - 1]))) {
      throw DomainError("charge check needs strictly decreasing positive gaps");
    }
  }

  struct Series {
    std::string name;
    std::vector<double> values;
  };
  std::vector<Series> repulsive{{"M_4", {}}, {"I_3", {}}, {"U_2", {}}, {"E_3", {}},
                                {"E_Moeb", {}}};
  Series tk{"TK", {}};
  Series inv_delta{"1/Delta", {}};

  for (double gap : gaps) {
    const PolygonalLoop loop = gen_pinched(gap, n);
    repulsive[0].values.push_back(menger_energy(loop, 4.0, workers).value);
    repulsive[1].values.push_back(rho_energy(loop, 3.0, workers).value);
    repulsive[2].values.push_back(global_radius_energy(loop, 2.0, workers).value);
    repulsive[3].values.push_back(tangent_point_energy(loop, 3.0, false, workers).value);
    repulsive[4].values.push_back(moebius_energy(loop, workers).value);
    tk.values.push_back(total_curvature(loop).value);
    inv_delta.values.push_back(1.0 / thickness(loop).value());
  }

  CheckResult result("charge");
  auto gap_label = [&](const std::string& what, std::size_t k) {
    std::ostringstream s;
    s << what << "[gap=" << gaps[k] << "]";
    return s.str();
  };
  for (const Series& s : repulsive) {
    for (std::size_t k = 1; k < gaps.size(); ++k) {
      result.add(measure(gap_label(s.name + " increases", k), s.values[k],
                         Relation::kGreater, s.values[k - 1], 0.0, Provenance::kDerived));
    }
    result.add(measure(s.name + " growth last/first", s.values.back() / s.values.front(),
                       Relation::kAtLeast, kChargeGrowth, 0.0, Provenance::kDerived));
  }
  result.add(measure("TK growth last/first", tk.values.back() / tk.values.front(),
                     Relation::kLess, kTotalCurvatureGrowth, 0.0, Provenance::kTheorem));
  for (std::size_t k = 1; k < gaps.size(); ++k) {
    const double halvings = std::log2(gaps[k - 1] / gaps[k]);
    const double per_halving =
        std::pow(inv_delta.values[k] / inv_delta.values[k - 1], 1.0 / halvings);
    result.add(measure(gap_label("1/Delta growth per halving", k), per_halving,
                       Relation::kAtLeast, kThicknessGrowthPerHalving, 0.0,
                       Provenance::kDerived));
  }
  return result;
}

CheckResult check_fary_milnor(int n) {
  if (n < 64) throw DomainError("Fary-Milnor check needs n >= 64");
  CheckResult result("farymilnor");
  const double trefoil = total_curvature(gen_torus_knot(2, 3, n, 2.0, 1.0)).value;
  const double figure_eight = total_curvature(gen_figure_eight_knot(n)).value;
  const double circle = total_curvature(gen_circle(n)).value;
  const double four_pi = 2.0 * kTwoPi;

  result.add(measure("TK(trefoil) >= 4pi", trefoil, Relation::kAtLeast, four_pi, 0.0,
                     Provenance::kTheorem));
  result.add(measure("TK(figure-eight) >= 4pi", figure_eight, Relation::kAtLeast, four_pi,
                     0.0, Provenance::kTrivial));
  result.add(measure("TK(circle) = 2pi", circle, Relation::kAbsolute, kTwoPi, 1e-12,
                     Provenance::kTrivial));
  for (const auto& [name, value] : {std::pair{"trefoil", trefoil},
                                    std::pair{"figure-eight", figure_eight},
                                    std::pair{"circle", circle}}) {
    result.add(measure(std::string("Fenchel TK(") + name + ") >= 2pi", value,
                       Relation::kAtLeast, kTwoPi, 1e-12, Provenance::kTheorem));
  }
  return result;
}

double richardson_first_order(int n1, double v1, int n2, double v2) {
  return (n2 * v2 - n1 * v1) / static_cast<double>(n2 - n1);
}

CheckResult check_circle_convergence(const std::vector<int>& n_schedule,
                                     const std::vector<int>& moebius_schedule,
                                     int workers) {
  auto require_increasing = [](const std::vector<int>& s, const char* what) {
    if (s.size() < 2) throw DomainError(std::string(what) + " needs at least two sizes");
    for (std::size_t k = 1; k < s.size(); ++k) {
      if (!(s[k] > s[k - 1])) throw DomainError(std::string(what) + " must increase");
    }
  };
  require_increasing(n_schedule, "circle schedule");
  require_increasing(moebius_schedule, "Moebius schedule");

  CheckResult result("circle");
  struct Family {
    std::string name;
    double p;
    std::vector<double> errors;
  };
  std::vector<Family> families{{"M_3", 3.0, {}}, {"I_2", 2.0, {}}, {"U_1", 1.0, {}}};
  std::vector<double> deltas;
  for (int n : n_schedule) {
    const PolygonalLoop loop = gen_circle(n);
    const double values[3] = {menger_energy(loop, 3.0, workers).value,
                              rho_energy(loop, 2.0, workers).value,
                              global_radius_energy(loop, 1.0, workers).value};
    for (int f = 0; f < 3; ++f) {
      const double target = std::pow(kTwoPi, families[f].p);
      families[f].errors.push_back(std::abs(values[f] - target) / target);
    }
    deltas.push_back(thickness(loop).value());
  }

  for (const Family& f : families) {
    for (std::size_t k = 1; k < n_schedule.size(); ++k) {
      const double order = std::log(f.errors[k - 1] / f.errors[k]) /
                           std::log(static_cast<double>(n_schedule[k]) / n_schedule[k - 1]);
      std::ostringstream label;
      label << f.name << " order[n=" << n_schedule[k - 1] << "->" << n_schedule[k] << "]";
      result.add(measure(label.str(), order, Relation::kAtLeast, kMinOrder, 0.0,
                         Provenance::kDerived));
    }
  }
  for (std::size_t k = 1; k < n_schedule.size(); ++k) {
    std::ostringstream label;
    label << "Delta increasing[n=" << n_schedule[k] << "]";
    result.add(measure(label.str(), deltas[k], Relation::kGreater, deltas[k - 1], 0.0,
                       Provenance::kDerived));
  }
  result.add(measure("Delta at n_max vs 1/(2pi)", deltas.back(), Relation::kRelative,
                     1.0 / kTwoPi, 0.01, Provenance::kTrivial));

  std::vector<double> moebius;
  for (int n : moebius_schedule) {
    moebius.push_back(moebius_energy(gen_circle(n), workers).value);
  }
  const std::size_t last = moebius_schedule.size() - 1;
  const double extrapolated = richardson_first_order(
      moebius_schedule[last - 1], moebius[last - 1], moebius_schedule[last], moebius[last]);
  result.add(measure("E_Moeb(circle) Richardson limit", extrapolated, Relation::kAbsolute,
                     kMoebiusCircle, kMoebiusTolerance, Provenance::kDerived));
  return result;
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    nlohmann::ordered_json check;
    check["check"] = r.name;
    check["status"] = r.passed ? "pass" : "fail";
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const Measurement& m : r.measurements) {
      ms.push_back({{"quantity", m.quantity},
                    {"measured", m.measured},
                    {"relation", relation_symbol(m.relation)},
                    {"expected", m.expected},
                    {"tolerance", m.tolerance},
                    {"provenance", provenance_name(m.provenance)},
                    {"status", m.passed ? "pass" : "fail"}});
    }
    check["measurements"] = std::move(ms);
    doc.push_back(std::move(check));
  }
  return doc.dump(2) + "\n";
}

std::string report_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << "== " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
    for (const Measurement& m : r.measurements) {
      char line[512];
      std::snprintf(line, sizeof line, "  %-4s %-44s %s %s %s (tol %s, %s)\n",
                    m.passed ? "ok" : "FAIL", m.quantity.c_str(), short_g(m.measured, 12).c_str(),
                    relation_symbol(m.relation), short_g(m.expected, 12).c_str(),
                    short_g(m.tolerance, 6).c_str(), provenance_name(m.provenance));
      out << line;
    }
  }
  return out.str();
}

}  // namespace menger
