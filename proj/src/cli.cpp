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

#include "menger/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "menger/curve.hpp"
#include "menger/energies.hpp"
#include "menger/errors.hpp"
#include "menger/flow.hpp"
#include "menger/harness.hpp"
#include "menger/parallel.hpp"

namespace menger::cli {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_writable_target(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw FormatError("output directory '" + parent.string() + "' does not exist");
  }
}

EnergySpec energy_spec(const std::string& name, const std::optional<double>& p) {
  EnergySpec spec{parse_energy_name(name)};
  if (takes_exponent(spec.kind)) {
    if (!p) throw DomainError("energy " + name + " needs --p");
    if (!(*p >= 1.0)) throw DomainError("energy " + name + " needs --p >= 1");
    spec.p = *p;
  }
  return spec;
}

void exponent_advisory(const EnergySpec& spec, std::ostream& err) {
  const auto critical = scale_invariant_exponent(spec.kind);
  if (critical && spec.p <= *critical) {
    err << "note: p=" << spec.p << " is at or below the scale-invariant exponent "
        << *critical << " of " << energy_name(spec.kind)
        << "; the discrete value is finite but the energy is not supercritical\n";
  }
}

std::string report_line(const EnergyReport& r) {
  std::ostringstream s;
  s << "name=" << r.name;
  if (r.p) s << " p=" << g17(*r.p);
  s << " n=" << r.n << " value=" << g17(r.value) << " node_rule=" << r.node_rule;
  return s.str();
}

struct Options {
  // gen
  std::string shape;
  int p_torus = 2;
  int q_torus = 3;
  std::optional<double> gap;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> perturb_amplitude;
  std::string out_path;
  // energy / flow / bench
  std::string in_path;
  std::string name;
  std::optional<double> p;
  int workers = 0;
  int max_iters = 0;
  double grad_tol = 0.0;
  int snapshot_every = 0;
  std::string snapshot_prefix = "snapshot";
  double step_init = FlowConfig{}.step_init;
  double fd_step = FlowConfig{}.fd_step;
  std::vector<int> n_list{64, 128, 256};
  // check
  std::string suite;
  std::vector<double> p_list;
  std::vector<double> gaps{0.1, 0.05, 0.025, 0.0125};
  std::vector<int> circle_n{64, 128, 256, 512};
  std::vector<int> moebius_n{64, 128, 256, 512, 1024};
  std::string format = "table";
};

int run_gen(const Options& o, std::ostream& out) {
  require_writable_target(o.out_path);
  if (o.perturb_amplitude && !o.seed) {
    throw DomainError("--perturb needs an explicit --seed");
  }
  PolygonalLoop loop = [&] {
    if (o.shape == "circle") return gen_circle(o.n);
    if (o.shape == "torus-knot") return gen_torus_knot(o.p_torus, o.q_torus, o.n);
    if (!o.gap) throw DomainError("--shape pinched needs --gap");
    return gen_pinched(*o.gap, o.n);
  }();
  if (o.perturb_amplitude) loop = perturb(loop, *o.perturb_amplitude, *o.seed);
  write_loop(o.out_path, loop);
  out << "wrote " << o.out_path << " (" << loop.size() << " vertices)\n";
  return 0;
}

int run_energy(const Options& o, std::ostream& out, std::ostream& err) {
  const EnergySpec spec = energy_spec(o.name, o.p);
  const PolygonalLoop loop = read_loop(o.in_path);
  exponent_advisory(spec, err);
  const EnergyReport r = evaluate(loop, spec, resolve_workers(o.workers));
  out << report_line(r) << "\n";
  err << "# wall_time_s=" << r.wall_time << "\n";
  return 0;
}

int run_flow(const Options& o, std::ostream& out, std::ostream& err) {
  require_writable_target(o.out_path);
  if (o.snapshot_every > 0) require_writable_target(o.snapshot_prefix);
  FlowConfig config;
  config.energy = energy_spec(o.name, o.p);
  config.max_iters = o.max_iters;
  config.grad_tol = o.grad_tol;
  config.snapshot_every = o.snapshot_every;
  config.snapshot_prefix = o.snapshot_prefix;
  config.step_init = o.step_init;
  config.fd_step = o.fd_step;
  config.workers = resolve_workers(o.workers);
  config.validate();
  const PolygonalLoop loop = read_loop(o.in_path);
  exponent_advisory(config.energy, err);

  const FlowState state = relax(loop, config);
  write_loop(o.out_path, state.loop);
  write_flow_log(out, state);
  err << "# status=" << flow_status_name(state.status) << " iters=" << state.iter
      << " energy=" << g17(state.energy_history.back()) << "\n";
  return 0;
}

int run_check(const Options& o, std::ostream& out) {
  const int workers = resolve_workers(o.workers);
  auto input = [&] {
    if (o.in_path.empty()) throw DomainError("suite " + o.suite + " needs --in");
    return read_loop(o.in_path);
  };
  std::vector<CheckResult> results;
  if (o.suite == "ordering") {
    const auto ps = o.p_list.empty() ? std::vector<double>{1, 2, 3, 4} : o.p_list;
    results.push_back(check_ordering(input(), ps, workers));
  } else if (o.suite == "plimits") {
    const auto ps = o.p_list.empty() ? std::vector<double>{1, 2, 4, 8, 16, 32} : o.p_list;
    results.push_back(check_p_limits(input(), ps, workers));
  } else if (o.suite == "charge") {
    results.push_back(check_charge_blowup(o.gaps, o.n > 0 ? o.n : 128, workers));
  } else if (o.suite == "farymilnor") {
    results.push_back(check_fary_milnor(o.n > 0 ? o.n : 256));
  } else {
    results.push_back(check_circle_convergence(o.circle_n, o.moebius_n, workers));
  }
  out << (o.format == "json" ? report_json(results) : report_table(results));
  for (const CheckResult& r : results) {
    if (!r.passed) return 2;
  }
  return 0;
}

int run_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const EnergyKind kind = parse_energy_name(o.name);
  const EnergySpec spec{kind, o.p.value_or(scale_invariant_exponent(kind).value_or(0.0))};
  const int workers = resolve_workers(o.workers);
  std::vector<std::pair<int, double>> timings;
  for (int n : o.n_list) {
    const EnergyReport r = evaluate(gen_circle(n), spec, workers);
    out << report_line(r) << "\n";
    timings.emplace_back(n, r.wall_time);
  }
  err << "# timings (workers=" << workers << ")\n";
  for (const auto& [n, t] : timings) {
    err << "# " << o.name << " n=" << n << " wall_time_s=" << t << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Menger-curvature knot energies on polygonal loops", "menger"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a unit-length loop");
  gen->add_option("--shape", o.shape, "circle | torus-knot | pinched")
      ->required()
      ->check(CLI::IsMember({"circle", "torus-knot", "pinched"}));
  gen->add_option("--p-torus", o.p_torus, "torus knot p (default 2)");
  gen->add_option("--q-torus", o.q_torus, "torus knot q (default 3)");
  gen->add_option("--gap", o.gap, "strand distance of the pinched loop");
  gen->add_option("--n", o.n, "vertex count")->required();
  gen->add_option("--seed", o.seed, "perturbation seed");
  gen->add_option("--perturb", o.perturb_amplitude, "perturbation amplitude");
  gen->add_option("--out", o.out_path, "output curve file")->required();

  auto* energy = app.add_subcommand("energy", "Evaluate one energy on a curve file");
  energy->add_option("--in", o.in_path)->required()->check(CLI::ExistingFile);
  energy->add_option("--name", o.name,
                     "Mp Ip Up Ep EpSym Moebius TK acn thickness ropelength")
      ->required();
  energy->add_option("--p", o.p, "exponent (Mp, Ip, Up, Ep, EpSym)");
  energy->add_option("--workers", o.workers, "worker threads");

  auto* flow = app.add_subcommand("flow", "Relax a curve by gradient descent");
  flow->add_option("--in", o.in_path)->required()->check(CLI::ExistingFile);
  flow->add_option("--name", o.name)->required();
  flow->add_option("--p", o.p);
  flow->add_option("--max-iters", o.max_iters)->required();
  flow->add_option("--grad-tol", o.grad_tol)->required();
  flow->add_option("--snapshot-every", o.snapshot_every);
  flow->add_option("--snapshot-prefix", o.snapshot_prefix);
  flow->add_option("--step-init", o.step_init, "largest vertex move of a trial step");
  flow->add_option("--fd-step", o.fd_step, "finite-difference step");
  flow->add_option("--workers", o.workers);
  flow->add_option("--out", o.out_path)->required();

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"ordering", "plimits", "charge", "farymilnor", "circle"}));
  check->add_option("--in", o.in_path, "curve file (ordering, plimits)")
      ->check(CLI::ExistingFile);
  check->add_option("--p", o.p_list, "exponents (ordering, plimits)")->delimiter(',');
  check->add_option("--gaps", o.gaps, "decreasing gaps (charge)")->delimiter(',');
  check->add_option("--n", o.n, "vertex count (charge, farymilnor)");
  check->add_option("--n-list", o.circle_n, "circle sizes (circle)")->delimiter(',');
  check->add_option("--moebius-n-list", o.moebius_n, "Moebius sizes (circle)")
      ->delimiter(',');
  check->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));
  check->add_option("--workers", o.workers);

  auto* bench = app.add_subcommand("bench", "Time one kernel on circles of several sizes");
  bench->add_option("--name", o.name)->required();
  bench->add_option("--n-list", o.n_list)->delimiter(',');
  bench->add_option("--p", o.p);
  bench->add_option("--workers", o.workers);

  std::vector<std::string> argv_storage{"menger"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (o.workers < 0) throw DomainError("--workers must be positive");
    if (*gen) return run_gen(o, out);
    if (*energy) return run_energy(o, out, err);
    if (*flow) return run_flow(o, out, err);
    if (*check) return run_check(o, out);
    return run_bench(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace menger::cli
