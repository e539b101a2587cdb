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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "menger/cli.hpp"
#include "menger/curve.hpp"
#include "menger/energies.hpp"

using namespace menger;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  explicit Scratch(const std::string& name)
      : dir_(fs::temp_directory_path() / ("menger_cli_" + name)) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& file) const { return (dir_ / file).string(); }

 private:
  fs::path dir_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

double value_field(const std::string& line) {
  const auto at = line.find("value=");
  REQUIRE(at != std::string::npos);
  return std::stod(line.substr(at + 6));
}

}  // namespace

TEST_CASE("gen then energy reproduces the circle value") {
  Scratch s("circle");
  const auto c = s.path("c.json");
  auto gen = run_cli({"gen", "--shape", "circle", "--n", "128", "--out", c});
  REQUIRE(gen.code == 0);
  CHECK(gen.out.find("wrote") != std::string::npos);

  auto e = run_cli({"energy", "--in", c, "--name", "Mp", "--p", "3"});
  REQUIRE(e.code == 0);
  CHECK(e.out.rfind("name=Mp p=3 n=128 value=", 0) == 0);
  CHECK(e.out.find("node_rule=edge-midpoint") != std::string::npos);
  CHECK(e.err.find("wall_time") != std::string::npos);
  CHECK(e.err.find("note:") != std::string::npos);  // p = 3 is the critical exponent

  const double v = value_field(e.out);
  CHECK(v == menger_energy(read_loop(c), 3).value);
  // Discrete circle: n (n-1) (n-2) triples of weight n^-3 at curvature 2 n tan(pi/n).
  const double kappa = 256 * std::tan(std::numbers::pi / 128);
  CHECK(v == doctest::Approx(127.0 * 126.0 / (128.0 * 128.0) * std::pow(kappa, 3)).epsilon(1e-12));
  CHECK(v == doctest::Approx(std::pow(2 * std::numbers::pi, 3)).epsilon(0.03));

  auto sup = run_cli({"energy", "--in", c, "--name", "Mp", "--p", "4"});
  CHECK(sup.err.find("note:") == std::string::npos);

  auto tk = run_cli({"energy", "--in", c, "--name", "TK"});
  REQUIRE(tk.code == 0);
  CHECK(tk.out.find(" p=") == std::string::npos);
  CHECK(std::abs(value_field(tk.out) - 2 * std::numbers::pi) <= 1e-12);
}

TEST_CASE("numeric output is byte-identical across worker counts") {
  Scratch s("workers");
  const auto k = s.path("k.json");
  REQUIRE(run_cli({"gen", "--shape", "torus-knot", "--n", "64", "--out", k}).code == 0);
  for (const char* name : {"Mp", "Ip", "Up", "Ep", "EpSym", "Moebius", "acn", "thickness"}) {
    std::vector<std::string> base{"energy", "--in", k, "--name", name};
    if (takes_exponent(parse_energy_name(name))) {
      base.insert(base.end(), {"--p", "3.5"});
    }
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto eight = base;
    eight.insert(eight.end(), {"--workers", "8"});
    CAPTURE(name);
    CHECK(run_cli(one).out == run_cli(eight).out);
  }
}

TEST_CASE("check exit codes") {
  Scratch s("check");
  const auto c = s.path("c.json");
  const auto k = s.path("k.json");
  REQUIRE(run_cli({"gen", "--shape", "circle", "--n", "128", "--out", c}).code == 0);
  REQUIRE(run_cli({"gen", "--shape", "torus-knot", "--n", "128", "--out", k}).code == 0);

  auto ordering = run_cli({"check", "--suite", "ordering", "--in", c, "--p", "1,2,3"});
  CHECK(ordering.code == 0);
  CHECK(ordering.out.find("== ordering: PASS") != std::string::npos);

  auto fm = run_cli({"check", "--suite", "farymilnor", "--n", "64", "--format", "json"});
  CHECK(fm.code == 0);
  CHECK(fm.out.find("\"status\": \"pass\"") != std::string::npos);

  // Sharp p = 32 power means of a knotted curve stay well below 1/Delta.
  auto plimits = run_cli({"check", "--suite", "plimits", "--in", k});
  CHECK(plimits.code == 2);
  CHECK(plimits.out.find("FAIL") != std::string::npos);

  CHECK(run_cli({"check", "--suite", "ordering"}).code == 1);
  CHECK(run_cli({"check", "--suite", "plimits", "--in", c, "--p", "1,2"}).code == 1);
  CHECK(run_cli({"check", "--suite", "nope"}).code == 1);
  CHECK(run_cli({"check", "--suite", "charge", "--gaps", "0.1,0.2"}).code == 1);
}

TEST_CASE("gen variants and seeds") {
  Scratch s("gen");
  const auto a = s.path("a.json");
  const auto b = s.path("b.json");
  REQUIRE(run_cli({"gen", "--shape", "circle", "--n", "32", "--seed", "5", "--perturb", "0.02",
                   "--out", a})
              .code == 0);
  REQUIRE(run_cli({"gen", "--shape", "circle", "--n", "32", "--seed", "5", "--perturb", "0.02",
                   "--out", b})
              .code == 0);
  CHECK(read_text(a) == read_text(b));
  CHECK(read_loop(a).vertices()[1] == perturb(gen_circle(32), 0.02, 5).vertices()[1]);

  auto unseeded = run_cli({"gen", "--shape", "circle", "--n", "32", "--perturb", "0.02",
                           "--out", a});
  CHECK(unseeded.code == 1);
  CHECK(unseeded.err.find("--seed") != std::string::npos);

  CHECK(run_cli({"gen", "--shape", "pinched", "--n", "64", "--out", a}).code == 1);
  CHECK(run_cli({"gen", "--shape", "pinched", "--gap", "0.05", "--n", "64", "--out", a}).code ==
        0);
  CHECK(read_loop(a).size() == 64);
  CHECK(run_cli({"gen", "--shape", "torus-knot", "--p-torus", "3", "--q-torus", "5", "--n", "90",
                 "--out", a})
            .code == 0);
  CHECK(run_cli({"gen", "--shape", "torus-knot", "--p-torus", "2", "--q-torus", "4", "--n", "90",
                 "--out", a})
            .code == 1);
  CHECK(run_cli({"gen", "--shape", "circle", "--n", "2", "--out", a}).code == 1);
  CHECK(run_cli({"gen", "--shape", "square", "--n", "8", "--out", a}).code == 1);
  CHECK(run_cli({"gen", "--shape", "circle", "--n", "8", "--out", s.path("missing/x.json")})
            .code == 1);
}

TEST_CASE("input and argument errors exit 1 with one diagnostic line") {
  Scratch s("errors");
  const auto c = s.path("c.json");
  REQUIRE(run_cli({"gen", "--shape", "circle", "--n", "16", "--out", c}).code == 0);

  const auto broken = s.path("broken.json");
  write_text(broken, "{\"vertices\": [[0,0,0], [1,0,0]");
  const auto open_curve = s.path("open.json");
  write_text(open_curve, R"({"vertices": [[0,0,0],[1,0,0],[0,1,0]], "closed": false})");

  const std::vector<std::vector<std::string>> cases{
      {"energy", "--in", broken, "--name", "Mp", "--p", "3"},
      {"energy", "--in", open_curve, "--name", "TK"},
      {"energy", "--in", s.path("absent.json"), "--name", "TK"},
      {"energy", "--in", c, "--name", "Mq", "--p", "3"},
      {"energy", "--in", c, "--name", "Mp"},
      {"energy", "--in", c, "--name", "Mp", "--p", "0.5"},
      {"energy", "--in", c, "--name", "TK", "--frobnicate"},
      {"energy", "--in", c, "--name", "TK", "--workers", "-2"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    const auto r = run_cli(args);
    CAPTURE(r.err);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("help exits 0") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("energy") != std::string::npos);
}

TEST_CASE("flow writes the loop, the log and snapshots") {
  Scratch s("flow");
  const auto start = s.path("start.json");
  const auto end = s.path("end.json");
  REQUIRE(run_cli({"gen", "--shape", "circle", "--n", "12", "--seed", "3", "--perturb", "0.05",
                   "--out", start})
              .code == 0);
  auto r = run_cli({"flow", "--in", start, "--name", "Mp", "--p", "3", "--max-iters", "4",
                    "--grad-tol", "1e-9", "--snapshot-every", "2", "--snapshot-prefix",
                    s.path("snap"), "--out", end});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("iter,energy,grad_norm,step\n0,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.err.find("status=max-iters") != std::string::npos);
  CHECK(fs::exists(s.path("snap_0.json")));
  CHECK(fs::exists(s.path("snap_2.json")));
  CHECK(fs::exists(s.path("snap_4.json")));
  const auto relaxed = read_loop(end);
  CHECK(std::abs(relaxed.total_length() - 1.0) < 1e-12);
  CHECK(menger_energy(relaxed, 3).value < menger_energy(read_loop(start), 3).value);

  CHECK(run_cli({"flow", "--in", start, "--name", "Mp", "--p", "3", "--max-iters", "0",
                 "--grad-tol", "1e-9", "--out", end})
            .code == 1);
}

TEST_CASE("bench keeps numbers and timings apart") {
  auto r = run_cli({"bench", "--name", "Ip", "--n-list", "16,32", "--p", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("name=Ip p=2 n=", 0) == 0);
    CHECK(line.find("time") == std::string::npos);
    ++count;
  }
  CHECK(count == 2);
  CHECK(r.err.find("n=32 wall_time_s=") != std::string::npos);
}

#ifdef MENGER_CLI_PATH
TEST_CASE("the installed binary honours MENGER_WORKERS") {
  Scratch s("binary");
  const std::string exe = MENGER_CLI_PATH;
  const auto k = s.path("k.json");
  auto sh = [&](const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  REQUIRE(sh(exe + " gen --shape torus-knot --n 48 --out " + k + " > /dev/null") == 0);
  const std::string energy = " energy --in " + k + " --name Mp --p 3.5 2> /dev/null > ";
  REQUIRE(sh("MENGER_WORKERS=1 " + exe + energy + s.path("w1.txt")) == 0);
  REQUIRE(sh("MENGER_WORKERS=4 " + exe + energy + s.path("w4.txt")) == 0);
  REQUIRE(sh("MENGER_WORKERS=4 " + exe + energy + s.path("w4b.txt") + "; exit 0") == 0);
  CHECK(!read_text(s.path("w1.txt")).empty());
  CHECK(read_text(s.path("w1.txt")) == read_text(s.path("w4.txt")));
  CHECK(read_text(s.path("w4.txt")) == read_text(s.path("w4b.txt")));
  CHECK(sh(exe + " energy --in " + s.path("none.json") + " --name TK 2> /dev/null") == 1);
  CHECK(sh(exe + " check --suite plimits --in " + k + " > /dev/null") == 2);
}
#endif
