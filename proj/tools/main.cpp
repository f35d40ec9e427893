// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graphent/graph.hpp"
#include "graphent/graphstate.hpp"
#include "graphent/report.hpp"
#include "graphent/sweep.hpp"

namespace {

// Exit codes: 0 success, 2 input error, 3 internal cross-check failure.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCrossCheck = 3;

// Exact-route agreement enforced on every emitted result. Looser than
// the library's own cross-check tests to stay robust on any libm.
constexpr double kAgreementTol = 1e-8;

graphent::GraphStateSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open spec file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return graphent::parse_spec(buf.str());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  out << text;
}

struct ShotFlags {
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 12345;
  double flip = 0.0;
};

void add_shot_flags(CLI::App* cmd, ShotFlags& flags) {
  cmd->add_option("--shots", flags.shots,
                  "Shots per measurement basis; enables the sampled estimate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed, "Sampling seed (default 12345)");
  cmd->add_option("--flip", flags.flip,
                  "Symmetric readout flip probability in [0, 0.5]")
      ->check(CLI::Range(0.0, 0.5));
}

int check_agreement(double worst) {
  if (worst > kAgreementTol) {
    std::cerr << "cross-check failure: closed-form and statevector routes "
                 "disagree by "
              << worst << "\n";
    return kExitCrossCheck;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted graph states: geometric entanglement by closed "
               "form, statevector simulation, and sampled mean spin"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  bool as_json = false;
  ShotFlags shot_flags;
  std::size_t points = 0;

  CLI::App* report = app.add_subcommand(
      "report", "Per-qubit entanglement for a spec file");
  report->add_option("spec", spec_path, "Graph state spec (JSON)")->required();
  add_shot_flags(report, shot_flags);
  report->add_option("--out", out_path, "Write output here instead of stdout");
  report->add_flag("--json", as_json, "Emit JSON instead of CSV");

  CLI::App* sweep_phi_cmd = app.add_subcommand(
      "sweep-phi", "Two-qubit sweep over the edge weight phi01");
  sweep_phi_cmd->add_option("--points", points, "Grid points (default 21)")
      ->check(CLI::Range(static_cast<std::size_t>(2),
                         static_cast<std::size_t>(100000)));
  add_shot_flags(sweep_phi_cmd, shot_flags);
  sweep_phi_cmd->add_option("--out", out_path,
                            "Write output here instead of stdout");

  CLI::App* sweep_theta_cmd = app.add_subcommand(
      "sweep-theta", "Two-qubit sweep over (theta0, theta1) at phi = pi");
  sweep_theta_cmd->add_option("--points", points,
                              "Grid points per axis (default 11)")
      ->check(CLI::Range(static_cast<std::size_t>(2),
                         static_cast<std::size_t>(4096)));
  add_shot_flags(sweep_theta_cmd, shot_flags);
  sweep_theta_cmd->add_option("--out", out_path,
                              "Write output here instead of stdout");

  CLI::App* emit_circuit = app.add_subcommand(
      "emit-circuit", "Preparation circuit for a spec file as gate JSON");
  emit_circuit->add_option("spec", spec_path, "Graph state spec (JSON)")
      ->required();
  emit_circuit->add_option("--out", out_path,
                           "Write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (report->parsed()) {
      const graphent::GraphStateSpec spec = load_spec(spec_path);
      const auto rows = graphent::build_report(
          spec, shot_flags.shots, shot_flags.seed, shot_flags.flip);
      const int check =
          check_agreement(graphent::max_route_disagreement(rows));
      if (check != kExitOk) {
        return check;
      }
      emit(as_json ? graphent::report_to_json(rows)
                   : graphent::report_to_csv(rows),
           out_path);
    } else if (sweep_phi_cmd->parsed()) {
      graphent::SweepOptions options;
      options.points = (points == 0) ? 21 : points;
      options.shots_per_basis = shot_flags.shots;
      options.seed = shot_flags.seed;
      options.readout_flip = shot_flags.flip;
      const auto rows = graphent::sweep_phi(options);
      const int check =
          check_agreement(graphent::max_sweep_disagreement(rows));
      if (check != kExitOk) {
        return check;
      }
      emit(graphent::phi_sweep_to_csv(rows), out_path);
    } else if (sweep_theta_cmd->parsed()) {
      graphent::SweepOptions options;
      options.points = (points == 0) ? 11 : points;
      options.shots_per_basis = shot_flags.shots;
      options.seed = shot_flags.seed;
      options.readout_flip = shot_flags.flip;
      const auto rows = graphent::sweep_theta(options);
      const int check =
          check_agreement(graphent::max_sweep_disagreement(rows));
      if (check != kExitOk) {
        return check;
      }
      emit(graphent::theta_sweep_to_csv(rows), out_path);
    } else if (emit_circuit->parsed()) {
      const graphent::GraphStateSpec spec = load_spec(spec_path);
      emit(graphent::circuit_to_json(graphent::circuit_description(spec)),
           out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
