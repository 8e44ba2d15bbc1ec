// Copyright 2026 The qpd Authors
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpd/parse.hpp"
#include "qpd/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qpd::IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw qpd::IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-stage prisoners' dilemma in the probabilistic identity/inversion "
      "quantization scheme: payoff evaluation, subgame-perfect outcomes, "
      "cooperation conditions, simplex sweeps, classical-limit checks."};
  app.require_subcommand(1);

  std::vector<std::string> state_tokens;
  std::string profile_csv;
  std::string weights_csv;
  std::string format_name = "text";
  std::string out_path;
  int resolution = 0;
  int grid_n = 100;
  std::uint64_t seed = 1;
  double tol = qpd::kNormTolerance;
  bool corrupt = false;

  auto add_state_option = [&](CLI::App* cmd) {
    cmd->add_option("--state", state_tokens,
                    "State amplitudes: 4 restricted or 16 general. Each "
                    "amplitude is RE or RE,IM; reals may be fractions (1/6).")
        ->required()
        ->expected(4, 16);
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format: text, csv, json")
        ->default_val("text");
    cmd->add_option("--out", out_path, "Output path (default: stdout)");
    cmd->add_option("--tol", tol, "Classification tolerance")
        ->default_val(qpd::kNormTolerance);
  };

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Stage payoffs for a state and strategy profile");
  add_state_option(evaluate);
  evaluate
      ->add_option("--profile", profile_csv,
                   "Identity probabilities p,q,p1,q1")
      ->required();
  add_common(evaluate);

  CLI::App* sgpo_cmd = app.add_subcommand(
      "sgpo", "Stage equilibria, backward induction, subgame-perfect outcomes");
  add_state_option(sgpo_cmd);
  sgpo_cmd->add_option("--grid-n", grid_n, "Grid oracle resolution")
      ->default_val(100)
      ->check(CLI::PositiveNumber);
  add_common(sgpo_cmd);

  CLI::App* conditions = app.add_subcommand(
      "conditions", "Cooperate-then-defect conditions for state weights");
  conditions
      ->add_option("--weights", weights_csv, "Moduli squared w1,w2,w3,w4")
      ->required();
  add_common(conditions);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Conditions and SGPO kind over the weight simplex grid");
  sweep->add_option("--resolution", resolution, "Simplex grid resolution")
      ->required()
      ->check(CLI::Range(2, 1000));
  add_common(sweep);

  CLI::App* verify = app.add_subcommand(
      "verify-classical", "Classical-limit and oracle-equivalence checks");
  verify->add_option("--seed", seed, "Seed for randomized sampling")
      ->default_val(1);
  verify
      ->add_flag("--corrupt", corrupt,
                 "Corrupt the payoff observables (negative control)")
      ->group("");
  add_common(verify);

  try {
    app.parse(argc, argv);

    const qpd::OutputFormat format = qpd::parse_format(format_name);

    if (*evaluate) {
      const qpd::PureState state = qpd::parse_state(state_tokens);
      const qpd::StrategyProfile profile = qpd::parse_profile(profile_csv);
      const qpd::EvaluateDocument doc =
          qpd::make_evaluate_document(state, profile);
      write_output(qpd::render_evaluate(doc, format), out_path);
      return kExitOk;
    }
    if (*sgpo_cmd) {
      const qpd::PureState state = qpd::parse_state(state_tokens);
      const qpd::SgpoDocument doc =
          qpd::make_sgpo_document(state, tol, grid_n);
      write_output(qpd::render_sgpo(doc, format), out_path);
      return kExitOk;
    }
    if (*conditions) {
      const qpd::RestrictedStateWeights w = qpd::parse_weights(weights_csv);
      qpd::ConditionsDocument doc;
      doc.weights = {w.w1(), w.w2(), w.w3(), w.w4()};
      doc.report = qpd::cooperation_conditions(w, tol);
      doc.tol = tol;
      write_output(qpd::render_conditions(doc, format), out_path);
      return kExitOk;
    }
    if (*sweep) {
      const std::vector<qpd::SweepRow> rows = qpd::run_sweep(resolution, tol);
      write_output(qpd::render_sweep(rows, format), out_path);
      return kExitOk;
    }
    if (*verify) {
      const std::vector<qpd::CheckResult> checks =
          qpd::run_classical_checks(seed, tol, corrupt ? 0.5 : 0.0);
      write_output(qpd::render_checks(checks, seed, format), out_path);
      for (const qpd::CheckResult& c : checks) {
        if (!c.passed) return kExitVerificationFailure;
      }
      return kExitOk;
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qpd: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qpd::Error& e) {
    std::cerr << "qpd: " << e.what() << "\n";
    return kExitUsage;
  }
}
