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

#ifndef QPD_REPORT_H_
#define QPD_REPORT_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpd/equilibrium.hpp"
#include "qpd/verify.hpp"

// Report assembly and rendering for the command line tool. All output is
// deterministic: fixed field order, shortest round-trip number formatting,
// LF line endings.

namespace qpd {

enum class OutputFormat { kText, kCsv, kJson };

OutputFormat parse_format(const std::string& name);

// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

struct StateDescription {
  std::vector<Complex> amplitudes;  // all 16
  bool restricted = false;          // support on 1111, 1122, 2211, 2222 only
  std::array<double, 4> weights{};  // moduli squared, valid when restricted
};

StateDescription describe_state(const PureState& state);

struct EvaluateDocument {
  StateDescription state;
  std::array<double, 4> profile{};
  StagePayoffs measured;
  bool has_closed_form = false;
  StagePayoffs closed_form;
  double max_discrepancy = 0.0;
};

EvaluateDocument make_evaluate_document(const PureState& state,
                                        const StrategyProfile& profile);
std::string render_evaluate(const EvaluateDocument& doc, OutputFormat format);

struct SgpoDocument {
  StateDescription state;
  SgpoReport report;
  SgpoKind kind = SgpoKind::kMultiple;
  OracleAgreement oracle;  // aggregated over the stage-2 and induced games
  double eps = kNormTolerance;
};

SgpoDocument make_sgpo_document(const PureState& state, double eps,
                                int grid_n);
std::string render_sgpo(const SgpoDocument& doc, OutputFormat format);

struct ConditionsDocument {
  std::array<double, 4> weights{};
  ConditionReport report;
  double tol = kNormTolerance;
};

std::string render_conditions(const ConditionsDocument& doc,
                              OutputFormat format);

struct SweepRow {
  std::array<double, 4> weights{};
  ConditionReport conditions;
  SgpoKind kind = SgpoKind::kMultiple;
  double a_total = 0.0;
  double b_total = 0.0;
};

// One row per weight vector on the simplex grid {(i,j,k,l)/resolution},
// in lexicographic order. Totals are those of the first SGPO profile in
// canonical order.
std::vector<SweepRow> run_sweep(int resolution, double tol);
std::string render_sweep(const std::vector<SweepRow>& rows,
                         OutputFormat format);

std::string render_checks(const std::vector<CheckResult>& checks,
                          std::uint64_t seed, OutputFormat format);

}  // namespace qpd

#endif  // QPD_REPORT_H_
