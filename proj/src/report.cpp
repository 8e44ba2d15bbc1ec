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

#include "qpd/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace qpd {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

Json component_json(const EquilibriumComponent& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["x"] = interval_json(c.x);
  j["y"] = interval_json(c.y);
  j["strictness"] = to_string(c.strictness);
  return j;
}

Json coefficients_json(const BilinearCoefficients& c) {
  Json j;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  j["delta"] = c.delta;
  return j;
}

Json game_json(const BilinearGame& g) {
  Json j;
  j["row"] = coefficients_json(g.row);
  j["col"] = coefficients_json(g.col);
  return j;
}

Json state_json(const StateDescription& s) {
  Json j;
  j["restricted"] = s.restricted;
  if (s.restricted) {
    j["weights"] = Json::array(
        {s.weights[0], s.weights[1], s.weights[2], s.weights[3]});
  }
  Json amps = Json::array();
  for (const Complex& a : s.amplitudes) {
    amps.push_back(Json::array({a.real(), a.imag()}));
  }
  j["amplitudes"] = amps;
  return j;
}

Json payoffs_json(const StagePayoffs& p) {
  Json j;
  j["a1"] = p.a1;
  j["b1"] = p.b1;
  j["a2"] = p.a2;
  j["b2"] = p.b2;
  return j;
}

std::string interval_text(const Interval& iv) {
  if (iv.lo == iv.hi) return format_double(iv.lo);
  return "[" + format_double(iv.lo) + "," + format_double(iv.hi) + "]";
}

std::string component_text(const EquilibriumComponent& c) {
  std::string out = to_string(c.kind);
  out += "  x=" + interval_text(c.x) + "  y=" + interval_text(c.y);
  out += "  (";
  out += to_string(c.strictness);
  out += ")";
  return out;
}

std::string coefficients_text(const BilinearCoefficients& c) {
  return "alpha=" + format_double(c.alpha) + " beta=" + format_double(c.beta) +
         " gamma=" + format_double(c.gamma) +
         " delta=" + format_double(c.delta);
}

void append_payoffs_text(std::ostringstream& out, const char* label,
                         const StagePayoffs& p) {
  out << label << "  a1=" << format_double(p.a1)
      << "  b1=" << format_double(p.b1) << "  a2=" << format_double(p.a2)
      << "  b2=" << format_double(p.b2) << "\n";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ParseError("unknown output format '" + name +
                   "' (expected text, csv, or json)");
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

StateDescription describe_state(const PureState& state) {
  static constexpr int kRestrictedSlots[4] = {0, 3, 12, 15};
  StateDescription d;
  d.amplitudes.reserve(kDim);
  for (int n = 0; n < kDim; ++n) d.amplitudes.push_back(state.amplitudes()(n));

  d.restricted = true;
  for (int n = 0; n < kDim; ++n) {
    const bool slot_restricted = n == kRestrictedSlots[0] ||
                                 n == kRestrictedSlots[1] ||
                                 n == kRestrictedSlots[2] ||
                                 n == kRestrictedSlots[3];
    if (!slot_restricted && std::abs(d.amplitudes[n]) > kExactTolerance) {
      d.restricted = false;
    }
  }
  if (d.restricted) {
    for (int t = 0; t < 4; ++t) {
      d.weights[t] = std::norm(d.amplitudes[kRestrictedSlots[t]]);
    }
  }
  return d;
}

EvaluateDocument make_evaluate_document(const PureState& state,
                                        const StrategyProfile& profile) {
  EvaluateDocument doc;
  doc.state = describe_state(state);
  doc.profile = {profile.p, profile.q, profile.p1, profile.q1};
  doc.measured = all_payoffs(state, profile);
  if (doc.state.restricted) {
    const RestrictedStateWeights w(doc.state.weights[0], doc.state.weights[1],
                                   doc.state.weights[2], doc.state.weights[3]);
    doc.has_closed_form = true;
    doc.closed_form = closed_form_payoffs(w, profile);
    doc.max_discrepancy = std::max(
        std::max(std::abs(doc.measured.a1 - doc.closed_form.a1),
                 std::abs(doc.measured.b1 - doc.closed_form.b1)),
        std::max(std::abs(doc.measured.a2 - doc.closed_form.a2),
                 std::abs(doc.measured.b2 - doc.closed_form.b2)));
  }
  return doc;
}

std::string render_evaluate(const EvaluateDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["command"] = "evaluate";
      j["state"] = state_json(doc.state);
      j["profile"] = Json::array(
          {doc.profile[0], doc.profile[1], doc.profile[2], doc.profile[3]});
      j["measured"] = payoffs_json(doc.measured);
      if (doc.has_closed_form) {
        j["closed_form"] = payoffs_json(doc.closed_form);
        j["max_discrepancy"] = doc.max_discrepancy;
      }
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "source,a1,b1,a2,b2\n";
      out << "measured," << format_double(doc.measured.a1) << ","
          << format_double(doc.measured.b1) << ","
          << format_double(doc.measured.a2) << ","
          << format_double(doc.measured.b2) << "\n";
      if (doc.has_closed_form) {
        out << "closed-form," << format_double(doc.closed_form.a1) << ","
            << format_double(doc.closed_form.b1) << ","
            << format_double(doc.closed_form.a2) << ","
            << format_double(doc.closed_form.b2) << "\n";
        out << "discrepancy,"
            << format_double(std::abs(doc.measured.a1 - doc.closed_form.a1))
            << ","
            << format_double(std::abs(doc.measured.b1 - doc.closed_form.b1))
            << ","
            << format_double(std::abs(doc.measured.a2 - doc.closed_form.a2))
            << ","
            << format_double(std::abs(doc.measured.b2 - doc.closed_form.b2))
            << "\n";
      }
      return out.str();
    }
    case OutputFormat::kText:
    default: {
      std::ostringstream out;
      if (doc.state.restricted) {
        out << "state: restricted, weights = ("
            << format_double(doc.state.weights[0]) << ", "
            << format_double(doc.state.weights[1]) << ", "
            << format_double(doc.state.weights[2]) << ", "
            << format_double(doc.state.weights[3]) << ")\n";
      } else {
        out << "state: general (16 amplitudes)\n";
      }
      out << "profile (p,q,p1,q1) = (" << format_double(doc.profile[0]) << ", "
          << format_double(doc.profile[1]) << ", "
          << format_double(doc.profile[2]) << ", "
          << format_double(doc.profile[3]) << ")\n";
      append_payoffs_text(out, "measured:   ", doc.measured);
      if (doc.has_closed_form) {
        append_payoffs_text(out, "closed-form:", doc.closed_form);
        out << "max discrepancy: " << format_double(doc.max_discrepancy)
            << "\n";
      }
      return out.str();
    }
  }
}

SgpoDocument make_sgpo_document(const PureState& state, double eps,
                                int grid_n) {
  SgpoDocument doc;
  doc.state = describe_state(state);
  doc.eps = eps;
  doc.report = sgpo(state, eps);
  doc.kind = classify_sgpo(doc.report, eps);

  doc.oracle = check_against_oracle(doc.report.stage2_game,
                                    doc.report.stage2_equilibria, grid_n, eps);
  for (const Continuation& c : doc.report.continuations) {
    const OracleAgreement agreement = check_against_oracle(
        c.induced_stage1, c.stage1_equilibria, grid_n, eps);
    doc.oracle.oracle_points += agreement.oracle_points;
    doc.oracle.max_distance =
        std::max(doc.oracle.max_distance, agreement.max_distance);
    doc.oracle.consistent = doc.oracle.consistent && agreement.consistent;
  }
  return doc;
}

std::string render_sgpo(const SgpoDocument& doc, OutputFormat format) {
  const SgpoReport& r = doc.report;
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["command"] = "sgpo";
      j["state"] = state_json(doc.state);
      j["eps"] = doc.eps;
      j["stage1_game"] = game_json(r.stage1_base);
      j["stage2_game"] = game_json(r.stage2_game);
      Json comps = Json::array();
      for (std::size_t i = 0; i < r.stage2_equilibria.size(); ++i) {
        Json c = component_json(r.stage2_equilibria[i]);
        const ComponentPayoffs& pay = r.stage2_component_payoffs[i];
        c["constant_payoffs"] = pay.constant;
        if (pay.constant) c["payoffs"] = Json::array({pay.a, pay.b});
        comps.push_back(c);
      }
      j["stage2_equilibria"] = comps;
      Json conts = Json::array();
      for (const Continuation& c : r.continuations) {
        Json jc;
        jc["payoffs"] = Json::array({c.payoff_a, c.payoff_b});
        Json pts = Json::array();
        for (const StagePoint& pt : c.stage2_points) {
          pts.push_back(Json::array({pt.x, pt.y}));
        }
        jc["stage2_points"] = pts;
        jc["source_components"] = c.source_components;
        jc["induced_stage1_game"] = game_json(c.induced_stage1);
        Json eqs = Json::array();
        for (const EquilibriumComponent& e : c.stage1_equilibria) {
          eqs.push_back(component_json(e));
        }
        jc["stage1_equilibria"] = eqs;
        conts.push_back(jc);
      }
      j["continuations"] = conts;
      Json profiles = Json::array();
      for (const SgpoProfile& p : r.profiles) {
        Json jp;
        jp["profile"] = Json::array({p.p, p.q, p.p1, p.q1});
        jp["stage_payoffs"] = payoffs_json(p.stage_payoffs);
        jp["totals"] = Json::array({p.total_a, p.total_b});
        jp["stage1_strictness"] = to_string(p.stage1_strictness);
        jp["stage2_strictness"] = to_string(p.stage2_strictness);
        profiles.push_back(jp);
      }
      j["sgpo_profiles"] = profiles;
      j["sgpo_kind"] = to_string(doc.kind);
      Json oracle;
      oracle["grid_n"] = doc.oracle.grid_n;
      oracle["oracle_points"] = doc.oracle.oracle_points;
      oracle["max_distance"] = doc.oracle.max_distance;
      oracle["consistent"] = doc.oracle.consistent;
      j["oracle_check"] = oracle;
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "p,q,p1,q1,a1,b1,a2,b2,a_total,b_total,stage1_strictness,"
             "stage2_strictness\n";
      for (const SgpoProfile& p : r.profiles) {
        out << format_double(p.p) << "," << format_double(p.q) << ","
            << format_double(p.p1) << "," << format_double(p.q1) << ","
            << format_double(p.stage_payoffs.a1) << ","
            << format_double(p.stage_payoffs.b1) << ","
            << format_double(p.stage_payoffs.a2) << ","
            << format_double(p.stage_payoffs.b2) << ","
            << format_double(p.total_a) << "," << format_double(p.total_b)
            << "," << to_string(p.stage1_strictness) << ","
            << to_string(p.stage2_strictness) << "\n";
      }
      return out.str();
    }
    case OutputFormat::kText:
    default: {
      std::ostringstream out;
      out << "stage-1 game: A " << coefficients_text(r.stage1_base.row)
          << " | B " << coefficients_text(r.stage1_base.col) << "\n";
      out << "stage-2 game: A " << coefficients_text(r.stage2_game.row)
          << " | B " << coefficients_text(r.stage2_game.col) << "\n";
      out << "stage-2 equilibria:\n";
      for (std::size_t i = 0; i < r.stage2_equilibria.size(); ++i) {
        out << "  [" << i << "] " << component_text(r.stage2_equilibria[i]);
        const ComponentPayoffs& pay = r.stage2_component_payoffs[i];
        if (pay.constant) {
          out << "  payoffs (" << format_double(pay.a) << ", "
              << format_double(pay.b) << ")";
        } else {
          out << "  payoffs vary along component; endpoints used";
        }
        out << "\n";
      }
      for (const Continuation& c : r.continuations) {
        out << "continuation payoffs (" << format_double(c.payoff_a) << ", "
            << format_double(c.payoff_b) << ") at stage-2 points";
        for (const StagePoint& pt : c.stage2_points) {
          out << " (" << format_double(pt.x) << "," << format_double(pt.y)
              << ")";
        }
        out << "\n  induced stage-1 equilibria:\n";
        for (std::size_t i = 0; i < c.stage1_equilibria.size(); ++i) {
          out << "    [" << i << "] " << component_text(c.stage1_equilibria[i])
              << "\n";
        }
      }
      out << "sgpo profiles:\n";
      for (const SgpoProfile& p : r.profiles) {
        out << "  (p,q,p1,q1) = (" << format_double(p.p) << ", "
            << format_double(p.q) << ", " << format_double(p.p1) << ", "
            << format_double(p.q1) << ")  stage payoffs ("
            << format_double(p.stage_payoffs.a1) << ", "
            << format_double(p.stage_payoffs.b1) << ") + ("
            << format_double(p.stage_payoffs.a2) << ", "
            << format_double(p.stage_payoffs.b2) << ")  totals ("
            << format_double(p.total_a) << ", " << format_double(p.total_b)
            << ")  [stage1 " << to_string(p.stage1_strictness) << ", stage2 "
            << to_string(p.stage2_strictness) << "]\n";
      }
      out << "sgpo kind: " << to_string(doc.kind) << "\n";
      out << "oracle check: grid " << doc.oracle.grid_n << ", "
          << (doc.oracle.consistent ? "consistent" : "INCONSISTENT")
          << ", max distance " << format_double(doc.oracle.max_distance)
          << "\n";
      return out.str();
    }
  }
}

std::string render_conditions(const ConditionsDocument& doc,
                              OutputFormat format) {
  const ConditionReport& r = doc.report;
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["command"] = "conditions";
      j["weights"] = Json::array(
          {doc.weights[0], doc.weights[1], doc.weights[2], doc.weights[3]});
      j["x_sum"] = r.x_sum;
      j["y_sum"] = r.y_sum;
      j["cond1"] = Json{{"value", r.cond1_value}, {"class", to_string(r.cond1)}};
      j["cond2"] = Json{{"value", r.cond2_value}, {"class", to_string(r.cond2)}};
      j["tolerance"] = doc.tol;
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "w1,w2,w3,w4,x_sum,y_sum,cond1_value,cond1_class,cond2_value,"
             "cond2_class\n";
      out << format_double(doc.weights[0]) << ","
          << format_double(doc.weights[1]) << ","
          << format_double(doc.weights[2]) << ","
          << format_double(doc.weights[3]) << "," << format_double(r.x_sum)
          << "," << format_double(r.y_sum) << ","
          << format_double(r.cond1_value) << "," << to_string(r.cond1) << ","
          << format_double(r.cond2_value) << "," << to_string(r.cond2) << "\n";
      return out.str();
    }
    case OutputFormat::kText:
    default: {
      std::ostringstream out;
      out << "weights (w1,w2,w3,w4) = (" << format_double(doc.weights[0])
          << ", " << format_double(doc.weights[1]) << ", "
          << format_double(doc.weights[2]) << ", "
          << format_double(doc.weights[3]) << ")\n";
      out << "x_sum = w1+w2 = " << format_double(r.x_sum)
          << ", y_sum = w2+w4 = " << format_double(r.y_sum) << "\n";
      out << "cond1 = 2(w2+w4)-(w1+w3) = " << format_double(r.cond1_value)
          << "  [" << to_string(r.cond1) << "]\n";
      out << "cond2 = 2(w1+w2)-(w3+w4) = " << format_double(r.cond2_value)
          << "  [" << to_string(r.cond2) << "]\n";
      return out.str();
    }
  }
}

std::vector<SweepRow> run_sweep(int resolution, double tol) {
  if (resolution < 2) throw DomainError("sweep resolution must be at least 2");
  std::vector<SweepRow> rows;
  const double r = static_cast<double>(resolution);
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; i + j <= resolution; ++j) {
      for (int k = 0; i + j + k <= resolution; ++k) {
        const int l = resolution - i - j - k;
        SweepRow row;
        row.weights = {i / r, j / r, k / r, l / r};
        const RestrictedStateWeights w(row.weights[0], row.weights[1],
                                       row.weights[2], row.weights[3]);
        row.conditions = cooperation_conditions(w, tol);
        const PureState state = make_restricted_state(
            std::sqrt(row.weights[0]), std::sqrt(row.weights[1]),
            std::sqrt(row.weights[2]), std::sqrt(row.weights[3]));
        const SgpoReport report = sgpo(state, tol);
        row.kind = classify_sgpo(report, tol);
        if (!report.profiles.empty()) {
          row.a_total = report.profiles.front().total_a;
          row.b_total = report.profiles.front().total_b;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string render_sweep(const std::vector<SweepRow>& rows,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["command"] = "sweep";
      Json out_rows = Json::array();
      for (const SweepRow& row : rows) {
        Json jr;
        jr["weights"] = Json::array(
            {row.weights[0], row.weights[1], row.weights[2], row.weights[3]});
        jr["x_sum"] = row.conditions.x_sum;
        jr["y_sum"] = row.conditions.y_sum;
        jr["cond1_value"] = row.conditions.cond1_value;
        jr["cond2_value"] = row.conditions.cond2_value;
        jr["cond1_class"] = to_string(row.conditions.cond1);
        jr["cond2_class"] = to_string(row.conditions.cond2);
        jr["sgpo_kind"] = to_string(row.kind);
        jr["a_total"] = row.a_total;
        jr["b_total"] = row.b_total;
        out_rows.push_back(jr);
      }
      j["rows"] = out_rows;
      return dump(j);
    }
    case OutputFormat::kText:
    case OutputFormat::kCsv:
    default: {
      // The text rendering of a sweep is the CSV table itself.
      std::ostringstream out;
      out << "w1,w2,w3,w4,x_sum,y_sum,cond1_value,cond2_value,cond1_class,"
             "cond2_class,sgpo_kind,a_total,b_total\n";
      for (const SweepRow& row : rows) {
        out << format_double(row.weights[0]) << ","
            << format_double(row.weights[1]) << ","
            << format_double(row.weights[2]) << ","
            << format_double(row.weights[3]) << ","
            << format_double(row.conditions.x_sum) << ","
            << format_double(row.conditions.y_sum) << ","
            << format_double(row.conditions.cond1_value) << ","
            << format_double(row.conditions.cond2_value) << ","
            << to_string(row.conditions.cond1) << ","
            << to_string(row.conditions.cond2) << "," << to_string(row.kind)
            << "," << format_double(row.a_total) << ","
            << format_double(row.b_total) << "\n";
      }
      return out.str();
    }
  }
}

std::string render_checks(const std::vector<CheckResult>& checks,
                          std::uint64_t seed, OutputFormat format) {
  bool all_passed = true;
  for (const CheckResult& c : checks) all_passed = all_passed && c.passed;
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["command"] = "verify-classical";
      j["seed"] = seed;
      Json out_checks = Json::array();
      for (const CheckResult& c : checks) {
        Json jc;
        jc["name"] = c.name;
        jc["max_error"] = c.max_error;
        jc["tolerance"] = c.tolerance;
        jc["passed"] = c.passed;
        out_checks.push_back(jc);
      }
      j["checks"] = out_checks;
      j["all_passed"] = all_passed;
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "check,max_error,tolerance,status\n";
      for (const CheckResult& c : checks) {
        out << c.name << "," << format_double(c.max_error) << ","
            << format_double(c.tolerance) << ","
            << (c.passed ? "pass" : "fail") << "\n";
      }
      return out.str();
    }
    case OutputFormat::kText:
    default: {
      std::ostringstream out;
      for (const CheckResult& c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": max error "
            << format_double(c.max_error) << " (tolerance "
            << format_double(c.tolerance) << ")\n";
      }
      out << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
      return out.str();
    }
  }
}

}  // namespace qpd
