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

#include "qpd/equilibrium.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace qpd {

namespace {

double snap01(double v, double eps) {
  if (std::abs(v) <= eps) return 0.0;
  if (std::abs(v - 1.0) <= eps) return 1.0;
  return v;
}

// {x in [0,1] : a*x + b <= bound}, a closed interval or nothing.
std::optional<Interval> half_plane_leq(double a, double b, double bound) {
  double lo = 0.0;
  double hi = 1.0;
  if (a == 0.0) {
    if (b <= bound) return Interval{lo, hi};
    return std::nullopt;
  }
  const double crossing = (bound - b) / a;
  if (a > 0.0) {
    hi = std::min(hi, crossing);
  } else {
    lo = std::max(lo, crossing);
  }
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

std::optional<Interval> half_plane_geq(double a, double b, double bound) {
  return half_plane_leq(-a, -b, -bound);
}

BilinearCoefficients coefficients_from_corners(const double f[2][2]) {
  BilinearCoefficients c;
  c.delta = f[0][0];
  c.beta = f[1][0] - f[0][0];
  c.gamma = f[0][1] - f[0][0];
  c.alpha = f[1][1] - f[1][0] - f[0][1] + f[0][0];
  return c;
}

bool component_order(const EquilibriumComponent& a,
                     const EquilibriumComponent& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
  if (a.x.hi != b.x.hi) return a.x.hi < b.x.hi;
  if (a.y.lo != b.y.lo) return a.y.lo < b.y.lo;
  return a.y.hi < b.y.hi;
}

// 0 = both identity probabilities 1 (cooperate), 1 = both 0 (defect),
// 2 = anything else.
int move_class(double own, double other, double tol) {
  if (std::abs(own - 1.0) <= tol && std::abs(other - 1.0) <= tol) return 0;
  if (std::abs(own) <= tol && std::abs(other) <= tol) return 1;
  return 2;
}

}  // namespace

BilinearGame stage_game(const PureState& state, int stage,
                        double continuation_a, double continuation_b) {
  if (stage != 1 && stage != 2) {
    throw DomainError("stage must be 1 or 2, got " + std::to_string(stage));
  }
  double fa[2][2];
  double fb[2][2];
  for (int xi = 0; xi <= 1; ++xi) {
    for (int yi = 0; yi <= 1; ++yi) {
      const double x = static_cast<double>(xi);
      const double y = static_cast<double>(yi);
      const StrategyProfile profile = stage == 1
                                          ? StrategyProfile(x, y, 0.0, 0.0)
                                          : StrategyProfile(0.0, 0.0, x, y);
      const StagePayoffs payoffs = all_payoffs(state, profile);
      fa[xi][yi] = stage == 1 ? payoffs.a1 : payoffs.a2;
      fb[xi][yi] = stage == 1 ? payoffs.b1 : payoffs.b2;
    }
  }
  BilinearGame game;
  game.row = coefficients_from_corners(fa);
  game.col = coefficients_from_corners(fb);
  game.row.delta += continuation_a;
  game.col.delta += continuation_b;
  return game;
}

CornerMatrix corner_matrix(const BilinearGame& game) {
  CornerMatrix m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const double x = r == 0 ? 1.0 : 0.0;
      const double y = c == 0 ? 1.0 : 0.0;
      m.a[r][c] = game.row_payoff(x, y);
      m.b[r][c] = game.col_payoff(x, y);
    }
  }
  return m;
}

NashVerdict verify_ne(const BilinearGame& game, double x, double y,
                      double eps) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("profile coordinates must lie in [0,1]");
  }
  if (eps < 0.0) throw DomainError("eps must be nonnegative");

  // Payoffs are affine in a player's own probability, so the unilateral
  // deviation suprema are attained at the pure actions 0 and 1.
  double worst = 0.0;   // most negative margin
  double closest = 1e300;  // smallest margin over genuine alternatives
  const double row_s = game.row_slope(y);
  const double col_s = game.col_slope(x);
  for (double alt : {0.0, 1.0}) {
    if (alt != x) {
      const double margin = row_s * (x - alt);
      worst = std::min(worst, margin);
      closest = std::min(closest, margin);
    }
    if (alt != y) {
      const double margin = col_s * (y - alt);
      worst = std::min(worst, margin);
      closest = std::min(closest, margin);
    }
  }
  if (worst < -eps) return NashVerdict::kNotEquilibrium;
  if (closest > eps) return NashVerdict::kStrict;
  return NashVerdict::kWeak;
}

std::vector<EquilibriumComponent> nash_2x2(const BilinearGame& game,
                                           double eps) {
  if (eps < 0.0) throw DomainError("eps must be nonnegative");

  std::vector<EquilibriumComponent> segments;
  auto add_segment = [&](Interval x, Interval y) {
    x.lo = snap01(x.lo, kExactTolerance);
    x.hi = snap01(x.hi, kExactTolerance);
    y.lo = snap01(y.lo, kExactTolerance);
    y.hi = snap01(y.hi, kExactTolerance);
    // A segment that shrank to a point is a corner; the corner pass owns it.
    if (x.length() <= eps && y.length() <= eps) return;
    segments.push_back(
        {ComponentKind::kSegment, x, y, Strictness::kWeak});
  };

  // Segment extents are solved against a slightly tightened bound so that
  // endpoint deviation margins clear verify_ne's -eps threshold even after
  // rounding; the geometric shrinkage (eps/1000 divided by the slope
  // coefficient) is far below the oracle's 1/n resolution.
  const double inner = eps * 0.999;

  const double row_slope0 = game.row_slope(0.0);
  const double row_slope1 = game.row_slope(1.0);
  const double col_slope0 = game.col_slope(0.0);
  const double col_slope1 = game.col_slope(1.0);
  // A slope that vanishes at both endpoints of an affine function vanishes
  // everywhere: that player is indifferent no matter what.
  const bool row_flat = std::abs(row_slope0) <= eps && std::abs(row_slope1) <= eps;
  const bool col_flat = std::abs(col_slope0) <= eps && std::abs(col_slope1) <= eps;

  if (row_flat && col_flat) {
    // Every profile is an equilibrium.
    add_segment({0.0, 1.0}, {0.0, 1.0});
  } else if (row_flat) {
    // The Nash set is the graph of the column player's best response.
    if (auto iv = half_plane_leq(game.col.alpha, game.col.gamma, inner)) {
      add_segment(*iv, {0.0, 0.0});
    }
    if (auto iv = half_plane_geq(game.col.alpha, game.col.gamma, -inner)) {
      add_segment(*iv, {1.0, 1.0});
    }
    if (game.col.alpha != 0.0) {
      const double x0 = snap01(-game.col.gamma / game.col.alpha, kExactTolerance);
      if (x0 >= 0.0 && x0 <= 1.0) add_segment({x0, x0}, {0.0, 1.0});
    }
  } else if (col_flat) {
    if (auto iv = half_plane_leq(game.row.alpha, game.row.beta, inner)) {
      add_segment({0.0, 0.0}, *iv);
    }
    if (auto iv = half_plane_geq(game.row.alpha, game.row.beta, -inner)) {
      add_segment({1.0, 1.0}, *iv);
    }
    if (game.row.alpha != 0.0) {
      const double y0 = snap01(-game.row.beta / game.row.alpha, kExactTolerance);
      if (y0 >= 0.0 && y0 <= 1.0) add_segment({0.0, 1.0}, {y0, y0});
    }
  } else {
    // Edge segments: the row player indifferent along a horizontal edge
    // paired with the column player's preference region, and vice versa.
    if (std::abs(row_slope0) <= eps) {
      if (auto iv = half_plane_leq(game.col.alpha, game.col.gamma, inner)) {
        add_segment(*iv, {0.0, 0.0});
      }
    }
    if (std::abs(row_slope1) <= eps) {
      if (auto iv = half_plane_geq(game.col.alpha, game.col.gamma, -inner)) {
        add_segment(*iv, {1.0, 1.0});
      }
    }
    if (std::abs(col_slope0) <= eps) {
      if (auto iv = half_plane_leq(game.row.alpha, game.row.beta, inner)) {
        add_segment({0.0, 0.0}, *iv);
      }
    }
    if (std::abs(col_slope1) <= eps) {
      if (auto iv = half_plane_geq(game.row.alpha, game.row.beta, -inner)) {
        add_segment({1.0, 1.0}, *iv);
      }
    }
  }

  auto covered = [&](double px, double py) {
    for (const EquilibriumComponent& s : segments) {
      if (s.contains(px, py, eps)) return true;
    }
    return false;
  };

  std::vector<EquilibriumComponent> components;

  // Pure corners in lexicographic order.
  for (double x : {0.0, 1.0}) {
    for (double y : {0.0, 1.0}) {
      const NashVerdict verdict = verify_ne(game, x, y, eps);
      if (verdict == NashVerdict::kNotEquilibrium || covered(x, y)) continue;
      components.push_back({ComponentKind::kPurePoint,
                            {x, x},
                            {y, y},
                            verdict == NashVerdict::kStrict
                                ? Strictness::kStrict
                                : Strictness::kWeak});
    }
  }

  // Interior mixed point from the indifference conditions: the row player's
  // slope vanishes at y0, the column player's at x0.
  if (!row_flat && !col_flat && game.row.alpha != 0.0 &&
      game.col.alpha != 0.0) {
    const double y0 = snap01(-game.row.beta / game.row.alpha, kExactTolerance);
    const double x0 = snap01(-game.col.gamma / game.col.alpha, kExactTolerance);
    if (x0 >= 0.0 && x0 <= 1.0 && y0 >= 0.0 && y0 <= 1.0) {
      const bool is_corner =
          (x0 == 0.0 || x0 == 1.0) && (y0 == 0.0 || y0 == 1.0);
      if (!is_corner && !covered(x0, y0)) {
        components.push_back({ComponentKind::kMixedPoint,
                              {x0, x0},
                              {y0, y0},
                              Strictness::kWeak});
      }
    }
  }

  std::sort(segments.begin(), segments.end(), component_order);
  components.insert(components.end(), segments.begin(), segments.end());
  return components;
}

std::vector<StagePoint> grid_oracle(const BilinearGame& game, int n,
                                    double eps) {
  if (n < 1) throw DomainError("grid resolution must be at least 1");
  std::vector<StagePoint> points;
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    for (int j = 0; j <= n; ++j) {
      const double y = static_cast<double>(j) / n;
      const double row_here = game.row_payoff(x, y);
      const double col_here = game.col_payoff(x, y);
      bool improvable = false;
      for (int k = 0; k <= n && !improvable; ++k) {
        const double alt = static_cast<double>(k) / n;
        if (game.row_payoff(alt, y) - row_here > eps) improvable = true;
        if (game.col_payoff(x, alt) - col_here > eps) improvable = true;
      }
      if (!improvable) points.push_back({x, y});
    }
  }
  return points;
}

std::vector<StagePoint> representative_points(const EquilibriumComponent& c) {
  std::vector<StagePoint> points;
  for (double px : {c.x.lo, c.x.hi}) {
    for (double py : {c.y.lo, c.y.hi}) {
      bool seen = false;
      for (const StagePoint& s : points) {
        if (s.x == px && s.y == py) seen = true;
      }
      if (!seen) points.push_back({px, py});
    }
  }
  return points;
}

OracleAgreement check_against_oracle(
    const BilinearGame& game,
    const std::vector<EquilibriumComponent>& components, int n, double eps) {
  OracleAgreement result;
  result.grid_n = n;
  const std::vector<StagePoint> oracle = grid_oracle(game, n, eps);
  result.oracle_points = oracle.size();
  const double allowed = 1.0 / n;
  for (const StagePoint& pt : oracle) {
    double best = 1e300;
    for (const EquilibriumComponent& c : components) {
      best = std::min(best, c.linf_distance(pt.x, pt.y));
    }
    result.max_distance = std::max(result.max_distance, best);
    if (best > allowed) result.consistent = false;
  }
  return result;
}

SgpoReport sgpo(const PureState& state, double eps) {
  SgpoReport report;
  report.stage2_game = stage_game(state, 2);
  report.stage1_base = stage_game(state, 1);
  report.stage2_equilibria = nash_2x2(report.stage2_game, eps);

  // Continuations: one per distinct stage-2 payoff pair. Point components
  // and constant-payoff segments contribute one pair; segments with varying
  // payoffs are flagged and contribute one pair per endpoint.
  for (std::size_t ci = 0; ci < report.stage2_equilibria.size(); ++ci) {
    const EquilibriumComponent& component = report.stage2_equilibria[ci];
    const std::vector<StagePoint> reps = representative_points(component);

    ComponentPayoffs info;
    double min_a = 1e300, max_a = -1e300, min_b = 1e300, max_b = -1e300;
    for (const StagePoint& pt : reps) {
      // Payoffs on a component are bilinear, so extremes sit at the corners.
      const double pa = report.stage2_game.row_payoff(pt.x, pt.y);
      const double pb = report.stage2_game.col_payoff(pt.x, pt.y);
      min_a = std::min(min_a, pa);
      max_a = std::max(max_a, pa);
      min_b = std::min(min_b, pb);
      max_b = std::max(max_b, pb);
    }
    info.constant =
        max_a - min_a <= kExactTolerance && max_b - min_b <= kExactTolerance;
    if (info.constant) {
      info.a = report.stage2_game.row_payoff(reps.front().x, reps.front().y);
      info.b = report.stage2_game.col_payoff(reps.front().x, reps.front().y);
    }
    report.stage2_component_payoffs.push_back(info);

    for (const StagePoint& pt : reps) {
      const double pa = report.stage2_game.row_payoff(pt.x, pt.y);
      const double pb = report.stage2_game.col_payoff(pt.x, pt.y);
      Continuation* group = nullptr;
      for (Continuation& existing : report.continuations) {
        if (std::abs(existing.payoff_a - pa) <= kExactTolerance &&
            std::abs(existing.payoff_b - pb) <= kExactTolerance) {
          group = &existing;
          break;
        }
      }
      if (group == nullptr) {
        report.continuations.emplace_back();
        group = &report.continuations.back();
        group->payoff_a = pa;
        group->payoff_b = pb;
      }
      bool have_point = false;
      for (const StagePoint& s : group->stage2_points) {
        if (std::abs(s.x - pt.x) <= kExactTolerance &&
            std::abs(s.y - pt.y) <= kExactTolerance) {
          have_point = true;
        }
      }
      if (!have_point) group->stage2_points.push_back(pt);
      if (group->source_components.empty() ||
          group->source_components.back() != ci) {
        group->source_components.push_back(ci);
      }
    }
  }

  for (Continuation& continuation : report.continuations) {
    continuation.induced_stage1 = report.stage1_base;
    continuation.induced_stage1.row.delta += continuation.payoff_a;
    continuation.induced_stage1.col.delta += continuation.payoff_b;
    continuation.stage1_equilibria = nash_2x2(continuation.induced_stage1, eps);

    for (const EquilibriumComponent& s1 : continuation.stage1_equilibria) {
      for (const StagePoint& first : representative_points(s1)) {
        for (const StagePoint& second : continuation.stage2_points) {
          SgpoProfile profile;
          profile.p = first.x;
          profile.q = first.y;
          profile.p1 = second.x;
          profile.q1 = second.y;
          profile.stage_payoffs.a1 =
              report.stage1_base.row_payoff(first.x, first.y);
          profile.stage_payoffs.b1 =
              report.stage1_base.col_payoff(first.x, first.y);
          profile.stage_payoffs.a2 =
              report.stage2_game.row_payoff(second.x, second.y);
          profile.stage_payoffs.b2 =
              report.stage2_game.col_payoff(second.x, second.y);
          profile.total_a = profile.stage_payoffs.a1 + profile.stage_payoffs.a2;
          profile.total_b = profile.stage_payoffs.b1 + profile.stage_payoffs.b2;
          profile.stage1_strictness =
              verify_ne(continuation.induced_stage1, first.x, first.y, eps);
          profile.stage2_strictness =
              verify_ne(report.stage2_game, second.x, second.y, eps);

          bool duplicate = false;
          for (const SgpoProfile& existing : report.profiles) {
            if (std::abs(existing.p - profile.p) <= kExactTolerance &&
                std::abs(existing.q - profile.q) <= kExactTolerance &&
                std::abs(existing.p1 - profile.p1) <= kExactTolerance &&
                std::abs(existing.q1 - profile.q1) <= kExactTolerance) {
              duplicate = true;
              break;
            }
          }
          if (!duplicate) report.profiles.push_back(profile);
        }
      }
    }
  }

  std::sort(report.profiles.begin(), report.profiles.end(),
            [](const SgpoProfile& a, const SgpoProfile& b) {
              if (a.p != b.p) return a.p < b.p;
              if (a.q != b.q) return a.q < b.q;
              if (a.p1 != b.p1) return a.p1 < b.p1;
              return a.q1 < b.q1;
            });
  return report;
}

ConditionReport cooperation_conditions(const RestrictedStateWeights& w,
                                       double tol) {
  if (tol < 0.0) throw DomainError("tolerance must be nonnegative");
  ConditionReport report;
  report.x_sum = w.x_sum();
  report.y_sum = w.y_sum();
  report.cond1_value = 2.0 * (w.w2() + w.w4()) - (w.w1() + w.w3());
  report.cond2_value = 2.0 * (w.w1() + w.w2()) - (w.w3() + w.w4());
  auto classify = [tol](double value) {
    if (std::abs(value) <= tol) return ConditionClass::kBoundaryHold;
    return value < 0.0 ? ConditionClass::kStrictHold : ConditionClass::kFail;
  };
  report.cond1 = classify(report.cond1_value);
  report.cond2 = classify(report.cond2_value);
  return report;
}

SgpoKind classify_sgpo(const SgpoReport& report, double tol) {
  bool any = false;
  SgpoKind common = SgpoKind::kMultiple;
  for (const SgpoProfile& profile : report.profiles) {
    const int first = move_class(profile.p, profile.q, tol);
    const int second = move_class(profile.p1, profile.q1, tol);
    SgpoKind kind = SgpoKind::kMixed;
    if (first == 0 && second == 1) kind = SgpoKind::kCooperateThenDefect;
    if (first == 1 && second == 0) kind = SgpoKind::kDefectThenCooperate;
    if (first == 1 && second == 1) kind = SgpoKind::kAllDefect;
    if (first == 0 && second == 0) kind = SgpoKind::kAllCooperate;
    if (!any) {
      common = kind;
      any = true;
    } else if (common != kind) {
      return SgpoKind::kMultiple;
    }
  }
  return common;
}

const char* to_string(Strictness s) {
  return s == Strictness::kStrict ? "strict" : "weak";
}

const char* to_string(NashVerdict v) {
  switch (v) {
    case NashVerdict::kStrict:
      return "strict";
    case NashVerdict::kWeak:
      return "weak";
    default:
      return "not-equilibrium";
  }
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::kPurePoint:
      return "pure-point";
    case ComponentKind::kMixedPoint:
      return "mixed-point";
    default:
      return "segment";
  }
}

const char* to_string(ConditionClass c) {
  switch (c) {
    case ConditionClass::kStrictHold:
      return "strict-hold";
    case ConditionClass::kBoundaryHold:
      return "boundary-hold";
    default:
      return "fail";
  }
}

const char* to_string(SgpoKind k) {
  switch (k) {
    case SgpoKind::kAllDefect:
      return "all-defect";
    case SgpoKind::kCooperateThenDefect:
      return "cooperate-then-defect";
    case SgpoKind::kDefectThenCooperate:
      return "defect-then-cooperate";
    case SgpoKind::kAllCooperate:
      return "all-cooperate";
    case SgpoKind::kMixed:
      return "mixed";
    default:
      return "multiple";
  }
}

}  // namespace qpd
