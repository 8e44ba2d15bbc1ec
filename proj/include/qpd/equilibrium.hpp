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

#ifndef QPD_EQUILIBRIUM_H_
#define QPD_EQUILIBRIUM_H_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qpd/payoff.hpp"
#include "qpd/state.hpp"

// Exact bilinear stage games, complete Nash enumeration for 2x2 games,
// backward induction to subgame-perfect outcomes, and the cooperation
// conditions on the restricted state family.

namespace qpd {

// Coefficients of one player's stage payoff alpha*x*y + beta*x + gamma*y +
// delta, where x is the row player's identity probability and y the column
// player's.
struct BilinearCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;

  double eval(double x, double y) const {
    return alpha * x * y + beta * x + gamma * y + delta;
  }
};

// One stage as a simultaneous-move game. Both players' coefficients use the
// same (x, y) variables; the row player controls x, the column player y.
struct BilinearGame {
  BilinearCoefficients row;  // player A
  BilinearCoefficients col;  // player B

  double row_payoff(double x, double y) const { return row.eval(x, y); }
  double col_payoff(double x, double y) const { return col.eval(x, y); }

  // d(row payoff)/dx at column mix y. The row player's best response is 1
  // when positive, 0 when negative, anything at zero.
  double row_slope(double y) const { return row.alpha * y + row.beta; }
  // d(col payoff)/dy at row mix x.
  double col_slope(double x) const { return col.alpha * x + col.gamma; }
};

// The game's corner payoffs laid out as a standard bimatrix. Row and column
// index 0 is the identity (cooperate-preserving) move x = 1 or y = 1.
struct CornerMatrix {
  double a[2][2];
  double b[2][2];
};

enum class Strictness { kStrict, kWeak };
enum class NashVerdict { kStrict, kWeak, kNotEquilibrium };
enum class ComponentKind { kPurePoint, kMixedPoint, kSegment };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double v, double tol) const {
    return v >= lo - tol && v <= hi + tol;
  }
  double distance(double v) const {
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
  }
};

// One connected component of the Nash set: a corner, an interior mixed
// point, an axis-aligned segment, or (fully degenerate games) a rectangle,
// which is reported with kind kSegment and two nondegenerate intervals.
struct EquilibriumComponent {
  ComponentKind kind = ComponentKind::kPurePoint;
  Interval x;
  Interval y;
  Strictness strictness = Strictness::kWeak;

  bool contains(double px, double py, double tol) const {
    return x.contains(px, tol) && y.contains(py, tol);
  }
  double linf_distance(double px, double py) const {
    return std::max(x.distance(px), y.distance(py));
  }
};

struct StagePoint {
  double x = 0.0;
  double y = 0.0;
};

// Exact coefficient extraction from the four corner evaluations of
// all_payoffs (stage payoffs are multilinear, so corner interpolation is
// exact). The continuation payoffs are added to the constant terms.
BilinearGame stage_game(const PureState& state, int stage,
                        double continuation_a = 0.0,
                        double continuation_b = 0.0);

CornerMatrix corner_matrix(const BilinearGame& game);

// Checks the Nash inequalities at (x, y) against both unilateral pure
// deviations; by linearity those are the binding ones. Strict requires
// every deviation margin above eps; weak tolerates margins down to -eps.
NashVerdict verify_ne(const BilinearGame& game, double x, double y,
                      double eps);

// Complete enumeration of the Nash set. Pure corners come first in
// lexicographic order, then the interior mixed point, then segments.
// Corners and mixed points already covered by a segment are not repeated.
// Slopes within eps of zero count as indifference.
std::vector<EquilibriumComponent> nash_2x2(const BilinearGame& game,
                                           double eps = kNormTolerance);

// Brute-force oracle: all grid points (i/n, j/n) that no grid deviation
// improves by more than eps. Intended for tests and verification reports.
std::vector<StagePoint> grid_oracle(const BilinearGame& game, int n,
                                    double eps);

// Finite representatives of a component: the point itself, segment
// endpoints, or rectangle corners.
std::vector<StagePoint> representative_points(const EquilibriumComponent& c);

// Agreement between an enumerated Nash set and the grid oracle: every
// oracle point must lie within 1/n of some component.
struct OracleAgreement {
  int grid_n = 0;
  std::size_t oracle_points = 0;
  double max_distance = 0.0;
  bool consistent = true;
};
OracleAgreement check_against_oracle(
    const BilinearGame& game, const std::vector<EquilibriumComponent>& components,
    int n, double eps);

// Continuation payoffs of one stage-2 equilibrium component. Segments whose
// payoffs vary along the component cannot be folded into a single induced
// game; their endpoints are enumerated as separate continuations and the
// component is flagged.
struct ComponentPayoffs {
  bool constant = true;
  double a = 0.0;  // valid when constant
  double b = 0.0;
};

// One induced first-stage game: the stage-1 payoffs plus a continuation
// payoff pair. Continuations with equal payoff pairs are merged; the stage-2
// representative points that produced them are kept for profile emission.
struct Continuation {
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  std::vector<StagePoint> stage2_points;
  std::vector<std::size_t> source_components;
  BilinearGame induced_stage1;
  std::vector<EquilibriumComponent> stage1_equilibria;
};

// One subgame-perfect profile: a stage-1 equilibrium of an induced game
// combined with the stage-2 equilibrium it anticipates. Segment components
// are represented by their endpoints.
struct SgpoProfile {
  double p = 0.0;
  double q = 0.0;
  double p1 = 0.0;
  double q1 = 0.0;
  StagePayoffs stage_payoffs;
  double total_a = 0.0;
  double total_b = 0.0;
  NashVerdict stage1_strictness = NashVerdict::kWeak;
  NashVerdict stage2_strictness = NashVerdict::kWeak;
};

struct SgpoReport {
  BilinearGame stage2_game;
  BilinearGame stage1_base;  // before any continuation is added
  std::vector<EquilibriumComponent> stage2_equilibria;
  std::vector<ComponentPayoffs> stage2_component_payoffs;  // parallel array
  std::vector<Continuation> continuations;
  std::vector<SgpoProfile> profiles;  // deduplicated, lexicographic order
};

// Backward induction: enumerate stage-2 equilibria, fold each continuation
// payoff pair into the first-stage game, enumerate its equilibria, and emit
// every (stage-1, stage-2) profile combination.
SgpoReport sgpo(const PureState& state, double eps = kNormTolerance);

enum class ConditionClass { kStrictHold, kBoundaryHold, kFail };

// The two cooperate-then-defect conditions. cond1 <= 0 makes mutual
// defection a second-stage equilibrium; cond2 <= 0 makes mutual cooperation
// an equilibrium of the induced first-stage game. Under weight
// normalization they are equivalent to y_sum <= 1/3 and x_sum <= 1/3.
struct ConditionReport {
  double cond1_value = 0.0;  // 2(w2+w4) - (w1+w3)
  double cond2_value = 0.0;  // 2(w1+w2) - (w3+w4)
  double x_sum = 0.0;
  double y_sum = 0.0;
  ConditionClass cond1 = ConditionClass::kFail;
  ConditionClass cond2 = ConditionClass::kFail;
};

ConditionReport cooperation_conditions(const RestrictedStateWeights& w,
                                       double tol = kNormTolerance);

// Coarse label of the SGPO set for sweep tables: the common classification
// of all profiles, or kMultiple when they disagree.
enum class SgpoKind {
  kAllDefect,
  kCooperateThenDefect,
  kDefectThenCooperate,
  kAllCooperate,
  kMixed,
  kMultiple,
};

SgpoKind classify_sgpo(const SgpoReport& report, double tol = kNormTolerance);

const char* to_string(Strictness s);
const char* to_string(NashVerdict v);
const char* to_string(ComponentKind k);
const char* to_string(ConditionClass c);
const char* to_string(SgpoKind k);

}  // namespace qpd

#endif  // QPD_EQUILIBRIUM_H_
