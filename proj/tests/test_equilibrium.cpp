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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "qpd/equilibrium.hpp"
#include "qpd/report.hpp"
#include "qpd/verify.hpp"

using namespace qpd;

namespace {

constexpr double kEps = 1e-9;

PureState classical_state() { return make_restricted_state(1.0, 0.0, 0.0, 0.0); }

PureState state_from_weights(const RestrictedStateWeights& w) {
  return make_restricted_state(std::sqrt(w.w1()), std::sqrt(w.w2()),
                               std::sqrt(w.w3()), std::sqrt(w.w4()));
}

PureState boundary_state() {
  return state_from_weights(
      RestrictedStateWeights(1.0 / 6.0, 1.0 / 6.0, 0.5, 1.0 / 6.0));
}

// Weights with a prescribed stage-2 inverted weight y_sum, split evenly.
PureState state_with_y_sum(double y) {
  return state_from_weights(RestrictedStateWeights(
      (1.0 - y) / 2.0, y / 2.0, (1.0 - y) / 2.0, y / 2.0));
}

bool is_point_at(const EquilibriumComponent& c, double x, double y,
                 double tol = 1e-12) {
  return c.x.lo == c.x.hi && c.y.lo == c.y.hi && std::abs(c.x.lo - x) <= tol &&
         std::abs(c.y.lo - y) <= tol;
}

bool has_profile(const SgpoReport& report, double p, double q, double p1,
                 double q1, const SgpoProfile** found = nullptr,
                 double tol = 1e-9) {
  for (const SgpoProfile& profile : report.profiles) {
    if (std::abs(profile.p - p) <= tol && std::abs(profile.q - q) <= tol &&
        std::abs(profile.p1 - p1) <= tol && std::abs(profile.q1 - q1) <= tol) {
      if (found != nullptr) *found = &profile;
      return true;
    }
  }
  return false;
}

// Evenly spaced sample points across a component, including its corners.
std::vector<StagePoint> sample_component(const EquilibriumComponent& c,
                                         int count) {
  std::vector<StagePoint> points;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    points.push_back({c.x.lo + t * (c.x.hi - c.x.lo),
                      c.y.lo + t * (c.y.hi - c.y.lo)});
    // For rectangles also walk the antidiagonal.
    points.push_back({c.x.lo + t * (c.x.hi - c.x.lo),
                      c.y.hi - t * (c.y.hi - c.y.lo)});
  }
  return points;
}

}  // namespace

TEST_CASE("stage games extract exact bilinear coefficients") {
  const BilinearGame classical2 = stage_game(classical_state(), 2);
  CHECK(classical2.row.alpha == -1.0);
  CHECK(classical2.row.beta == -1.0);
  CHECK(classical2.row.gamma == 4.0);
  CHECK(classical2.row.delta == 1.0);
  CHECK(classical2.col.alpha == -1.0);
  CHECK(classical2.col.beta == 4.0);
  CHECK(classical2.col.gamma == -1.0);
  CHECK(classical2.col.delta == 1.0);

  // Adding the mutual-defection continuation (1,1) only shifts the constants.
  const BilinearGame total = stage_game(classical_state(), 1, 1.0, 1.0);
  CHECK(total.row.delta == 2.0);
  CHECK(total.col.delta == 2.0);
  CHECK(total.row.alpha == -1.0);

  const BilinearGame boundary2 = stage_game(boundary_state(), 2);
  CHECK_LE(std::abs(boundary2.row.alpha - -1.0), 1e-12);
  CHECK_LE(std::abs(boundary2.row.beta), 1e-12);
  CHECK_LE(std::abs(boundary2.row.gamma - 5.0 / 3.0), 1e-12);
  CHECK_LE(std::abs(boundary2.row.delta - 5.0 / 3.0), 1e-12);

  CHECK_THROWS_AS(stage_game(classical_state(), 3), DomainError);
}

TEST_CASE("corner matrices recover the bimatrix form") {
  const CornerMatrix classical = corner_matrix(stage_game(classical_state(), 1));
  CHECK(classical.a[0][0] == 3.0);
  CHECK(classical.b[0][0] == 3.0);
  CHECK(classical.a[0][1] == 0.0);
  CHECK(classical.b[0][1] == 5.0);
  CHECK(classical.a[1][0] == 5.0);
  CHECK(classical.b[1][0] == 0.0);
  CHECK(classical.a[1][1] == 1.0);
  CHECK(classical.b[1][1] == 1.0);

  const CornerMatrix zero = corner_matrix(BilinearGame{});
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(zero.a[r][c] == 0.0);
      CHECK(zero.b[r][c] == 0.0);
    }
  }

  BilinearGame manual;
  manual.row = {-1.0, -1.0, 4.0, 1.0};
  const CornerMatrix m = corner_matrix(manual);
  CHECK(m.a[0][0] == 3.0);
  CHECK(m.a[0][1] == 0.0);
  CHECK(m.a[1][0] == 5.0);
  CHECK(m.a[1][1] == 1.0);
}

TEST_CASE("verify_ne classifies corners of the classical stage game") {
  const BilinearGame game = stage_game(classical_state(), 1);
  CHECK(verify_ne(game, 0.0, 0.0, 0.0) == NashVerdict::kStrict);
  // Deviating from mutual cooperation to defection gains 5 - 3 = 2.
  CHECK(verify_ne(game, 1.0, 1.0, 0.0) == NashVerdict::kNotEquilibrium);
  CHECK(verify_ne(game, 0.5, 0.5, 0.0) == NashVerdict::kNotEquilibrium);

  const BilinearGame induced = stage_game(boundary_state(), 1, 5.0 / 3.0,
                                          5.0 / 3.0);
  CHECK(verify_ne(induced, 1.0, 1.0, kEps) == NashVerdict::kWeak);

  CHECK_THROWS_AS(verify_ne(game, -0.5, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(verify_ne(game, 0.0, 1.5, 0.0), DomainError);
}

TEST_CASE("nash_2x2 on the classical game finds only mutual defection") {
  const auto components = nash_2x2(stage_game(classical_state(), 2), kEps);
  REQUIRE(components.size() == 1);
  CHECK(components[0].kind == ComponentKind::kPurePoint);
  CHECK(is_point_at(components[0], 0.0, 0.0));
  CHECK(components[0].strictness == Strictness::kStrict);
}

TEST_CASE("nash_2x2 at y_sum = 1/2 finds the anti-coordination structure") {
  // Stage-2 slopes are -q1 + 1/2 and -p1 + 1/2: an anti-coordination game
  // with two strict pure equilibria and the symmetric mixed point.
  const auto components =
      nash_2x2(stage_game(state_with_y_sum(0.5), 2), kEps);
  REQUIRE(components.size() == 3);
  CHECK(components[0].kind == ComponentKind::kPurePoint);
  CHECK(is_point_at(components[0], 0.0, 1.0));
  CHECK(components[0].strictness == Strictness::kStrict);
  CHECK(components[1].kind == ComponentKind::kPurePoint);
  CHECK(is_point_at(components[1], 1.0, 0.0));
  CHECK(components[1].strictness == Strictness::kStrict);
  CHECK(components[2].kind == ComponentKind::kMixedPoint);
  CHECK(is_point_at(components[2], 0.5, 0.5));
}

TEST_CASE("nash_2x2 at the y_sum = 1/3 boundary returns two edge segments") {
  const auto components = nash_2x2(stage_game(boundary_state(), 2), kEps);
  REQUIRE(components.size() == 2);
  CHECK(components[0].kind == ComponentKind::kSegment);
  CHECK(components[0].x.lo == 0.0);
  CHECK(components[0].x.hi == 0.0);
  CHECK(components[0].y.lo == 0.0);
  CHECK(components[0].y.hi == 1.0);
  CHECK(components[1].kind == ComponentKind::kSegment);
  CHECK(components[1].x.lo == 0.0);
  CHECK(components[1].x.hi == 1.0);
  CHECK(components[1].y.lo == 0.0);
  CHECK(components[1].y.hi == 0.0);
}

TEST_CASE("nash_2x2 on the zero game returns the whole square") {
  const auto components = nash_2x2(BilinearGame{}, kEps);
  REQUIRE(components.size() == 1);
  CHECK(components[0].kind == ComponentKind::kSegment);
  CHECK(components[0].x.lo == 0.0);
  CHECK(components[0].x.hi == 1.0);
  CHECK(components[0].y.lo == 0.0);
  CHECK(components[0].y.hi == 1.0);
}

TEST_CASE("grid oracle fixtures") {
  const auto classical = grid_oracle(stage_game(classical_state(), 2), 10,
                                     kEps);
  REQUIRE(classical.size() == 1);
  CHECK(classical[0].x == 0.0);
  CHECK(classical[0].y == 0.0);

  const auto mixed_region =
      grid_oracle(stage_game(state_with_y_sum(0.5), 2), 10, kEps);
  bool has_mixed = false;
  for (const StagePoint& pt : mixed_region) {
    if (pt.x == 0.5 && pt.y == 0.5) has_mixed = true;
  }
  CHECK(has_mixed);

  CHECK(grid_oracle(BilinearGame{}, 2, 0.0).size() == 9);
  CHECK_THROWS_AS(grid_oracle(BilinearGame{}, 0, kEps), DomainError);
}

TEST_CASE("enumerated components are sound against verify_ne") {
  Rng rng(211);
  for (int rep = 0; rep < 100; ++rep) {
    const BilinearGame game = rep % 2 == 0
                                  ? random_bilinear_game(rng)
                                  : stage_game(random_restricted_state(rng), 2);
    for (const EquilibriumComponent& component : nash_2x2(game, kEps)) {
      for (const StagePoint& pt : sample_component(component, 10)) {
        CHECK(verify_ne(game, pt.x, pt.y, kEps) != NashVerdict::kNotEquilibrium);
      }
    }
  }
}

TEST_CASE("enumerated components are complete against the grid oracle") {
  Rng rng(223);
  for (int rep = 0; rep < 200; ++rep) {
    const BilinearGame game = random_bilinear_game(rng);
    const auto components = nash_2x2(game, kEps);
    const OracleAgreement agreement =
        check_against_oracle(game, components, 100, kEps);
    CHECK(agreement.consistent);

    // Every pure-point component must show up in the oracle output.
    const auto oracle = grid_oracle(game, 100, kEps);
    for (const EquilibriumComponent& component : components) {
      if (component.kind != ComponentKind::kPurePoint) continue;
      bool found = false;
      for (const StagePoint& pt : oracle) {
        if (std::abs(pt.x - component.x.lo) <= 1e-12 &&
            std::abs(pt.y - component.y.lo) <= 1e-12) {
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("stage-2 equilibria follow the three y_sum regimes") {
  for (double y : {0.05, 0.15, 0.3}) {
    const auto components = nash_2x2(stage_game(state_with_y_sum(y), 2), kEps);
    REQUIRE(components.size() == 1);
    CHECK(is_point_at(components[0], 0.0, 0.0));
    CHECK(components[0].strictness == Strictness::kStrict);
  }
  for (double y : {0.4, 0.5, 0.6}) {
    const auto components = nash_2x2(stage_game(state_with_y_sum(y), 2), kEps);
    bool has_mixed = false;
    for (const EquilibriumComponent& c : components) {
      if (c.kind == ComponentKind::kMixedPoint) {
        has_mixed = true;
        CHECK_LE(std::abs(c.x.lo - (3.0 * y - 1.0)), 1e-9);
        CHECK_LE(std::abs(c.y.lo - (3.0 * y - 1.0)), 1e-9);
      }
      CHECK_FALSE(is_point_at(c, 0.0, 0.0));
      CHECK_FALSE(is_point_at(c, 1.0, 1.0));
    }
    CHECK(has_mixed);
  }
  for (double y : {0.7, 0.85, 0.95}) {
    const auto components = nash_2x2(stage_game(state_with_y_sum(y), 2), kEps);
    REQUIRE(components.size() == 1);
    CHECK(is_point_at(components[0], 1.0, 1.0));
    CHECK(components[0].strictness == Strictness::kStrict);
  }
}

TEST_CASE("sgpo on the classical state is unique all-defect") {
  const SgpoReport report = sgpo(classical_state(), kEps);
  REQUIRE(report.profiles.size() == 1);
  const SgpoProfile& profile = report.profiles[0];
  CHECK(profile.p == 0.0);
  CHECK(profile.q == 0.0);
  CHECK(profile.p1 == 0.0);
  CHECK(profile.q1 == 0.0);
  CHECK(profile.stage_payoffs.a1 == 1.0);
  CHECK(profile.stage_payoffs.b1 == 1.0);
  CHECK(profile.stage_payoffs.a2 == 1.0);
  CHECK(profile.stage_payoffs.b2 == 1.0);
  CHECK(profile.total_a == 2.0);
  CHECK(profile.total_b == 2.0);
  CHECK(profile.stage1_strictness == NashVerdict::kStrict);
  CHECK(profile.stage2_strictness == NashVerdict::kStrict);
  CHECK(classify_sgpo(report) == SgpoKind::kAllDefect);
}

TEST_CASE("sgpo at the boundary state contains cooperate-then-defect") {
  const SgpoReport report = sgpo(boundary_state(), kEps);

  // Stage-2 components are the two boundary segments; their payoffs vary,
  // so their endpoints are enumerated as separate continuations.
  REQUIRE(report.stage2_equilibria.size() == 2);
  CHECK_FALSE(report.stage2_component_payoffs[0].constant);
  CHECK_FALSE(report.stage2_component_payoffs[1].constant);
  CHECK(report.continuations.size() == 3);

  const SgpoProfile* cooperate_defect = nullptr;
  REQUIRE(has_profile(report, 1, 1, 0, 0, &cooperate_defect));
  CHECK_LE(std::abs(cooperate_defect->stage_payoffs.a1 - 5.0 / 3.0), 1e-12);
  CHECK_LE(std::abs(cooperate_defect->stage_payoffs.b1 - 5.0 / 3.0), 1e-12);
  CHECK_LE(std::abs(cooperate_defect->stage_payoffs.a2 - 5.0 / 3.0), 1e-12);
  CHECK_LE(std::abs(cooperate_defect->stage_payoffs.b2 - 5.0 / 3.0), 1e-12);
  CHECK_LE(std::abs(cooperate_defect->total_a - 10.0 / 3.0), 1e-12);
  CHECK(cooperate_defect->stage1_strictness == NashVerdict::kWeak);
  CHECK(cooperate_defect->stage2_strictness == NashVerdict::kWeak);
}

TEST_CASE("sgpo strictly inside the cooperation region is unique") {
  const SgpoReport report = sgpo(
      state_from_weights(RestrictedStateWeights(0.2, 0.1, 0.5, 0.2)), kEps);
  REQUIRE(report.profiles.size() == 1);
  const SgpoProfile& profile = report.profiles[0];
  CHECK(profile.p == 1.0);
  CHECK(profile.q == 1.0);
  CHECK(profile.p1 == 0.0);
  CHECK(profile.q1 == 0.0);
  CHECK(profile.stage1_strictness == NashVerdict::kStrict);
  CHECK(profile.stage2_strictness == NashVerdict::kStrict);
  CHECK(classify_sgpo(report) == SgpoKind::kCooperateThenDefect);
}

TEST_CASE("every reported profile passes verify_ne in both stage games") {
  Rng rng(227);
  for (int rep = 0; rep < 50; ++rep) {
    const PureState state = random_restricted_state(rng);
    const SgpoReport report = sgpo(state, kEps);
    CHECK_FALSE(report.profiles.empty());
    for (const SgpoProfile& profile : report.profiles) {
      CHECK(profile.stage2_strictness != NashVerdict::kNotEquilibrium);
      CHECK(profile.stage1_strictness != NashVerdict::kNotEquilibrium);
      CHECK(verify_ne(report.stage2_game, profile.p1, profile.q1, kEps) !=
            NashVerdict::kNotEquilibrium);
    }
  }
}

TEST_CASE("cooperation condition fixtures") {
  const ConditionReport boundary = cooperation_conditions(
      RestrictedStateWeights(1.0 / 6.0, 1.0 / 6.0, 0.5, 1.0 / 6.0));
  CHECK_LE(std::abs(boundary.cond1_value), 1e-12);
  CHECK_LE(std::abs(boundary.cond2_value), 1e-12);
  CHECK(boundary.cond1 == ConditionClass::kBoundaryHold);
  CHECK(boundary.cond2 == ConditionClass::kBoundaryHold);

  const ConditionReport classical =
      cooperation_conditions(RestrictedStateWeights(1.0, 0.0, 0.0, 0.0));
  CHECK(classical.cond2_value == 2.0);
  CHECK(classical.cond2 == ConditionClass::kFail);
  CHECK(classical.x_sum == 1.0);

  const ConditionReport interior =
      cooperation_conditions(RestrictedStateWeights(0.2, 0.1, 0.5, 0.2));
  CHECK(interior.cond1 == ConditionClass::kStrictHold);
  CHECK(interior.cond2 == ConditionClass::kStrictHold);
  CHECK_LE(std::abs(interior.x_sum - 0.3), 1e-12);
  CHECK_LE(std::abs(interior.y_sum - 0.3), 1e-12);
}

TEST_CASE("condition classification is consistent with x/y sums") {
  Rng rng(229);
  for (int rep = 0; rep < 200; ++rep) {
    const RestrictedStateWeights w = random_weights(rng);
    const ConditionReport report = cooperation_conditions(w);
    CHECK((report.cond1_value <= 0.0) == (report.y_sum <= 1.0 / 3.0 + 1e-15));
    CHECK((report.cond2_value <= 0.0) == (report.x_sum <= 1.0 / 3.0 + 1e-15));
  }
}

TEST_CASE("strict conditions coincide with a unique strict SGPO") {
  Rng rng(233);
  for (int rep = 0; rep < 500; ++rep) {
    const RestrictedStateWeights w = random_weights(rng);
    const ConditionReport conditions = cooperation_conditions(w);
    const bool conditions_strict =
        conditions.cond1 == ConditionClass::kStrictHold &&
        conditions.cond2 == ConditionClass::kStrictHold;

    const SgpoReport report = sgpo(state_from_weights(w), kEps);
    const SgpoProfile* profile = nullptr;
    bool sgpo_strict = false;
    if (has_profile(report, 1, 1, 0, 0, &profile)) {
      sgpo_strict = profile->stage1_strictness == NashVerdict::kStrict &&
                    profile->stage2_strictness == NashVerdict::kStrict &&
                    report.stage2_equilibria.size() == 1 &&
                    report.continuations.size() == 1 &&
                    report.continuations[0].stage1_equilibria.size() == 1;
    }
    CHECK(conditions_strict == sgpo_strict);
  }
}

TEST_CASE("reports are deterministic") {
  const PureState state = boundary_state();
  const std::string first =
      render_sgpo(make_sgpo_document(state, kEps, 50), OutputFormat::kJson);
  const std::string second =
      render_sgpo(make_sgpo_document(state, kEps, 50), OutputFormat::kJson);
  CHECK(first == second);
}
