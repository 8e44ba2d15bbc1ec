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

#include "qpd/verify.hpp"

#include <cmath>
#include <numbers>

namespace qpd {

namespace {

double unit_interval(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

double phase_angle(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0,
                                                2.0 * std::numbers::pi)(rng);
}

// Shift a probability by 0.3 while staying inside [0,1].
double nudge(double v) { return v < 0.5 ? v + 0.3 : v - 0.3; }

double max_abs_difference(const StagePayoffs& a, const StagePayoffs& b) {
  return std::max(std::max(std::abs(a.a1 - b.a1), std::abs(a.b1 - b.b1)),
                  std::max(std::abs(a.a2 - b.a2), std::abs(a.b2 - b.b2)));
}

}  // namespace

RestrictedStateWeights random_weights(Rng& rng) {
  double raw[4];
  double sum = 0.0;
  for (double& r : raw) {
    r = -std::log(1.0 - unit_interval(rng));
    sum += r;
  }
  return RestrictedStateWeights(raw[0] / sum, raw[1] / sum, raw[2] / sum,
                                raw[3] / sum);
}

PureState random_restricted_state(Rng& rng) {
  const RestrictedStateWeights w = random_weights(rng);
  const double moduli[4] = {std::sqrt(w.w1()), std::sqrt(w.w2()),
                            std::sqrt(w.w3()), std::sqrt(w.w4())};
  Complex amps[4];
  for (int t = 0; t < 4; ++t) {
    amps[t] = std::polar(moduli[t], phase_angle(rng));
  }
  return make_restricted_state(amps[0], amps[1], amps[2], amps[3]);
}

PureState random_general_state(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Complex amps[kDim];
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = Complex(normal(rng), normal(rng));
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= scale;
  return make_pure_state(amps);
}

StrategyProfile random_profile(Rng& rng) {
  return StrategyProfile(unit_interval(rng), unit_interval(rng),
                         unit_interval(rng), unit_interval(rng));
}

BilinearGame random_bilinear_game(Rng& rng) {
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  BilinearGame game;
  game.row = {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
  game.col = {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
  return game;
}

CheckResult check_classical_recovery(double tol) {
  CheckResult result{"classical-recovery", 0.0, tol, false};
  const RestrictedStateWeights classical(1.0, 0.0, 0.0, 0.0);
  const double grid[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (double p : grid) {
    for (double q : grid) {
      for (double p1 : grid) {
        for (double q1 : grid) {
          const StrategyProfile profile(p, q, p1, q1);
          const StagePayoffs quantum = closed_form_payoffs(classical, profile);
          const StagePayoffs classic = classical_payoffs(profile);
          result.max_error =
              std::max(result.max_error, max_abs_difference(quantum, classic));
        }
      }
    }
  }
  result.passed = result.max_error <= tol;
  return result;
}

CheckResult check_oracle_equivalence(std::uint64_t seed, int samples,
                                     double tol, double corruption) {
  CheckResult result{"oracle-equivalence", 0.0, tol, false};
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const RestrictedStateWeights w = random_weights(rng);
    Complex amps[4];
    amps[0] = std::polar(std::sqrt(w.w1()), phase_angle(rng));
    amps[1] = std::polar(std::sqrt(w.w2()), phase_angle(rng));
    amps[2] = std::polar(std::sqrt(w.w3()), phase_angle(rng));
    amps[3] = std::polar(std::sqrt(w.w4()), phase_angle(rng));
    const PureState state =
        make_restricted_state(amps[0], amps[1], amps[2], amps[3]);
    const StrategyProfile profile = random_profile(rng);

    const DensityMatrix rho_ffin =
        evolve_two_stage(density_of(state), profile);
    StagePayoffs measured;
    double* slots[4] = {&measured.a1, &measured.b1, &measured.a2, &measured.b2};
    const Player players[4] = {Player::kA, Player::kB, Player::kA, Player::kB};
    const int stages[4] = {1, 1, 2, 2};
    for (int t = 0; t < 4; ++t) {
      LinearOperator observable = payoff_operator(players[t], stages[t]);
      observable(0, 0) += corruption;
      *slots[t] = expectation(rho_ffin, observable);
    }

    const StagePayoffs closed = closed_form_payoffs(w, profile);
    result.max_error =
        std::max(result.max_error, max_abs_difference(measured, closed));
  }
  result.passed = result.max_error <= tol;
  return result;
}

CheckResult check_stage_decoupling(std::uint64_t seed, int states,
                                   double tol) {
  CheckResult result{"stage-decoupling", 0.0, tol, false};
  Rng rng(seed);
  for (int s = 0; s < states; ++s) {
    const PureState state = random_general_state(rng);
    const StrategyProfile base = random_profile(rng);
    const StagePayoffs reference = all_payoffs(state, base);

    const StagePayoffs vary_second = all_payoffs(
        state,
        StrategyProfile(base.p, base.q, nudge(base.p1), nudge(base.q1)));
    result.max_error =
        std::max(result.max_error,
                 std::max(std::abs(reference.a1 - vary_second.a1),
                          std::abs(reference.b1 - vary_second.b1)));

    const StagePayoffs vary_first = all_payoffs(
        state,
        StrategyProfile(nudge(base.p), nudge(base.q), base.p1, base.q1));
    result.max_error =
        std::max(result.max_error,
                 std::max(std::abs(reference.a2 - vary_first.a2),
                          std::abs(reference.b2 - vary_first.b2)));
  }
  result.passed = result.max_error <= tol;
  return result;
}

CheckResult check_phase_invariance(std::uint64_t seed, int states,
                                   double tol) {
  CheckResult result{"phase-invariance", 0.0, tol, false};
  Rng rng(seed);
  for (int s = 0; s < states; ++s) {
    const PureState state = random_general_state(rng);
    const StrategyProfile profile = random_profile(rng);
    const StagePayoffs reference = all_payoffs(state, profile);

    for (int rep = 0; rep < 4; ++rep) {
      const int slot = static_cast<int>(rng() % kDim);
      Complex amps[kDim];
      for (int n = 0; n < kDim; ++n) amps[n] = state.amplitudes()(n);
      amps[slot] *= std::polar(1.0, phase_angle(rng));
      const StagePayoffs shifted =
          all_payoffs(make_pure_state(amps), profile);
      result.max_error =
          std::max(result.max_error, max_abs_difference(reference, shifted));
    }
  }
  result.passed = result.max_error <= tol;
  return result;
}

std::vector<CheckResult> run_classical_checks(std::uint64_t seed,
                                              double payoff_tol,
                                              double corruption) {
  std::vector<CheckResult> checks;
  checks.push_back(check_classical_recovery());
  checks.push_back(check_oracle_equivalence(seed, 1000, payoff_tol, corruption));
  checks.push_back(check_stage_decoupling(seed + 1, 100));
  checks.push_back(check_phase_invariance(seed + 2, 100));
  return checks;
}

}  // namespace qpd
