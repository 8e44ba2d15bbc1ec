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

#ifndef QPD_VERIFY_H_
#define QPD_VERIFY_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qpd/equilibrium.hpp"
#include "qpd/payoff.hpp"
#include "qpd/state.hpp"

// Seeded random inputs and the classical-limit verification checks shared
// by the command line tool and the test suites.

namespace qpd {

using Rng = std::mt19937_64;

// Uniform weights on the simplex (Dirichlet(1,1,1,1)).
RestrictedStateWeights random_weights(Rng& rng);

// Restricted state with random weights and random phases on each amplitude.
PureState random_restricted_state(Rng& rng);

// Fully general 16-amplitude state: normalized complex Gaussian vector.
PureState random_general_state(Rng& rng);

StrategyProfile random_profile(Rng& rng);

// Bilinear game with coefficients uniform in [-5, 5].
BilinearGame random_bilinear_game(Rng& rng);

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// closed_form_payoffs at w = (1,0,0,0) against classical_payoffs on a
// 5x5x5x5 profile grid.
CheckResult check_classical_recovery(double tol = kExactTolerance);

// Trace measurement against the closed form on random restricted states
// with phases. corruption, when nonzero, is added to one diagonal entry of
// every payoff observable; it serves as a negative control.
CheckResult check_oracle_equivalence(std::uint64_t seed, int samples,
                                     double tol = kNormTolerance,
                                     double corruption = 0.0);

// Stage-1 payoffs must ignore (p1,q1) and stage-2 payoffs (p,q); each
// coordinate is shifted by 0.3 on random general states.
CheckResult check_stage_decoupling(std::uint64_t seed, int states,
                                   double tol = kExactTolerance);

// Payoffs may not react to unit-modulus phases on individual amplitudes.
CheckResult check_phase_invariance(std::uint64_t seed, int states,
                                   double tol = kExactTolerance);

std::vector<CheckResult> run_classical_checks(std::uint64_t seed,
                                              double payoff_tol = kNormTolerance,
                                              double corruption = 0.0);

}  // namespace qpd

#endif  // QPD_VERIFY_H_
