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

#include "qpd/payoff.hpp"

#include <cmath>
#include <string>

namespace qpd {

RestrictedStateWeights::RestrictedStateWeights(double w1, double w2, double w3,
                                               double w4)
    : w1_(w1), w2_(w2), w3_(w3), w4_(w4) {
  for (double w : {w1, w2, w3, w4}) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("weights must be finite and nonnegative");
    }
  }
  const double sum = w1 + w2 + w3 + w4;
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw DomainError("weights sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

LinearOperator payoff_operator(Player player, int stage) {
  if (stage != 1 && stage != 2) {
    throw DomainError("stage must be 1 or 2, got " + std::to_string(stage));
  }
  LinearOperator op = LinearOperator::Zero();
  for (int n = 0; n < kDim; ++n) {
    const BasisLabel label = BasisLabel::from_flat(n);
    const int a_move = (stage == 1 ? label.i : label.k) - 1;
    const int b_move = (stage == 1 ? label.j : label.l) - 1;
    const double value = player == Player::kA ? kPayoffToA[a_move][b_move]
                                              : kPayoffToB[a_move][b_move];
    op(n, n) = Complex(value, 0.0);
  }
  return op;
}

double expectation(const DensityMatrix& rho, const LinearOperator& observable) {
  // Tr(O rho) = sum_ij O_ij rho_ji
  const Complex trace =
      (observable.array() * rho.entries().transpose().array()).sum();
  if (std::abs(trace.imag()) > kNormTolerance) {
    throw NumericalError("payoff trace has imaginary residue " +
                         std::to_string(trace.imag()));
  }
  return trace.real();
}

double measured_payoff(const DensityMatrix& rho_ffin, Player player,
                       int stage) {
  return expectation(rho_ffin, payoff_operator(player, stage));
}

StagePayoffs all_payoffs(const PureState& state,
                         const StrategyProfile& profile) {
  const DensityMatrix rho_ffin = evolve_two_stage(density_of(state), profile);
  StagePayoffs out;
  out.a1 = measured_payoff(rho_ffin, Player::kA, 1);
  out.b1 = measured_payoff(rho_ffin, Player::kB, 1);
  out.a2 = measured_payoff(rho_ffin, Player::kA, 2);
  out.b2 = measured_payoff(rho_ffin, Player::kB, 2);
  return out;
}

StagePayoffs closed_form_payoffs(const RestrictedStateWeights& w,
                                 const StrategyProfile& profile) {
  const double straight1 = w.w1() + w.w2();  // stage-1 start at moves (1,1)
  const double inverted1 = w.w3() + w.w4();  // stage-1 start at moves (2,2)
  const double straight2 = w.w1() + w.w3();
  const double inverted2 = w.w2() + w.w4();
  const double p = profile.p, q = profile.q;
  const double p1 = profile.p1, q1 = profile.q1;

  StagePayoffs out;
  out.a1 = straight1 * (-p * q - p + 4.0 * q + 1.0) +
           inverted1 * (-p * q + 2.0 * p - 3.0 * q + 3.0);
  out.b1 = straight1 * (-p * q - q + 4.0 * p + 1.0) +
           inverted1 * (-p * q + 2.0 * q - 3.0 * p + 3.0);
  out.a2 = straight2 * (-p1 * q1 - p1 + 4.0 * q1 + 1.0) +
           inverted2 * (-p1 * q1 + 2.0 * p1 - 3.0 * q1 + 3.0);
  out.b2 = straight2 * (-p1 * q1 - q1 + 4.0 * p1 + 1.0) +
           inverted2 * (-p1 * q1 + 2.0 * q1 - 3.0 * p1 + 3.0);
  return out;
}

StagePayoffs classical_payoffs(const StrategyProfile& profile) {
  const double p = profile.p, q = profile.q;
  const double p1 = profile.p1, q1 = profile.q1;
  StagePayoffs out;
  out.a1 = -p * q + 4.0 * q - p + 1.0;
  out.b1 = -p * q + 4.0 * p - q + 1.0;
  out.a2 = -p1 * q1 + 4.0 * q1 - p1 + 1.0;
  out.b2 = -p1 * q1 + 4.0 * p1 - q1 + 1.0;
  return out;
}

}  // namespace qpd
