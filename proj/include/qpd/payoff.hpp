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

#ifndef QPD_PAYOFF_H_
#define QPD_PAYOFF_H_

#include "qpd/state.hpp"

// Payoff observables and the two payoff routes: trace measurement on the
// evolved density matrix, and the closed-form polynomials valid on the
// restricted state family. The two routes must agree; tests hold them to
// 1e-9.

namespace qpd {

enum class Player { kA, kB };

// Normal form of the PD stage game. Rows are A's move, columns B's move,
// index 0 = cooperate, 1 = defect.
inline constexpr double kPayoffToA[2][2] = {{3.0, 0.0}, {5.0, 1.0}};
inline constexpr double kPayoffToB[2][2] = {{3.0, 5.0}, {0.0, 1.0}};

// Player A/B payoffs in stages 1/2. Each lies in [0,5].
struct StagePayoffs {
  double a1 = 0.0;
  double b1 = 0.0;
  double a2 = 0.0;
  double b2 = 0.0;
};

// Moduli squared (|c1|^2 .. |c4|^2) of a restricted state. Nonnegative and
// summing to one within kNormTolerance.
class RestrictedStateWeights {
 public:
  RestrictedStateWeights(double w1, double w2, double w3, double w4);

  double w1() const { return w1_; }
  double w2() const { return w2_; }
  double w3() const { return w3_; }
  double w4() const { return w4_; }

  // Weight of the stage-1 cooperative start, |c1|^2 + |c2|^2.
  double x_sum() const { return w1_ + w2_; }
  // Weight of the stage-2 inverted start, |c2|^2 + |c4|^2.
  double y_sum() const { return w2_ + w4_; }

 private:
  double w1_, w2_, w3_, w4_;
};

// Diagonal payoff observable held by the measuring agent. For (A, stage 1)
// the diagonal value at label (i,j,k,l) is the PD payoff to A at moves
// (i,j); stage 2 reads (k,l) instead. Entries are drawn from {0,1,3,5}.
LinearOperator payoff_operator(Player player, int stage);

// Re Tr(observable * rho). Raises NumericalError if the imaginary residue
// of the trace exceeds kNormTolerance.
double expectation(const DensityMatrix& rho, const LinearOperator& observable);

// Mean value of the payoff observable in the final state.
double measured_payoff(const DensityMatrix& rho_ffin, Player player,
                       int stage);

// Evolves the state through both stage channels and measures all four
// payoffs on the final state. Stage payoffs decouple, so measuring once at
// the end equals measuring after each stage.
StagePayoffs all_payoffs(const PureState& state, const StrategyProfile& profile);

// Closed-form stage payoffs on the restricted family:
//   a1 = (w1+w2)(-pq-p+4q+1) + (w3+w4)(-pq+2p-3q+3)
//   a2 = (w1+w3)(-p1q1-p1+4q1+1) + (w2+w4)(-p1q1+2p1-3q1+3)
// and b1, b2 with the roles of p,q (resp. p1,q1) swapped.
StagePayoffs closed_form_payoffs(const RestrictedStateWeights& w,
                                 const StrategyProfile& profile);

// The classical mixed-strategy payoffs, the w1 = 1 corner of the closed
// form: a1 = -pq+4q-p+1, b1 = -pq+4p-q+1, and likewise with p1,q1.
StagePayoffs classical_payoffs(const StrategyProfile& profile);

}  // namespace qpd

#endif  // QPD_PAYOFF_H_
