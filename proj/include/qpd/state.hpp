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

#ifndef QPD_STATE_H_
#define QPD_STATE_H_

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "qpd/errors.hpp"

// Four-qubit states and the probabilistic identity/inversion channels of the
// two-stage game. Qubits 1 and 2 are manipulated by players A and B in stage
// one, qubits 3 and 4 in stage two. Basis label value 1 is the cooperate
// state of a qubit, 2 the defect state.

namespace qpd {

using Complex = std::complex<double>;

inline constexpr int kDim = 16;  // 2^4 basis labels

using Vector16 = Eigen::Matrix<Complex, kDim, 1>;
using Matrix16 = Eigen::Matrix<Complex, kDim, kDim>;
using LinearOperator = Matrix16;

// Input validation tolerance (normalization, Hermiticity, trace).
inline constexpr double kNormTolerance = 1e-9;
// Floor for eigenvalues of a positive semidefinite matrix.
inline constexpr double kPsdTolerance = 1e-9;
// Internal exactness tolerance; dimension-16 arithmetic stays well below it.
inline constexpr double kExactTolerance = 1e-12;

// Basis label (i,j,k,l), each component in {1,2}. The flat index is the
// positional binary encoding (i-1)*8 + (j-1)*4 + (k-1)*2 + (l-1).
struct BasisLabel {
  int i = 1;
  int j = 1;
  int k = 1;
  int l = 1;

  int flat() const { return (i - 1) * 8 + (j - 1) * 4 + (k - 1) * 2 + (l - 1); }
  static BasisLabel from_flat(int n);
};

// Position of one qubit, 1..4. Construction validates the range.
class QubitIndex {
 public:
  explicit QubitIndex(int position);
  int value() const { return position_; }

 private:
  int position_;
};

// The four identity-application probabilities: p and q for players A and B
// in stage one, p1 and q1 in stage two. Each is the probability of applying
// the identity operator (the cooperate-preserving move).
struct StrategyProfile {
  StrategyProfile(double p_in, double q_in, double p1_in, double q1_in);

  double p;
  double q;
  double p1;
  double q1;
};

// Normalized 4-qubit pure state. Immutable after construction.
class PureState {
 public:
  // Requires exactly kDim finite amplitudes with unit norm within
  // kNormTolerance.
  explicit PureState(std::span<const Complex> amplitudes);

  const Vector16& amplitudes() const { return amps_; }
  Complex amplitude(BasisLabel label) const { return amps_(label.flat()); }

 private:
  Vector16 amps_;
};

// Trace-one Hermitian positive semidefinite 16x16 matrix. Construction
// validates all three properties.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix16& entries);

  const Matrix16& entries() const { return rho_; }
  // Smallest eigenvalue, for positivity diagnostics.
  double min_eigenvalue() const;

 private:
  Matrix16 rho_;
};

PureState make_pure_state(std::span<const Complex> amplitudes);

// State supported on |1111>, |1122>, |2211>, |2222> only. The classical
// game is the corner |c1|^2 = 1.
PureState make_restricted_state(Complex c1, Complex c2, Complex c3, Complex c4);

DensityMatrix density_of(const PureState& state);

// Inversion operator on one qubit: exchanges the two basis labels that
// differ only in the target position, identity elsewhere. Unitary,
// Hermitian, an involution.
LinearOperator flip_on(QubitIndex target);

// One stage of play: the four-term convex mixture
//   pq rho + p(1-q) C_B rho C_B^+ + (1-p)q C_A rho C_A^+
//   + (1-p)(1-q) C_A C_B rho (C_A C_B)^+
// with the flips acting on the stage's qubit pair (1,2) or (3,4).
// pr_id_a and pr_id_b are the identity probabilities of players A and B.
DensityMatrix stage_channel(const DensityMatrix& rho, double pr_id_a,
                            double pr_id_b, int stage);

// Both stages in sequence: stage one with (p,q), then stage two with
// (p1,q1). The stages act on disjoint qubit pairs and commute.
DensityMatrix evolve_two_stage(const DensityMatrix& rho_ini,
                               const StrategyProfile& profile);

}  // namespace qpd

#endif  // QPD_STATE_H_
