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

#include "qpd/state.hpp"

#include <cmath>
#include <string>

namespace qpd {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0,1], got " +
                      std::to_string(value));
  }
}

// Bit toggled by a flip on the given qubit position under the positional
// binary encoding of BasisLabel::flat().
int flip_mask(int position) { return 1 << (4 - position); }

}  // namespace

BasisLabel BasisLabel::from_flat(int n) {
  if (n < 0 || n >= kDim) throw IndexError("flat basis index outside 0..15");
  return BasisLabel{(n >> 3 & 1) + 1, (n >> 2 & 1) + 1, (n >> 1 & 1) + 1,
                    (n & 1) + 1};
}

QubitIndex::QubitIndex(int position) : position_(position) {
  if (position < 1 || position > 4) {
    throw IndexError("qubit position must lie in 1..4, got " +
                     std::to_string(position));
  }
}

StrategyProfile::StrategyProfile(double p_in, double q_in, double p1_in,
                                 double q1_in)
    : p(p_in), q(q_in), p1(p1_in), q1(q1_in) {
  check_probability(p, "p");
  check_probability(q, "q");
  check_probability(p1, "p1");
  check_probability(q1, "q1");
}

PureState::PureState(std::span<const Complex> amplitudes) {
  if (amplitudes.size() != static_cast<std::size_t>(kDim)) {
    throw ShapeError("a pure state needs exactly 16 amplitudes, got " +
                     std::to_string(amplitudes.size()));
  }
  double norm2 = 0.0;
  for (int n = 0; n < kDim; ++n) {
    if (!finite(amplitudes[n])) throw DomainError("amplitude is not finite");
    amps_(n) = amplitudes[n];
    norm2 += std::norm(amplitudes[n]);
  }
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw NormalizationError("squared amplitudes sum to " +
                             std::to_string(norm2) + ", expected 1");
  }
}

DensityMatrix::DensityMatrix(const Matrix16& entries) : rho_(entries) {
  if (!rho_.allFinite()) throw DomainError("density matrix is not finite");
  const double hermitian_defect =
      (rho_ - rho_.adjoint().eval()).cwiseAbs().maxCoeff();
  if (hermitian_defect > kNormTolerance) {
    throw DomainError("density matrix is not Hermitian (defect " +
                      std::to_string(hermitian_defect) + ")");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kNormTolerance) {
    throw DomainError("density matrix trace is not 1");
  }
  if (min_eigenvalue() < -kPsdTolerance) {
    throw DomainError("density matrix is not positive semidefinite");
  }
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix16> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

PureState make_pure_state(std::span<const Complex> amplitudes) {
  return PureState(amplitudes);
}

PureState make_restricted_state(Complex c1, Complex c2, Complex c3,
                                Complex c4) {
  Complex amps[kDim] = {};
  amps[BasisLabel{1, 1, 1, 1}.flat()] = c1;
  amps[BasisLabel{1, 1, 2, 2}.flat()] = c2;
  amps[BasisLabel{2, 2, 1, 1}.flat()] = c3;
  amps[BasisLabel{2, 2, 2, 2}.flat()] = c4;
  return PureState(amps);
}

DensityMatrix density_of(const PureState& state) {
  const Vector16& a = state.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

LinearOperator flip_on(QubitIndex target) {
  const int mask = flip_mask(target.value());
  LinearOperator op = LinearOperator::Zero();
  for (int n = 0; n < kDim; ++n) op(n ^ mask, n) = Complex(1.0, 0.0);
  return op;
}

DensityMatrix stage_channel(const DensityMatrix& rho, double pr_id_a,
                            double pr_id_b, int stage) {
  check_probability(pr_id_a, "identity probability of player A");
  check_probability(pr_id_b, "identity probability of player B");
  if (stage != 1 && stage != 2) {
    throw DomainError("stage must be 1 or 2, got " + std::to_string(stage));
  }

  const LinearOperator flip_a = flip_on(QubitIndex(stage == 1 ? 1 : 3));
  const LinearOperator flip_b = flip_on(QubitIndex(stage == 1 ? 2 : 4));

  struct Term {
    double weight;
    LinearOperator op;
  };
  const Term terms[] = {
      {pr_id_a * pr_id_b, LinearOperator::Identity()},
      {pr_id_a * (1.0 - pr_id_b), flip_b},
      {(1.0 - pr_id_a) * pr_id_b, flip_a},
      {(1.0 - pr_id_a) * (1.0 - pr_id_b), flip_a * flip_b},
  };

  Matrix16 out = Matrix16::Zero();
  for (const Term& term : terms) {
    if (term.weight == 0.0) continue;
    out += term.weight * (term.op * rho.entries() * term.op.adjoint());
  }
  return DensityMatrix(out);
}

DensityMatrix evolve_two_stage(const DensityMatrix& rho_ini,
                               const StrategyProfile& profile) {
  const DensityMatrix after_stage1 =
      stage_channel(rho_ini, profile.p, profile.q, 1);
  return stage_channel(after_stage1, profile.p1, profile.q1, 2);
}

}  // namespace qpd
