// Copyright 2026 The Fringelab Authors
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

#ifndef FRINGELAB_QUBIT_HPP
#define FRINGELAB_QUBIT_HPP

#include <complex>

namespace fringelab {

using cplx = std::complex<double>;

// Two-level toy model of one-sided marginals under a possibly non-unitary
// evolution of the far side. Basis convention: the binary observable's
// states are ordered (+, -) in every matrix.

/// 2x2 complex matrix, row-major in the (+, -) basis.
struct Mat2 {
  cplx m00{0.0, 0.0};
  cplx m01{0.0, 0.0};
  cplx m10{0.0, 0.0};
  cplx m11{0.0, 0.0};

  static Mat2 identity();
  Mat2 adjoint() const;
  Mat2 operator*(const Mat2& rhs) const;
  cplx trace() const { return m00 + m11; }
  cplx det() const { return m00 * m11 - m01 * m10; }
  /// Largest |U^dagger U - 1| entry.
  double unitarity_defect() const;
};

/// Which particle an evolution map acts on. Side 1 carries the detector
/// whose marginals we read; its evolution is required to be unitary.
enum class EvolutionSide { side1, side2 };

/// Evolution operator between the preparation time and the readout time.
class EvolutionMap2 {
 public:
  EvolutionMap2(Mat2 matrix, EvolutionSide side);

  const Mat2& matrix() const { return matrix_; }
  EvolutionSide side() const { return side_; }

 private:
  Mat2 matrix_;
  EvolutionSide side_;
};

/// U2^dagger U2 in the (+, -) basis. Hermitian positive semidefinite;
/// validated when supplied directly, automatic when derived from a map.
class GramMatrix {
 public:
  explicit GramMatrix(Mat2 entries);

  const Mat2& entries() const { return entries_; }
  cplx pp() const { return entries_.m00; }
  cplx pm() const { return entries_.m01; }
  cplx mp() const { return entries_.m10; }
  cplx mm() const { return entries_.m11; }

  static GramMatrix identity();
  /// Hermitian PSD square root: a U2 whose Gram matrix is this one.
  Mat2 principal_sqrt() const;

 private:
  Mat2 entries_;
};

/// U2^dagger U2 of a side-2 evolution map.
GramMatrix gram(const EvolutionMap2& u2);

struct MarginalProbs {
  double p_plus = 0.0;
  double p_minus = 0.0;
};

/// Side-1 marginals in closed form:
/// P(1+) = (|G+-|^2 + |G--|^2)/2, P(1-) = (|G++|^2 + |G-+|^2)/2.
/// They sum to 1 only when the Gram matrix is the identity.
MarginalProbs marginal_probs_closed(const GramMatrix& g);

/// Direct evaluation on the explicit 4-dimensional product state
/// (|1+>|2-> + |1->|2+>)/sqrt(2): evolve with u1 (x) u2, then project onto
/// the evolved one-particle states. Requires u1 unitary.
MarginalProbs marginal_probs_oracle(const EvolutionMap2& u1, const EvolutionMap2& u2);

/// Heaviside switch-on of a Gram perturbation at time T: the Gram matrix is
/// the identity for t < T and identity + perturbation for t >= T.
class TimeSwitch {
 public:
  TimeSwitch(double switch_time, cplx perturb_pp, cplx perturb_pm, cplx perturb_mp,
             cplx perturb_mm);

  double switch_time() const { return switch_time_; }
  GramMatrix gram_after() const { return gram_after_; }

 private:
  double switch_time_;
  GramMatrix gram_after_;
};

/// Side-1 marginals as a function of time across the switch.
MarginalProbs probs_vs_time(const TimeSwitch& sw, double t);

/// How far the side-1 marginals stray from the unitary (1/2, 1/2) point:
/// max(| |G+-|^2+|G--|^2 - 1 |, | |G++|^2+|G-+|^2 - 1 |). Zero exactly when
/// the arrangement cannot signal.
double signaling_deviation(const GramMatrix& g);

}  // namespace fringelab

#endif  // FRINGELAB_QUBIT_HPP
