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

#ifndef FRINGELAB_STATE_HPP
#define FRINGELAB_STATE_HPP

#include <span>
#include <vector>

#include "fringelab/grid.hpp"
#include "fringelab/mode.hpp"

namespace fringelab {

/// A phase element, e.g. placed in slit C. Finite by construction.
class PhaseShift {
 public:
  explicit PhaseShift(double phi);
  double phi() const { return phi_; }
  /// Representative in [0, 2*pi).
  double canonical() const;

 private:
  double phi_;
};

/// Scalar product of two unit modes; |value| <= 1 up to round-off.
struct OverlapScalar {
  cplx value;
};

/// Scalar product integral(f * conj(g)) by trapezoidal quadrature.
/// Both modes must share an axis and be unit-normalized.
OverlapScalar overlap(const ModeFunction& f, const ModeFunction& g);

/// Multiplies every sample by exp(i*phi). Norm-preserving.
ModeFunction apply_phase(const ModeFunction& mode, const PhaseShift& shift);

/// Two-branch entangled state
///   psi(x1, x2) = c1 psi_1A(x1) psi_2D(x2) + c2 psi_1B(x1) psi_2C(x2)
/// with unit modes and |c1|^2 + |c2|^2 = 1. The branch scalar products
///   I = integral(psi_2D conj(psi_2C)),  J = integral(psi_1A conj(psi_1B))
/// are computed once at construction.
class EntangledBranchPair {
 public:
  EntangledBranchPair(ModeFunction mode_1a, ModeFunction mode_2d, ModeFunction mode_1b,
                      ModeFunction mode_2c, cplx c1 = kHalfAmp, cplx c2 = kHalfAmp);

  static const cplx kHalfAmp;  // 1/sqrt(2)

  const ModeFunction& mode_1a() const { return mode_1a_; }
  const ModeFunction& mode_1b() const { return mode_1b_; }
  const ModeFunction& mode_2c() const { return mode_2c_; }
  const ModeFunction& mode_2d() const { return mode_2d_; }
  cplx c1() const { return c1_; }
  cplx c2() const { return c2_; }

  /// I = integral(psi_2D conj(psi_2C)): the one-particle interference gate.
  OverlapScalar overlap_i() const { return overlap_i_; }
  /// J = integral(psi_1A conj(psi_1B)), surfaced because it enters the
  /// state norm whenever both branch overlaps are nonzero.
  OverlapScalar overlap_j() const { return overlap_j_; }

 private:
  ModeFunction mode_1a_;
  ModeFunction mode_2d_;
  ModeFunction mode_1b_;
  ModeFunction mode_2c_;
  cplx c1_;
  cplx c2_;
  OverlapScalar overlap_i_;
  OverlapScalar overlap_j_;
};

/// Norm of the (unshifted) two-particle state,
/// sqrt(|c1|^2 + |c2|^2 + 2 Re(c1 conj(c2) J I)).
double state_norm(const EntangledBranchPair& pair);

/// Squared norm of the state with exp(i*phi) applied to psi_2C. The phase
/// enters the cross term, so normalizing a shifted pattern must use this.
double state_norm_squared(const EntangledBranchPair& pair, const PhaseShift& shift);

/// One-particle detection probability density on particle 1's axis.
class DetectionPattern {
 public:
  DetectionPattern(GridAxis axis, std::vector<double> density, bool normalized);

  const GridAxis& axis() const { return axis_; }
  std::span<const double> density() const { return density_; }
  double operator[](std::size_t i) const { return density_[i]; }
  std::size_t size() const { return density_.size(); }
  bool normalized() const { return normalized_; }

 private:
  GridAxis axis_;
  std::vector<double> density_;
  bool normalized_;
};

/// rho_1(x) = |c1|^2 R_1A^2 + |c2|^2 R_1B^2
///            + 2 Re(c1 conj(c2) exp(-i phi) I psi_1A conj(psi_1B)).
/// With normalize set, divided by the shifted-state squared norm so the
/// density integrates to 1. When I is exactly zero the interference term is
/// skipped outright, making the output bit-identical across phases.
DetectionPattern detection_pattern(const EntangledBranchPair& pair, const PhaseShift& shift,
                                   bool normalize = true);

/// Reduced density matrix of particle 1 on axis x axis, unit trace.
class DensityMatrix {
 public:
  DensityMatrix(GridAxis axis, std::vector<cplx> values);

  const GridAxis& axis() const { return axis_; }
  std::size_t size() const { return axis_.size(); }
  const cplx& operator()(std::size_t row, std::size_t col) const {
    return values_[row * axis_.size() + col];
  }
  std::span<const cplx> values() const { return values_; }

  std::vector<double> diagonal_real() const;
  /// Trapezoidal (dx-weighted) trace.
  double trace() const;

 private:
  GridAxis axis_;
  std::vector<cplx> values_;
};

/// Full rho_1(x, x') including the I and conj(I) cross terms, normalized to
/// unit trace. Hermitian and positive semidefinite up to round-off.
DensityMatrix reduced_density(const EntangledBranchPair& pair, const PhaseShift& shift);

/// Closed x-interval used for fringe analysis.
struct Window {
  double x_lo;
  double x_hi;
};

/// Fringe contrast (max - min)/(max + min) over the window. The window must
/// contain at least one full fringe for the value to be meaningful.
double visibility(const DetectionPattern& pattern, const Window& window);

/// Recovers the phase offset between two patterns generated from the same
/// pair at different PhaseShift values. The reference's local fringe phase
/// theta(x) is extracted by complex demodulation at the dominant fringe
/// frequency; both patterns are then least-squares fit to
/// poly(x) + a cos(theta) + b sin(theta) and the fitted phase difference is
/// returned in [0, 2*pi). Fringes are taken with positive spatial frequency.
double fringe_phase_shift(const DetectionPattern& reference, const DetectionPattern& shifted,
                          const Window& window);

}  // namespace fringelab

#endif  // FRINGELAB_STATE_HPP
