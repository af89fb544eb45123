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

#ifndef FRINGELAB_MODE_HPP
#define FRINGELAB_MODE_HPP

#include <span>
#include <utility>
#include <vector>

#include "fringelab/grid.hpp"

namespace fringelab {

/// Which branch wavefunction a mode represents. Slits A/B sit on particle
/// 1's side of the arrangement, C/D on particle 2's side.
enum class ModeLabel { p1_a, p1_b, p2_c, p2_d, free };

const char* to_string(ModeLabel label);

/// A sampled complex one-particle wavefunction on a uniform grid.
/// Immutable after construction; samples must be finite and not all zero.
class ModeFunction {
 public:
  ModeFunction(GridAxis axis, std::vector<cplx> samples, ModeLabel label);

  const GridAxis& axis() const { return axis_; }
  std::span<const cplx> samples() const { return samples_; }
  const cplx& operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }
  ModeLabel label() const { return label_; }

  /// Trapezoidal squared L2 norm on the grid.
  double norm_squared() const;
  bool is_unit_normalized(double tol = 1e-9) const;

  /// Copy rescaled to unit grid norm.
  ModeFunction normalized() const;
  ModeFunction relabeled(ModeLabel label) const;

 private:
  GridAxis axis_;
  std::vector<cplx> samples_;
  ModeLabel label_;
};

/// Gaussian envelope times plane wave, unit-normalized on the grid:
/// samples of (2*pi*sigma^2)^(-1/4) exp(-(x-center)^2/(4 sigma^2)
/// + i k (x-center)), rescaled so the trapezoidal norm is exactly 1.
ModeFunction gaussian_mode(const GridAxis& axis, double center, double sigma, double wavenumber,
                           ModeLabel label);

/// Pair (d, c) of unit modes with a prescribed scalar product
/// integral(d * conj(c)) == target, |target| <= 1. Built from a Gaussian and
/// its odd partner, orthonormalized on the grid, so the overlap is exact to
/// round-off. Used to dial fringe visibility in scenarios and tests.
std::pair<ModeFunction, ModeFunction> modes_with_overlap(const GridAxis& axis, cplx target,
                                                         double center, double sigma,
                                                         ModeLabel label_d, ModeLabel label_c);

}  // namespace fringelab

#endif  // FRINGELAB_MODE_HPP
