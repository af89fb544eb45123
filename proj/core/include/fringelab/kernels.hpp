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

#ifndef FRINGELAB_KERNELS_HPP
#define FRINGELAB_KERNELS_HPP

#include <utility>

#include "fringelab/grid.hpp"
#include "fringelab/mode.hpp"

namespace fringelab {

/// Mass, hbar and the three time stamps of a two-segment flight:
/// emission (t_initial), screen crossing (t_screen), detection (t_final).
struct KernelParams {
  double mass = 1.0;
  double hbar = 1.0;
  double t_initial = 0.0;
  double t_screen = 0.0;
  double t_final = 0.0;

  KernelParams() = default;
  KernelParams(double mass, double hbar, double t_initial, double t_screen, double t_final);
};

enum class Segment { emission_to_screen, screen_to_detector, emission_to_detector };

/// Duration of a segment; throws TimeOrderError if it is not positive.
double segment_duration(const KernelParams& params, Segment segment);

/// Transmission window in the screen plane. A hard profile is the indicator
/// of [center - half_width, center + half_width]; a gaussian profile is the
/// amplitude window exp(-(x - center)^2 / (2 half_width^2)).
enum class SlitProfile { hard, gaussian };

struct SlitGeometry {
  SlitProfile profile = SlitProfile::hard;
  double half_width = 1.0;
  double center = 0.0;

  SlitGeometry() = default;
  SlitGeometry(SlitProfile profile, double half_width, double center = 0.0);

  double amplitude(double x) const;
};

/// Analytic minimum-uncertainty packet with unit L2 norm:
/// (2 pi sigma^2)^(-1/4) exp(-(x-center)^2/(4 sigma^2) + i k (x-center)).
struct GaussianPacket {
  double center = 0.0;
  double sigma = 1.0;
  double wavenumber = 0.0;

  GaussianPacket() = default;
  GaussianPacket(double center, double sigma, double wavenumber);

  cplx amplitude(double x) const;
  /// Position spread after free flight of duration dt.
  double spread_at(double dt, double mass, double hbar) const;
  /// Centroid after free flight of duration dt.
  double centroid_at(double dt, double mass, double hbar) const;
};

/// Free one-particle kernel
///   sqrt(m / (2 pi i hbar dt)) exp(i m (x_f - x_i)^2 / (2 hbar dt))
/// with sqrt(1/i) fixed to exp(-i pi/4).
cplx free_kernel_value(double x_f, double x_i, const KernelParams& params, Segment segment);

/// The containment and sampling checks propagate_free runs before doing any
/// work, exposed so configurations can be validated without executing.
void check_free_propagation(const GaussianPacket& packet, const GridAxis& axis,
                            const KernelParams& params, Segment segment);

/// Same for propagate_slit.
void check_slit_propagation(const GaussianPacket& packet, const GridAxis& axis,
                            const KernelParams& params, const SlitGeometry& slit);

/// Free flight of the packet over one segment, evaluated on the axis.
/// Norm-preserving; rejects grids that cannot hold or resolve the packet.
ModeFunction propagate_free(const GaussianPacket& packet, const GridAxis& axis,
                            const KernelParams& params, Segment segment);

/// Free flight of an arbitrary sampled mode. Linear in the mode. Only the
/// post-hoc norm check applies; callers own the containment judgment that
/// propagate_free makes analytically.
ModeFunction propagate_free_mode(const ModeFunction& mode, const KernelParams& params,
                                 Segment segment);

/// Two-segment slit propagation record. Norms here are the periodic-grid
/// sums dx * sum |psi|^2, which the spectral propagator conserves exactly;
/// for fields vanishing at the axis ends they coincide with the trapezoid.
struct PropagationResult {
  ModeFunction output;
  ModeFunction mid_plane;
  double input_norm_squared = 0.0;
  double output_norm_squared = 0.0;
};

/// Free flight to the screen, amplitude window at t_screen, free flight to
/// the detector. output_norm_squared equals the probability transmitted
/// through the window at the screen time, exactly on the grid.
PropagationResult propagate_slit(const GaussianPacket& packet, const GridAxis& axis,
                                 const KernelParams& params, const SlitGeometry& slit);

/// Fractional norm loss 1 - out/in, clamped to [0, 1]. Zero for unitary
/// (free or wide-open) evolution.
double unitarity_defect(const PropagationResult& result);

/// The two single-window branch modes of a double-slit screen, renormalized
/// to unit trapezoid norm, with the pre-normalization transmitted fractions.
struct DoubleSlitModes {
  ModeFunction mode_a;
  ModeFunction mode_b;
  double transmitted_a = 0.0;
  double transmitted_b = 0.0;
};

DoubleSlitModes double_slit_modes(const GaussianPacket& packet, const GridAxis& axis,
                                  const KernelParams& params, const SlitGeometry& slit_a,
                                  const SlitGeometry& slit_b);

}  // namespace fringelab

#endif  // FRINGELAB_KERNELS_HPP
