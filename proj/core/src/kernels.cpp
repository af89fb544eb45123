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

#include "fringelab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "fringelab/errors.hpp"
#include "fringelab/fft.hpp"

namespace fringelab {

namespace {

constexpr double kPi = std::numbers::pi;

// Spectral and spatial containment margins, in packet widths. Eight sigmas
// keep the neglected Gaussian mass near 1e-15.
constexpr double kSigmaMargin = 8.0;

// Periodic-grid squared norm dx * sum |v|^2, conserved exactly by the
// spectral step (Parseval).
double grid_norm_squared(const GridAxis& axis, const std::vector<cplx>& v) {
  double acc = 0.0;
  for (const cplx& z : v) acc += std::norm(z);
  return acc * axis.spacing();
}

// One free-flight step of duration dt: multiply the DFT of the samples by
// exp(-i hbar k^2 dt / (2 m)).
std::vector<cplx> spectral_step(const GridAxis& axis, std::vector<cplx> samples, double dt,
                                double mass, double hbar) {
  std::vector<cplx> freq = fft::forward(samples);
  const std::size_t n = freq.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = fft::bin_frequency(k, n, axis.spacing());
    const double ang = -hbar * kk * kk * dt / (2.0 * mass);
    freq[k] *= cplx(std::cos(ang), std::sin(ang));
  }
  return fft::inverse(freq);
}

std::vector<cplx> sample_packet(const GaussianPacket& packet, const GridAxis& axis) {
  std::vector<cplx> samples(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) samples[i] = packet.amplitude(axis.point(i));
  return samples;
}

void check_bandwidth(const GaussianPacket& packet, const GridAxis& axis) {
  const double sigma_k = 1.0 / (2.0 * packet.sigma);
  const double k_needed = std::abs(packet.wavenumber) + kSigmaMargin * sigma_k;
  const double k_nyquist = kPi / axis.spacing();
  if (k_needed > k_nyquist) {
    std::ostringstream msg;
    msg << "propagation: grid spacing " << axis.spacing() << " cannot resolve the packet; "
        << "need spacing <= " << kPi / k_needed;
    throw GridResolutionError(msg.str());
  }
}

void check_extent(const GridAxis& axis, double center, double width, const char* when) {
  const double lo = center - kSigmaMargin * width;
  const double hi = center + kSigmaMargin * width;
  if (lo < axis.x_min() || hi > axis.x_max()) {
    std::ostringstream msg;
    msg << "propagation: axis [" << axis.x_min() << ", " << axis.x_max()
        << "] cannot contain the packet " << when << "; need at least [" << lo << ", " << hi
        << "]";
    throw GridResolutionError(msg.str());
  }
}

void check_norm_preserved(const GridAxis& axis, double in_nsq, double out_nsq) {
  if (std::abs(out_nsq / in_nsq - 1.0) > 1e-3) {
    std::ostringstream msg;
    msg << "propagate_free: norm drifted to " << out_nsq / in_nsq
        << "; try grid spacing <= " << 0.5 * axis.spacing();
    throw GridResolutionError(msg.str());
  }
}

}  // namespace

KernelParams::KernelParams(double mass, double hbar, double t_initial, double t_screen,
                           double t_final)
    : mass(mass), hbar(hbar), t_initial(t_initial), t_screen(t_screen), t_final(t_final) {
  if (!(mass > 0.0) || !std::isfinite(mass) || !(hbar > 0.0) || !std::isfinite(hbar)) {
    throw ValidationError("KernelParams: mass and hbar must be positive and finite");
  }
  if (!std::isfinite(t_initial) || !std::isfinite(t_screen) || !std::isfinite(t_final) ||
      !(t_initial < t_screen) || !(t_screen < t_final)) {
    throw TimeOrderError("KernelParams: require t_initial < t_screen < t_final");
  }
}

double segment_duration(const KernelParams& params, Segment segment) {
  double dt = 0.0;
  switch (segment) {
    case Segment::emission_to_screen: dt = params.t_screen - params.t_initial; break;
    case Segment::screen_to_detector: dt = params.t_final - params.t_screen; break;
    case Segment::emission_to_detector: dt = params.t_final - params.t_initial; break;
  }
  if (!(dt > 0.0)) {
    throw TimeOrderError("segment_duration: nonpositive interval " + std::to_string(dt));
  }
  return dt;
}

SlitGeometry::SlitGeometry(SlitProfile profile, double half_width, double center)
    : profile(profile), half_width(half_width), center(center) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ValidationError("SlitGeometry: half_width must be positive and finite");
  }
  if (!std::isfinite(center)) {
    throw ValidationError("SlitGeometry: center must be finite");
  }
}

double SlitGeometry::amplitude(double x) const {
  const double u = x - center;
  if (profile == SlitProfile::hard) {
    return std::abs(u) <= half_width ? 1.0 : 0.0;
  }
  return std::exp(-u * u / (2.0 * half_width * half_width));
}

GaussianPacket::GaussianPacket(double center, double sigma, double wavenumber)
    : center(center), sigma(sigma), wavenumber(wavenumber) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("GaussianPacket: sigma must be positive and finite");
  }
  if (!std::isfinite(center) || !std::isfinite(wavenumber)) {
    throw ValidationError("GaussianPacket: center and wavenumber must be finite");
  }
}

cplx GaussianPacket::amplitude(double x) const {
  const double u = x - center;
  const double envelope = std::pow(2.0 * kPi * sigma * sigma, -0.25) *
                          std::exp(-u * u / (4.0 * sigma * sigma));
  return envelope * cplx(std::cos(wavenumber * u), std::sin(wavenumber * u));
}

double GaussianPacket::spread_at(double dt, double mass, double hbar) const {
  const double rate = hbar * dt / (2.0 * mass * sigma);
  return std::sqrt(sigma * sigma + rate * rate);
}

double GaussianPacket::centroid_at(double dt, double mass, double hbar) const {
  return center + hbar * wavenumber * dt / mass;
}

cplx free_kernel_value(double x_f, double x_i, const KernelParams& params, Segment segment) {
  const double dt = segment_duration(params, segment);
  const double magnitude = std::sqrt(params.mass / (2.0 * kPi * params.hbar * dt));
  const double dx = x_f - x_i;
  const double phase = params.mass * dx * dx / (2.0 * params.hbar * dt) - kPi / 4.0;
  return magnitude * cplx(std::cos(phase), std::sin(phase));
}

void check_free_propagation(const GaussianPacket& packet, const GridAxis& axis,
                            const KernelParams& params, Segment segment) {
  const double dt = segment_duration(params, segment);
  check_bandwidth(packet, axis);
  check_extent(axis, packet.center, packet.sigma, "at the start time");
  check_extent(axis, packet.centroid_at(dt, params.mass, params.hbar),
               packet.spread_at(dt, params.mass, params.hbar), "at the end time");
}

void check_slit_propagation(const GaussianPacket& packet, const GridAxis& axis,
                            const KernelParams& params, const SlitGeometry& slit) {
  const double dt1 = segment_duration(params, Segment::emission_to_screen);
  const double dt2 = segment_duration(params, Segment::screen_to_detector);

  check_bandwidth(packet, axis);
  check_extent(axis, packet.center, packet.sigma, "at the start time");
  const double spread_mid = packet.spread_at(dt1, params.mass, params.hbar);
  const double centroid_mid = packet.centroid_at(dt1, params.mass, params.hbar);
  check_extent(axis, centroid_mid, spread_mid, "at the screen time");

  // After the window the field is at most as wide as the free packet and at
  // least as divergent as a source of the window size, whichever wins.
  const double width_mid = std::min(spread_mid, slit.half_width);
  const double diffraction = params.hbar * dt2 / (2.0 * params.mass * width_mid);
  const double spread_out = std::max(packet.spread_at(dt1 + dt2, params.mass, params.hbar),
                                     std::sqrt(width_mid * width_mid + diffraction * diffraction));
  const double centroid_out =
      std::clamp(centroid_mid, slit.center - slit.half_width, slit.center + slit.half_width) +
      params.hbar * packet.wavenumber * dt2 / params.mass;
  check_extent(axis, centroid_out, spread_out, "at the detector time");
}

ModeFunction propagate_free(const GaussianPacket& packet, const GridAxis& axis,
                            const KernelParams& params, Segment segment) {
  const double dt = segment_duration(params, segment);
  check_free_propagation(packet, axis, params, segment);

  std::vector<cplx> samples = sample_packet(packet, axis);
  const double in_nsq = grid_norm_squared(axis, samples);
  samples = spectral_step(axis, std::move(samples), dt, params.mass, params.hbar);
  check_norm_preserved(axis, in_nsq, grid_norm_squared(axis, samples));
  return ModeFunction(axis, std::move(samples), ModeLabel::free);
}

ModeFunction propagate_free_mode(const ModeFunction& mode, const KernelParams& params,
                                 Segment segment) {
  const double dt = segment_duration(params, segment);
  std::vector<cplx> samples(mode.samples().begin(), mode.samples().end());
  const double in_nsq = grid_norm_squared(mode.axis(), samples);
  samples = spectral_step(mode.axis(), std::move(samples), dt, params.mass, params.hbar);
  check_norm_preserved(mode.axis(), in_nsq, grid_norm_squared(mode.axis(), samples));
  return ModeFunction(mode.axis(), std::move(samples), mode.label());
}

PropagationResult propagate_slit(const GaussianPacket& packet, const GridAxis& axis,
                                 const KernelParams& params, const SlitGeometry& slit) {
  const double dt1 = segment_duration(params, Segment::emission_to_screen);
  const double dt2 = segment_duration(params, Segment::screen_to_detector);
  check_slit_propagation(packet, axis, params, slit);

  std::vector<cplx> samples = sample_packet(packet, axis);
  const double in_nsq = grid_norm_squared(axis, samples);

  samples = spectral_step(axis, std::move(samples), dt1, params.mass, params.hbar);
  for (std::size_t i = 0; i < axis.size(); ++i) samples[i] *= slit.amplitude(axis.point(i));
  ModeFunction mid_plane(axis, samples, ModeLabel::free);

  samples = spectral_step(axis, std::move(samples), dt2, params.mass, params.hbar);
  const double out_nsq = grid_norm_squared(axis, samples);
  ModeFunction output(axis, std::move(samples), ModeLabel::free);

  if (out_nsq > in_nsq + 1e-6) {
    throw ValidationError("propagate_slit: transmitted norm exceeds input norm");
  }
  return PropagationResult{std::move(output), std::move(mid_plane), in_nsq, out_nsq};
}

double unitarity_defect(const PropagationResult& result) {
  const double defect = 1.0 - result.output_norm_squared / result.input_norm_squared;
  return std::clamp(defect, 0.0, 1.0);
}

namespace {

void check_disjoint(const SlitGeometry& a, const SlitGeometry& b) {
  const double separation = std::abs(a.center - b.center);
  const double reach = a.half_width + b.half_width;
  const bool both_hard = a.profile == SlitProfile::hard && b.profile == SlitProfile::hard;
  // Gaussian windows have unbounded support; demand enough separation that
  // the amplitude cross terms are negligible.
  const double needed = both_hard ? reach : 5.0 * reach;
  if (!(separation > needed)) {
    std::ostringstream msg;
    msg << "double_slit_modes: windows overlap (separation " << separation << ", need > "
        << needed << ")";
    throw GeometryError(msg.str());
  }
}

}  // namespace

DoubleSlitModes double_slit_modes(const GaussianPacket& packet, const GridAxis& axis,
                                  const KernelParams& params, const SlitGeometry& slit_a,
                                  const SlitGeometry& slit_b) {
  check_disjoint(slit_a, slit_b);
  PropagationResult through_a = propagate_slit(packet, axis, params, slit_a);
  PropagationResult through_b = propagate_slit(packet, axis, params, slit_b);
  const double trans_a = through_a.output_norm_squared / through_a.input_norm_squared;
  const double trans_b = through_b.output_norm_squared / through_b.input_norm_squared;
  return DoubleSlitModes{through_a.output.normalized().relabeled(ModeLabel::p1_a),
                         through_b.output.normalized().relabeled(ModeLabel::p1_b), trans_a,
                         trans_b};
}

}  // namespace fringelab
