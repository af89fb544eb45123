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

#include "fringelab/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fringelab/errors.hpp"

namespace fringelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitNormTol = 1e-9;
constexpr double kDensityClamp = 1e-12;
constexpr double kMinVisibility = 1e-3;

void require_unit_norm(const ModeFunction& mode, const char* op) {
  const double nsq = mode.norm_squared();
  if (std::abs(nsq - 1.0) > kUnitNormTol) {
    std::ostringstream msg;
    msg << op << ": mode " << to_string(mode.label()) << " is not unit-normalized (norm^2 = "
        << nsq << ")";
    throw PreconditionError(msg.str());
  }
}

cplx phase_factor(double phi) { return cplx(std::cos(phi), std::sin(phi)); }

bool exactly_zero(cplx z) { return z.real() == 0.0 && z.imag() == 0.0; }

}  // namespace

PhaseShift::PhaseShift(double phi) : phi_(phi) {
  if (!std::isfinite(phi)) {
    throw ValidationError("PhaseShift: phi must be finite");
  }
}

double PhaseShift::canonical() const {
  double v = std::fmod(phi_, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  return v;
}

OverlapScalar overlap(const ModeFunction& f, const ModeFunction& g) {
  if (f.axis() != g.axis()) {
    throw AxisMismatchError("overlap: modes live on different axes");
  }
  require_unit_norm(f, "overlap");
  require_unit_norm(g, "overlap");
  const cplx value = inner_product(f.axis(), f.samples(), g.samples());
  if (std::abs(value) > 1.0 + 1e-9) {
    throw ValidationError("overlap: |result| exceeds 1 beyond tolerance");
  }
  return OverlapScalar{value};
}

ModeFunction apply_phase(const ModeFunction& mode, const PhaseShift& shift) {
  const cplx factor = phase_factor(shift.phi());
  std::vector<cplx> samples(mode.samples().begin(), mode.samples().end());
  for (cplx& v : samples) v *= factor;
  return ModeFunction(mode.axis(), std::move(samples), mode.label());
}

const cplx EntangledBranchPair::kHalfAmp = cplx(std::numbers::sqrt2 / 2.0, 0.0);

EntangledBranchPair::EntangledBranchPair(ModeFunction mode_1a, ModeFunction mode_2d,
                                         ModeFunction mode_1b, ModeFunction mode_2c, cplx c1,
                                         cplx c2)
    : mode_1a_(std::move(mode_1a)),
      mode_2d_(std::move(mode_2d)),
      mode_1b_(std::move(mode_1b)),
      mode_2c_(std::move(mode_2c)),
      c1_(c1),
      c2_(c2),
      overlap_i_{},
      overlap_j_{} {
  if (mode_1a_.axis() != mode_1b_.axis()) {
    throw AxisMismatchError("EntangledBranchPair: particle-1 modes on different axes");
  }
  if (mode_2c_.axis() != mode_2d_.axis()) {
    throw AxisMismatchError("EntangledBranchPair: particle-2 modes on different axes");
  }
  require_unit_norm(mode_1a_, "EntangledBranchPair");
  require_unit_norm(mode_1b_, "EntangledBranchPair");
  require_unit_norm(mode_2c_, "EntangledBranchPair");
  require_unit_norm(mode_2d_, "EntangledBranchPair");
  const double weight = std::norm(c1_) + std::norm(c2_);
  if (std::abs(weight - 1.0) > 1e-12) {
    throw ValidationError("EntangledBranchPair: |c1|^2 + |c2|^2 must be 1, got " +
                          std::to_string(weight));
  }
  overlap_i_ = overlap(mode_2d_, mode_2c_);
  overlap_j_ = overlap(mode_1a_, mode_1b_);
  const double nsq = state_norm_squared(*this, PhaseShift(0.0));
  if (!(nsq > 1e-12)) {
    throw DegenerateStateError("EntangledBranchPair: state norm^2 = " + std::to_string(nsq));
  }
}

double state_norm_squared(const EntangledBranchPair& pair, const PhaseShift& shift) {
  const double diag = std::norm(pair.c1()) + std::norm(pair.c2());
  const cplx i_val = pair.overlap_i().value;
  if (exactly_zero(i_val) || exactly_zero(pair.overlap_j().value)) {
    return diag;
  }
  const cplx cross =
      pair.c1() * std::conj(pair.c2()) * pair.overlap_j().value * i_val * phase_factor(-shift.phi());
  return diag + 2.0 * cross.real();
}

double state_norm(const EntangledBranchPair& pair) {
  const double nsq = state_norm_squared(pair, PhaseShift(0.0));
  if (!(nsq > 1e-12)) {
    throw DegenerateStateError("state_norm: state norm^2 = " + std::to_string(nsq));
  }
  return std::sqrt(nsq);
}

DetectionPattern::DetectionPattern(GridAxis axis, std::vector<double> density, bool normalized)
    : axis_(axis), density_(std::move(density)), normalized_(normalized) {
  if (density_.size() != axis_.size()) {
    throw AxisMismatchError("DetectionPattern: density size does not match axis");
  }
  for (double& v : density_) {
    if (!std::isfinite(v)) {
      throw ValidationError("DetectionPattern: non-finite density");
    }
    if (v < 0.0) {
      if (v < -kDensityClamp) {
        throw ValidationError("DetectionPattern: density " + std::to_string(v) +
                              " below round-off tolerance");
      }
      v = 0.0;
    }
  }
}

DetectionPattern detection_pattern(const EntangledBranchPair& pair, const PhaseShift& shift,
                                   bool normalize) {
  const GridAxis& axis = pair.mode_1a().axis();
  const cplx i_val = pair.overlap_i().value;
  const double w1 = std::norm(pair.c1());
  const double w2 = std::norm(pair.c2());
  const bool no_interference = exactly_zero(i_val);
  const cplx kappa =
      no_interference ? cplx(0.0, 0.0)
                      : pair.c1() * std::conj(pair.c2()) * phase_factor(-shift.phi()) * i_val;

  std::vector<double> density(axis.size());
  const auto a = pair.mode_1a().samples();
  const auto b = pair.mode_1b().samples();
  for (std::size_t i = 0; i < axis.size(); ++i) {
    double v = w1 * std::norm(a[i]) + w2 * std::norm(b[i]);
    if (!no_interference) {
      v += 2.0 * std::real(kappa * a[i] * std::conj(b[i]));
    }
    density[i] = v;
  }

  if (normalize) {
    const double nsq = state_norm_squared(pair, shift);
    if (!(nsq > 1e-12)) {
      throw DegenerateStateError("detection_pattern: state norm^2 = " + std::to_string(nsq));
    }
    const double inv = 1.0 / nsq;
    for (double& v : density) v *= inv;
  }
  return DetectionPattern(axis, std::move(density), normalize);
}

DensityMatrix::DensityMatrix(GridAxis axis, std::vector<cplx> values)
    : axis_(axis), values_(std::move(values)) {
  if (values_.size() != axis_.size() * axis_.size()) {
    throw AxisMismatchError("DensityMatrix: value count does not match axis^2");
  }
}

std::vector<double> DensityMatrix::diagonal_real() const {
  std::vector<double> diag(axis_.size());
  for (std::size_t i = 0; i < axis_.size(); ++i) diag[i] = (*this)(i, i).real();
  return diag;
}

double DensityMatrix::trace() const {
  const std::vector<double> diag = diagonal_real();
  return trapezoid(axis_, diag);
}

DensityMatrix reduced_density(const EntangledBranchPair& pair, const PhaseShift& shift) {
  const GridAxis& axis = pair.mode_1a().axis();
  const std::size_t n = axis.size();
  const cplx i_val = pair.overlap_i().value;
  const double w1 = std::norm(pair.c1());
  const double w2 = std::norm(pair.c2());
  const bool no_interference = exactly_zero(i_val);
  const cplx kappa =
      no_interference ? cplx(0.0, 0.0)
                      : pair.c1() * std::conj(pair.c2()) * phase_factor(-shift.phi()) * i_val;

  const double nsq = state_norm_squared(pair, shift);
  if (!(nsq > 1e-12)) {
    throw DegenerateStateError("reduced_density: state norm^2 = " + std::to_string(nsq));
  }
  const double inv = 1.0 / nsq;

  const auto a = pair.mode_1a().samples();
  const auto b = pair.mode_1b().samples();
  std::vector<cplx> values(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      cplx v = w1 * a[r] * std::conj(a[c]) + w2 * b[r] * std::conj(b[c]);
      if (!no_interference) {
        v += kappa * a[r] * std::conj(b[c]) + std::conj(kappa) * b[r] * std::conj(a[c]);
      }
      values[r * n + c] = v * inv;
    }
  }
  return DensityMatrix(axis, std::move(values));
}

namespace {

struct WindowIndices {
  std::size_t first;
  std::size_t last;  // inclusive
  std::size_t count() const { return last - first + 1; }
};

WindowIndices window_indices(const GridAxis& axis, const Window& window, const char* op) {
  if (!std::isfinite(window.x_lo) || !std::isfinite(window.x_hi) || !(window.x_hi > window.x_lo)) {
    throw ValidationError(std::string(op) + ": invalid window");
  }
  if (window.x_lo < axis.x_min() - 0.5 * axis.spacing() ||
      window.x_hi > axis.x_max() + 0.5 * axis.spacing()) {
    throw ValidationError(std::string(op) + ": window outside pattern axis");
  }
  const double dx = axis.spacing();
  const auto clamp_index = [&](double x) {
    double t = (x - axis.x_min()) / dx;
    if (t < 0.0) t = 0.0;
    const auto max_i = static_cast<double>(axis.size() - 1);
    if (t > max_i) t = max_i;
    return t;
  };
  const auto first = static_cast<std::size_t>(std::ceil(clamp_index(window.x_lo) - 1e-9));
  const auto last = static_cast<std::size_t>(std::floor(clamp_index(window.x_hi) + 1e-9));
  if (last < first + 3) {
    throw ValidationError(std::string(op) + ": window covers too few grid points");
  }
  return WindowIndices{first, last};
}

double window_visibility(const DetectionPattern& pattern, const WindowIndices& idx,
                         const char* op) {
  double lo = pattern[idx.first];
  double hi = pattern[idx.first];
  for (std::size_t i = idx.first; i <= idx.last; ++i) {
    lo = std::min(lo, pattern[i]);
    hi = std::max(hi, pattern[i]);
  }
  if (!(hi + lo > 0.0)) {
    throw UndefinedVisibilityError(std::string(op) + ": max + min of pattern is zero in window");
  }
  return (hi - lo) / (hi + lo);
}

// Dominant fringe frequency of the mean-removed signal by a coarse scan plus
// golden-section refinement of |sum y exp(-i k x)|^2.
double dominant_frequency(const GridAxis& axis, std::span<const double> y,
                          const WindowIndices& idx) {
  const double length = axis.point(idx.last) - axis.point(idx.first);
  const double k_lo = kTwoPi / length;             // one fringe per window
  const double k_hi = 0.95 * std::numbers::pi / axis.spacing();
  if (!(k_hi > k_lo)) {
    throw ValidationError("fringe_phase_shift: window too narrow to hold a fringe");
  }

  const auto power = [&](double k) {
    cplx acc(0.0, 0.0);
    const cplx step = phase_factor(-k * axis.spacing());
    cplx ph = phase_factor(-k * axis.point(idx.first));
    for (std::size_t i = idx.first; i <= idx.last; ++i) {
      acc += y[i - idx.first] * ph;
      ph *= step;
    }
    return std::norm(acc);
  };

  const std::size_t n_scan = 2048;
  double best_k = k_lo;
  double best_p = -1.0;
  for (std::size_t s = 0; s <= n_scan; ++s) {
    const double k = k_lo + (k_hi - k_lo) * static_cast<double>(s) / static_cast<double>(n_scan);
    const double p = power(k);
    if (p > best_p) {
      best_p = p;
      best_k = k;
    }
  }

  const double bracket = (k_hi - k_lo) / static_cast<double>(n_scan);
  double a = std::max(k_lo, best_k - bracket);
  double b = std::min(k_hi, best_k + bracket);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double pc = power(c);
  double pd = power(d);
  for (int it = 0; it < 80; ++it) {
    if (pc > pd) {
      b = d;
      d = c;
      pd = pc;
      c = b - gr * (b - a);
      pc = power(c);
    } else {
      a = c;
      c = d;
      pc = pd;
      d = a + gr * (b - a);
      pd = power(d);
    }
  }
  return 0.5 * (a + b);
}

// Least-squares fit of pattern values in the window to
//   e0 + e1 u + e2 u^2 + A cos(theta) + B sin(theta)
// returning atan2(B, A). u is the window coordinate scaled to [-1, 1].
double fitted_phase(const DetectionPattern& pattern, const WindowIndices& idx,
                    std::span<const double> theta) {
  const GridAxis& axis = pattern.axis();
  const double mid = 0.5 * (axis.point(idx.first) + axis.point(idx.last));
  const double half = 0.5 * (axis.point(idx.last) - axis.point(idx.first));
  constexpr std::size_t kDim = 5;

  std::array<double, kDim * kDim> ata{};
  std::array<double, kDim> atb{};
  for (std::size_t i = idx.first; i <= idx.last; ++i) {
    const double u = (axis.point(i) - mid) / half;
    const double th = theta[i - idx.first];
    const std::array<double, kDim> row = {1.0, u, u * u, std::cos(th), std::sin(th)};
    for (std::size_t r = 0; r < kDim; ++r) {
      for (std::size_t c = 0; c < kDim; ++c) ata[r * kDim + c] += row[r] * row[c];
      atb[r] += row[r] * pattern[i];
    }
  }

  // Gaussian elimination with partial pivoting.
  std::array<double, kDim> sol{};
  {
    std::array<double, kDim*(kDim + 1)> m{};
    for (std::size_t r = 0; r < kDim; ++r) {
      for (std::size_t c = 0; c < kDim; ++c) m[r * (kDim + 1) + c] = ata[r * kDim + c];
      m[r * (kDim + 1) + kDim] = atb[r];
    }
    for (std::size_t col = 0; col < kDim; ++col) {
      std::size_t pivot = col;
      for (std::size_t r = col + 1; r < kDim; ++r) {
        if (std::abs(m[r * (kDim + 1) + col]) > std::abs(m[pivot * (kDim + 1) + col])) pivot = r;
      }
      if (std::abs(m[pivot * (kDim + 1) + col]) < 1e-14) {
        throw UnrecoverablePhaseError("fringe_phase_shift: ill-conditioned fringe fit");
      }
      if (pivot != col) {
        for (std::size_t c = 0; c <= kDim; ++c) {
          std::swap(m[pivot * (kDim + 1) + c], m[col * (kDim + 1) + c]);
        }
      }
      for (std::size_t r = col + 1; r < kDim; ++r) {
        const double f = m[r * (kDim + 1) + col] / m[col * (kDim + 1) + col];
        for (std::size_t c = col; c <= kDim; ++c) m[r * (kDim + 1) + c] -= f * m[col * (kDim + 1) + c];
      }
    }
    for (std::size_t r = kDim; r-- > 0;) {
      double acc = m[r * (kDim + 1) + kDim];
      for (std::size_t c = r + 1; c < kDim; ++c) acc -= m[r * (kDim + 1) + c] * sol[c];
      sol[r] = acc / m[r * (kDim + 1) + r];
    }
  }
  return std::atan2(sol[4], sol[3]);
}

}  // namespace

double visibility(const DetectionPattern& pattern, const Window& window) {
  const WindowIndices idx = window_indices(pattern.axis(), window, "visibility");
  return window_visibility(pattern, idx, "visibility");
}

double fringe_phase_shift(const DetectionPattern& reference, const DetectionPattern& shifted,
                          const Window& window) {
  if (reference.axis() != shifted.axis()) {
    throw AxisMismatchError("fringe_phase_shift: patterns on different axes");
  }
  const GridAxis& axis = reference.axis();
  const WindowIndices idx = window_indices(axis, window, "fringe_phase_shift");

  const double vis_ref = window_visibility(reference, idx, "fringe_phase_shift");
  const double vis_shift = window_visibility(shifted, idx, "fringe_phase_shift");
  if (std::min(vis_ref, vis_shift) < kMinVisibility) {
    throw UnrecoverablePhaseError("fringe_phase_shift: visibility " +
                                  std::to_string(std::min(vis_ref, vis_shift)) +
                                  " below recoverable threshold");
  }

  // Extract the reference's local fringe phase theta(x) = k x + arg(S).
  std::vector<double> y(idx.count());
  double mean = 0.0;
  for (std::size_t i = idx.first; i <= idx.last; ++i) mean += reference[i];
  mean /= static_cast<double>(idx.count());
  for (std::size_t i = idx.first; i <= idx.last; ++i) y[i - idx.first] = reference[i] - mean;

  const double k = dominant_frequency(axis, y, idx);
  cplx s(0.0, 0.0);
  {
    const cplx step = phase_factor(-k * axis.spacing());
    cplx ph = phase_factor(-k * axis.point(idx.first));
    for (std::size_t i = idx.first; i <= idx.last; ++i) {
      s += y[i - idx.first] * ph;
      ph *= step;
    }
  }
  const double offset = std::arg(s);
  std::vector<double> theta(idx.count());
  for (std::size_t i = idx.first; i <= idx.last; ++i) {
    theta[i - idx.first] = k * axis.point(i) + offset;
  }

  const double psi_ref = fitted_phase(reference, idx, theta);
  const double psi_shift = fitted_phase(shifted, idx, theta);
  double delta = std::fmod(psi_shift - psi_ref, kTwoPi);
  if (delta < 0.0) delta += kTwoPi;
  return delta;
}

}  // namespace fringelab
