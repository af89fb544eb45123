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

#include "fringelab/mode.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fringelab/errors.hpp"

namespace fringelab {

const char* to_string(ModeLabel label) {
  switch (label) {
    case ModeLabel::p1_a: return "1A";
    case ModeLabel::p1_b: return "1B";
    case ModeLabel::p2_c: return "2C";
    case ModeLabel::p2_d: return "2D";
    case ModeLabel::free: return "free";
  }
  return "?";
}

ModeFunction::ModeFunction(GridAxis axis, std::vector<cplx> samples, ModeLabel label)
    : axis_(axis), samples_(std::move(samples)), label_(label) {
  if (samples_.size() != axis_.size()) {
    throw AxisMismatchError("ModeFunction: " + std::to_string(samples_.size()) +
                            " samples on a " + std::to_string(axis_.size()) + "-point axis");
  }
  double nsq = 0.0;
  for (const cplx& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("ModeFunction: non-finite sample");
    }
    nsq += std::norm(v);
  }
  if (!std::isfinite(nsq)) {
    throw ValidationError("ModeFunction: norm overflows");
  }
  if (nsq == 0.0) {
    throw ValidationError("ModeFunction: zero-norm mode rejected");
  }
}

double ModeFunction::norm_squared() const { return fringelab::norm_squared(axis_, samples_); }

bool ModeFunction::is_unit_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

ModeFunction ModeFunction::normalized() const {
  const double nsq = norm_squared();
  if (nsq <= 0.0) {
    throw ValidationError("ModeFunction::normalized: vanishing grid norm");
  }
  const double scale = 1.0 / std::sqrt(nsq);
  std::vector<cplx> scaled(samples_);
  for (cplx& v : scaled) v *= scale;
  return ModeFunction(axis_, std::move(scaled), label_);
}

ModeFunction ModeFunction::relabeled(ModeLabel label) const {
  return ModeFunction(axis_, samples_, label);
}

ModeFunction gaussian_mode(const GridAxis& axis, double center, double sigma, double wavenumber,
                           ModeLabel label) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("gaussian_mode: sigma must be positive and finite");
  }
  if (!std::isfinite(center) || !std::isfinite(wavenumber)) {
    throw ValidationError("gaussian_mode: center and wavenumber must be finite");
  }
  const double amp = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  std::vector<cplx> samples(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double u = axis.point(i) - center;
    const double envelope = amp * std::exp(-u * u / (4.0 * sigma * sigma));
    samples[i] = envelope * cplx(std::cos(wavenumber * u), std::sin(wavenumber * u));
  }
  return ModeFunction(axis, std::move(samples), label).normalized();
}

std::pair<ModeFunction, ModeFunction> modes_with_overlap(const GridAxis& axis, cplx target,
                                                         double center, double sigma,
                                                         ModeLabel label_d, ModeLabel label_c) {
  const double mag = std::abs(target);
  if (!(mag <= 1.0 + 1e-12)) {
    throw ValidationError("modes_with_overlap: |target| must not exceed 1, got " +
                          std::to_string(mag));
  }

  // Base function and odd partner, orthonormalized on the grid so the
  // constructed scalar product is exact to round-off.
  ModeFunction e0 = gaussian_mode(axis, center, sigma, 0.0, label_d);
  std::vector<cplx> odd(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) {
    odd[i] = (axis.point(i) - center) * e0[i];
  }
  const cplx proj = inner_product(axis, odd, e0.samples());
  for (std::size_t i = 0; i < axis.size(); ++i) odd[i] -= proj * e0[i];
  ModeFunction e1 = ModeFunction(axis, std::move(odd), label_c).normalized();

  // d = e0, c = conj(target) e0 + sqrt(1-|target|^2) e1 gives
  // integral(d conj(c)) = target.
  const cplx a = std::conj(target);
  const double b = std::sqrt(std::max(0.0, 1.0 - mag * mag));
  std::vector<cplx> c_samples(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) c_samples[i] = a * e0[i] + b * e1[i];
  ModeFunction c = ModeFunction(axis, std::move(c_samples), label_c).normalized();
  return {e0, c};
}

}  // namespace fringelab
