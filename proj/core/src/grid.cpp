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

#include "fringelab/grid.hpp"

#include <cmath>
#include <string>

#include "fringelab/errors.hpp"

namespace fringelab {

GridAxis::GridAxis(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw ValidationError("GridAxis: bounds must be finite");
  }
  if (!(x_max > x_min)) {
    throw ValidationError("GridAxis: x_max must exceed x_min (got [" +
                          std::to_string(x_min) + ", " + std::to_string(x_max) + "])");
  }
  if (n_points < 2) {
    throw ValidationError("GridAxis: n_points must be at least 2");
  }
  spacing_ = (x_max_ - x_min_) / static_cast<double>(n_points_ - 1);
}

std::vector<double> GridAxis::points() const {
  std::vector<double> xs(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) xs[i] = point(i);
  return xs;
}

namespace {

void check_size(const GridAxis& axis, std::size_t got, const char* who) {
  if (got != axis.size()) {
    throw AxisMismatchError(std::string(who) + ": sample count " + std::to_string(got) +
                            " does not match axis size " + std::to_string(axis.size()));
  }
}

}  // namespace

double trapezoid(const GridAxis& axis, std::span<const double> samples) {
  check_size(axis, samples.size(), "trapezoid");
  const std::size_t n = samples.size();
  double acc = 0.5 * (samples[0] + samples[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) acc += samples[i];
  return acc * axis.spacing();
}

cplx trapezoid(const GridAxis& axis, std::span<const cplx> samples) {
  check_size(axis, samples.size(), "trapezoid");
  const std::size_t n = samples.size();
  cplx acc = 0.5 * (samples[0] + samples[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) acc += samples[i];
  return acc * axis.spacing();
}

cplx inner_product(const GridAxis& axis, std::span<const cplx> f, std::span<const cplx> g) {
  check_size(axis, f.size(), "inner_product(f)");
  check_size(axis, g.size(), "inner_product(g)");
  const std::size_t n = f.size();
  cplx acc = 0.5 * (f[0] * std::conj(g[0]) + f[n - 1] * std::conj(g[n - 1]));
  for (std::size_t i = 1; i + 1 < n; ++i) acc += f[i] * std::conj(g[i]);
  return acc * axis.spacing();
}

double norm_squared(const GridAxis& axis, std::span<const cplx> samples) {
  check_size(axis, samples.size(), "norm_squared");
  const std::size_t n = samples.size();
  double acc = 0.5 * (std::norm(samples[0]) + std::norm(samples[n - 1]));
  for (std::size_t i = 1; i + 1 < n; ++i) acc += std::norm(samples[i]);
  return acc * axis.spacing();
}

}  // namespace fringelab
