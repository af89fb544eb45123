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

#ifndef FRINGELAB_GRID_HPP
#define FRINGELAB_GRID_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fringelab {

using cplx = std::complex<double>;

/// Uniform 1-D grid over [x_min, x_max] with n_points samples, endpoints
/// included. Immutable after construction.
class GridAxis {
 public:
  GridAxis(double x_min, double x_max, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_points_; }
  double spacing() const { return spacing_; }
  double point(std::size_t i) const { return x_min_ + static_cast<double>(i) * spacing_; }
  std::vector<double> points() const;

  bool operator==(const GridAxis& other) const {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_points_ == other.n_points_;
  }
  bool operator!=(const GridAxis& other) const { return !(*this == other); }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
  double spacing_;
};

/// Trapezoidal quadrature of real samples over the axis.
double trapezoid(const GridAxis& axis, std::span<const double> samples);

/// Trapezoidal quadrature of complex samples over the axis.
cplx trapezoid(const GridAxis& axis, std::span<const cplx> samples);

/// Trapezoidal inner product sum_i w_i f_i conj(g_i).
cplx inner_product(const GridAxis& axis, std::span<const cplx> f, std::span<const cplx> g);

/// Trapezoidal squared L2 norm.
double norm_squared(const GridAxis& axis, std::span<const cplx> samples);

}  // namespace fringelab

#endif  // FRINGELAB_GRID_HPP
