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
//
// Shared test utilities. Everything here is an independent check: the
// oracles are brute-force or closed-form routes that never call the code
// paths they are used to verify.

#ifndef FRINGELAB_TESTS_HELPERS_HPP
#define FRINGELAB_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fringelab/kernels.hpp"
#include "fringelab/mode.hpp"
#include "fringelab/qubit.hpp"
#include "fringelab/rng.hpp"
#include "fringelab/state.hpp"

namespace fringelab::testing {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  if (d > std::numbers::pi) d = kTwoPi - d;
  return d;
}

/// Trapezoid weights of an axis (dx, halved at the ends).
inline std::vector<double> quad_weights(const GridAxis& axis) {
  std::vector<double> w(axis.size(), axis.spacing());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

// ---------------------------------------------------------------------------
// Brute-force two-particle oracles. The state is assembled entry by entry on
// the full n1 x n2 grid and reduced by direct quadrature.
// ---------------------------------------------------------------------------

struct TwoParticleGrid {
  std::vector<cplx> psi;  // row-major [i1 * n2 + i2]
  double norm_squared = 0.0;
};

inline TwoParticleGrid brute_force_state(const EntangledBranchPair& pair, double phi) {
  const auto& a = pair.mode_1a();
  const auto& b = pair.mode_1b();
  const auto& c = pair.mode_2c();
  const auto& d = pair.mode_2d();
  const std::size_t n1 = a.size();
  const std::size_t n2 = c.size();
  const cplx phase(std::cos(phi), std::sin(phi));

  TwoParticleGrid grid;
  grid.psi.resize(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      grid.psi[i * n2 + j] = pair.c1() * a[i] * d[j] + pair.c2() * b[i] * phase * c[j];
    }
  }

  const std::vector<double> w1 = quad_weights(a.axis());
  const std::vector<double> w2 = quad_weights(c.axis());
  double total = 0.0;
  for (std::size_t i = 0; i < n1; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n2; ++j) row += w2[j] * std::norm(grid.psi[i * n2 + j]);
    total += w1[i] * row;
  }
  grid.norm_squared = total;
  return grid;
}

/// Normalized marginal density of particle 1: integral |psi|^2 dx2.
inline std::vector<double> brute_force_marginal(const EntangledBranchPair& pair, double phi) {
  const TwoParticleGrid grid = brute_force_state(pair, phi);
  const std::size_t n1 = pair.mode_1a().size();
  const std::size_t n2 = pair.mode_2c().size();
  const std::vector<double> w2 = quad_weights(pair.mode_2c().axis());

  std::vector<double> marginal(n1, 0.0);
  for (std::size_t i = 0; i < n1; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n2; ++j) row += w2[j] * std::norm(grid.psi[i * n2 + j]);
    marginal[i] = row / grid.norm_squared;
  }
  return marginal;
}

/// Normalized partial trace over particle 2, row-major n1 x n1.
inline std::vector<cplx> brute_force_partial_trace(const EntangledBranchPair& pair, double phi) {
  const TwoParticleGrid grid = brute_force_state(pair, phi);
  const std::size_t n1 = pair.mode_1a().size();
  const std::size_t n2 = pair.mode_2c().size();
  const std::vector<double> w2 = quad_weights(pair.mode_2c().axis());

  std::vector<cplx> rho(n1 * n1);
  for (std::size_t r = 0; r < n1; ++r) {
    for (std::size_t c = 0; c < n1; ++c) {
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < n2; ++j) {
        acc += w2[j] * grid.psi[r * n2 + j] * std::conj(grid.psi[c * n2 + j]);
      }
      rho[r * n1 + c] = acc / grid.norm_squared;
    }
  }
  return rho;
}

// ---------------------------------------------------------------------------
// Closed-form free evolution of a Gaussian packet. Derived by completing the
// square in the kernel integral; independent of the spectral propagator.
// ---------------------------------------------------------------------------

inline cplx evolved_gaussian(const GaussianPacket& packet, double dt, double mass, double hbar,
                             double x) {
  const double alpha0 = 1.0 / (4.0 * packet.sigma * packet.sigma);
  const double mu = mass / (2.0 * hbar * dt);
  const cplx a(alpha0, -mu);
  const double big_x = x - packet.center;
  const double shifted_k = packet.wavenumber - 2.0 * mu * big_x;

  const cplx pref = std::pow(2.0 * std::numbers::pi * packet.sigma * packet.sigma, -0.25) *
                    std::polar(1.0, -std::numbers::pi / 4.0) * std::sqrt(cplx(mu, 0.0) / a);
  const cplx expo = cplx(0.0, mu * big_x * big_x) - shifted_k * shifted_k / (4.0 * a);
  return pref * std::exp(expo);
}

/// Analytic spread and centroid (for choosing axes in tests).
inline double gaussian_spread(const GaussianPacket& p, double dt, double mass, double hbar) {
  return p.spread_at(dt, mass, hbar);
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver for complex Hermitian matrices (row-major).
// Used as the positive-semidefiniteness oracle for density matrices.
// ---------------------------------------------------------------------------

inline std::vector<double> hermitian_eigenvalues(std::vector<cplx> a, std::size_t n) {
  auto off_norm = [&]() {
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) acc += std::norm(a[p * n + q]);
    }
    return std::sqrt(acc);
  };
  double scale = 0.0;
  for (const cplx& v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-14 * scale * static_cast<double>(n); ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const double phi = std::arg(apq);
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const cplx s_fwd = std::polar(s, -phi);   // multiplies column q into p
        const cplx s_bwd = std::polar(s, phi);    // multiplies column p into q

        // B = A U with U = [[c, -s e^{i phi}], [s e^{-i phi}, c]].
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a[k * n + p];
          const cplx akq = a[k * n + q];
          a[k * n + p] = c * akp + s_fwd * akq;
          a[k * n + q] = -s_bwd * akp + c * akq;
        }
        // A' = U^dagger B.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a[p * n + k];
          const cplx aqk = a[q * n + k];
          a[p * n + k] = c * apk + s_bwd * aqk;
          a[q * n + k] = -s_fwd * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a[i * n + i].real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

// ---------------------------------------------------------------------------
// Deterministic random matrices for sweeps.
// ---------------------------------------------------------------------------

inline Mat2 random_unitary(const CounterRng& rng, std::uint64_t stream) {
  const double theta = 0.5 * std::numbers::pi * rng.uniform(stream, 0);
  const double alpha = kTwoPi * rng.uniform(stream, 1);
  const double beta = kTwoPi * rng.uniform(stream, 2);
  const double gamma = kTwoPi * rng.uniform(stream, 3);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cplx global = std::polar(1.0, alpha);
  return Mat2{global * std::polar(c, beta), global * std::polar(s, gamma),
              global * (-std::polar(s, -gamma)), global * std::polar(c, -beta)};
}

inline Mat2 random_matrix(const CounterRng& rng, std::uint64_t stream) {
  auto entry = [&](std::uint64_t i) {
    return cplx(2.0 * rng.uniform(stream, 2 * i) - 1.0, 2.0 * rng.uniform(stream, 2 * i + 1) - 1.0);
  };
  return Mat2{entry(0), entry(1), entry(2), entry(3)};
}

// ---------------------------------------------------------------------------
// Standard fringe-producing entangled pair: flat-ish envelopes with opposite
// plane-wave tilts on side 1, particle-2 modes dialed to a given overlap.
// ---------------------------------------------------------------------------

struct FringePairParams {
  double x_half = 20.0;
  std::size_t n_points = 4096;
  double env_sigma = 30.0;
  double tilt = 1.5;
  cplx overlap{1.0, 0.0};
  cplx c1{std::numbers::sqrt2 / 2.0, 0.0};
  cplx c2{std::numbers::sqrt2 / 2.0, 0.0};
};

inline EntangledBranchPair make_fringe_pair(const FringePairParams& p = {}) {
  const GridAxis axis1(-p.x_half, p.x_half, p.n_points);
  const GridAxis axis2(-10.0, 10.0, 257);
  ModeFunction mode_1a = gaussian_mode(axis1, 0.0, p.env_sigma, +p.tilt, ModeLabel::p1_a);
  ModeFunction mode_1b = gaussian_mode(axis1, 0.0, p.env_sigma, -p.tilt, ModeLabel::p1_b);
  auto [mode_2d, mode_2c] =
      modes_with_overlap(axis2, p.overlap, 0.0, 1.0, ModeLabel::p2_d, ModeLabel::p2_c);
  return EntangledBranchPair(std::move(mode_1a), std::move(mode_2d), std::move(mode_1b),
                             std::move(mode_2c), p.c1, p.c2);
}

/// Two unit modes with hard-disjoint supports (left/right half axis), so
/// their grid scalar product is exactly +0.0.
inline std::pair<ModeFunction, ModeFunction> disjoint_support_modes(const GridAxis& axis,
                                                                    ModeLabel label_d,
                                                                    ModeLabel label_c) {
  std::vector<cplx> left(axis.size(), cplx(0.0, 0.0));
  std::vector<cplx> right(axis.size(), cplx(0.0, 0.0));
  const double quarter = 0.25 * (axis.x_max() - axis.x_min());
  const double mid = 0.5 * (axis.x_min() + axis.x_max());
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double x = axis.point(i);
    if (x < mid - 0.05 * quarter) {
      const double u = (x - (mid - 2.0 * quarter)) / (0.5 * quarter);
      left[i] = std::exp(-u * u);
    } else if (x > mid + 0.05 * quarter) {
      const double u = (x - (mid + 2.0 * quarter)) / (0.5 * quarter);
      right[i] = std::exp(-u * u);
    }
  }
  ModeFunction d = ModeFunction(axis, std::move(left), label_d).normalized();
  ModeFunction c = ModeFunction(axis, std::move(right), label_c).normalized();
  return {d, c};
}

}  // namespace fringelab::testing

#endif  // FRINGELAB_TESTS_HELPERS_HPP
