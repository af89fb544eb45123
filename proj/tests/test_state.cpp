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

#include <cmath>
#include <cstring>
#include <numbers>

#include "doctest.h"
#include "fringelab/errors.hpp"
#include "fringelab/state.hpp"
#include "helpers.hpp"

using namespace fringelab;
using namespace fringelab::testing;

namespace {

EntangledBranchPair pair_with_overlap(cplx target, double tilt = 1.5, double env_sigma = 30.0) {
  FringePairParams params;
  params.overlap = target;
  params.tilt = tilt;
  params.env_sigma = env_sigma;
  return make_fringe_pair(params);
}

}  // namespace

TEST_CASE("overlap: self-overlap of a unit mode is 1") {
  const GridAxis axis(-10.0, 10.0, 513);
  const ModeFunction f = gaussian_mode(axis, 0.3, 1.1, 0.8, ModeLabel::p2_d);
  const cplx v = overlap(f, f).value;
  CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-9);
}

TEST_CASE("overlap: disjoint supports give exactly zero") {
  const GridAxis axis(-10.0, 10.0, 512);
  auto [d, c] = disjoint_support_modes(axis, ModeLabel::p2_d, ModeLabel::p2_c);
  const cplx v = overlap(d, c).value;
  CHECK(std::abs(v) < 1e-12);
  CHECK(v.real() == 0.0);
  CHECK(v.imag() == 0.0);
}

TEST_CASE("overlap: real Gaussians at separation 2 give exp(-1/2)") {
  // Closed form for unit Gaussians of width sigma and separation d:
  // exp(-d^2 / (8 sigma^2)); cross-checked on a fine grid.
  const GridAxis axis(-16.0, 16.0, 8193);
  const ModeFunction f = gaussian_mode(axis, -1.0, 1.0, 0.0, ModeLabel::p2_d);
  const ModeFunction g = gaussian_mode(axis, +1.0, 1.0, 0.0, ModeLabel::p2_c);
  const cplx v = overlap(f, g).value;
  CHECK(v.real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
  CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("overlap: argument checks") {
  const GridAxis axis(-10.0, 10.0, 257);
  const GridAxis other(-10.0, 10.0, 258);
  const ModeFunction f = gaussian_mode(axis, 0.0, 1.0, 0.0, ModeLabel::p2_d);
  const ModeFunction g = gaussian_mode(other, 0.0, 1.0, 0.0, ModeLabel::p2_c);
  CHECK_THROWS_AS((void)overlap(f, g), AxisMismatchError);

  std::vector<cplx> half(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) half[i] = 0.5 * f[i];
  const ModeFunction weak(axis, half, ModeLabel::p2_c);
  CHECK_THROWS_WITH_AS((void)overlap(f, weak), doctest::Contains("2C"), PreconditionError);
}

TEST_CASE("overlap is conjugate-symmetric") {
  const GridAxis axis(-10.0, 10.0, 513);
  const ModeFunction f = gaussian_mode(axis, -0.4, 1.2, 0.9, ModeLabel::p2_d);
  const ModeFunction g = gaussian_mode(axis, 0.6, 0.9, -0.3, ModeLabel::p2_c);
  const cplx fg = overlap(f, g).value;
  const cplx gf = overlap(g, f).value;
  CHECK(std::abs(fg - std::conj(gf)) < 1e-15);
}

TEST_CASE("apply_phase: identity, periodicity, norm, and overlap rotation") {
  const GridAxis axis(-10.0, 10.0, 513);
  const ModeFunction mode = gaussian_mode(axis, 0.0, 1.0, 1.0, ModeLabel::p2_c);

  const ModeFunction same = apply_phase(mode, PhaseShift(0.0));
  for (std::size_t i = 0; i < mode.size(); ++i) CHECK(same[i] == mode[i]);

  const ModeFunction wrapped = apply_phase(mode, PhaseShift(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < mode.size(); ++i) CHECK(std::abs(wrapped[i] - mode[i]) < 1e-12);

  const ModeFunction rotated = apply_phase(mode, PhaseShift(0.37));
  CHECK(std::abs(rotated.norm_squared() - mode.norm_squared()) < 1e-12);

  // arg(I) drops by phi when the shift is applied to psi_2C.
  const ModeFunction ref = gaussian_mode(axis, 0.2, 1.1, 0.5, ModeLabel::p2_d);
  const cplx before = overlap(ref, mode).value;
  const cplx after = overlap(ref, apply_phase(mode, PhaseShift(std::numbers::pi / 2.0))).value;
  CHECK(circular_distance(std::arg(after), std::arg(before) - std::numbers::pi / 2.0) < 1e-9);
  CHECK(std::abs(after - before * std::polar(1.0, -std::numbers::pi / 2.0)) < 1e-12);

  CHECK_THROWS_AS(PhaseShift(std::nan("")), ValidationError);
  CHECK(PhaseShift(-1.0).canonical() == doctest::Approx(2.0 * std::numbers::pi - 1.0));
}

TEST_CASE("state_norm: orthogonal branches give 1") {
  // I = 0 side.
  const EntangledBranchPair zero_i = pair_with_overlap(cplx(0.0, 0.0));
  CHECK(state_norm(zero_i) == doctest::Approx(1.0).epsilon(1e-9));

  // J = 0 side: opposite tilts with a wide envelope make psi_1A and psi_1B
  // nearly orthogonal, but force it exactly with disjoint supports.
  const GridAxis axis1(-20.0, 20.0, 1024);
  auto [a, b] = disjoint_support_modes(axis1, ModeLabel::p1_a, ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 257);
  auto [d, c] = modes_with_overlap(axis2, cplx(0.9, 0.0), 0.0, 1.0, ModeLabel::p2_d,
                                   ModeLabel::p2_c);
  const EntangledBranchPair zero_j(a, d, b, c);
  CHECK(state_norm(zero_j) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("state_norm: real overlaps g on both sides give sqrt(1+g^2)") {
  const double g = 0.6;
  const GridAxis axis1(-14.0, 14.0, 192);
  auto [a, b] = modes_with_overlap(axis1, cplx(g, 0.0), 0.0, 1.2, ModeLabel::p1_a,
                                   ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 128);
  auto [d, c] = modes_with_overlap(axis2, cplx(g, 0.0), 0.0, 1.0, ModeLabel::p2_d,
                                   ModeLabel::p2_c);
  // J = integral(psi_1A conj(psi_1B)): modes_with_overlap returns (d, c) with
  // integral(d conj(c)) = g, so label assignment maps J = I = g.
  const EntangledBranchPair pair(a, d, b, c);
  CHECK(state_norm(pair) == doctest::Approx(std::sqrt(1.0 + g * g)).epsilon(1e-12));

  // Brute-force cross-check: integrate |psi(x1, x2)|^2 over the 2-D grid.
  const TwoParticleGrid grid = brute_force_state(pair, 0.0);
  CHECK(std::sqrt(grid.norm_squared) == doctest::Approx(state_norm(pair)).epsilon(1e-10));
}

TEST_CASE("detection_pattern: I = 0 removes the interference term") {
  const GridAxis axis1(-20.0, 20.0, 512);
  const ModeFunction a = gaussian_mode(axis1, 0.0, 30.0, +1.5, ModeLabel::p1_a);
  const ModeFunction b = gaussian_mode(axis1, 0.0, 30.0, -1.5, ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 256);
  auto [d, c] = disjoint_support_modes(axis2, ModeLabel::p2_d, ModeLabel::p2_c);
  const EntangledBranchPair pair(a, d, b, c);

  const DetectionPattern pattern = detection_pattern(pair, PhaseShift(0.4), false);
  const double w1 = std::norm(pair.c1());
  const double w2 = std::norm(pair.c2());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    CHECK(pattern[i] == w1 * std::norm(a[i]) + w2 * std::norm(b[i]));
  }
}

TEST_CASE("detection_pattern: phi = pi negates the interference term") {
  const EntangledBranchPair pair = pair_with_overlap(cplx(0.8, 0.0));
  const DetectionPattern at_zero = detection_pattern(pair, PhaseShift(0.0), false);
  const DetectionPattern at_pi = detection_pattern(pair, PhaseShift(std::numbers::pi), false);

  const auto& a = pair.mode_1a();
  const auto& b = pair.mode_1b();
  for (std::size_t i = 0; i < at_zero.size(); ++i) {
    const double base = 0.5 * std::norm(a[i]) + 0.5 * std::norm(b[i]);
    CHECK(at_zero[i] + at_pi[i] == doctest::Approx(2.0 * base).epsilon(1e-12));
  }
}

TEST_CASE("detection_pattern: phase covariance") {
  const EntangledBranchPair pair = pair_with_overlap(cplx(0.55, 0.35));
  const double phi = 1.234;
  const DetectionPattern shifted = detection_pattern(pair, PhaseShift(phi), true);

  const EntangledBranchPair moved(pair.mode_1a(), pair.mode_2d(), pair.mode_1b(),
                                  apply_phase(pair.mode_2c(), PhaseShift(phi)));
  const DetectionPattern absorbed = detection_pattern(moved, PhaseShift(0.0), true);
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    CHECK(shifted[i] == doctest::Approx(absorbed[i]).epsilon(1e-12));
  }
}

TEST_CASE("detection_pattern: exact zero overlap is phi-independent bitwise") {
  const GridAxis axis1(-20.0, 20.0, 512);
  const ModeFunction a = gaussian_mode(axis1, 0.0, 30.0, +1.5, ModeLabel::p1_a);
  const ModeFunction b = gaussian_mode(axis1, 0.0, 30.0, -1.5, ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 256);
  auto [d, c] = disjoint_support_modes(axis2, ModeLabel::p2_d, ModeLabel::p2_c);
  const EntangledBranchPair pair(a, d, b, c);
  REQUIRE(pair.overlap_i().value == cplx(0.0, 0.0));

  const DetectionPattern base = detection_pattern(pair, PhaseShift(0.0), true);
  for (const double phi : {0.3, 1.7, 3.9, -2.2}) {
    const DetectionPattern other = detection_pattern(pair, PhaseShift(phi), true);
    CHECK(std::memcmp(base.density().data(), other.density().data(),
                      base.size() * sizeof(double)) == 0);
  }
}

TEST_CASE("detection_pattern: normalized pattern integrates to 1") {
  for (const double phi : {0.0, 0.9, 2.5}) {
    const EntangledBranchPair pair = pair_with_overlap(cplx(0.7, 0.1));
    const DetectionPattern pattern = detection_pattern(pair, PhaseShift(phi), true);
    std::vector<double> density(pattern.density().begin(), pattern.density().end());
    CHECK(trapezoid(pattern.axis(), density) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("detection_pattern matches the brute-force 2-D marginal") {
  // Randomized pairs on a 128 x 128 grid against direct quadrature of
  // integral |psi(x1, x2)|^2 dx2.
  const CounterRng rng(2024);
  for (std::uint64_t rep = 0; rep < 3; ++rep) {
    const GridAxis axis1(-15.0, 15.0, 128);
    const GridAxis axis2(-11.0, 11.0, 128);

    auto random_mode = [&](const GridAxis& axis, std::uint64_t stream, ModeLabel label) {
      std::vector<cplx> samples(axis.size(), cplx(0.0, 0.0));
      for (int comp = 0; comp < 3; ++comp) {
        const double center = 6.0 * rng.uniform(stream, 10 * rep + 3 * comp) - 3.0;
        const double sigma = 0.8 + 2.0 * rng.uniform(stream, 10 * rep + 3 * comp + 1);
        const double k = 4.0 * rng.uniform(stream, 10 * rep + 3 * comp + 2) - 2.0;
        const ModeFunction g = gaussian_mode(axis, center, sigma, k, label);
        for (std::size_t i = 0; i < axis.size(); ++i) samples[i] += g[i];
      }
      return ModeFunction(axis, samples, label).normalized();
    };

    const double mix = rng.uniform(77, rep);
    const cplx c1(std::sqrt(mix), 0.0);
    const cplx c2 = std::polar(std::sqrt(1.0 - mix), kTwoPi * rng.uniform(78, rep));
    const EntangledBranchPair pair(random_mode(axis1, 1, ModeLabel::p1_a),
                                   random_mode(axis2, 2, ModeLabel::p2_d),
                                   random_mode(axis1, 3, ModeLabel::p1_b),
                                   random_mode(axis2, 4, ModeLabel::p2_c), c1, c2);
    const double phi = kTwoPi * rng.uniform(79, rep);

    const DetectionPattern pattern = detection_pattern(pair, PhaseShift(phi), true);
    const std::vector<double> oracle = brute_force_marginal(pair, phi);
    double sup = 0.0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      sup = std::max(sup, std::abs(pattern[i] - oracle[i]));
    }
    CHECK(sup < 1e-6);
  }
}

TEST_CASE("reduced_density: product state is the rank-1 projector") {
  const GridAxis axis1(-15.0, 15.0, 96);
  const ModeFunction a = gaussian_mode(axis1, 0.0, 1.5, 1.0, ModeLabel::p1_a);
  const ModeFunction b = gaussian_mode(axis1, 1.0, 1.5, -1.0, ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 64);
  auto [d, c] = modes_with_overlap(axis2, cplx(0.5, 0.0), 0.0, 1.0, ModeLabel::p2_d,
                                   ModeLabel::p2_c);
  const EntangledBranchPair pair(a, d, b, c, cplx(1.0, 0.0), cplx(0.0, 0.0));

  const DensityMatrix rho = reduced_density(pair, PhaseShift(0.0));
  for (std::size_t r = 0; r < rho.size(); ++r) {
    for (std::size_t col = 0; col < rho.size(); ++col) {
      CHECK(std::abs(rho(r, col) - a[r] * std::conj(a[col])) < 1e-12);
    }
  }
}

TEST_CASE("reduced_density: I = 0 gives eigenvalues |c1|^2 and |c2|^2") {
  const GridAxis axis1(-20.0, 20.0, 96);
  auto [a, b] = disjoint_support_modes(axis1, ModeLabel::p1_a, ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 64);
  auto [d, c] = disjoint_support_modes(axis2, ModeLabel::p2_d, ModeLabel::p2_c);
  const cplx c1(0.8, 0.0);
  const cplx c2(0.0, 0.6);
  const EntangledBranchPair pair(a, d, b, c, c1, c2);

  const DensityMatrix rho = reduced_density(pair, PhaseShift(0.0));
  // Eigenvalues of the dx-weighted operator: symmetrize with sqrt weights.
  const std::size_t n = rho.size();
  const std::vector<double> w = quad_weights(rho.axis());
  std::vector<cplx> weighted(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      weighted[r * n + col] = std::sqrt(w[r]) * rho(r, col) * std::sqrt(w[col]);
    }
  }
  const std::vector<double> eigs = hermitian_eigenvalues(weighted, n);
  CHECK(eigs[n - 1] == doctest::Approx(0.64).epsilon(1e-9));
  CHECK(eigs[n - 2] == doctest::Approx(0.36).epsilon(1e-9));
  for (std::size_t i = 0; i + 2 < n; ++i) CHECK(std::abs(eigs[i]) < 1e-10);
}

TEST_CASE("reduced_density: hermitian, unit trace, PSD, diagonal = pattern") {
  FringePairParams params;
  params.n_points = 96;
  params.overlap = cplx(0.45, 0.45);
  const EntangledBranchPair pair = make_fringe_pair(params);
  const PhaseShift shift(0.8);
  const DensityMatrix rho = reduced_density(pair, shift);
  const std::size_t n = rho.size();

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      CHECK(std::abs(rho(r, c) - std::conj(rho(c, r))) < 1e-12);
    }
  }

  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-6));

  const DetectionPattern pattern = detection_pattern(pair, shift, true);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(rho(i, i).real() - pattern[i]) < 1e-12);
    CHECK(std::abs(rho(i, i).imag()) < 1e-15);
  }

  const std::vector<double> w = quad_weights(rho.axis());
  std::vector<cplx> weighted(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      weighted[r * n + c] = std::sqrt(w[r]) * rho(r, c) * std::sqrt(w[c]);
    }
  }
  const std::vector<double> eigs = hermitian_eigenvalues(weighted, n);
  CHECK(eigs.front() > -1e-8);
}

TEST_CASE("reduced_density matches the brute-force partial trace") {
  FringePairParams params;
  params.n_points = 96;
  params.overlap = cplx(0.6, -0.2);
  params.c1 = cplx(0.6, 0.0);
  params.c2 = cplx(0.0, 0.8);
  const EntangledBranchPair pair = make_fringe_pair(params);
  const double phi = 1.1;

  const DensityMatrix rho = reduced_density(pair, PhaseShift(phi));
  const std::vector<cplx> oracle = brute_force_partial_trace(pair, phi);
  double sup = 0.0;
  const std::size_t n = rho.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      sup = std::max(sup, std::abs(rho(r, c) - oracle[r * n + c]));
    }
  }
  CHECK(sup < 1e-6);
}

TEST_CASE("visibility: flat envelopes give the overlap magnitude") {
  // A wide envelope keeps the residual envelope contrast well below the
  // fringe contrast being measured.
  const Window window{-3.0, 3.0};
  const double flat = 100.0;

  const DetectionPattern full =
      detection_pattern(pair_with_overlap(cplx(1.0, 0.0), 1.5, flat), PhaseShift(0.0), true);
  CHECK(visibility(full, window) == doctest::Approx(1.0).epsilon(1e-3));

  const DetectionPattern half =
      detection_pattern(pair_with_overlap(cplx(0.5, 0.0), 1.5, flat), PhaseShift(0.0), true);
  CHECK(visibility(half, window) == doctest::Approx(0.5).epsilon(1e-2));

  const DetectionPattern none =
      detection_pattern(pair_with_overlap(cplx(0.0, 0.0), 1.5, flat), PhaseShift(0.0), true);
  CHECK(visibility(none, window) < 1e-3);
}

TEST_CASE("visibility: dark window is an error") {
  const GridAxis axis(-10.0, 10.0, 512);
  std::vector<double> density(axis.size(), 0.0);
  density[10] = 1.0;  // light far outside the window
  const DetectionPattern pattern(axis, density, false);
  CHECK_THROWS_AS((void)visibility(pattern, Window{5.0, 9.0}), UndefinedVisibilityError);
  CHECK_THROWS_AS((void)visibility(pattern, Window{9.0, 5.0}), ValidationError);
}

TEST_CASE("fringe_phase_shift: zero, fractional, and full-turn shifts") {
  const EntangledBranchPair pair = pair_with_overlap(cplx(0.9, 0.0));
  const Window window{-6.0, 6.0};
  const DetectionPattern ref = detection_pattern(pair, PhaseShift(0.0), true);

  CHECK(fringe_phase_shift(ref, ref, window) == doctest::Approx(0.0));

  const DetectionPattern at_07 = detection_pattern(pair, PhaseShift(0.7), true);
  CHECK(fringe_phase_shift(ref, at_07, window) == doctest::Approx(0.7).epsilon(1e-3));

  const DetectionPattern at_2pi = detection_pattern(pair, PhaseShift(kTwoPi), true);
  CHECK(circular_distance(fringe_phase_shift(ref, at_2pi, window), 0.0) < 1e-6);

  const DetectionPattern at_pi = detection_pattern(pair, PhaseShift(std::numbers::pi), true);
  CHECK(fringe_phase_shift(ref, at_pi, window) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-3));
}

TEST_CASE("fringe_phase_shift: unreadable below the visibility floor") {
  const EntangledBranchPair pair = pair_with_overlap(cplx(1e-4, 0.0), 1.5, 100.0);
  const Window window{-3.0, 3.0};
  const DetectionPattern ref = detection_pattern(pair, PhaseShift(0.0), true);
  const DetectionPattern moved = detection_pattern(pair, PhaseShift(0.5), true);
  CHECK_THROWS_AS((void)fringe_phase_shift(ref, moved, window), UnrecoverablePhaseError);
}

TEST_CASE("EntangledBranchPair rejects invalid construction") {
  const GridAxis axis1(-20.0, 20.0, 256);
  const ModeFunction a = gaussian_mode(axis1, 0.0, 30.0, 1.5, ModeLabel::p1_a);
  const ModeFunction b = gaussian_mode(axis1, 0.0, 30.0, -1.5, ModeLabel::p1_b);
  const GridAxis axis2(-10.0, 10.0, 128);
  auto [d, c] = modes_with_overlap(axis2, cplx(0.5, 0.0), 0.0, 1.0, ModeLabel::p2_d,
                                   ModeLabel::p2_c);

  CHECK_THROWS_AS(EntangledBranchPair(a, d, b, c, cplx(1.0, 0.0), cplx(1.0, 0.0)),
                  ValidationError);

  const GridAxis other(-20.0, 20.0, 255);
  const ModeFunction b_other = gaussian_mode(other, 0.0, 30.0, -1.5, ModeLabel::p1_b);
  CHECK_THROWS_AS(EntangledBranchPair(a, d, b_other, c), AxisMismatchError);

  // Fully destructive cross term: both overlaps 1, coefficients opposite.
  auto [d1, c1m] = modes_with_overlap(axis2, cplx(1.0, 0.0), 0.0, 1.0, ModeLabel::p2_d,
                                      ModeLabel::p2_c);
  const ModeFunction a1 = gaussian_mode(axis1, 0.0, 2.0, 0.0, ModeLabel::p1_a);
  const ModeFunction b1 = a1.relabeled(ModeLabel::p1_b);
  const cplx amp = EntangledBranchPair::kHalfAmp;
  CHECK_THROWS_AS(EntangledBranchPair(a1, d1, b1, c1m, amp, -amp), DegenerateStateError);
}
