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

#include "fringelab/qubit.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fringelab/errors.hpp"

namespace fringelab {

namespace {

constexpr double kUnitaryTol = 1e-12;
constexpr double kHermitianTol = 1e-12;

void require_finite(const Mat2& m, const char* who) {
  for (const cplx& v : {m.m00, m.m01, m.m10, m.m11}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError(std::string(who) + ": non-finite matrix entry");
    }
  }
}

}  // namespace

Mat2 Mat2::identity() { return Mat2{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)}; }

Mat2 Mat2::adjoint() const {
  return Mat2{std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  return Mat2{m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
              m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
}

double Mat2::unitarity_defect() const {
  const Mat2 g = adjoint() * (*this);
  double worst = 0.0;
  worst = std::max(worst, std::abs(g.m00 - cplx(1.0, 0.0)));
  worst = std::max(worst, std::abs(g.m11 - cplx(1.0, 0.0)));
  worst = std::max(worst, std::abs(g.m01));
  worst = std::max(worst, std::abs(g.m10));
  return worst;
}

EvolutionMap2::EvolutionMap2(Mat2 matrix, EvolutionSide side) : matrix_(matrix), side_(side) {
  require_finite(matrix_, "EvolutionMap2");
  if (side_ == EvolutionSide::side1 && matrix_.unitarity_defect() > kUnitaryTol) {
    throw PreconditionError("EvolutionMap2: side-1 evolution must be unitary (defect " +
                            std::to_string(matrix_.unitarity_defect()) + ")");
  }
}

GramMatrix::GramMatrix(Mat2 entries) : entries_(entries) {
  require_finite(entries_, "GramMatrix");
  const double scale = std::max({1.0, std::abs(entries_.m00), std::abs(entries_.m01),
                                 std::abs(entries_.m10), std::abs(entries_.m11)});
  if (std::abs(entries_.m01 - std::conj(entries_.m10)) > kHermitianTol * scale ||
      std::abs(entries_.m00.imag()) > kHermitianTol * scale ||
      std::abs(entries_.m11.imag()) > kHermitianTol * scale) {
    throw ValidationError("GramMatrix: entries are not Hermitian");
  }
  const double a = entries_.m00.real();
  const double d = entries_.m11.real();
  const double det = a * d - std::norm(entries_.m01);
  if (a < -kHermitianTol * scale || d < -kHermitianTol * scale ||
      det < -kHermitianTol * scale * scale) {
    throw ValidationError("GramMatrix: entries are not positive semidefinite");
  }
}

GramMatrix GramMatrix::identity() { return GramMatrix(Mat2::identity()); }

Mat2 GramMatrix::principal_sqrt() const {
  // For 2x2 Hermitian PSD G: sqrt(G) = (G + s 1) / t with s = sqrt(det G),
  // t = sqrt(tr G + 2 s). Follows from Cayley-Hamilton.
  const double s = std::sqrt(std::max(0.0, entries_.det().real()));
  const double t = std::sqrt(std::max(0.0, entries_.trace().real() + 2.0 * s));
  if (t == 0.0) {
    return Mat2{};  // G = 0
  }
  const double inv = 1.0 / t;
  return Mat2{(entries_.m00 + s) * inv, entries_.m01 * inv, entries_.m10 * inv,
              (entries_.m11 + s) * inv};
}

GramMatrix gram(const EvolutionMap2& u2) {
  if (u2.side() != EvolutionSide::side2) {
    throw PreconditionError("gram: expected a side-2 evolution map");
  }
  return GramMatrix(u2.matrix().adjoint() * u2.matrix());
}

MarginalProbs marginal_probs_closed(const GramMatrix& g) {
  return MarginalProbs{0.5 * (std::norm(g.pm()) + std::norm(g.mm())),
                       0.5 * (std::norm(g.pp()) + std::norm(g.mp()))};
}

MarginalProbs marginal_probs_oracle(const EvolutionMap2& u1, const EvolutionMap2& u2) {
  if (u1.matrix().unitarity_defect() > kUnitaryTol) {
    throw PreconditionError("marginal_probs_oracle: u1 must be unitary (defect " +
                            std::to_string(u1.matrix().unitarity_defect()) + ")");
  }

  // Basis order: |1+ 2+>, |1+ 2->, |1- 2+>, |1- 2->.
  const Mat2& a = u1.matrix();
  const Mat2& b = u2.matrix();
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  const std::array<cplx, 4> initial = {cplx(0.0, 0.0), cplx(kInvSqrt2, 0.0),
                                       cplx(kInvSqrt2, 0.0), cplx(0.0, 0.0)};

  // state = (u1 (x) u2) initial.
  std::array<cplx, 4> state{};
  const std::array<std::array<cplx, 2>, 2> a_m = {{{a.m00, a.m01}, {a.m10, a.m11}}};
  const std::array<std::array<cplx, 2>, 2> b_m = {{{b.m00, b.m01}, {b.m10, b.m11}}};
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int r2 = 0; r2 < 2; ++r2) {
      cplx acc(0.0, 0.0);
      for (int c1 = 0; c1 < 2; ++c1) {
        for (int c2 = 0; c2 < 2; ++c2) {
          acc += a_m[r1][c1] * b_m[r2][c2] * initial[2 * c1 + c2];
        }
      }
      state[2 * r1 + r2] = acc;
    }
  }

  // Evolved one-particle states u1|s>, u2|r> for s, r in {+, -}.
  const std::array<std::array<cplx, 2>, 2> side1 = {{{a.m00, a.m10}, {a.m01, a.m11}}};
  const std::array<std::array<cplx, 2>, 2> side2 = {{{b.m00, b.m10}, {b.m01, b.m11}}};

  MarginalProbs probs{};
  for (int s = 0; s < 2; ++s) {
    double total = 0.0;
    for (int r = 0; r < 2; ++r) {
      cplx amp(0.0, 0.0);
      for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 2; ++i2) {
          amp += std::conj(side1[s][i1] * side2[r][i2]) * state[2 * i1 + i2];
        }
      }
      total += std::norm(amp);
    }
    if (s == 0) {
      probs.p_plus = total;
    } else {
      probs.p_minus = total;
    }
  }
  return probs;
}

TimeSwitch::TimeSwitch(double switch_time, cplx perturb_pp, cplx perturb_pm, cplx perturb_mp,
                       cplx perturb_mm)
    : switch_time_(switch_time),
      gram_after_(Mat2{cplx(1.0, 0.0) + perturb_pp, perturb_pm, perturb_mp,
                       cplx(1.0, 0.0) + perturb_mm}) {
  if (!std::isfinite(switch_time)) {
    throw ValidationError("TimeSwitch: switch time must be finite");
  }
}

MarginalProbs probs_vs_time(const TimeSwitch& sw, double t) {
  if (!std::isfinite(t)) {
    throw ValidationError("probs_vs_time: t must be finite");
  }
  if (t < sw.switch_time()) {
    return MarginalProbs{0.5, 0.5};
  }
  return marginal_probs_closed(sw.gram_after());
}

double signaling_deviation(const GramMatrix& g) {
  const MarginalProbs p = marginal_probs_closed(g);
  return std::max(std::abs(2.0 * p.p_plus - 1.0), std::abs(2.0 * p.p_minus - 1.0));
}

}  // namespace fringelab
