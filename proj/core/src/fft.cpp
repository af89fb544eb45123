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

#include "fringelab/fft.hpp"

#include <cmath>
#include <numbers>

namespace fringelab::fft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse
// (inverse left unnormalized).
void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Bluestein: length-n DFT as a length-m (power of two) convolution with a
// quadratic chirp. The chirp exponent uses j*j mod 2n to keep the angle
// argument small for large n.
std::vector<cplx> dft_bluestein(const std::vector<cplx>& in, int sign) {
  const std::size_t n = in.size();
  const std::size_t m = next_pow2(2 * n - 1);

  std::vector<cplx> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t q = (j * j) % (2 * n);
    const double ang = sign * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
    chirp[j] = cplx(std::cos(ang), std::sin(ang));
  }

  std::vector<cplx> a(m, cplx(0.0, 0.0));
  std::vector<cplx> b(m, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) a[j] = in[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);
  const double inv_m = 1.0 / static_cast<double>(m);

  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = a[j] * inv_m * chirp[j];
  return out;
}

std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
  if (is_pow2(in.size())) {
    std::vector<cplx> a = in;
    fft_pow2(a, sign);
    return a;
  }
  return dft_bluestein(in, sign);
}

}  // namespace

std::vector<cplx> forward(const std::vector<cplx>& in) { return dft(in, -1); }

std::vector<cplx> inverse(const std::vector<cplx>& in) {
  std::vector<cplx> out = dft(in, +1);
  const double inv_n = 1.0 / static_cast<double>(in.size());
  for (cplx& v : out) v *= inv_n;
  return out;
}

double bin_frequency(std::size_t k, std::size_t n, double dx) {
  const double f = (k <= n / 2) ? static_cast<double>(k)
                                : static_cast<double>(k) - static_cast<double>(n);
  return kTwoPi * f / (static_cast<double>(n) * dx);
}

}  // namespace fringelab::fft
