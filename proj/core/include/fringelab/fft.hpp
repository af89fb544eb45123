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

#ifndef FRINGELAB_FFT_HPP
#define FRINGELAB_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace fringelab::fft {

using cplx = std::complex<double>;

/// Forward DFT: out[k] = sum_j in[j] exp(-2*pi*i*j*k/n). Any length n >= 1;
/// power-of-two lengths run radix-2, the rest go through Bluestein.
std::vector<cplx> forward(const std::vector<cplx>& in);

/// Inverse DFT, normalized so inverse(forward(x)) == x.
std::vector<cplx> inverse(const std::vector<cplx>& in);

/// DFT frequency in physical units for bin k of an n-point grid with
/// spacing dx: 2*pi*f/(n*dx) with f = k for k <= n/2 and f = k - n above.
double bin_frequency(std::size_t k, std::size_t n, double dx);

}  // namespace fringelab::fft

#endif  // FRINGELAB_FFT_HPP
