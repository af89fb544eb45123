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

#ifndef FRINGELAB_RNG_HPP
#define FRINGELAB_RNG_HPP

#include <cstdint>

namespace fringelab {

// Counter-based deterministic randomness. Every draw is a pure function of
// (seed, stream, index), so parallel consumers and re-runs see identical
// values regardless of evaluation order.

/// 64-bit finalizer (splitmix64).
std::uint64_t mix64(std::uint64_t z);

/// Stateless counter-based generator keyed by a 64-bit seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Raw 64-bit word for (stream, index).
  std::uint64_t word(std::uint64_t stream, std::uint64_t index) const;

  /// Uniform double in [0, 1) for (stream, index).
  double uniform(std::uint64_t stream, std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

}  // namespace fringelab

#endif  // FRINGELAB_RNG_HPP
