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

#include "fringelab/rng.hpp"

namespace fringelab {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::word(std::uint64_t stream, std::uint64_t index) const {
  // Three mixing rounds; each input enters through a bijective stage so
  // distinct (seed, stream, index) triples map to distinct chains.
  std::uint64_t h = mix64(seed_);
  h = mix64(h ^ mix64(stream));
  h = mix64(h ^ mix64(index));
  return h;
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t index) const {
  // 53 top bits -> [0, 1).
  return static_cast<double>(word(stream, index) >> 11) * 0x1.0p-53;
}

}  // namespace fringelab
