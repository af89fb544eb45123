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

#include <benchmark/benchmark.h>

#include <numbers>

#include "fringelab/kernels.hpp"
#include "fringelab/state.hpp"
#include "fringelab/timing.hpp"

namespace {

using namespace fringelab;

EntangledBranchPair bench_pair(std::size_t n_points) {
  const GridAxis axis1(-20.0, 20.0, n_points);
  const GridAxis axis2(-10.0, 10.0, 257);
  auto [d, c] = modes_with_overlap(axis2, cplx(0.8, 0.0), 0.0, 1.0, ModeLabel::p2_d,
                                   ModeLabel::p2_c);
  return EntangledBranchPair(gaussian_mode(axis1, 0.0, 30.0, 1.5, ModeLabel::p1_a), d,
                             gaussian_mode(axis1, 0.0, 30.0, -1.5, ModeLabel::p1_b), c);
}

void BM_detection_pattern(benchmark::State& state) {
  const EntangledBranchPair pair = bench_pair(static_cast<std::size_t>(state.range(0)));
  const PhaseShift shift(0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detection_pattern(pair, shift, true));
  }
}
BENCHMARK(BM_detection_pattern)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_reduced_density(benchmark::State& state) {
  const EntangledBranchPair pair = bench_pair(static_cast<std::size_t>(state.range(0)));
  const PhaseShift shift(0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_density(pair, shift));
  }
}
BENCHMARK(BM_reduced_density)->Arg(64)->Arg(128)->Arg(256);

void BM_propagate_slit(benchmark::State& state) {
  const GridAxis axis(-32.0, 32.0, static_cast<std::size_t>(state.range(0)));
  const GaussianPacket packet(0.0, 1.0, 0.0);
  const KernelParams params(1.0, 1.0, 0.0, 1.0, 2.0);
  const SlitGeometry slit(SlitProfile::hard, 0.9, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_slit(packet, axis, params, slit));
  }
}
BENCHMARK(BM_propagate_slit)->Arg(4096)->Arg(16384);

void BM_fringe_phase_shift(benchmark::State& state) {
  const EntangledBranchPair pair = bench_pair(4096);
  const DetectionPattern ref = detection_pattern(pair, PhaseShift(0.0), true);
  const DetectionPattern moved = detection_pattern(pair, PhaseShift(0.7), true);
  const Window window{-6.0, 6.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe_phase_shift(ref, moved, window));
  }
}
BENCHMARK(BM_fringe_phase_shift);

void BM_simulate_readout(benchmark::State& state) {
  const EntangledBranchPair pair = bench_pair(2048);
  const ReadoutExperiment experiment(detection_pattern(pair, PhaseShift(0.0), true),
                                     detection_pattern(pair, PhaseShift(std::numbers::pi), true),
                                     0.99, 7, 4096, 1000);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_readout(experiment, PhaseLetter::zero, static_cast<std::uint64_t>(state.range(0)),
                         trial++));
  }
}
BENCHMARK(BM_simulate_readout)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
