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

#include "doctest.h"
#include "fringelab/errors.hpp"
#include "fringelab/state.hpp"
#include "fringelab/timing.hpp"
#include "helpers.hpp"

using namespace fringelab;
using namespace fringelab::testing;

namespace {

DetectionPattern fringe_pattern(double overlap_mag, double phi, double env_sigma = 100.0,
                                std::size_t n_points = 2048) {
  FringePairParams params;
  params.overlap = cplx(overlap_mag, 0.0);
  params.env_sigma = env_sigma;
  params.n_points = n_points;
  return detection_pattern(make_fringe_pair(params), PhaseShift(phi), true);
}

ReadoutExperiment make_experiment(double overlap_mag, double confidence = 0.99,
                                  std::uint64_t seed = 7, std::uint64_t max_budget = 4096,
                                  std::uint64_t trials = ReadoutExperiment::kDefaultTrials) {
  return ReadoutExperiment(fringe_pattern(overlap_mag, 0.0),
                           fringe_pattern(overlap_mag, std::numbers::pi), confidence, seed,
                           max_budget, trials);
}

}  // namespace

TEST_CASE("threshold_tau: reference values and scaling") {
  // The headline estimate: L = 0.5 m, N = 7000 detected pairs.
  const double headline = threshold_tau(0.5, 7000, 3.0e8);
  CHECK(headline == doctest::Approx(2.38e-13).epsilon(2e-3));
  CHECK(headline > 1e-13);
  CHECK(headline < 1e-12);

  CHECK(threshold_tau(kLightSpeed, 1, kLightSpeed) == 1.0);
  CHECK(threshold_tau(0.5, 14000, 3.0e8) == threshold_tau(0.5, 7000, 3.0e8) / 2.0);

  CHECK_THROWS_AS((void)threshold_tau(-1.0, 10, 3.0e8), ValidationError);
  CHECK_THROWS_AS((void)threshold_tau(1.0, 0, 3.0e8), ValidationError);
  CHECK_THROWS_AS((void)threshold_tau(1.0, 10, 0.0), ValidationError);
}

TEST_CASE("evaluate: feasibility and margins") {
  // A 1 ms source is ~10 orders too slow for the 0.5 m / 7000-particle setup.
  const TimingReport slow = evaluate(TimingScenario(1e-3, 0.5, 7000, 3.0e8));
  CHECK_FALSE(slow.feasible);
  CHECK(slow.margin == doctest::Approx(4.2e9).epsilon(1e-2));

  const double threshold = threshold_tau(0.5, 7000, 3.0e8);
  const TimingReport boundary = evaluate(TimingScenario(threshold, 0.5, 7000, 3.0e8));
  CHECK_FALSE(boundary.feasible);  // strict inequality
  CHECK(boundary.margin == doctest::Approx(1.0));

  const TimingReport fast = evaluate(TimingScenario(threshold / 2.0, 0.5, 7000, 3.0e8));
  CHECK(fast.feasible);
  CHECK(fast.margin == 0.5);

  CHECK((fast.margin < 1.0) == fast.feasible);
  CHECK((boundary.margin < 1.0) == boundary.feasible);

  // margin compares the N-particle arrival window against the light time.
  const TimingScenario headline(1e-3, 0.5, 7000, 3.0e8);
  CHECK(evaluate(headline).margin ==
        doctest::Approx(headline.arrival_window() / (0.5 / 3.0e8)).epsilon(1e-12));
}

TEST_CASE("evaluate: scale invariance and monotonicity in tau") {
  const TimingScenario base(2e-13, 0.5, 7000);
  const TimingReport r1 = evaluate(base);
  const TimingReport r2 = evaluate(TimingScenario(2e-13, 2.0 * 0.5, 7000, 2.0 * kLightSpeed));
  CHECK(r1.feasible == r2.feasible);
  CHECK(r1.margin == doctest::Approx(r2.margin).epsilon(1e-14));

  // feasible(tau) implies feasible(tau') for tau' < tau.
  REQUIRE(r1.feasible);
  for (const double factor : {0.5, 0.1, 1e-3}) {
    CHECK(evaluate(TimingScenario(base.tau * factor, base.distance, base.budget)).feasible);
  }
}

TEST_CASE("ReadoutExperiment validates its inputs") {
  const DetectionPattern zero = fringe_pattern(1.0, 0.0);
  const DetectionPattern pi = fringe_pattern(1.0, std::numbers::pi);
  CHECK_THROWS_AS(ReadoutExperiment(zero, pi, 0.5, 1, 100), ValidationError);
  CHECK_THROWS_AS(ReadoutExperiment(zero, pi, 1.0, 1, 100), ValidationError);
  CHECK_THROWS_AS(ReadoutExperiment(zero, pi, 0.99, 1, 0), ValidationError);

  FringePairParams params;
  params.overlap = cplx(1.0, 0.0);
  params.env_sigma = 100.0;
  params.n_points = 2048;
  const DetectionPattern raw =
      detection_pattern(make_fringe_pair(params), PhaseShift(std::numbers::pi), false);
  CHECK_THROWS_AS(ReadoutExperiment(zero, raw, 0.99, 1, 100), PreconditionError);
}

TEST_CASE("simulate_readout: full-contrast patterns classify reliably") {
  const ReadoutExperiment experiment = make_experiment(1.0);
  std::uint64_t hits = 0;
  const std::uint64_t trials = 10000;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (simulate_readout(experiment, PhaseLetter::zero, 1000, t) == PhaseLetter::zero) ++hits;
    if (simulate_readout(experiment, PhaseLetter::pi, 1000, t) == PhaseLetter::pi) ++hits;
  }
  CHECK(static_cast<double>(hits) / (2.0 * trials) >= 0.999);
}

TEST_CASE("simulate_readout: identical patterns are unreadable") {
  CHECK_THROWS_AS((void)simulate_readout(make_experiment(0.0), PhaseLetter::zero, 100),
                  UnreadablePhaseError);
}

TEST_CASE("simulate_readout: swapping the alphabet labels swaps the decision") {
  const DetectionPattern zero = fringe_pattern(1.0, 0.0);
  const DetectionPattern pi = fringe_pattern(1.0, std::numbers::pi);
  const ReadoutExperiment forward(zero, pi, 0.99, 99, 4096);
  const ReadoutExperiment swapped(pi, zero, 0.99, 99, 4096);
  for (std::uint64_t t = 0; t < 50; ++t) {
    // The same seed draws the same positions from the same physical pattern;
    // relabeling must flip the reported letter.
    const PhaseLetter a = simulate_readout(forward, PhaseLetter::zero, 25, t);
    const PhaseLetter b = simulate_readout(swapped, PhaseLetter::pi, 25, t);
    CHECK(a != b);
  }
}

TEST_CASE("simulate_readout is deterministic") {
  const ReadoutExperiment experiment = make_experiment(0.6);
  for (std::uint64_t t = 0; t < 20; ++t) {
    CHECK(simulate_readout(experiment, PhaseLetter::zero, 17, t) ==
          simulate_readout(experiment, PhaseLetter::zero, 17, t));
  }
}

TEST_CASE("required_n: full visibility needs only a few particles") {
  const ReadoutSearchResult result = required_n_search(make_experiment(1.0));
  CHECK(result.required <= 20);
  // Regression pin from the oracle run of this deterministic protocol.
  CHECK(result.required == 7);
  for (const ReadoutSearchPoint& point : result.trace) {
    CHECK(point.accuracy_zero >= 0.0);
    CHECK(point.accuracy_zero <= 1.0);
  }

  // Determinism: identical experiment, identical search.
  const ReadoutSearchResult again = required_n_search(make_experiment(1.0));
  CHECK(again.required == result.required);
  REQUIRE(again.trace.size() == result.trace.size());
  for (std::size_t i = 0; i < again.trace.size(); ++i) {
    CHECK(again.trace[i].n == result.trace[i].n);
    CHECK(again.trace[i].accuracy_zero == result.trace[i].accuracy_zero);
    CHECK(again.trace[i].accuracy_pi == result.trace[i].accuracy_pi);
  }
}

TEST_CASE("required_n: tighter confidence cannot need fewer particles") {
  const std::uint64_t at_99 = required_n(make_experiment(0.5, 0.99));
  const std::uint64_t at_999 = required_n(make_experiment(0.5, 0.999));
  CHECK(at_999 >= at_99);
}

TEST_CASE("required_n: halving visibility strictly increases the budget") {
  const std::uint64_t full = required_n(make_experiment(1.0));
  const std::uint64_t half = required_n(make_experiment(0.5));
  CHECK(half > full);
}

TEST_CASE("required_n: budget exhaustion reports the best accuracy") {
  // Nearly invisible fringes cannot reach 99% with two particles.
  const ReadoutExperiment experiment = make_experiment(0.05, 0.99, 7, 2, 2000);
  CHECK_THROWS_AS((void)required_n_search(experiment), BudgetExceededError);
  try {
    (void)required_n_search(experiment);
  } catch (const BudgetExceededError& e) {
    CHECK(e.best_accuracy() > 0.0);
    CHECK(e.best_accuracy() < 0.99);
  }
}

TEST_CASE("readout accuracy approaches 1 for large budgets") {
  // 10^4 particles at visibility 0.5: the per-trial log-likelihood gap is
  // hundreds of nats, so every one of the 10^4 trials must classify right.
  const ReadoutExperiment experiment = make_experiment(0.5, 0.99, 11, 1 << 20, 10000);
  CHECK(readout_accuracy(experiment, PhaseLetter::zero, 10000) >= 0.9999);
  CHECK(readout_accuracy(experiment, PhaseLetter::pi, 10000) >= 0.9999);
}
