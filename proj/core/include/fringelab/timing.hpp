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

#ifndef FRINGELAB_TIMING_HPP
#define FRINGELAB_TIMING_HPP

#include <cstdint>
#include <vector>

#include "fringelab/state.hpp"

namespace fringelab {

constexpr double kLightSpeed = 299792458.0;  // m/s

/// Source and detection geometry of a fringe-readout signaling attempt:
/// a pair source with mean emission interval tau, distance L between the
/// phase element and the far detector, and a budget of N detected particles.
struct TimingScenario {
  double tau = 0.0;          // mean emission interval [s]
  double distance = 0.0;     // separation L [m]
  std::uint64_t budget = 1;  // detected-particle count N
  double light_speed = kLightSpeed;

  TimingScenario() = default;
  TimingScenario(double tau, double distance, std::uint64_t budget,
                 double light_speed = kLightSpeed);

  /// First-to-last arrival delay of the N detected particles under the
  /// mean-interval emission model: N * tau.
  double arrival_window() const { return static_cast<double>(budget) * tau; }
};

struct TimingReport {
  double threshold = 0.0;  // L/(N c) [s]
  bool feasible = false;   // tau < threshold
  double margin = 0.0;     // tau N c / L; feasible iff margin < 1
};

/// The emission-interval bound L/(N c): reading N fringe samples beats a
/// light signal over L only if the source emits faster than this.
double threshold_tau(double distance, std::uint64_t budget, double light_speed = kLightSpeed);

TimingReport evaluate(const TimingScenario& scenario);

/// The binary phase alphabet encoded in the fringe patterns.
enum class PhaseLetter { zero, pi };

const char* to_string(PhaseLetter letter);

/// A fringe-readout experiment: the two normalized detection patterns the
/// sender can choose between, the required classification confidence, the
/// randomness seed and the particle-budget cap for the search.
class ReadoutExperiment {
 public:
  ReadoutExperiment(DetectionPattern pattern_zero, DetectionPattern pattern_pi, double confidence,
                    std::uint64_t seed, std::uint64_t max_budget,
                    std::uint64_t trials = kDefaultTrials);

  static constexpr std::uint64_t kDefaultTrials = 10000;

  const DetectionPattern& pattern(PhaseLetter letter) const {
    return letter == PhaseLetter::zero ? pattern_zero_ : pattern_pi_;
  }
  double confidence() const { return confidence_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t max_budget() const { return max_budget_; }
  std::uint64_t trials() const { return trials_; }

 private:
  DetectionPattern pattern_zero_;
  DetectionPattern pattern_pi_;
  double confidence_;
  std::uint64_t seed_;
  std::uint64_t max_budget_;
  std::uint64_t trials_;
};

/// One simulated readout: draw n detector positions from the true pattern
/// by inverse-CDF sampling (counter-based randomness, reproducible per
/// (seed, trial, draw)), then return the letter with the larger summed
/// log-density. Throws UnreadablePhaseError if the patterns are
/// indistinguishable.
PhaseLetter simulate_readout(const ReadoutExperiment& experiment, PhaseLetter truth,
                             std::uint64_t n, std::uint64_t trial = 0);

/// Fraction of trials classified correctly when the truth is `truth`.
double readout_accuracy(const ReadoutExperiment& experiment, PhaseLetter truth, std::uint64_t n);

struct ReadoutSearchPoint {
  std::uint64_t n = 0;
  double accuracy_zero = 0.0;
  double accuracy_pi = 0.0;
};

struct ReadoutSearchResult {
  std::uint64_t required = 0;
  std::vector<ReadoutSearchPoint> trace;  // every (n, accuracies) probed
};

/// Smallest n <= max_budget whose accuracy reaches the confidence for both
/// letters, found by doubling then bisection. Deterministic given the seed.
/// Throws BudgetExceededError (carrying the best accuracy) if the cap is hit.
ReadoutSearchResult required_n_search(const ReadoutExperiment& experiment);

std::uint64_t required_n(const ReadoutExperiment& experiment);

}  // namespace fringelab

#endif  // FRINGELAB_TIMING_HPP
