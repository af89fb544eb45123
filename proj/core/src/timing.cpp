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

#include "fringelab/timing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fringelab/errors.hpp"
#include "fringelab/rng.hpp"

namespace fringelab {

namespace {

// Densities are floored here before taking logs so empty fringe minima do
// not produce -inf sums.
constexpr double kDensityFloor = 1e-300;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("timing: ") + name + " must be positive and finite");
  }
}

}  // namespace

TimingScenario::TimingScenario(double tau, double distance, std::uint64_t budget,
                               double light_speed)
    : tau(tau), distance(distance), budget(budget), light_speed(light_speed) {
  require_positive(tau, "tau");
  require_positive(distance, "distance");
  require_positive(light_speed, "light speed");
  if (budget < 1) {
    throw ValidationError("timing: particle budget must be at least 1");
  }
}

double threshold_tau(double distance, std::uint64_t budget, double light_speed) {
  require_positive(distance, "distance");
  require_positive(light_speed, "light speed");
  if (budget < 1) {
    throw ValidationError("timing: particle budget must be at least 1");
  }
  return distance / (static_cast<double>(budget) * light_speed);
}

TimingReport evaluate(const TimingScenario& scenario) {
  const double threshold = threshold_tau(scenario.distance, scenario.budget, scenario.light_speed);
  const double margin = scenario.tau / threshold;
  return TimingReport{threshold, scenario.tau < threshold, margin};
}

const char* to_string(PhaseLetter letter) { return letter == PhaseLetter::zero ? "0" : "pi"; }

ReadoutExperiment::ReadoutExperiment(DetectionPattern pattern_zero, DetectionPattern pattern_pi,
                                     double confidence, std::uint64_t seed,
                                     std::uint64_t max_budget, std::uint64_t trials)
    : pattern_zero_(std::move(pattern_zero)),
      pattern_pi_(std::move(pattern_pi)),
      confidence_(confidence),
      seed_(seed),
      max_budget_(max_budget),
      trials_(trials) {
  if (pattern_zero_.axis() != pattern_pi_.axis()) {
    throw AxisMismatchError("ReadoutExperiment: patterns on different axes");
  }
  if (!pattern_zero_.normalized() || !pattern_pi_.normalized()) {
    throw PreconditionError("ReadoutExperiment: patterns must be normalized densities");
  }
  if (!(confidence > 0.5) || !(confidence < 1.0)) {
    throw ValidationError("ReadoutExperiment: confidence must lie in (0.5, 1)");
  }
  if (max_budget_ < 1) {
    throw ValidationError("ReadoutExperiment: max budget must be at least 1");
  }
  if (trials_ < 1) {
    throw ValidationError("ReadoutExperiment: trial count must be at least 1");
  }
}

namespace {

// Piecewise-linear density sampler: interval masses by the trapezoid rule,
// quadratic inversion inside the chosen interval.
class PatternSampler {
 public:
  explicit PatternSampler(const DetectionPattern& pattern) : pattern_(pattern) {
    const std::size_t n = pattern.size();
    cumulative_.resize(n);
    cumulative_[0] = 0.0;
    const double dx = pattern.axis().spacing();
    for (std::size_t i = 1; i < n; ++i) {
      cumulative_[i] = cumulative_[i - 1] + 0.5 * (pattern[i - 1] + pattern[i]) * dx;
    }
    total_ = cumulative_[n - 1];
  }

  double total() const { return total_; }

  /// Maps u in [0, 1) to (interval index, fraction within interval).
  std::pair<std::size_t, double> locate(double u) const {
    const double target = u * total_;
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    std::size_t hi = static_cast<std::size_t>(it - cumulative_.begin());
    if (hi >= cumulative_.size()) hi = cumulative_.size() - 1;
    if (hi == 0) hi = 1;
    const std::size_t i = hi - 1;

    const double dx = pattern_.axis().spacing();
    const double a = pattern_[i];
    const double b = pattern_[i + 1];
    const double s = (target - cumulative_[i]) / dx;  // mass fraction / dx
    double t;
    if (std::abs(b - a) < 1e-300) {
      t = (a > 0.0) ? s / a : 0.5;
    } else {
      const double disc = a * a + 2.0 * (b - a) * s;
      t = (-a + std::sqrt(std::max(0.0, disc))) / (b - a);
    }
    return {i, std::clamp(t, 0.0, 1.0)};
  }

 private:
  const DetectionPattern& pattern_;
  std::vector<double> cumulative_;
  double total_ = 0.0;
};

double interpolated(const DetectionPattern& pattern, std::size_t interval, double t) {
  return pattern[interval] + (pattern[interval + 1] - pattern[interval]) * t;
}

void require_distinguishable(const ReadoutExperiment& experiment) {
  const auto& zero = experiment.pattern(PhaseLetter::zero);
  const auto& pi = experiment.pattern(PhaseLetter::pi);
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < zero.size(); ++i) {
    diff = std::max(diff, std::abs(zero[i] - pi[i]));
    scale = std::max({scale, zero[i], pi[i]});
  }
  if (diff <= 1e-12 * std::max(scale, 1e-300)) {
    throw UnreadablePhaseError("readout: the two patterns are indistinguishable");
  }
}

}  // namespace

namespace {

PhaseLetter decide(const ReadoutExperiment& experiment, const PatternSampler& sampler,
                   const CounterRng& rng, std::uint64_t n, std::uint64_t trial) {
  const DetectionPattern& zero = experiment.pattern(PhaseLetter::zero);
  const DetectionPattern& pi = experiment.pattern(PhaseLetter::pi);
  double log_zero = 0.0;
  double log_pi = 0.0;
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const double u = rng.uniform(trial, draw);
    const auto [interval, t] = sampler.locate(u);
    log_zero += std::log(std::max(interpolated(zero, interval, t), kDensityFloor));
    log_pi += std::log(std::max(interpolated(pi, interval, t), kDensityFloor));
  }
  return log_zero >= log_pi ? PhaseLetter::zero : PhaseLetter::pi;
}

}  // namespace

PhaseLetter simulate_readout(const ReadoutExperiment& experiment, PhaseLetter truth,
                             std::uint64_t n, std::uint64_t trial) {
  if (n < 1) {
    throw ValidationError("simulate_readout: need at least one detected particle");
  }
  require_distinguishable(experiment);
  const PatternSampler sampler(experiment.pattern(truth));
  const CounterRng rng(experiment.seed());
  return decide(experiment, sampler, rng, n, trial);
}

double readout_accuracy(const ReadoutExperiment& experiment, PhaseLetter truth, std::uint64_t n) {
  if (n < 1) {
    throw ValidationError("readout_accuracy: need at least one detected particle");
  }
  require_distinguishable(experiment);
  const PatternSampler sampler(experiment.pattern(truth));
  const CounterRng rng(experiment.seed());
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < experiment.trials(); ++trial) {
    if (decide(experiment, sampler, rng, n, trial) == truth) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(experiment.trials());
}

namespace {

ReadoutSearchPoint probe(const ReadoutExperiment& experiment, std::uint64_t n) {
  return ReadoutSearchPoint{n, readout_accuracy(experiment, PhaseLetter::zero, n),
                            readout_accuracy(experiment, PhaseLetter::pi, n)};
}

bool passes(const ReadoutSearchPoint& point, double confidence) {
  return std::min(point.accuracy_zero, point.accuracy_pi) >= confidence;
}

}  // namespace

ReadoutSearchResult required_n_search(const ReadoutExperiment& experiment) {
  require_distinguishable(experiment);
  ReadoutSearchResult result;

  // Doubling sweep for the first passing budget.
  std::uint64_t lo = 0;  // known failing (0 = no particles)
  std::uint64_t hi = 0;
  double best = 0.0;
  for (std::uint64_t n = 1;; n *= 2) {
    if (n > experiment.max_budget()) n = experiment.max_budget();
    const ReadoutSearchPoint point = probe(experiment, n);
    result.trace.push_back(point);
    best = std::max(best, std::min(point.accuracy_zero, point.accuracy_pi));
    if (passes(point, experiment.confidence())) {
      hi = n;
      break;
    }
    lo = n;
    if (n == experiment.max_budget()) {
      throw BudgetExceededError("required_n: accuracy " + std::to_string(best) +
                                    " never reached confidence " +
                                    std::to_string(experiment.confidence()) + " by budget " +
                                    std::to_string(experiment.max_budget()),
                                best);
    }
  }

  // Bisection for the crossing inside (lo, hi].
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const ReadoutSearchPoint point = probe(experiment, mid);
    result.trace.push_back(point);
    if (passes(point, experiment.confidence())) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.required = hi;
  return result;
}

std::uint64_t required_n(const ReadoutExperiment& experiment) {
  return required_n_search(experiment).required;
}

}  // namespace fringelab
