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

#ifndef FRINGELAB_ERRORS_HPP
#define FRINGELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fringelab {

/// Base class for all fringelab errors. Everything below maps onto a
/// named failure mode of one of the library operations.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument values (non-finite phase, nonpositive width, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition was violated (non-normalized mode, non-unitary
/// map where unitarity is assumed, ...). The message names the offender.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two grid-sampled quantities were combined across different axes.
class AxisMismatchError : public Error {
 public:
  using Error::Error;
};

/// Entangled state with (numerically) vanishing norm.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// A grid cannot resolve or contain the requested propagation. The message
/// carries a suggested spacing or extent.
class GridResolutionError : public Error {
 public:
  using Error::Error;
};

/// Time stamps out of order or a nonpositive propagation interval.
class TimeOrderError : public Error {
 public:
  using Error::Error;
};

/// Slit windows overlap where disjoint windows are required.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Fringe visibility is undefined (max + min of the pattern is zero).
class UndefinedVisibilityError : public Error {
 public:
  using Error::Error;
};

/// Fringe phase cannot be recovered (visibility below threshold).
class UnrecoverablePhaseError : public Error {
 public:
  using Error::Error;
};

/// Readout patterns carry no information to distinguish the alphabet.
class UnreadablePhaseError : public Error {
 public:
  using Error::Error;
};

/// required_N search exhausted the particle budget. Carries the best
/// accuracy reached so callers can report how close the search got.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double best_accuracy)
      : Error(what), best_accuracy_(best_accuracy) {}
  double best_accuracy() const { return best_accuracy_; }

 private:
  double best_accuracy_;
};

}  // namespace fringelab

#endif  // FRINGELAB_ERRORS_HPP
