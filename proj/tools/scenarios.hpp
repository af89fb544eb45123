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

#ifndef FRINGELAB_TOOLS_SCENARIOS_HPP
#define FRINGELAB_TOOLS_SCENARIOS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"

namespace fringelab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// A validation finding, named after the domain type and field it concerns.
struct Diagnostic {
  std::string field;    // e.g. "SlitGeometry.b"
  std::string message;  // human-readable explanation
};

struct ValidationOutcome {
  std::vector<std::string> schema_errors;     // config-shape problems (exit 2)
  std::vector<Diagnostic> precondition_errors;  // module preconditions (exit 3)
  bool runnable() const { return schema_errors.empty() && precondition_errors.empty(); }
};

/// All validation failures of a config, without executing anything.
/// Empty outcome <=> run_scenario will not fail on preconditions.
ValidationOutcome validate_config(const RawConfig& raw, std::uint64_t seed);

struct RunOutput {
  std::vector<std::string> artifacts;  // file names relative to the out dir
};

/// Executes a validated scenario, writing artifacts into out_dir.
RunOutput run_scenario(const RawConfig& raw, const std::filesystem::path& out_dir,
                       std::uint64_t seed);

bool is_known_scenario(const std::string& name);

}  // namespace fringelab::cli

#endif  // FRINGELAB_TOOLS_SCENARIOS_HPP
