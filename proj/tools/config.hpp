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

#ifndef FRINGELAB_TOOLS_CONFIG_HPP
#define FRINGELAB_TOOLS_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fringelab::cli {

// Scenario files are flat:
//
//   # comment
//   [scenario-name]
//   key = value
//
// One section per file; values are numbers, booleans, bare strings, or
// comma-separated number lists depending on the key's declared type.

struct ConfigParseError {
  std::string message;
};

struct RawConfig {
  std::string scenario;
  std::map<std::string, std::string> values;  // key -> raw text
  std::vector<std::string> key_order;         // file order, for the manifest echo
};

/// Parses the section/key grammar. Throws ConfigParseError on syntax
/// problems (no section, two sections, malformed lines, duplicate keys).
RawConfig parse_config_text(const std::string& text);

/// Reads and parses a config file. Throws ConfigParseError if unreadable.
RawConfig load_config(const std::string& path);

enum class ValueType { real, integer, boolean, text, real_list };

struct KeySpec {
  ValueType type = ValueType::real;
  bool required = false;
  std::string default_value;  // raw text, used when not required
};

using Schema = std::map<std::string, KeySpec>;

/// Typed view over a RawConfig after schema checking.
class TypedConfig {
 public:
  TypedConfig(const RawConfig& raw, const Schema& schema,
              std::vector<std::string>& schema_errors);

  double real(const std::string& key) const;
  std::uint64_t integer(const std::string& key) const;
  bool boolean(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::vector<double> real_list(const std::string& key) const;
  bool was_provided(const std::string& key) const;

 private:
  std::map<std::string, std::string> resolved_;
  std::map<std::string, std::string> provided_;
};

}  // namespace fringelab::cli

#endif  // FRINGELAB_TOOLS_CONFIG_HPP
