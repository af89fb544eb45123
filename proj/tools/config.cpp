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

#include "config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fringelab::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigParseError{"key '" + key + "': expected a number, got '" + text + "'"};
  }
  if (used != text.size()) {
    throw ConfigParseError{"key '" + key + "': trailing characters in number '" + text + "'"};
  }
  return v;
}

std::uint64_t parse_integer(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigParseError{"key '" + key + "': expected a nonnegative integer, got '" + text +
                           "'"};
  }
  return v;
}

bool parse_boolean(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigParseError{"key '" + key + "': expected true or false, got '" + text + "'"};
}

void type_check(const std::string& key, const KeySpec& spec, const std::string& text) {
  switch (spec.type) {
    case ValueType::real: (void)parse_real(key, text); break;
    case ValueType::integer: (void)parse_integer(key, text); break;
    case ValueType::boolean: (void)parse_boolean(key, text); break;
    case ValueType::text: break;
    case ValueType::real_list: {
      std::stringstream ss(text);
      std::string item;
      bool any = false;
      while (std::getline(ss, item, ',')) {
        (void)parse_real(key, trim(item));
        any = true;
      }
      if (!any) throw ConfigParseError{"key '" + key + "': empty list"};
      break;
    }
  }
}

}  // namespace

RawConfig parse_config_text(const std::string& text) {
  RawConfig config;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_section = false;

  while (std::getline(stream, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    if (stripped.front() == '[') {
      if (stripped.back() != ']') {
        throw ConfigParseError{"line " + std::to_string(line_no) + ": unterminated section"};
      }
      if (have_section) {
        throw ConfigParseError{"line " + std::to_string(line_no) +
                               ": only one scenario section per file"};
      }
      config.scenario = trim(stripped.substr(1, stripped.size() - 2));
      if (config.scenario.empty()) {
        throw ConfigParseError{"line " + std::to_string(line_no) + ": empty scenario name"};
      }
      have_section = true;
      continue;
    }

    if (!have_section) {
      throw ConfigParseError{"line " + std::to_string(line_no) +
                             ": key before the [scenario] section"};
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigParseError{"line " + std::to_string(line_no) + ": expected key = value"};
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigParseError{"line " + std::to_string(line_no) + ": empty key"};
    }
    if (config.values.contains(key)) {
      throw ConfigParseError{"line " + std::to_string(line_no) + ": duplicate key '" + key + "'"};
    }
    config.values[key] = value;
    config.key_order.push_back(key);
  }

  if (!have_section) {
    throw ConfigParseError{"no [scenario] section found"};
  }
  return config;
}

RawConfig load_config(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ConfigParseError{"cannot read config file '" + path + "'"};
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_config_text(buffer.str());
}

TypedConfig::TypedConfig(const RawConfig& raw, const Schema& schema,
                         std::vector<std::string>& schema_errors) {
  for (const auto& [key, value] : raw.values) {
    const auto it = schema.find(key);
    if (it == schema.end()) {
      schema_errors.push_back("unknown key '" + key + "' for scenario [" + raw.scenario + "]");
      continue;
    }
    try {
      type_check(key, it->second, value);
      resolved_[key] = value;
      provided_[key] = value;
    } catch (const ConfigParseError& e) {
      schema_errors.push_back(e.message);
    }
  }
  for (const auto& [key, spec] : schema) {
    if (resolved_.contains(key)) continue;
    if (spec.required) {
      schema_errors.push_back("missing required key '" + key + "'");
    } else {
      resolved_[key] = spec.default_value;
    }
  }
}

double TypedConfig::real(const std::string& key) const {
  return parse_real(key, resolved_.at(key));
}

std::uint64_t TypedConfig::integer(const std::string& key) const {
  return parse_integer(key, resolved_.at(key));
}

bool TypedConfig::boolean(const std::string& key) const {
  return parse_boolean(key, resolved_.at(key));
}

std::string TypedConfig::text(const std::string& key) const { return resolved_.at(key); }

std::vector<double> TypedConfig::real_list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(resolved_.at(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(key, trim(item)));
  return out;
}

bool TypedConfig::was_provided(const std::string& key) const { return provided_.contains(key); }

}  // namespace fringelab::cli
