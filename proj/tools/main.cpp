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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/errors.hpp"
#include "json.hpp"
#include "scenarios.hpp"

namespace {

namespace fs = std::filesystem;
using fringelab::cli::ConfigParseError;
using fringelab::cli::Diagnostic;
using fringelab::cli::RawConfig;
using fringelab::cli::RunOutput;
using fringelab::cli::ValidationOutcome;

// Exit codes: 0 success, 2 config parse/schema error, 3 module precondition
// or computation error, 4 I/O or overwrite-policy error. validate exits 0
// when the config is runnable and 1 when it printed diagnostics.
constexpr int kOk = 0;
constexpr int kDiagnostics = 1;
constexpr int kParseError = 2;
constexpr int kPreconditionError = 3;
constexpr int kIoError = 4;

std::uint64_t effective_seed(const RawConfig& config, bool seed_given, std::uint64_t cli_seed) {
  if (seed_given) return cli_seed;
  const auto it = config.values.find("seed");
  if (it == config.values.end()) return 0;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    return 0;  // the schema check reports this
  }
}

int run_command(const std::string& config_path, std::string out_dir, bool seed_given,
                std::uint64_t cli_seed, bool force) {
  RawConfig config;
  try {
    config = fringelab::cli::load_config(config_path);
  } catch (const ConfigParseError& e) {
    std::fprintf(stderr, "config error: %s\n", e.message.c_str());
    return kParseError;
  }

  const std::uint64_t seed = effective_seed(config, seed_given, cli_seed);
  const ValidationOutcome outcome = fringelab::cli::validate_config(config, seed);
  if (!outcome.schema_errors.empty()) {
    for (const std::string& e : outcome.schema_errors) {
      std::fprintf(stderr, "config error: %s\n", e.c_str());
    }
    return kParseError;
  }
  if (!outcome.precondition_errors.empty()) {
    for (const Diagnostic& d : outcome.precondition_errors) {
      std::fprintf(stderr, "%s: %s\n", d.field.c_str(), d.message.c_str());
    }
    return kPreconditionError;
  }

  if (out_dir.empty()) out_dir = "runs/" + config.scenario;
  const fs::path out_path(out_dir);
  try {
    fs::create_directories(out_path);
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kIoError;
  }
  if (!force && fs::exists(out_path / "manifest.json")) {
    std::fprintf(stderr,
                 "io error: %s already holds a run (manifest.json present); pass --force to "
                 "overwrite\n",
                 out_path.string().c_str());
    return kIoError;
  }

  const auto started = std::chrono::steady_clock::now();
  RunOutput output;
  try {
    output = fringelab::cli::run_scenario(config, out_path, seed);
  } catch (const ConfigParseError& e) {
    std::fprintf(stderr, "config error: %s\n", e.message.c_str());
    return kParseError;
  } catch (const fringelab::ValidationError& e) {
    std::fprintf(stderr, "precondition error: %s\n", e.what());
    return kPreconditionError;
  } catch (const fringelab::PreconditionError& e) {
    std::fprintf(stderr, "precondition error: %s\n", e.what());
    return kPreconditionError;
  } catch (const fringelab::BudgetExceededError& e) {
    std::fprintf(stderr, "readout failed: %s\n", e.what());
    return kPreconditionError;
  } catch (const fringelab::Error& e) {
    // Remaining library failures are computation-side (grid resolution,
    // degenerate states, unreadable phases, ...).
    std::fprintf(stderr, "error: %s\n", e.what());
    return kPreconditionError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kIoError;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

  nlohmann::ordered_json manifest;
  manifest["scenario"] = config.scenario;
  nlohmann::ordered_json echo;
  for (const std::string& key : config.key_order) echo[key] = config.values.at(key);
  manifest["config"] = echo;
  manifest["artifacts"] = output.artifacts;
  manifest["tool_version"] = fringelab::cli::kToolVersion;
  manifest["duration_seconds"] = elapsed.count();
  manifest["seed"] = seed;
  try {
    fringelab::io::write_text_atomic(out_path / "manifest.json", manifest.dump(2) + "\n");
  } catch (const fringelab::Error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kIoError;
  }

  std::printf("wrote %zu artifact(s) to %s\n", output.artifacts.size(),
              out_path.string().c_str());
  return kOk;
}

int validate_command(const std::string& config_path) {
  RawConfig config;
  try {
    config = fringelab::cli::load_config(config_path);
  } catch (const ConfigParseError& e) {
    std::printf("config: %s\n", e.message.c_str());
    return kDiagnostics;
  }
  const ValidationOutcome outcome = fringelab::cli::validate_config(config, 0);
  for (const std::string& e : outcome.schema_errors) std::printf("config: %s\n", e.c_str());
  for (const Diagnostic& d : outcome.precondition_errors) {
    std::printf("%s: %s\n", d.field.c_str(), d.message.c_str());
  }
  if (outcome.runnable()) {
    std::printf("ok\n");
    return kOk;
  }
  return kDiagnostics;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fringelab: entangled two-slit interference and signaling scenarios"};
  app.require_subcommand(1);

  std::string run_config;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool force = false;
  CLI::App* run = app.add_subcommand("run", "execute a scenario config and write artifacts");
  run->add_option("config", run_config, "scenario config file")->required();
  run->add_option("--out", out_dir, "output directory (default runs/<scenario>)");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "override the config seed");
  run->add_flag("--force", force, "allow overwriting an existing run directory");

  std::string validate_config_path;
  CLI::App* validate = app.add_subcommand("validate", "check a config without executing");
  validate->add_option("config", validate_config_path, "scenario config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseError;
  }

  if (run->parsed()) {
    return run_command(run_config, out_dir, seed_opt->count() > 0, seed, force);
  }
  return validate_command(validate_config_path);
}
