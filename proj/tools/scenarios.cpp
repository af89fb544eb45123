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

#include "scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>

#include "fringelab/csv.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/kernels.hpp"
#include "fringelab/mode.hpp"
#include "fringelab/qubit.hpp"
#include "fringelab/state.hpp"
#include "fringelab/timing.hpp"
#include "json.hpp"

namespace fringelab::cli {

namespace {

using io::format_double;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Schemas
// ---------------------------------------------------------------------------

KeySpec req(ValueType type) { return KeySpec{type, true, ""}; }
KeySpec opt(ValueType type, const std::string& fallback) { return KeySpec{type, false, fallback}; }

Schema fringe_keys() {
  return Schema{
      {"x_min", req(ValueType::real)},
      {"x_max", req(ValueType::real)},
      {"n_points", req(ValueType::integer)},
      {"env_sigma", req(ValueType::real)},
      {"tilt", req(ValueType::real)},
      {"x2_min", opt(ValueType::real, "-10")},
      {"x2_max", opt(ValueType::real, "10")},
      {"n2_points", opt(ValueType::integer, "257")},
      {"overlap_mag", req(ValueType::real)},
      {"overlap_phase", opt(ValueType::real, "0")},
      {"seed", opt(ValueType::integer, "0")},
  };
}

Schema pattern_schema() {
  Schema s = fringe_keys();
  s["phi"] = opt(ValueType::real, "0");
  s["normalize"] = opt(ValueType::boolean, "true");
  s["output"] = opt(ValueType::text, "pattern.csv");
  return s;
}

Schema phase_sweep_schema() {
  Schema s = fringe_keys();
  s["phi_list"] = req(ValueType::real_list);
  s["window_lo"] = req(ValueType::real);
  s["window_hi"] = req(ValueType::real);
  s["output"] = opt(ValueType::text, "phase_sweep.csv");
  return s;
}

Schema slit_defect_schema() {
  return Schema{
      {"x_min", req(ValueType::real)},
      {"x_max", req(ValueType::real)},
      {"n_points", req(ValueType::integer)},
      {"packet_center", opt(ValueType::real, "0")},
      {"packet_sigma", req(ValueType::real)},
      {"packet_wavenumber", opt(ValueType::real, "0")},
      {"mass", opt(ValueType::real, "1")},
      {"hbar", opt(ValueType::real, "1")},
      {"t_initial", opt(ValueType::real, "0")},
      {"t_screen", req(ValueType::real)},
      {"t_final", req(ValueType::real)},
      {"slit_profile", opt(ValueType::text, "hard")},
      {"slit_center", opt(ValueType::real, "0")},
      {"b_min", req(ValueType::real)},
      {"b_max", req(ValueType::real)},
      {"n_b", req(ValueType::integer)},
      {"write_modes", opt(ValueType::boolean, "false")},
      {"seed", opt(ValueType::integer, "0")},
      {"output", opt(ValueType::text, "slit_defect.csv")},
  };
}

Schema qubit_schema() {
  Schema s{
      {"seed", opt(ValueType::integer, "0")},
      {"output", opt(ValueType::text, "qubit.csv")},
  };
  for (const char* entry : {"pp", "pm", "mp", "mm"}) {
    for (const char* part : {"re", "im"}) {
      s[std::string("u2_") + entry + "_" + part] = opt(ValueType::real, "");
      s[std::string("gram_") + entry + "_" + part] = opt(ValueType::real, "");
      s[std::string("perturb_") + entry + "_" + part] = opt(ValueType::real, "");
    }
  }
  s["switch_time"] = opt(ValueType::real, "");
  s["t_min"] = opt(ValueType::real, "");
  s["t_max"] = opt(ValueType::real, "");
  s["n_t"] = opt(ValueType::integer, "9");
  return s;
}

Schema timing_schema() {
  return Schema{
      {"tau", req(ValueType::real)},
      {"distance", req(ValueType::real)},
      {"budget", req(ValueType::integer)},
      {"light_speed", opt(ValueType::real, "299792458")},
      {"seed", opt(ValueType::integer, "0")},
      {"output", opt(ValueType::text, "timing.json")},
  };
}

Schema readout_schema() {
  Schema s = fringe_keys();
  s["confidence"] = opt(ValueType::real, "0.99");
  s["max_n"] = opt(ValueType::integer, "65536");
  s["trials"] = opt(ValueType::integer, "10000");
  s["output"] = opt(ValueType::text, "readout.csv");
  return s;
}

const Schema* schema_for(const std::string& scenario) {
  static const std::map<std::string, Schema> schemas = {
      {"pattern", pattern_schema()},       {"phase-sweep", phase_sweep_schema()},
      {"slit-defect", slit_defect_schema()}, {"qubit", qubit_schema()},
      {"timing", timing_schema()},         {"readout", readout_schema()},
  };
  const auto it = schemas.find(scenario);
  return it == schemas.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Plan building. Each scenario constructs its domain objects while
// collecting named diagnostics; run() reuses the same construction path, so
// an empty diagnostic list guarantees preconditions hold.
// ---------------------------------------------------------------------------

void diag(std::vector<Diagnostic>& out, const std::string& field, const std::string& message) {
  out.push_back(Diagnostic{field, message});
}

std::optional<GridAxis> build_axis(const TypedConfig& c, const std::string& prefix,
                                   const std::string& min_key, const std::string& max_key,
                                   const std::string& n_key, std::vector<Diagnostic>& diags) {
  const double lo = c.real(min_key);
  const double hi = c.real(max_key);
  const std::uint64_t n = c.integer(n_key);
  bool ok = true;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    diag(diags, prefix + ".x_max", "require finite " + min_key + " < " + max_key);
    ok = false;
  }
  if (n < 2) {
    diag(diags, prefix + ".n_points", n_key + " must be at least 2");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return GridAxis(lo, hi, static_cast<std::size_t>(n));
}

struct FringeSetup {
  GridAxis axis1;
  EntangledBranchPair pair;
};

std::optional<FringeSetup> build_fringe_setup(const TypedConfig& c,
                                              std::vector<Diagnostic>& diags) {
  const auto axis1 = build_axis(c, "GridAxis", "x_min", "x_max", "n_points", diags);
  const auto axis2 = build_axis(c, "GridAxis", "x2_min", "x2_max", "n2_points", diags);

  const double env_sigma = c.real("env_sigma");
  if (!(env_sigma > 0.0) || !std::isfinite(env_sigma)) {
    diag(diags, "ModeFunction.env_sigma", "envelope width must be positive");
  }
  const double tilt = c.real("tilt");
  if (!std::isfinite(tilt)) {
    diag(diags, "ModeFunction.tilt", "tilt must be finite");
  }
  const double mag = c.real("overlap_mag");
  if (!(mag >= 0.0) || !(mag <= 1.0)) {
    diag(diags, "OverlapScalar.value", "overlap_mag must lie in [0, 1]");
  }
  const double phase = c.real("overlap_phase");
  if (!std::isfinite(phase)) {
    diag(diags, "OverlapScalar.value", "overlap_phase must be finite");
  }
  if (!diags.empty() || !axis1 || !axis2) return std::nullopt;

  try {
    ModeFunction mode_1a = gaussian_mode(*axis1, 0.0, env_sigma, +tilt, ModeLabel::p1_a);
    ModeFunction mode_1b = gaussian_mode(*axis1, 0.0, env_sigma, -tilt, ModeLabel::p1_b);
    auto [mode_2d, mode_2c] = modes_with_overlap(*axis2, std::polar(mag, phase), 0.0, 1.0,
                                                 ModeLabel::p2_d, ModeLabel::p2_c);
    EntangledBranchPair pair(std::move(mode_1a), std::move(mode_2d), std::move(mode_1b),
                             std::move(mode_2c));
    return FringeSetup{*axis1, std::move(pair)};
  } catch (const Error& e) {
    diag(diags, "EntangledBranchPair.state", e.what());
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// CSV row assembly
// ---------------------------------------------------------------------------

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (const double v : values) {
    if (!first) row += ',';
    row += format_double(v);
    first = false;
  }
  row += '\n';
  return row;
}

void write_artifact(const std::filesystem::path& out_dir, const std::string& name,
                    const std::string& content, RunOutput& output) {
  io::write_text_atomic(out_dir / name, content);
  output.artifacts.push_back(name);
}

// ---------------------------------------------------------------------------
// pattern
// ---------------------------------------------------------------------------

void validate_pattern(const TypedConfig& c, std::vector<Diagnostic>& diags) {
  if (!std::isfinite(c.real("phi"))) {
    diag(diags, "PhaseShift.phi", "phi must be finite");
  }
  (void)build_fringe_setup(c, diags);
}

RunOutput run_pattern(const TypedConfig& c, const std::filesystem::path& out_dir) {
  std::vector<Diagnostic> diags;
  auto setup = build_fringe_setup(c, diags);
  if (!setup) throw PreconditionError(diags.empty() ? "pattern: invalid setup" : diags[0].message);
  const DetectionPattern pattern =
      detection_pattern(setup->pair, PhaseShift(c.real("phi")), c.boolean("normalize"));
  RunOutput output;
  write_artifact(out_dir, c.text("output"), io::pattern_csv(pattern), output);
  return output;
}

// ---------------------------------------------------------------------------
// phase-sweep
// ---------------------------------------------------------------------------

void validate_phase_sweep(const TypedConfig& c, std::vector<Diagnostic>& diags) {
  const double lo = c.real("window_lo");
  const double hi = c.real("window_hi");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    diag(diags, "Window.x_hi", "require window_lo < window_hi");
  } else if (lo < c.real("x_min") || hi > c.real("x_max")) {
    diag(diags, "Window.x_lo", "window must lie inside the pattern axis");
  }
  for (const double phi : c.real_list("phi_list")) {
    if (!std::isfinite(phi)) diag(diags, "PhaseShift.phi", "phi_list entries must be finite");
  }
  if (c.real("tilt") == 0.0) {
    diag(diags, "ModeFunction.tilt", "phase recovery needs fringes; tilt must be nonzero");
  }
  if (!(c.real("overlap_mag") > 0.0)) {
    diag(diags, "OverlapScalar.value", "phase recovery needs nonzero overlap_mag");
  }
  (void)build_fringe_setup(c, diags);
}

RunOutput run_phase_sweep(const TypedConfig& c, const std::filesystem::path& out_dir) {
  std::vector<Diagnostic> diags;
  auto setup = build_fringe_setup(c, diags);
  if (!setup) throw PreconditionError(diags.empty() ? "phase-sweep: invalid setup" : diags[0].message);

  const Window window{c.real("window_lo"), c.real("window_hi")};
  const DetectionPattern reference = detection_pattern(setup->pair, PhaseShift(0.0), true);

  std::string csv = "phi_true,phi_recovered\n";
  for (const double phi : c.real_list("phi_list")) {
    const DetectionPattern shifted = detection_pattern(setup->pair, PhaseShift(phi), true);
    csv += csv_row({phi, fringe_phase_shift(reference, shifted, window)});
  }
  RunOutput output;
  write_artifact(out_dir, c.text("output"), csv, output);
  return output;
}

// ---------------------------------------------------------------------------
// slit-defect
// ---------------------------------------------------------------------------

struct SlitDefectPlan {
  GridAxis axis;
  GaussianPacket packet;
  KernelParams params;
  SlitProfile profile = SlitProfile::hard;
  double slit_center = 0.0;
  std::vector<double> half_widths;
};

std::optional<SlitDefectPlan> build_slit_defect(const TypedConfig& c,
                                                std::vector<Diagnostic>& diags) {
  const auto axis = build_axis(c, "GridAxis", "x_min", "x_max", "n_points", diags);

  const double sigma = c.real("packet_sigma");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    diag(diags, "GaussianPacket.sigma", "packet width must be positive");
  }
  const double mass = c.real("mass");
  const double hbar = c.real("hbar");
  if (!(mass > 0.0)) diag(diags, "KernelParams.mass", "mass must be positive");
  if (!(hbar > 0.0)) diag(diags, "KernelParams.hbar", "hbar must be positive");
  const double t_i = c.real("t_initial");
  const double t_c = c.real("t_screen");
  const double t_f = c.real("t_final");
  if (!(t_i < t_c) || !(t_c < t_f)) {
    diag(diags, "KernelParams.t_screen", "require t_initial < t_screen < t_final");
  }

  const std::string profile_name = c.text("slit_profile");
  SlitProfile profile = SlitProfile::hard;
  if (profile_name == "gaussian") {
    profile = SlitProfile::gaussian;
  } else if (profile_name != "hard") {
    diag(diags, "SlitGeometry.profile", "slit_profile must be hard or gaussian");
  }

  const double b_min = c.real("b_min");
  const double b_max = c.real("b_max");
  const std::uint64_t n_b = c.integer("n_b");
  if (!(b_min > 0.0) || !std::isfinite(b_min) || !(b_max >= b_min)) {
    diag(diags, "SlitGeometry.b", "require 0 < b_min <= b_max");
  }
  if (n_b < 1) diag(diags, "ScenarioConfig.n_b", "n_b must be at least 1");

  if (!diags.empty() || !axis) return std::nullopt;

  SlitDefectPlan plan{*axis,
                      GaussianPacket(c.real("packet_center"), sigma, c.real("packet_wavenumber")),
                      KernelParams(mass, hbar, t_i, t_c, t_f),
                      profile,
                      c.real("slit_center"),
                      {}};
  for (std::uint64_t i = 0; i < n_b; ++i) {
    const double frac = n_b == 1 ? 0.0
                                 : static_cast<double>(i) / static_cast<double>(n_b - 1);
    plan.half_widths.push_back(b_min + frac * (b_max - b_min));
  }

  for (const double b : plan.half_widths) {
    try {
      check_slit_propagation(plan.packet, plan.axis, plan.params,
                             SlitGeometry(plan.profile, b, plan.slit_center));
    } catch (const Error& e) {
      diag(diags, "GridAxis.n_points", e.what());
      return std::nullopt;
    }
  }
  return plan;
}

RunOutput run_slit_defect(const TypedConfig& c, const std::filesystem::path& out_dir) {
  std::vector<Diagnostic> diags;
  auto plan = build_slit_defect(c, diags);
  if (!plan) throw PreconditionError(diags.empty() ? "slit-defect: invalid setup" : diags[0].message);

  RunOutput output;
  std::string csv = "b,transmitted,defect\n";
  std::size_t index = 0;
  for (const double b : plan->half_widths) {
    const PropagationResult result = propagate_slit(
        plan->packet, plan->axis, plan->params, SlitGeometry(plan->profile, b, plan->slit_center));
    const double transmitted = result.output_norm_squared / result.input_norm_squared;
    csv += csv_row({b, transmitted, unitarity_defect(result)});
    if (c.boolean("write_modes")) {
      char name[32];
      std::snprintf(name, sizeof(name), "mode_%04zu.csv", index);
      write_artifact(out_dir, name, io::mode_csv(result.output), output);
    }
    ++index;
  }
  write_artifact(out_dir, c.text("output"), csv, output);
  return output;
}

// ---------------------------------------------------------------------------
// qubit
// ---------------------------------------------------------------------------

struct QubitPlan {
  // Exactly one of: explicit map, explicit Gram matrix, time switch.
  std::optional<Mat2> u2;
  std::optional<GramMatrix> gram_direct;
  std::optional<TimeSwitch> time_switch;
  std::vector<double> times;
};

bool group_present(const TypedConfig& c, const std::string& prefix) {
  for (const char* entry : {"pp", "pm", "mp", "mm"}) {
    for (const char* part : {"re", "im"}) {
      if (c.was_provided(prefix + entry + "_" + part)) return true;
    }
  }
  return false;
}

Mat2 read_mat2(const TypedConfig& c, const std::string& prefix) {
  auto entry = [&](const char* name) {
    return cplx(c.real(prefix + name + "_re"), c.real(prefix + name + "_im"));
  };
  return Mat2{entry("pp"), entry("pm"), entry("mp"), entry("mm")};
}

bool group_complete(const TypedConfig& c, const std::string& prefix,
                    std::vector<Diagnostic>& diags, const std::string& field) {
  bool complete = true;
  for (const char* entry : {"pp", "pm", "mp", "mm"}) {
    for (const char* part : {"re", "im"}) {
      const std::string key = prefix + entry + "_" + part;
      if (!c.was_provided(key)) {
        diag(diags, field, "missing " + key);
        complete = false;
      }
    }
  }
  return complete;
}

std::optional<QubitPlan> build_qubit(const TypedConfig& c, std::vector<Diagnostic>& diags) {
  const bool has_u2 = group_present(c, "u2_");
  const bool has_gram = group_present(c, "gram_");
  const bool has_switch = c.was_provided("switch_time") || group_present(c, "perturb_");
  const int modes = static_cast<int>(has_u2) + static_cast<int>(has_gram) +
                    static_cast<int>(has_switch);
  if (modes != 1) {
    diag(diags, "ScenarioConfig.qubit",
         "provide exactly one of: u2_* entries, gram_* entries, or switch_time with perturb_*");
    return std::nullopt;
  }

  QubitPlan plan;
  if (has_u2) {
    if (!group_complete(c, "u2_", diags, "EvolutionMap2.matrix")) return std::nullopt;
    try {
      plan.u2 = read_mat2(c, "u2_");
      (void)EvolutionMap2(*plan.u2, EvolutionSide::side2);
    } catch (const Error& e) {
      diag(diags, "EvolutionMap2.matrix", e.what());
      return std::nullopt;
    }
    plan.times = {0.0};
  } else if (has_gram) {
    if (!group_complete(c, "gram_", diags, "GramMatrix.entries")) return std::nullopt;
    try {
      plan.gram_direct = GramMatrix(read_mat2(c, "gram_"));
    } catch (const Error& e) {
      diag(diags, "GramMatrix.entries", e.what());
      return std::nullopt;
    }
    plan.times = {0.0};
  } else {
    if (!c.was_provided("switch_time")) {
      diag(diags, "TimeSwitch.T", "missing switch_time");
      return std::nullopt;
    }
    if (!group_complete(c, "perturb_", diags, "TimeSwitch.perturbation")) return std::nullopt;
    const Mat2 p = read_mat2(c, "perturb_");
    try {
      plan.time_switch = TimeSwitch(c.real("switch_time"), p.m00, p.m01, p.m10, p.m11);
    } catch (const Error& e) {
      diag(diags, "TimeSwitch.perturbation", e.what());
      return std::nullopt;
    }
    if (!c.was_provided("t_min") || !c.was_provided("t_max")) {
      diag(diags, "ScenarioConfig.qubit", "time switch needs t_min and t_max");
      return std::nullopt;
    }
    const double t_min = c.real("t_min");
    const double t_max = c.real("t_max");
    const std::uint64_t n_t = c.integer("n_t");
    if (!(t_max >= t_min) || n_t < 1) {
      diag(diags, "ScenarioConfig.n_t", "require t_min <= t_max and n_t >= 1");
      return std::nullopt;
    }
    for (std::uint64_t i = 0; i < n_t; ++i) {
      const double frac = n_t == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n_t - 1);
      plan.times.push_back(t_min + frac * (t_max - t_min));
    }
  }
  return plan;
}

RunOutput run_qubit(const TypedConfig& c, const std::filesystem::path& out_dir) {
  std::vector<Diagnostic> diags;
  auto plan = build_qubit(c, diags);
  if (!plan) throw PreconditionError(diags.empty() ? "qubit: invalid setup" : diags[0].message);

  // Fixed unitary on side 1 for the cross-check; any unitary must give the
  // same marginals.
  const double th = 0.7;
  const Mat2 rotation{std::polar(std::cos(th), 0.3), std::polar(std::sin(th), 1.1),
                      -std::polar(std::sin(th), -1.1), std::polar(std::cos(th), -0.3)};
  const EvolutionMap2 u1(rotation, EvolutionSide::side1);

  std::string csv = "t,p_plus,p_minus,deviation,oracle_abs_diff\n";
  for (const double t : plan->times) {
    GramMatrix g = GramMatrix::identity();
    if (plan->u2) {
      g = gram(EvolutionMap2(*plan->u2, EvolutionSide::side2));
    } else if (plan->gram_direct) {
      g = *plan->gram_direct;
    } else {
      g = t < plan->time_switch->switch_time() ? GramMatrix::identity()
                                               : plan->time_switch->gram_after();
    }
    const MarginalProbs closed =
        plan->time_switch ? probs_vs_time(*plan->time_switch, t) : marginal_probs_closed(g);

    const Mat2 u2_matrix = plan->u2 ? *plan->u2 : g.principal_sqrt();
    const MarginalProbs oracle =
        marginal_probs_oracle(u1, EvolutionMap2(u2_matrix, EvolutionSide::side2));
    const double diff = std::max(std::abs(closed.p_plus - oracle.p_plus),
                                 std::abs(closed.p_minus - oracle.p_minus));
    csv += csv_row({t, closed.p_plus, closed.p_minus, signaling_deviation(g), diff});
  }

  RunOutput output;
  write_artifact(out_dir, c.text("output"), csv, output);
  return output;
}

// ---------------------------------------------------------------------------
// timing
// ---------------------------------------------------------------------------

std::optional<TimingScenario> build_timing(const TypedConfig& c,
                                           std::vector<Diagnostic>& diags) {
  const double tau = c.real("tau");
  const double distance = c.real("distance");
  const std::uint64_t budget = c.integer("budget");
  const double light_speed = c.real("light_speed");
  bool ok = true;
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    diag(diags, "TimingScenario.tau", "tau must be positive");
    ok = false;
  }
  if (!(distance > 0.0) || !std::isfinite(distance)) {
    diag(diags, "TimingScenario.distance", "distance must be positive");
    ok = false;
  }
  if (budget < 1) {
    diag(diags, "TimingScenario.budget", "budget must be at least 1");
    ok = false;
  }
  if (!(light_speed > 0.0) || !std::isfinite(light_speed)) {
    diag(diags, "TimingScenario.light_speed", "light_speed must be positive");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return TimingScenario(tau, distance, budget, light_speed);
}

RunOutput run_timing(const TypedConfig& c, const std::filesystem::path& out_dir) {
  std::vector<Diagnostic> diags;
  auto scenario = build_timing(c, diags);
  if (!scenario) throw PreconditionError(diags.empty() ? "timing: invalid setup" : diags[0].message);
  const TimingReport report = evaluate(*scenario);

  ordered_json doc;
  doc["threshold_s"] = report.threshold;
  doc["feasible"] = report.feasible;
  doc["margin"] = report.margin;

  RunOutput output;
  write_artifact(out_dir, c.text("output"), doc.dump(2) + "\n", output);
  return output;
}

// ---------------------------------------------------------------------------
// readout
// ---------------------------------------------------------------------------

void validate_readout(const TypedConfig& c, std::vector<Diagnostic>& diags) {
  const double confidence = c.real("confidence");
  if (!(confidence > 0.5) || !(confidence < 1.0)) {
    diag(diags, "ReadoutExperiment.confidence", "confidence must lie in (0.5, 1)");
  }
  if (c.integer("max_n") < 1) {
    diag(diags, "ReadoutExperiment.max_N", "max_n must be at least 1");
  }
  if (c.integer("trials") < 1) {
    diag(diags, "ReadoutExperiment.trials", "trials must be at least 1");
  }
  if (!(c.real("overlap_mag") > 0.0)) {
    diag(diags, "ReadoutExperiment.patterns",
         "overlap_mag must be positive: identical patterns carry no phase information");
  }
  if (c.real("tilt") == 0.0) {
    diag(diags, "ModeFunction.tilt", "readout needs fringes; tilt must be nonzero");
  }
  (void)build_fringe_setup(c, diags);
}

RunOutput run_readout(const TypedConfig& c, const std::filesystem::path& out_dir,
                      std::uint64_t seed) {
  std::vector<Diagnostic> diags;
  auto setup = build_fringe_setup(c, diags);
  if (!setup) throw PreconditionError(diags.empty() ? "readout: invalid setup" : diags[0].message);

  const DetectionPattern zero = detection_pattern(setup->pair, PhaseShift(0.0), true);
  const DetectionPattern pi = detection_pattern(setup->pair, PhaseShift(std::numbers::pi), true);
  const ReadoutExperiment experiment(zero, pi, c.real("confidence"), seed, c.integer("max_n"),
                                     c.integer("trials"));
  const ReadoutSearchResult result = required_n_search(experiment);

  std::string csv = "n,accuracy_phi0,accuracy_phipi\n";
  for (const ReadoutSearchPoint& point : result.trace) {
    csv += csv_row({static_cast<double>(point.n), point.accuracy_zero, point.accuracy_pi});
  }
  std::printf("required_n = %llu\n", static_cast<unsigned long long>(result.required));

  RunOutput output;
  write_artifact(out_dir, c.text("output"), csv, output);
  return output;
}

}  // namespace

bool is_known_scenario(const std::string& name) { return schema_for(name) != nullptr; }

ValidationOutcome validate_config(const RawConfig& raw, std::uint64_t seed) {
  (void)seed;
  ValidationOutcome outcome;
  const Schema* schema = schema_for(raw.scenario);
  if (schema == nullptr) {
    outcome.schema_errors.push_back("unknown scenario [" + raw.scenario + "]");
    return outcome;
  }
  const TypedConfig typed(raw, *schema, outcome.schema_errors);
  if (!outcome.schema_errors.empty()) return outcome;

  if (raw.scenario == "pattern") {
    validate_pattern(typed, outcome.precondition_errors);
  } else if (raw.scenario == "phase-sweep") {
    validate_phase_sweep(typed, outcome.precondition_errors);
  } else if (raw.scenario == "slit-defect") {
    (void)build_slit_defect(typed, outcome.precondition_errors);
  } else if (raw.scenario == "qubit") {
    (void)build_qubit(typed, outcome.precondition_errors);
  } else if (raw.scenario == "timing") {
    (void)build_timing(typed, outcome.precondition_errors);
  } else if (raw.scenario == "readout") {
    validate_readout(typed, outcome.precondition_errors);
  }
  return outcome;
}

RunOutput run_scenario(const RawConfig& raw, const std::filesystem::path& out_dir,
                       std::uint64_t seed) {
  const Schema* schema = schema_for(raw.scenario);
  if (schema == nullptr) {
    throw ConfigParseError{"unknown scenario [" + raw.scenario + "]"};
  }
  std::vector<std::string> schema_errors;
  const TypedConfig typed(raw, *schema, schema_errors);
  if (!schema_errors.empty()) {
    throw ConfigParseError{schema_errors.front()};
  }

  if (raw.scenario == "pattern") return run_pattern(typed, out_dir);
  if (raw.scenario == "phase-sweep") return run_phase_sweep(typed, out_dir);
  if (raw.scenario == "slit-defect") return run_slit_defect(typed, out_dir);
  if (raw.scenario == "qubit") return run_qubit(typed, out_dir);
  if (raw.scenario == "timing") return run_timing(typed, out_dir);
  return run_readout(typed, out_dir, seed);
}

}  // namespace fringelab::cli
