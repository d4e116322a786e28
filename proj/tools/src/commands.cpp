// Copyright 2026 The esdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <string_view>
#include <vector>

#include "esd/esd.h"

namespace esdsim {
namespace {

using ojson = nlohmann::ordered_json;

struct StateDeleter {
  void operator()(esd_state* s) const { esd_state_free(s); }
};
struct NoiseDeleter {
  void operator()(esd_noise_set* s) const { esd_noise_set_free(s); }
};
struct ValidationDeleter {
  void operator()(esd_validation* v) const { esd_validation_free(v); }
};
using StatePtr = std::unique_ptr<esd_state, StateDeleter>;
using NoisePtr = std::unique_ptr<esd_noise_set, NoiseDeleter>;
using ValidationPtr = std::unique_ptr<esd_validation, ValidationDeleter>;

void check(esd_status status) {
  if (status == ESD_OK) return;
  const std::string msg = esd_last_error();
  switch (status) {
    case ESD_ERR_INVALID_ARGUMENT:
    case ESD_ERR_INVALID_STATE:
      throw ConfigError(msg);
    case ESD_ERR_SEPARABLE:
      throw SeparableError(msg);
    default:
      throw EngineError(std::string(esd_status_string(status)) + ": " + msg);
  }
}

StatePtr make_state(const XParams& x) {
  esd_state* raw = nullptr;
  check(esd_state_from_x(x.a, x.b, x.c, x.d, x.z_re, x.z_im, &raw));
  return StatePtr(raw);
}

StatePtr make_lambda(double lambda) {
  esd_state* raw = nullptr;
  check(esd_state_from_lambda(lambda, &raw));
  return StatePtr(raw);
}

NoisePtr make_noise(const std::vector<NoiseEntry>& entries) {
  esd_noise_set* raw = nullptr;
  check(esd_noise_set_create(&raw));
  NoisePtr set(raw);
  for (const NoiseEntry& n : entries) {
    const esd_qubit q = n.target == "A" ? ESD_QUBIT_A : ESD_QUBIT_B;
    const esd_noise_kind k = n.kind == "amplitude" ? ESD_NOISE_AMPLITUDE : ESD_NOISE_PHASE;
    check(esd_noise_set_add(set.get(), q, k, n.rate));
  }
  return set;
}

// (lambda or NaN, state) pairs in config order.
std::vector<std::pair<double, StatePtr>> make_states(const RunConfig& cfg) {
  std::vector<std::pair<double, StatePtr>> out;
  if (const auto* lam = std::get_if<LambdaParams>(&cfg.state)) {
    for (double v : lam->values) out.emplace_back(v, make_lambda(v));
  } else {
    out.emplace_back(std::nan(""), make_state(std::get<XParams>(cfg.state)));
  }
  return out;
}

bool sweeping(const RunConfig& cfg) {
  const auto* lam = std::get_if<LambdaParams>(&cfg.state);
  return lam && lam->sweep();
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

const char* status_word(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

std::string format_real(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

CommandResult cmd_trace(const RunConfig& cfg, Format format) {
  cfg.check();
  const NoisePtr noise = make_noise(cfg.noises);
  const double t_max = cfg.t_max.value_or(esd_noise_set_default_t_max(noise.get()));
  std::vector<double> times(cfg.samples);
  for (int i = 0; i < cfg.samples; ++i) times[i] = t_max * i / (cfg.samples - 1);
  times.back() = t_max;

  const bool sweep = sweeping(cfg);
  std::string csv = sweep ? "lambda,t,concurrence\n" : "t,concurrence\n";
  ojson rows = ojson::array();
  std::vector<double> values(times.size());
  for (const auto& [lambda, state] : make_states(cfg)) {
    check(esd_trace(state.get(), noise.get(), times.data(), times.size(), values.data()));
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (sweep) csv += format_real(lambda) + ",";
      csv += format_real(times[i]) + "," + format_real(values[i]) + "\n";
      ojson row;
      if (sweep) row["lambda"] = lambda;
      row["t"] = times[i];
      row["concurrence"] = values[i];
      rows.push_back(std::move(row));
    }
  }
  if (format == Format::kCsv) return {csv};
  return {dump(ojson{{"t_max", t_max}, {"rows", rows}})};
}

CommandResult cmd_esd(const RunConfig& cfg, Format format) {
  cfg.check();
  const NoisePtr noise = make_noise(cfg.noises);
  const double t_max = cfg.t_max.value_or(esd_noise_set_default_t_max(noise.get()));
  const bool sweep = sweeping(cfg);
  std::string csv = sweep ? "lambda,class,t_star\n" : "class,t_star\n";
  ojson reports = ojson::array();
  for (const auto& [lambda, state] : make_states(cfg)) {
    esd_decay decay{};
    check(esd_find_esd(state.get(), noise.get(), t_max, &decay));
    const char* name = esd_decay_class_name(decay.decay_class);
    if (sweep) csv += format_real(lambda) + ",";
    csv += std::string(name) + "," + (decay.has_t_star ? format_real(decay.t_star) : "") + "\n";
    ojson r;
    if (sweep) r["lambda"] = lambda;
    r["class"] = name;
    if (decay.has_t_star) r["t_star"] = decay.t_star;
    r["t_max"] = t_max;
    reports.push_back(std::move(r));
  }
  if (format == Format::kCsv) return {csv};
  return {dump(sweep ? reports : reports.front())};
}

CommandResult cmd_diagram(const DiagramOptions& opts, Format format) {
  esd_panel panel;
  if (opts.panel == "i") {
    panel = ESD_PANEL_AMPLITUDE;
  } else if (opts.panel == "ii") {
    panel = ESD_PANEL_PHASE;
  } else if (opts.panel == "iii") {
    panel = ESD_PANEL_COMBINED;
  } else {
    throw ConfigError("panel must be i, ii or iii, got '" + opts.panel + "'");
  }
  if (opts.resolution < 8) throw ConfigError("diagram resolution must be >= 8");
  if (opts.t_max && !(*opts.t_max > 0.0)) throw ConfigError("t_max must be > 0");

  const std::size_t n = static_cast<std::size_t>(opts.resolution) * static_cast<std::size_t>(opts.resolution);
  std::vector<esd_diagram_cell> cells(n);
  std::size_t count = 0;
  check(esd_diagram(panel, opts.resolution, opts.t_max.value_or(0.0), opts.workers, cells.data(), n, &count));

  if (format == Format::kCsv) {
    std::string csv = "a,z,class,t_star\n";
    for (const esd_diagram_cell& c : cells) {
      csv += format_real(c.a) + "," + format_real(c.z) + "," + esd_decay_class_name(c.decay.decay_class) + "," +
             (c.decay.has_t_star ? format_real(c.decay.t_star) : "") + "\n";
    }
    return {csv};
  }
  ojson rows = ojson::array();
  for (const esd_diagram_cell& c : cells) {
    ojson row{{"a", c.a}, {"z", c.z}, {"class", esd_decay_class_name(c.decay.decay_class)}};
    if (c.decay.has_t_star) row["t_star"] = c.decay.t_star;
    rows.push_back(std::move(row));
  }
  return {dump(ojson{{"panel", opts.panel}, {"resolution", opts.resolution}, {"cells", rows}})};
}

CommandResult cmd_additivity(const AdditivityOptions& opts, Format format) {
  if (!(opts.gamma1 >= 0.0) || !(opts.gamma2 >= 0.0)) throw ConfigError("rates must be >= 0");
  if (!(opts.t_max > 0.0)) throw ConfigError("t_max must be > 0");
  if (opts.samples < 2) throw ConfigError("samples must be >= 2");
  if (!(opts.dt > 0.0)) throw ConfigError("dt must be > 0");
  std::vector<double> times(opts.samples);
  for (int i = 0; i < opts.samples; ++i) times[i] = opts.t_max * i / (opts.samples - 1);
  times.back() = opts.t_max;

  std::vector<esd_additivity_row> rows(times.size());
  esd_additivity_summary summary{};
  check(esd_additivity(opts.gamma1, opts.gamma2, times.data(), times.size(), opts.dt, rows.data(), &summary));
  const int code = summary.pass ? kExitOk : kExitValidation;

  if (format == Format::kCsv) {
    std::string csv = "t,kraus,lindblad,analytic\n";
    for (const esd_additivity_row& r : rows) {
      csv += format_real(r.t) + "," + format_real(r.kraus) + "," + format_real(r.lindblad) + "," +
             format_real(r.analytic) + "\n";
    }
    return {csv, code};
  }
  ojson j_rows = ojson::array();
  for (const esd_additivity_row& r : rows) {
    j_rows.push_back({{"t", r.t}, {"kraus", r.kraus}, {"lindblad", r.lindblad}, {"analytic", r.analytic}});
  }
  ojson j{{"gamma1", opts.gamma1},
          {"gamma2", opts.gamma2},
          {"dt", opts.dt},
          {"rows", j_rows},
          {"max_dev_kraus", summary.max_dev_kraus},
          {"max_dev_lindblad", summary.max_dev_lindblad},
          {"status", status_word(summary.pass)}};
  return {dump(j), code};
}

CommandResult cmd_validate(const ValidateOptions& opts, Format format) {
  const esd_validate_options options{opts.amplitude_omega_perturbation, opts.drop_combined_normalization ? 1 : 0};
  esd_validation* raw = nullptr;
  check(esd_validate(&options, &raw));
  const ValidationPtr report(raw);
  const bool pass = esd_validation_all_passed(report.get()) != 0;
  const int code = pass ? kExitOk : kExitValidation;
  const std::size_t n = esd_validation_count(report.get());

  if (format == Format::kCsv) {
    std::string csv = "name,worst,tolerance,status\n";
    for (std::size_t i = 0; i < n; ++i) {
      csv += std::string(esd_validation_name(report.get(), i)) + "," +
             format_real(esd_validation_worst(report.get(), i)) + "," +
             format_real(esd_validation_tolerance(report.get(), i)) + "," +
             status_word(esd_validation_passed(report.get(), i)) + "\n";
    }
    return {csv, code};
  }
  ojson checks = ojson::array();
  for (std::size_t i = 0; i < n; ++i) {
    const double worst = esd_validation_worst(report.get(), i);
    ojson c{{"name", esd_validation_name(report.get(), i)}};
    // Non-finite worst values mean the check could not be evaluated.
    if (std::isfinite(worst)) {
      c["worst"] = worst;
    } else {
      c["worst"] = nullptr;
    }
    c["tolerance"] = esd_validation_tolerance(report.get(), i);
    c["status"] = status_word(esd_validation_passed(report.get(), i));
    c["detail"] = esd_validation_detail(report.get(), i);
    checks.push_back(std::move(c));
  }
  return {dump(ojson{{"checks", checks}, {"status", status_word(pass)}}), code};
}

}  // namespace esdsim
