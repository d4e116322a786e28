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

#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "esd/esd.h"

namespace esdsim {
namespace {

struct Flags {
  std::string config_path;
  std::string output;
  std::string format;
  std::uint64_t seed = 0;
  std::string write_config;

  std::vector<double> lambda;
  std::optional<double> a, b, c, d, z_re, z_im;
  std::vector<std::string> noises;
  std::optional<double> t_max;
  std::optional<int> samples;
  std::optional<double> dt;

  std::string panel = "i";
  int resolution = 64;
  unsigned workers = 1;

  double gamma1 = 1.0;
  double gamma2 = 1.0;

  double perturb_omega = 0.0;
  bool drop_normalization = false;
};

void add_run_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--lambda", f.lambda, "Lambda-family parameter; several values sweep")->delimiter(',');
  sub->add_option("--a", f.a, "X-state population of ++");
  sub->add_option("--b", f.b, "X-state population of +-");
  sub->add_option("--c", f.c, "X-state population of -+");
  sub->add_option("--d", f.d, "X-state population of --");
  sub->add_option("--z-re", f.z_re, "Real part of the +-/-+ coherence");
  sub->add_option("--z-im", f.z_im, "Imaginary part of the +-/-+ coherence");
  sub->add_option("--noise", f.noises, "Noise as TARGET:KIND:RATE, e.g. A:amplitude:1 (repeatable)");
  sub->add_option("--t-max", f.t_max, "Time horizon");
  sub->add_option("--samples", f.samples, "Number of time samples");
  sub->add_option("--dt", f.dt, "Integrator step");
}

RunConfig merged_config(const Flags& f) {
  RunConfig cfg = f.config_path.empty() ? RunConfig{} : load_config(f.config_path);
  if (!f.lambda.empty()) cfg.state = LambdaParams{f.lambda};
  if (f.a || f.b || f.c || f.d || f.z_re || f.z_im) {
    if (!f.lambda.empty()) throw ConfigError("give either --lambda or X-state entries, not both");
    XParams x = std::holds_alternative<XParams>(cfg.state) ? std::get<XParams>(cfg.state) : XParams{};
    x.a = f.a.value_or(x.a);
    x.b = f.b.value_or(x.b);
    x.c = f.c.value_or(x.c);
    x.d = f.d.value_or(x.d);
    x.z_re = f.z_re.value_or(x.z_re);
    x.z_im = f.z_im.value_or(x.z_im);
    cfg.state = x;
  }
  if (!f.noises.empty()) {
    cfg.noises.clear();
    for (const std::string& n : f.noises) cfg.noises.push_back(parse_noise_flag(n));
  }
  if (f.t_max) cfg.t_max = f.t_max;
  if (f.samples) cfg.samples = *f.samples;
  if (f.dt) cfg.dt = *f.dt;
  if (!f.output.empty()) cfg.output = f.output;
  if (!f.format.empty()) cfg.format = parse_format(f.format);
  cfg.check();
  return cfg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement sudden death under amplitude and phase noise", "esdsim"};
  app.set_version_flag("--version", std::string(esd_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--config", f.config_path, "JSON run configuration");
  app.add_option("--output", f.output, "Write the report here instead of stdout");
  app.add_option("--format", f.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", f.seed, "Reserved; every computation is deterministic");
  app.add_option("--write-config", f.write_config, "Also write the effective run configuration as JSON");

  CLI::App* trace = app.add_subcommand("trace", "Concurrence against time");
  add_run_flags(trace, f);
  CLI::App* esd = app.add_subcommand("esd", "Decay class and sudden-death time");
  add_run_flags(esd, f);

  CLI::App* diagram = app.add_subcommand("diagram", "Decay classes over the (a, |z|) plane");
  diagram->add_option("--panel", f.panel, "i: amplitude, ii: phase, iii: both")
      ->check(CLI::IsMember({"i", "ii", "iii"}));
  diagram->add_option("--resolution", f.resolution, "Grid points per axis (>= 8)");
  diagram->add_option("--workers", f.workers, "Worker threads");
  diagram->add_option("--t-max", f.t_max, "Time horizon");

  CLI::App* additivity = app.add_subcommand("additivity", "Single-qubit coherence under both noises");
  additivity->add_option("--gamma1", f.gamma1, "Amplitude rate");
  additivity->add_option("--gamma2", f.gamma2, "Phase rate");
  additivity->add_option("--t-max", f.t_max, "Last time on the grid (default 5)");
  additivity->add_option("--samples", f.samples, "Grid points (default 20)");
  additivity->add_option("--dt", f.dt, "Integrator step");

  CLI::App* validate = app.add_subcommand("validate", "Closed forms against simulation");
  validate->add_option("--perturb-amplitude-omega", f.perturb_omega)->group("");
  validate->add_flag("--drop-combined-normalization", f.drop_normalization)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << esd_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    CommandResult result;
    std::optional<std::string> output = f.output.empty() ? std::nullopt : std::optional(f.output);
    if (*trace || *esd) {
      const RunConfig cfg = merged_config(f);
      output = cfg.output;
      if (!f.write_config.empty()) write_file(f.write_config, config_to_json(cfg).dump(2) + "\n");
      const Format fmt = cfg.format.value_or(*trace ? Format::kCsv : Format::kJson);
      result = *trace ? cmd_trace(cfg, fmt) : cmd_esd(cfg, fmt);
    } else if (*diagram) {
      const Format fmt = f.format.empty() ? Format::kCsv : parse_format(f.format);
      result = cmd_diagram({f.panel, f.resolution, f.workers, f.t_max}, fmt);
    } else if (*additivity) {
      const Format fmt = f.format.empty() ? Format::kJson : parse_format(f.format);
      AdditivityOptions opts{f.gamma1, f.gamma2};
      if (f.t_max) opts.t_max = *f.t_max;
      if (f.samples) opts.samples = *f.samples;
      if (f.dt) opts.dt = *f.dt;
      result = cmd_additivity(opts, fmt);
    } else {
      const Format fmt = f.format.empty() ? Format::kJson : parse_format(f.format);
      result = cmd_validate({f.perturb_omega, f.drop_normalization}, fmt);
    }

    if (output) {
      write_file(*output, result.text);
    } else {
      out << result.text;
    }
    if (result.exit_code == kExitValidation) err << "validation failed\n";
    return result.exit_code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "error: invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SeparableError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSeparable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace esdsim
