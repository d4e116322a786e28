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

#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace esdsim {
namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return 0.0;
  if (!it->is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return it->get<double>();
}

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw ConfigError(what + " must be finite");
}

void check_noise(const NoiseEntry& n) {
  if (n.target != "A" && n.target != "B") throw ConfigError("noise target must be A or B, got '" + n.target + "'");
  if (n.kind != "amplitude" && n.kind != "phase") {
    throw ConfigError("noise kind must be amplitude or phase, got '" + n.kind + "'");
  }
  if (!(n.rate >= 0.0) || !std::isfinite(n.rate)) throw ConfigError("noise rate must be finite and >= 0");
}

}  // namespace

void RunConfig::check() const {
  if (const auto* lam = std::get_if<LambdaParams>(&state)) {
    if (lam->values.empty()) throw ConfigError("lambda list is empty");
    for (double v : lam->values) {
      if (!(v > 0.0 && v <= 4.0)) throw ConfigError("lambda must lie in (0, 4]");
    }
  } else {
    const auto& x = std::get<XParams>(state);
    for (double v : {x.a, x.b, x.c, x.d, x.z_re, x.z_im}) require_finite(v, "state entry");
  }
  for (const NoiseEntry& n : noises) check_noise(n);
  if (t_max && !(*t_max > 0.0 && std::isfinite(*t_max))) throw ConfigError("t_max must be > 0");
  if (samples < 2) throw ConfigError("samples must be >= 2");
  if (!(dt > 0.0 && std::isfinite(dt))) throw ConfigError("dt must be > 0");
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  try {
    const bool has_state = j.contains("state");
    const bool has_lambda = j.contains("lambda");
    if (has_state && has_lambda) throw ConfigError("give either 'state' or 'lambda', not both");
    if (has_state) {
      const json& s = j.at("state");
      if (!s.is_object()) throw ConfigError("'state' must be an object");
      for (const auto& [key, _] : s.items()) {
        if (key != "a" && key != "b" && key != "c" && key != "d" && key != "z_re" && key != "z_im") {
          throw ConfigError("unknown state key '" + key + "'");
        }
      }
      cfg.state = XParams{number(s, "a"), number(s, "b"), number(s, "c"),
                          number(s, "d"), number(s, "z_re"), number(s, "z_im")};
    } else if (has_lambda) {
      const json& l = j.at("lambda");
      LambdaParams lam;
      if (l.is_number()) {
        lam.values.push_back(l.get<double>());
      } else if (l.is_array()) {
        for (const json& v : l) {
          if (!v.is_number()) throw ConfigError("'lambda' entries must be numbers");
          lam.values.push_back(v.get<double>());
        }
      } else {
        throw ConfigError("'lambda' must be a number or an array of numbers");
      }
      cfg.state = lam;
    }
    if (j.contains("noises")) {
      const json& ns = j.at("noises");
      if (!ns.is_array()) throw ConfigError("'noises' must be an array");
      for (const json& n : ns) {
        if (!n.is_object()) throw ConfigError("each noise must be an object");
        cfg.noises.push_back({n.at("target").get<std::string>(), n.at("kind").get<std::string>(),
                              n.at("rate").get<double>()});
      }
    }
    if (j.contains("t_max")) cfg.t_max = j.at("t_max").get<double>();
    if (j.contains("samples")) {
      const json& s = j.at("samples");
      if (!s.is_number_integer()) throw ConfigError("'samples' must be an integer");
      cfg.samples = s.get<int>();
    }
    if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  cfg.check();
  return cfg;
}

nlohmann::ordered_json config_to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  if (const auto* lam = std::get_if<LambdaParams>(&cfg.state)) {
    if (lam->sweep()) {
      j["lambda"] = lam->values;
    } else {
      j["lambda"] = lam->values.front();
    }
  } else {
    const auto& x = std::get<XParams>(cfg.state);
    j["state"] = {{"a", x.a}, {"b", x.b}, {"c", x.c}, {"d", x.d}, {"z_re", x.z_re}, {"z_im", x.z_im}};
  }
  j["noises"] = nlohmann::ordered_json::array();
  for (const NoiseEntry& n : cfg.noises) {
    j["noises"].push_back({{"target", n.target}, {"kind", n.kind}, {"rate", n.rate}});
  }
  if (cfg.t_max) j["t_max"] = *cfg.t_max;
  j["samples"] = cfg.samples;
  j["dt"] = cfg.dt;
  if (cfg.output) j["output"] = *cfg.output;
  if (cfg.format) j["format"] = format_name(*cfg.format);
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

NoiseEntry parse_noise_flag(const std::string& text) {
  std::stringstream ss(text);
  std::string target, kind, rate;
  if (!std::getline(ss, target, ':') || !std::getline(ss, kind, ':') || !std::getline(ss, rate)) {
    throw ConfigError("noise flag must look like TARGET:KIND:RATE, got '" + text + "'");
  }
  NoiseEntry n{target, kind, 0.0};
  try {
    std::size_t used = 0;
    n.rate = std::stod(rate, &used);
    if (used != rate.size()) throw std::invalid_argument(rate);
  } catch (const std::exception&) {
    throw ConfigError("noise rate '" + rate + "' is not a number");
  }
  check_noise(n);
  return n;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw ConfigError("format must be csv or json, got '" + text + "'");
}

const char* format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

}  // namespace esdsim
