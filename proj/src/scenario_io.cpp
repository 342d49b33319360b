// Copyright 2026 The coalradio Authors
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

#include "coalradio/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coalradio/errors.hpp"

namespace coalradio {
namespace {

using nlohmann::json;

constexpr const char* kFormat = "coalradio-scenario/1";

json noise_to_json(const NoiseSpec& noise) {
  return {{"unit", noise.unit == PowerUnit::kDbm ? "dBm" : "W"},
          {"value", noise.value}};
}

NoiseSpec noise_from_json(const json& j) {
  NoiseSpec noise;
  const std::string unit = j.at("unit").get<std::string>();
  if (unit == "dBm") {
    noise.unit = PowerUnit::kDbm;
  } else if (unit == "W") {
    noise.unit = PowerUnit::kWatts;
  } else {
    throw InvalidParams("noise unit must be 'dBm' or 'W', got '" + unit + "'");
  }
  noise.value = j.at("value").get<double>();
  return noise;
}

// Seeds are 64-bit; JSON readers commonly lose precision above 2^53, so they
// are written as decimal strings.
std::uint64_t seed_from_json(const json& j) {
  if (j.is_string()) return std::stoull(j.get<std::string>());
  return j.get<std::uint64_t>();
}

}  // namespace

std::string scenario_to_string(const Scenario& s) {
  json j;
  j["format"] = kFormat;
  j["num_pu"] = s.num_pu;
  j["num_su"] = s.num_su;
  j["demands"] = s.demands;
  j["seed"] = std::to_string(s.seed);
  if (s.is_raw()) {
    json caps = json::array();
    for (const auto& e : s.raw_capacities->entries()) {
      caps.push_back({{"from", e.from.to_string()},
                      {"to", e.to.to_string()},
                      {"value", e.capacity}});
    }
    j["capacities"] = caps;
  } else {
    json pos = json::array();
    for (const Point& p : s.positions) pos.push_back({p.x, p.y});
    j["positions"] = pos;
    j["tx_power_watts"] = s.tx_power_watts;
    j["noise"] = noise_to_json(s.noise);
    j["pathloss_exponent"] = s.pathloss_exponent;
    json fading;
    fading["mode"] = s.fading == FadingMode::kRayleigh ? "rayleigh" : "off";
    if (s.fading == FadingMode::kRayleigh) {
      fading["seed"] = std::to_string(s.fading_seed);
    }
    j["fading"] = fading;
  }
  return j.dump(2) + "\n";
}

Scenario scenario_from_string(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidParams(std::string("scenario is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", std::string()) != kFormat) {
      throw InvalidParams(std::string("scenario format must be '") + kFormat +
                          "'");
    }
    Scenario s;
    s.num_pu = j.at("num_pu").get<int>();
    s.num_su = j.at("num_su").get<int>();
    s.demands = j.at("demands").get<std::vector<double>>();
    s.seed = seed_from_json(j.at("seed"));
    if (j.contains("capacities")) {
      CapacityTable table(s.num_pu, s.num_su);
      for (const json& e : j.at("capacities")) {
        table.set(NodeId::parse(e.at("from").get<std::string>()),
                  NodeId::parse(e.at("to").get<std::string>()),
                  e.at("value").get<double>());
      }
      s.raw_capacities = std::move(table);
    } else {
      for (const json& p : j.at("positions")) {
        if (!p.is_array() || p.size() != 2) {
          throw InvalidParams("position entries must be [x, y] pairs");
        }
        s.positions.push_back({p[0].get<double>(), p[1].get<double>()});
      }
      s.tx_power_watts = j.at("tx_power_watts").get<double>();
      s.noise = noise_from_json(j.at("noise"));
      s.pathloss_exponent = j.at("pathloss_exponent").get<double>();
      const json& fading = j.at("fading");
      const std::string mode = fading.at("mode").get<std::string>();
      if (mode == "rayleigh") {
        s.fading = FadingMode::kRayleigh;
        s.fading_seed = seed_from_json(fading.at("seed"));
        s.fading_gains = sample_fading(s.num_nodes(), s.fading_seed);
      } else if (mode != "off") {
        throw InvalidParams("fading mode must be 'off' or 'rayleigh'");
      }
    }
    validate(s);
    return s;
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("malformed scenario: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_scenario(const std::filesystem::path& path, const Scenario& scenario) {
  write_text_file(path, scenario_to_string(scenario));
}

Scenario read_scenario(const std::filesystem::path& path) {
  return scenario_from_string(read_text_file(path));
}

}  // namespace coalradio
