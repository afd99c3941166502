// Copyright 2026 The trimer Authors
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

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "trimer/cli.hpp"

namespace trimer::cli {

namespace {

constexpr std::string_view kCommands[] = {"lightspec", "potential",  "effective", "bs",
                                          "asymptotic", "airy",      "convert",   "validate"};

bool known_command(std::string_view c) {
  for (auto k : kCommands) {
    if (k == c) return true;
  }
  return false;
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void validate_config(const RunConfig& c) {
  if (!known_command(c.command)) throw UsageError("unknown command '" + c.command + "'");
  if (!std::isfinite(c.alpha)) throw UsageError("--alpha must be finite");
  if (c.epsilons.empty()) throw UsageError("--eps needs at least one value");
  for (double e : c.epsilons) {
    if (!(e > 0.0) || !std::isfinite(e)) throw UsageError("--eps values must be positive");
    const bool solver = c.command == "effective" || c.command == "bs" || c.command == "asymptotic";
    if (solver && e > 1.0) throw UsageError("--eps values must lie in (0, 1] for the solvers");
  }
  if (c.sectors.empty()) throw UsageError("--sector needs at least one value");
  if (c.levels < 1 || c.levels > 20) throw UsageError("--levels must lie in [1, 20]");
  if (c.nodes && *c.nodes < 3) throw UsageError("--nodes must be >= 3");
  if (c.nodes && c.command == "bs" && *c.nodes > 4800) {
    throw UsageError("--nodes is capped at 4800 for the momentum grid");
  }
  if (c.nu_max && !(*c.nu_max > 0.0)) throw UsageError("--nu-max must be positive");
  if (c.L && !(*c.L > 0.0)) throw UsageError("--L must be positive");
  if (c.tol && !(*c.tol > 0.0 && *c.tol < 1e-2)) throw UsageError("--tol must lie in (0, 1e-2)");
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  if (!(c.x_min < c.x_max) || c.x_count < 2) throw UsageError("x grid needs x-min < x-max, count >= 2");
  if (c.command == "convert" && !(c.mass_heavy > 0.0 && c.mass_light > 0.0)) {
    throw UsageError("masses must be positive");
  }
  if (c.k_max < 0 || c.k_max > 50) throw UsageError("--k-max must lie in [0, 50]");
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["alpha"] = c.alpha;
  j["eps"] = c.epsilons;
  std::vector<std::string> sectors;
  for (Sector s : c.sectors) sectors.emplace_back(to_string(s));
  j["sector"] = sectors;
  j["levels"] = c.levels;
  put_optional(j, "nodes", c.nodes);
  put_optional(j, "nu_max", c.nu_max);
  put_optional(j, "L", c.L);
  put_optional(j, "tol", c.tol);
  j["format"] = c.format;
  j["out"] = c.out;
  j["x_min"] = c.x_min;
  j["x_max"] = c.x_max;
  j["x_count"] = c.x_count;
  j["M"] = c.mass_heavy;
  j["m"] = c.mass_light;
  j["beta"] = c.beta;
  j["k_max"] = c.k_max;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.alpha = j.at("alpha").get<double>();
    c.epsilons = j.at("eps").get<std::vector<double>>();
    c.sectors.clear();
    for (const auto& s : j.at("sector")) c.sectors.push_back(parse_sector(s.get<std::string>()));
    c.levels = j.at("levels").get<int>();
    c.nodes = get_optional<std::size_t>(j, "nodes");
    c.nu_max = get_optional<double>(j, "nu_max");
    c.L = get_optional<double>(j, "L");
    c.tol = get_optional<double>(j, "tol");
    c.format = j.value("format", std::string("csv"));
    c.out = j.value("out", std::string());
    c.x_min = j.value("x_min", c.x_min);
    c.x_max = j.value("x_max", c.x_max);
    c.x_count = j.value("x_count", c.x_count);
    c.mass_heavy = j.value("M", c.mass_heavy);
    c.mass_light = j.value("m", c.mass_light);
    c.beta = j.value("beta", c.beta);
    c.k_max = j.value("k_max", c.k_max);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed embedded config: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("malformed embedded config: ") + e.what());
  }
}

RunConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config source '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return config_from_json(nlohmann::json::parse(text).at("metadata").at("config"));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("'" + path + "': " + e.what());
    }
  }
  std::istringstream lines(text);
  std::string line;
  const std::string key = "# config: ";
  while (std::getline(lines, line)) {
    if (line.rfind(key, 0) == 0) {
      try {
        return config_from_json(nlohmann::json::parse(line.substr(key.size())));
      } catch (const nlohmann::json::exception& e) {
        throw UsageError("'" + path + "': " + e.what());
      }
    }
  }
  throw UsageError("'" + path + "' carries no embedded config");
}

}  // namespace trimer::cli
