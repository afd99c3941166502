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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "trimer/cli.hpp"
#include "trimer/core.hpp"

using namespace trimer;
using namespace trimer::cli;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("TRIMER_CLI");
  return p ? p : "";
}

int run(const std::string& args, const fs::path& stdout_file = {}) {
  std::string cmd = cli_path() + " " + args;
  cmd += stdout_file.empty() ? " > /dev/null 2>&1" : " > " + stdout_file.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Header and rows, without the '#' metadata block.
std::string data_lines(const std::string& text) {
  std::istringstream in(text);
  std::string out;
  for (std::string l; std::getline(in, l);) {
    if (l.empty() || l[0] != '#') out += l + "\n";
  }
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "trimer_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("physical to scaled parameters") {
  const Scaled s = phys_to_scaled(1.0, 0.01, -50.25);
  CHECK(s.mu == doctest::Approx(0.00995025).epsilon(1e-6));
  CHECK(s.epsilon == doctest::Approx(std::sqrt(2.0 * 0.02 / 2.01)).epsilon(1e-15));
  CHECK(s.epsilon == doctest::Approx(0.14107).epsilon(1e-4));
  CHECK(s.alpha == doctest::Approx(-1.0).epsilon(1e-4));
  const Scaled z = phys_to_scaled(1.0, 1e-12, -3.0);
  CHECK(z.epsilon < 1e-5);
  CHECK(std::abs(z.alpha) < 1e-10);
  const Scaled e = phys_to_scaled(1.0, 1.0, 0.0);
  CHECK(e.alpha == 0.0);
  CHECK(e.epsilon == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(phys_to_scaled(0.0, 1.0, -1.0), DomainError);
}

TEST_CASE("double formatting round-trips with 17 significant digits") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.0) == "-1");
}

TEST_CASE("empty tables") {
  Table t;
  t.columns = {"a", "b"};
  RunConfig c;
  std::ostringstream csv;
  emit(t, c, csv);
  std::string last;
  std::istringstream lines(csv.str());
  int data = 0;
  for (std::string l; std::getline(lines, l);) {
    if (!l.empty() && l[0] != '#') {
      ++data;
      last = l;
    }
  }
  CHECK(data == 1);
  CHECK(last == "a,b");
  c.format = "json";
  std::ostringstream js;
  emit(t, c, js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc.at("records").is_array());
  CHECK(doc.at("records").empty());
}

TEST_CASE("JSON round trip is bit exact") {
  RunConfig c;
  c.command = "lightspec";
  c.alpha = -2.0;
  c.x_count = 41;
  c.format = "json";
  const Table t = run_lightspec(c);
  std::ostringstream os;
  emit(t, c, os);
  const Table back = table_from_json(nlohmann::json::parse(os.str()));
  REQUIRE(back.columns == t.columns);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (const auto& col : t.columns) {
      const double a = t.number(i, col), b = back.number(i, col);
      CHECK(((std::isnan(a) && std::isnan(b)) || a == b));
    }
  }
  const RunConfig again = config_from_json(metadata(t, c).at("config"));
  CHECK(again.alpha == c.alpha);
  CHECK(again.x_count == c.x_count);
}

TEST_CASE("light-particle dataset") {
  RunConfig c;
  c.command = "lightspec";
  c.alpha = -2.0;
  const Table t = run_lightspec(c);
  CHECK(t.rows.size() == 401);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double x = t.number(i, "x"), l1 = t.number(i, "neg_lambda1");
    if (std::abs(x) > 1.0) {
      CHECK(l1 > -1.0);
      CHECK(l1 < 0.0);
    } else {
      CHECK(std::isnan(l1));
    }
    if (x == 0.0) CHECK(t.number(i, "neg_lambda0") == -4.0);
  }
  c.alpha = -1.0;
  const Table u = run_lightspec(c);
  CHECK(u.number(200, "x") == 0.0);
  CHECK(u.number(200, "neg_lambda0") == -1.0);
  CHECK(std::isnan(u.number(200, "neg_lambda1")));
  CHECK(std::abs(u.number(400, "neg_lambda0") + 0.25) <= 2e-2);
  CHECK(std::abs(u.number(400, "neg_lambda1") + 0.25) <= 2e-2);
}

TEST_CASE("Airy table and CSV column order") {
  RunConfig c;
  c.command = "airy";
  c.k_max = 4;
  const Table t = run_command(c);
  CHECK(t.rows.size() == 5);
  CHECK(t.columns.front() == "k");
  CHECK(t.number(0, "sigma") == doctest::Approx(-1.0187929716).epsilon(1e-10));
}

TEST_CASE("configuration validation") {
  RunConfig c;
  c.epsilons = {2.0};
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c = RunConfig{};
  c.format = "xml";
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c = RunConfig{};
  c.command = "nonsense";
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c = RunConfig{};
  c.levels = 0;
  CHECK_THROWS_AS(validate_config(c), UsageError);
  CHECK_NOTHROW(validate_config(RunConfig{}));
}

TEST_CASE("asymptotic table combines the solvers") {
  RunConfig c;
  c.command = "asymptotic";
  c.epsilons = {0.2};
  c.levels = 1;
  c.nodes = 320;
  const Table t = run_command(c);
  REQUIRE(t.rows.size() == 1);
  const double ebs = t.number(0, "E_bs"), eeff = t.number(0, "E_eff"), eairy = t.number(0, "E_airy");
  CHECK(ebs > -1.0);
  CHECK(std::abs(ebs - eeff) < 0.05);
  CHECK(eairy == doctest::Approx(-1.0 + 1.0187929716 * std::cbrt(0.04)).epsilon(1e-10));
}

TEST_CASE("command-line exit codes") {
  if (cli_path().empty()) return;
  CHECK(run("--version") == 0);
  CHECK(run("bs --bogus") == kUsage);
  CHECK(run("bs --eps 2") == kUsage);
  CHECK(run("effective --alpha 1") == kUsage);
  CHECK(run("convert --M 1 --m 0.01 --beta -50.25") == kOk);
  CHECK(run("validate --only 4") == kOk);
  CHECK(run("validate --alpha 1 --only 1 8 11") == kOk);
  CHECK(run("validate --nodes 50 --only 8") == kValidationFailed);
}

TEST_CASE("skipped checks report no bound states") {
  ValidateOptions o;
  o.alpha = 1.0;
  o.only = {1, 4, 8};
  const auto r = run_validate(o);
  REQUIRE(r.size() == 3);
  CHECK(r[0].status == "skip");
  CHECK(r[0].measured.find("no bound states") != std::string::npos);
  CHECK(r[1].status == "pass");
  CHECK(r[2].status == "skip");
  CHECK(all_passed(r));
}

TEST_CASE("embedded configuration reproduces the output") {
  if (cli_path().empty()) return;
  const fs::path first = scratch("bs.json"), second = scratch("bs_again.json");
  REQUIRE(run("bs --eps 0.2 --sector b f --levels 1 --nodes 320 --format json --out " + first.string()) == 0);
  REQUIRE(run("--config " + first.string(), second) == 0);
  const Table a = table_from_json(nlohmann::json::parse(slurp(first)));
  const Table b = table_from_json(nlohmann::json::parse(slurp(second)));
  REQUIRE(a.rows.size() == 2);
  REQUIRE(b.rows.size() == 2);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const double x = a.number(i, "E_bs"), y = b.number(i, "E_bs");
    CHECK(std::abs(x - y) <= 1e-12 * std::abs(x));
  }
  const fs::path csv = scratch("light.csv"), csv2 = scratch("light_again.csv");
  REQUIRE(run("lightspec --x-count 21 --out " + csv.string()) == 0);
  REQUIRE(run("--config " + csv.string(), csv2) == 0);
  CHECK(data_lines(slurp(csv)) == data_lines(slurp(csv2)));
}
