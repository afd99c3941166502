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

#include <cctype>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trimer/cli.hpp"
#include "trimer/core.hpp"

namespace {

using trimer::cli::RunConfig;

void print_report(const std::vector<trimer::cli::CheckRecord>& records, std::ostream& os) {
  for (const auto& r : records) {
    std::string status = r.status;
    for (char& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    os << "[" << status << "] " << r.id << " " << r.name << ": " << r.measured << " (bound: " << r.bound
       << "; " << secs << " s)\n";
    for (const auto& d : r.details) os << "    " << d << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace trimer;
  CLI::App app{"Bound states of two heavy particles and one light particle with contact interactions"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string config_path;
  std::vector<std::string> sectors;
  std::size_t nodes = 0;
  double nu_max = 0.0, L = 0.0, tol = 0.0;
  std::vector<int> only;

  app.add_option("--config", config_path, "Re-run the configuration embedded in an emitted file");

  auto common = [&](CLI::App* sub, bool solver) {
    sub->add_option("--alpha", cfg.alpha, "Contact coupling (bound states need alpha < 0)");
    sub->add_option("--out", cfg.out, "Output path (default: standard output)");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (!solver) return;
    sub->add_option("--eps", cfg.epsilons, "Mass-ratio parameters")->expected(1, -1);
    sub->add_option("--sector", sectors, "b and/or f")->expected(1, -1);
    sub->add_option("--levels", cfg.levels, "Levels per sector");
    sub->add_option("--nodes", nodes, "Grid nodes (bs: momentum nodes, effective: FD nodes)");
    sub->add_option("--nu-max", nu_max, "Momentum cutoff of the finite panels");
    sub->add_option("--L", L, "Effective-solver half-line length");
    sub->add_option("--tol", tol, "Solver tolerance in units of alpha^2");
  };
  auto grid_flags = [&](CLI::App* sub) {
    sub->add_option("--x-min", cfg.x_min);
    sub->add_option("--x-max", cfg.x_max);
    sub->add_option("--x-count", cfg.x_count);
  };

  std::vector<CLI::App*> subs;
  auto* lightspec = app.add_subcommand("lightspec", "Light-particle eigenvalues on an x grid");
  common(lightspec, false);
  grid_flags(lightspec);
  auto* potential = app.add_subcommand("potential", "Effective potential V and correction R");
  common(potential, false);
  grid_flags(potential);
  auto* effective = app.add_subcommand("effective", "Eigenvalues of the effective 1D operator");
  common(effective, true);
  auto* bs = app.add_subcommand("bs", "Exact bound states from the boundary operator");
  common(bs, true);
  auto* asymptotic = app.add_subcommand("asymptotic", "Exact, effective and Airy energies side by side");
  common(asymptotic, true);
  auto* airy = app.add_subcommand("airy", "Airy constants sigma_k");
  common(airy, false);
  airy->add_option("--k-max", cfg.k_max, "Largest index");
  auto* convert = app.add_subcommand("convert", "Physical masses and coupling to (epsilon, alpha)");
  common(convert, false);
  convert->add_option("--M", cfg.mass_heavy, "Heavy mass");
  convert->add_option("--m", cfg.mass_light, "Light mass");
  convert->add_option("--beta", cfg.beta, "Physical coupling");
  auto* validate = app.add_subcommand("validate", "Run the acceptance checks");
  common(validate, true);
  validate->add_option("--only", only, "Restrict to these check ids")->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (!config_path.empty()) {
      if (!app.get_subcommands().empty()) throw cli::UsageError("--config takes no subcommand");
      RunConfig c = cli::config_from_file(config_path);
      c.out.clear();
      cli::emit(cli::run_command(c), c);
      return cli::kOk;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return cli::kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!sectors.empty()) {
      cfg.sectors.clear();
      for (const auto& s : sectors) cfg.sectors.push_back(parse_sector(s));
    }
    if (nodes > 0) cfg.nodes = nodes;
    if (nu_max > 0.0) cfg.nu_max = nu_max;
    if (L > 0.0) cfg.L = L;
    if (tol > 0.0) cfg.tol = tol;
    cli::validate_config(cfg);

    if (cfg.command == "validate") {
      cli::ValidateOptions o = cli::validate_options_from(cfg);
      o.only = only;
      const auto records = cli::run_validate(o);
      print_report(records, std::cout);
      if (!cfg.out.empty()) cli::emit(cli::validation_table(records), cfg);
      return cli::all_passed(records) ? cli::kOk : cli::kValidationFailed;
    }
    cli::emit(cli::run_command(cfg), cfg);
    return cli::kOk;
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return cli::kNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kNonConvergence;
  }
}
