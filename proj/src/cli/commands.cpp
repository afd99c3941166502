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
#include <limits>
#include <string>

#include "trimer/birman_schwinger.hpp"
#include "trimer/bo_effective.hpp"
#include "trimer/cli.hpp"
#include "trimer/light_particle.hpp"
#include "trimer/specfun.hpp"

namespace trimer::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> x_grid(const RunConfig& c) {
  std::vector<double> xs(c.x_count);
  for (int i = 0; i < c.x_count; ++i) {
    xs[i] = c.x_min + (c.x_max - c.x_min) * i / (c.x_count - 1);
  }
  // Keep the symmetric grids exactly symmetric (and 0 exact).
  if (c.x_min == -c.x_max) {
    for (int i = 0; i < c.x_count / 2; ++i) xs[c.x_count - 1 - i] = -xs[i];
    if (c.x_count % 2 == 1) xs[c.x_count / 2] = 0.0;
  }
  return xs;
}

Cell cell(std::string s) { return Cell(std::move(s)); }
Cell cell(double v) { return Cell(v); }
Cell cell_int(long long v) { return Cell(static_cast<std::int64_t>(v)); }

bo::EffectiveOptions effective_options(const RunConfig& c) {
  bo::EffectiveOptions o;
  if (c.nodes) o.nodes = *c.nodes;
  if (c.L) o.L = *c.L;
  if (c.tol) o.tol = *c.tol;
  return o;
}

}  // namespace

Scaled phys_to_scaled(double M, double m, double beta) {
  if (!(M > 0.0) || !(m > 0.0)) throw DomainError("phys_to_scaled: masses must be positive");
  const double mu = 2.0 * M * m / (2.0 * M + m);
  return {mu, std::sqrt(2.0 * mu / M), 2.0 * mu * beta};
}

Table run_lightspec(const RunConfig& c) {
  require_attractive(c.alpha, "lightspec");
  Table t;
  t.columns = {"x", "neg_lambda0", "neg_lambda1", "N", "V", "R"};
  for (double x : x_grid(c)) {
    const light::LightSpectrum s = light::light_spectrum(c.alpha, x);
    t.rows.push_back({cell(x), cell(-s.lambda0), s.lambda1 ? cell(-*s.lambda1) : Cell{},
                      cell(s.N), cell(c.alpha * c.alpha - s.lambda0),
                      cell(bo::correction_R_or_limit(c.alpha, x))});
  }
  t.grid = {{"x_min", c.x_min}, {"x_max", c.x_max}, {"x_count", c.x_count},
            {"R_at_zero_offset", bo::r_origin_offset(c.alpha)}};
  return t;
}

Table run_potential(const RunConfig& c) {
  require_attractive(c.alpha, "potential");
  Table t;
  t.columns = {"x", "V", "R"};
  for (double x : x_grid(c)) {
    t.rows.push_back({cell(x), cell(bo::potential_V(c.alpha, x)),
                      cell(bo::correction_R_or_limit(c.alpha, x))});
  }
  t.grid = {{"x_min", c.x_min}, {"x_max", c.x_max}, {"x_count", c.x_count},
            {"R_at_zero_offset", bo::r_origin_offset(c.alpha)}};
  return t;
}

Table run_effective(const RunConfig& c) {
  require_attractive(c.alpha, "effective");
  Table t;
  t.columns = {"alpha", "epsilon", "sector", "k", "E_eff", "shifted", "ratio", "s_k", "E_airy"};
  t.grid = nlohmann::json::array();
  const double a2 = c.alpha * c.alpha;
  for (double eps : c.epsilons) {
    for (Sector s : c.sectors) {
      const PhysParams p{c.alpha, eps, s};
      const bo::EffectiveEigs e = bo::effective_eigs(p, c.levels, effective_options(c));
      for (std::size_t k = 0; k < e.levels.size(); ++k) {
        const int ki = static_cast<int>(k);
        t.rows.push_back({cell(c.alpha), cell(eps), cell(std::string(to_string(s))),
                          cell_int(ki), cell(e.levels[k]), cell(e.shifted[k]),
                          cell(e.shifted[k] / (a2 * std::cbrt(eps * eps))),
                          cell(bo::airy_slope(s, ki)), cell(bo::airy_prediction(p, ki))});
      }
      t.grid.push_back({{"epsilon", eps},
                        {"sector", std::string(to_string(s))},
                        {"L", e.L},
                        {"auto_domain", e.auto_domain},
                        {"nodes", e.nodes},
                        {"fine_nodes", e.fine_nodes},
                        {"levels_found", e.levels.size()},
                        {"max_grid_change", e.max_grid_change}});
    }
  }
  return t;
}

Table run_bs(const RunConfig& c) {
  Table t;
  t.columns = {"alpha", "epsilon", "sector", "k",   "converged", "lambda_star",
               "E_bs",  "ratio",   "s_k",    "parity"};
  t.grid = nlohmann::json::array();
  const double a2 = c.alpha * c.alpha;
  for (double eps : c.epsilons) {
    const bs::BsGrid g = bs::make_grid(c.alpha, eps, c.nodes.value_or(bs::kDefaultBsNodes),
                                       c.nu_max.value_or(0.0));
    bs::BsOptions o;
    if (c.tol) o.tol = *c.tol;
    for (Sector s : c.sectors) {
      const PhysParams p{c.alpha, eps, s};
      const auto res = bs::bs_bound_states(p, c.levels, g, o);
      for (const auto& r : res) {
        const double ratio = r.converged ? (r.E + a2) / (a2 * std::cbrt(eps * eps)) : kNaN;
        t.rows.push_back({cell(c.alpha), cell(eps), cell(std::string(to_string(s))),
                          cell_int(r.level), Cell(r.converged), cell(r.lambda_star), cell(r.E),
                          cell(ratio), cell(bo::airy_slope(s, r.level)),
                          r.converged ? cell(r.parity) : Cell{}});
      }
    }
    t.grid.push_back({{"epsilon", eps},
                      {"nodes", g.size()},
                      {"nu_max", g.nu_max},
                      {"order", g.order},
                      {"tol", o.tol},
                      {"refine_check", o.refine_check}});
  }
  return t;
}

Table run_asymptotic(const RunConfig& c) {
  require_attractive(c.alpha, "asymptotic");
  const Table b = run_bs(c);
  const Table e = run_effective(c);
  Table t;
  t.columns = {"alpha", "epsilon", "sector", "k", "E_bs", "E_eff", "E_airy", "ratio", "s_k"};
  t.grid = {{"bs", b.grid}, {"effective", e.grid}};
  const double a2 = c.alpha * c.alpha;
  for (double eps : c.epsilons) {
    for (Sector s : c.sectors) {
      const std::string sec(to_string(s));
      for (int k = 0; k < c.levels; ++k) {
        double ebs = kNaN, eeff = kNaN;
        for (std::size_t i = 0; i < b.rows.size(); ++i) {
          if (b.number(i, "epsilon") == eps && std::get<std::string>(b.rows[i][2]) == sec &&
              b.number(i, "k") == k) {
            ebs = b.number(i, "E_bs");
          }
        }
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
          if (e.number(i, "epsilon") == eps && std::get<std::string>(e.rows[i][2]) == sec &&
              e.number(i, "k") == k) {
            eeff = e.number(i, "E_eff");
          }
        }
        const PhysParams p{c.alpha, eps, s};
        const double ratio = (ebs + a2) / (a2 * std::cbrt(eps * eps));
        t.rows.push_back({cell(c.alpha), cell(eps), cell(sec), cell_int(k), cell(ebs), cell(eeff),
                          cell(bo::airy_prediction(p, k)), cell(ratio),
                          cell(bo::airy_slope(s, k))});
      }
    }
  }
  return t;
}

Table run_airy(const RunConfig& c) {
  Table t;
  t.columns = {"k", "sigma", "kind", "residual", "lower", "upper"};
  for (int k = 0; k <= c.k_max; ++k) {
    const specfun::AirySigma s = specfun::sigma(k);
    const bool zero = s.kind == specfun::SigmaKind::Zero;
    const double res = zero ? specfun::airy_ai(s.value) : specfun::airy_ai_prime(s.value);
    const auto [lo, hi] = specfun::sigma_bounds(k);
    t.rows.push_back({cell_int(k), cell(s.value), cell(std::string(zero ? "zero" : "extremum")),
                      cell(res), cell(lo), cell(hi)});
  }
  t.grid = {{"k_max", c.k_max}};
  return t;
}

Table run_convert(const RunConfig& c) {
  const Scaled s = phys_to_scaled(c.mass_heavy, c.mass_light, c.beta);
  Table t;
  t.columns = {"M", "m", "beta", "mu", "epsilon", "alpha"};
  t.rows.push_back({cell(c.mass_heavy), cell(c.mass_light), cell(c.beta), cell(s.mu),
                    cell(s.epsilon), cell(s.alpha)});
  return t;
}

Table run_command(const RunConfig& c) {
  validate_config(c);
  if (c.command == "lightspec") return run_lightspec(c);
  if (c.command == "potential") return run_potential(c);
  if (c.command == "effective") return run_effective(c);
  if (c.command == "bs") return run_bs(c);
  if (c.command == "asymptotic") return run_asymptotic(c);
  if (c.command == "airy") return run_airy(c);
  if (c.command == "convert") return run_convert(c);
  throw UsageError("run_command: '" + c.command + "' is not a table command");
}

}  // namespace trimer::cli
