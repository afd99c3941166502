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

#include "trimer/birman_schwinger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "trimer/kernels.hpp"

namespace trimer::bs {

namespace {

double sector_sign(Sector s) { return s == Sector::Bosonic ? 1.0 : -1.0; }

// Growth factor g with h0 (g^P - 1) / (g - 1) = length.
double panel_growth(double h0, int panels, double length) {
  if (h0 * panels >= length) return 1.0;
  auto total = [&](double g) { return h0 * std::expm1(panels * std::log(g)) / (g - 1.0); };
  double lo = 1.0 + 1e-12, hi = 2.0;
  while (total(hi) < length) hi = 1.0 + 2.0 * (hi - 1.0);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < length ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

numerics::Grid1D BsGrid::full() const {
  const std::size_t m = half_nodes.size();
  std::vector<double> nodes(2 * m), weights(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    nodes[m - 1 - i] = -half_nodes[i];
    weights[m - 1 - i] = half_weights[i];
    nodes[m + i] = half_nodes[i];
    weights[m + i] = half_weights[i];
  }
  return numerics::Grid1D(std::move(nodes), std::move(weights));
}

double default_nu_max(double alpha, double epsilon) {
  return 12.0 * std::abs(alpha) * std::max(1.0, 1.0 / epsilon);
}

BsGrid make_grid(double alpha, double epsilon, std::size_t nodes, double nu_max) {
  if (!(epsilon > 0.0)) throw DomainError("make_grid: epsilon must be > 0");
  if (nodes < 16) throw DomainError("make_grid: need at least 16 nodes");
  const double scale = alpha != 0.0 ? std::abs(alpha) : 1.0;
  BsGrid g;
  g.nu_max = nu_max > 0.0 ? nu_max : default_nu_max(scale, epsilon);
  const int panels = static_cast<int>((nodes + 2 * g.order - 1) / (2 * g.order));
  // Each parity block holds half of the nodes.
  if (static_cast<std::size_t>(panels * g.order) > numerics::kMaxDenseOrder) {
    throw RangeError("make_grid: parity blocks of order " + std::to_string(panels * g.order) +
                     " exceed the dense solver cap");
  }
  // Finite panels cover (0, nu_max]; the rest map [nu_max, inf) by nu = nu_max / s.
  const int tail = std::max(2, panels / 10);
  const int finite = panels - tail;
  double h = std::min(0.05 * scale, g.nu_max / finite);
  const double growth = panel_growth(h, finite, g.nu_max);
  std::vector<double> x, w;
  numerics::gauss_legendre(g.order, x, w);
  double left = 0.0;
  for (int p = 0; p < finite; ++p) {
    const double right = p + 1 == finite ? g.nu_max : left + h;
    const double half = 0.5 * (right - left), mid = 0.5 * (right + left);
    for (int q = 0; q < g.order; ++q) {
      g.half_nodes.push_back(mid + half * x[q]);
      g.half_weights.push_back(half * w[q]);
    }
    left = right;
    h *= growth;
  }
  std::vector<double> tail_nodes, tail_weights;
  for (int p = 0; p < tail; ++p) {
    const double s0 = static_cast<double>(p) / tail, s1 = static_cast<double>(p + 1) / tail;
    const double half = 0.5 * (s1 - s0), mid = 0.5 * (s1 + s0);
    for (int q = 0; q < g.order; ++q) {
      const double sq = mid + half * x[q];
      tail_nodes.push_back(g.nu_max / sq);
      tail_weights.push_back(half * w[q] * g.nu_max / (sq * sq));
    }
  }
  // s ascending means nu descending.
  g.half_nodes.insert(g.half_nodes.end(), tail_nodes.rbegin(), tail_nodes.rend());
  g.half_weights.insert(g.half_weights.end(), tail_weights.rbegin(), tail_weights.rend());
  return g;
}

numerics::SymMatrix assemble(const PhysParams& p, double lambda, const BsGrid& grid) {
  if (!(lambda > 0.0)) throw DomainError("assemble: lambda must be > 0");
  const numerics::Grid1D full = grid.full();
  const auto nu = full.nodes();
  const auto w = full.weights();
  const std::size_t n = full.size();
  const double s = sector_sign(p.sector) * p.alpha;
  numerics::SymMatrix a(n);
  std::vector<double> defect(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = std::sqrt(w[i]);
    double row_integral = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double k = mod_kernel(p.epsilon, lambda, nu[i], nu[j]);
      row_integral += w[j] * k;
      if (j <= i) a(i, j) = s * wi * k * std::sqrt(w[j]);
    }
    const double md = md_symbol(p.epsilon, lambda, nu[i]);
    a(i, i) += 1.0 + p.alpha * md;
    defect[i] = md - row_integral;
  }
  // Mirror nodes carry equal weights, so the correction stays symmetric.
  for (std::size_t i = n / 2; i < n; ++i) a(i, n - 1 - i) += s * defect[i];
  return a;
}

double curve_mu(const PhysParams& p, double lambda, const BsGrid& grid, std::size_t k) {
  return numerics::sym_lowest_eigs(assemble(p, lambda, grid), k + 1)[k];
}

std::vector<double> block_mu(const PhysParams& p, double lambda, const BsGrid& grid,
                             double parity, std::size_t count) {
  if (!(lambda > 0.0)) throw DomainError("block_mu: lambda must be > 0");
  kernels::BsBlockSpec spec;
  spec.nu = grid.half_nodes;
  spec.weights = grid.half_weights;
  spec.alpha = p.alpha;
  spec.epsilon = p.epsilon;
  spec.lambda = lambda;
  spec.sector_sign = sector_sign(p.sector);
  spec.parity = parity;
  std::vector<double> a;
  kernels::assemble_bs_block(spec, a);
  const std::size_t m = grid.half_nodes.size();
  return numerics::dense_lowest_eigs(a, m, std::min(count, m));
}

std::pair<double, double> lambda_bracket(double alpha, double epsilon, double tol) {
  const double a2 = alpha * alpha;
  return {a2 / (4.0 + epsilon * epsilon) * (1.0 + 10.0 * tol), a2 * (1.0 + epsilon)};
}

std::vector<BoundStateResult> bs_bound_states(const PhysParams& p, std::size_t levels,
                                              const BsGrid& grid, const BsOptions& opt) {
  check_params(p);
  if (!(p.alpha < 0.0)) return {};
  if (p.epsilon > 1.0) throw DomainError("bs_bound_states: epsilon must lie in (0, 1]");
  if (!(opt.tol > 0.0)) throw DomainError("bs_bound_states: tol must be > 0");
  const double a2 = p.alpha * p.alpha;
  const auto [lo, hi] = lambda_bracket(p.alpha, p.epsilon, opt.tol);

  struct Root {
    double lambda;
    double parity;
    std::size_t index;  // curve index inside the block
  };
  std::vector<Root> roots;
  for (double parity : {1.0, -1.0}) {
    const auto mu_lo = block_mu(p, lo, grid, parity, levels);
    const auto mu_hi = block_mu(p, hi, grid, parity, levels);
    for (std::size_t j = 0; j < mu_lo.size() && j < mu_hi.size(); ++j) {
      if (!(mu_lo[j] < 0.0 && mu_hi[j] > 0.0)) continue;
      auto f = [&, j, parity](double lam) { return block_mu(p, lam, grid, parity, j + 1)[j]; };
      roots.push_back({numerics::root_brent(f, lo, hi, opt.tol * a2), parity, j});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.lambda > y.lambda; });
  if (roots.size() > levels) roots.resize(levels);

  bool checked = false;
  if (opt.refine_check && !roots.empty()) {
    const BsGrid fine = make_grid(p.alpha, p.epsilon, grid.size() * 3 / 2, 1.25 * grid.nu_max);
    const double shift = 10.0 * opt.tol * a2;
    for (const Root& r : roots) {
      const double below = block_mu(p, r.lambda - shift, fine, r.parity, r.index + 1)[r.index];
      const double above = block_mu(p, r.lambda + shift, fine, r.parity, r.index + 1)[r.index];
      if (!(below < 0.0 && above > 0.0)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "bs_bound_states: refined grid (%zu nodes) moves root %.12g by more than %.3g",
                      fine.size(), r.lambda, shift);
        throw ConvergenceError(buf);
      }
    }
    checked = true;
  }

  std::vector<BoundStateResult> out(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    BoundStateResult& b = out[k];
    b.sector = p.sector;
    b.alpha = p.alpha;
    b.epsilon = p.epsilon;
    b.level = static_cast<int>(k);
    b.nodes = grid.size();
    b.nu_max = grid.nu_max;
    b.tol = opt.tol;
    b.refinement_checked = checked;
    if (k < roots.size()) {
      b.lambda_star = roots[k].lambda;
      b.E = -roots[k].lambda;
      b.parity = roots[k].parity;
      b.converged = true;
    } else {
      b.lambda_star = std::numeric_limits<double>::quiet_NaN();
      b.E = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

double hs_norm(double epsilon, double lambda, const BsGrid& grid) {
  if (!(lambda > 0.0)) throw DomainError("hs_norm: lambda must be > 0");
  const numerics::Grid1D full = grid.full();
  const auto nu = full.nodes();
  const auto w = full.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < full.size(); ++j) {
      const double k = mod_kernel(epsilon, lambda, nu[i], nu[j]);
      row += k * k * w[j];
    }
    sum += row * w[i];
  }
  return std::sqrt(sum);
}

double hs_bound(double epsilon, double lambda) {
  return std::sqrt(1.0 / (2.0 * std::min(epsilon * epsilon, 4.0) * lambda));
}

double ess_threshold(double alpha, double epsilon) {
  return -alpha * alpha / (4.0 + epsilon * epsilon);
}

}  // namespace trimer::bs
