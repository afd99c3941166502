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

#include "trimer/bo_effective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trimer/light_particle.hpp"
#include "trimer/numerics.hpp"
#include "trimer/specfun.hpp"

namespace trimer::bo {

double potential_V(double alpha, double x) { return alpha * alpha - light::lambda0(alpha, x); }

double correction_R(double alpha, double x, double rel_tol) {
  require_attractive(alpha, "correction_R");
  if (x == 0.0) throw DomainError("correction_R: undefined at x = 0, use the one-sided limit");
  const light::GroundState g = light::ground_state(alpha, x);
  // The integrand is even in y: integrate over y > 0 with the kink at |x|/2.
  const double kink[] = {0.5 * std::abs(x)};
  auto f = [&g](double y) {
    const double d = g.dx_parts(y).total();
    return d * d;
  };
  return 2.0 * numerics::quad_adaptive(f, 0.0, std::numeric_limits<double>::infinity(), kink,
                                       rel_tol, 0.0, 20000);
}

double correction_R_or_limit(double alpha, double x) {
  return correction_R(alpha, x == 0.0 ? r_origin_offset(alpha) : x);
}

DeltaResult delta_search(double alpha) {
  require_attractive(alpha, "delta_constant");
  const double a = -alpha;
  const double xmax = 40.0 / a;
  constexpr int kSamples = 400;
  auto r = [alpha](double x) { return correction_R(alpha, x); };
  int best = 1;
  double best_r = -1.0;
  for (int i = 1; i <= kSamples; ++i) {
    const double ri = r(xmax * i / kSamples);
    if (ri > best_r) {
      best_r = ri;
      best = i;
    }
  }
  const double step = xmax / kSamples;
  const double lo = std::max(step * (best - 1), 1e-8 / a);
  const double hi = std::min(step * (best + 1), xmax);
  const double xs = numerics::golden_max(r, lo, hi, 1e-7 / a);
  const double rs = r(xs);
  DeltaResult out;
  if (rs >= best_r) {
    out.argmax = xs;
    out.value = 2.0 * std::sqrt(rs);
  } else {
    out.argmax = step * best;
    out.value = 2.0 * std::sqrt(best_r);
  }
  return out;
}

double delta_constant(double alpha) { return delta_search(alpha).value; }

// ---------------------------------------------------------------------------
// Finite-difference eigensolvers

std::vector<double> halfline_fd_eigs(const std::vector<double>& samples, double kinetic, double L,
                                     bool neumann, std::size_t k) {
  const std::size_t n = samples.size();
  if (n < 3) throw DomainError("halfline_fd_eigs: need >= 3 nodes");
  const double h = L / static_cast<double>(n - 1);
  const double c = kinetic / (h * h);
  // Unknowns: nodes first..n-2; node n-1 carries the Dirichlet condition.
  const std::size_t first = neumann ? 0 : 1;
  const std::size_t m = n - 1 - first;
  std::vector<double> diag(m), off(m > 0 ? m - 1 : 0, -c);
  for (std::size_t i = 0; i < m; ++i) diag[i] = 2.0 * c + samples[first + i];
  // Ghost reflection u_{-1} = u_1 makes row 0 read 2c u0 - 2c u1; the
  // similarity u0 -> u0 / sqrt(2) symmetrizes it.
  if (neumann && m > 1) off[0] = -std::sqrt(2.0) * c;
  return numerics::tridiag_lowest_eigs(diag, off, std::min(k, m));
}

std::vector<double> fullline_fd_eigs(const std::vector<double>& samples, double kinetic, double L,
                                     std::size_t k) {
  const std::size_t n = samples.size();
  if (n < 3) throw DomainError("fullline_fd_eigs: need >= 3 nodes");
  const double h = 2.0 * L / static_cast<double>(n - 1);
  const double c = kinetic / (h * h);
  const std::size_t m = n - 2;
  std::vector<double> diag(m), off(m - 1, -c);
  for (std::size_t i = 0; i < m; ++i) diag[i] = 2.0 * c + samples[i + 1];
  return numerics::tridiag_lowest_eigs(diag, off, std::min(k, m));
}

// ---------------------------------------------------------------------------
// Effective operator

double airy_slope(Sector s, int k) { return -specfun::sigma(sigma_index(s, k)).value; }

double airy_prediction(const PhysParams& p, int k) {
  if (!(p.epsilon >= 0.0)) throw DomainError("airy_prediction: epsilon must be >= 0");
  const double a2 = p.alpha * p.alpha;
  return -a2 + airy_slope(p.sector, k) * a2 * std::cbrt(p.epsilon * p.epsilon);
}

double auto_domain_length(const PhysParams& p, std::size_t levels) {
  const double a = -p.alpha;
  const double a2 = a * a;
  const double s = airy_slope(p.sector, static_cast<int>(levels) - 1);
  const double e23 = std::cbrt(p.epsilon * p.epsilon);
  const double target = std::clamp(s * a2 * e23 + 0.1 * a2, 0.675 * a2, 0.74 * a2);
  // V is increasing on (0, inf) with V(0) = 0 and V -> 3 alpha^2 / 4.
  auto g = [&](double x) { return potential_V(p.alpha, x) - target; };
  double hi = 1.0 / a;
  while (g(hi) < 0.0) hi *= 2.0;
  const double xstar = numerics::root_bisect(g, 0.0, hi, 1e-12 / a);
  return xstar + 8.0 * e23 * std::max(1.0, s) / a;
}

EffectiveEigs effective_eigs(const PhysParams& p, std::size_t levels, const EffectiveOptions& opt) {
  check_params(p);
  require_attractive(p.alpha, "effective_eigs");
  if (p.epsilon > 1.0) throw DomainError("effective_eigs: epsilon must lie in (0, 1]");
  if (levels < 1) throw DomainError("effective_eigs: levels must be >= 1");
  if (opt.nodes < 3) throw DomainError("effective_eigs: nodes must be >= 3");
  const double a2 = p.alpha * p.alpha;
  const double e2 = p.epsilon * p.epsilon;

  EffectiveEigs out;
  out.sector = p.sector;
  out.alpha = p.alpha;
  out.epsilon = p.epsilon;
  out.requested = levels;
  out.auto_domain = !(opt.L > 0.0);
  out.L = out.auto_domain ? auto_domain_length(p, levels) : opt.L;
  out.nodes = opt.nodes;
  out.fine_nodes = opt.richardson ? 2 * opt.nodes - 1 : opt.nodes;

  // Sample on the fine grid; the coarse grid is every second node.
  const std::size_t nf = out.fine_nodes;
  std::vector<double> fine(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    const double x = out.L * static_cast<double>(i) / static_cast<double>(nf - 1);
    fine[i] = potential_V(p.alpha, x) + e2 * correction_R_or_limit(p.alpha, x);
  }
  const bool neumann = p.sector == Sector::Bosonic;
  std::vector<double> values;
  if (opt.richardson) {
    std::vector<double> coarse(opt.nodes);
    for (std::size_t i = 0; i < opt.nodes; ++i) coarse[i] = fine[2 * i];
    const auto vh = halfline_fd_eigs(coarse, e2, out.L, neumann, levels);
    const auto vh2 = halfline_fd_eigs(fine, e2, out.L, neumann, levels);
    const std::size_t m = std::min(vh.size(), vh2.size());
    values.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      values[j] = numerics::richardson2(vh[j], vh2[j]);
      const double change = std::abs(vh[j] - vh2[j]) / a2;
      const double ceiling = (kEssFraction - kEssMargin) * a2;
      if (vh2[j] < ceiling) out.max_grid_change = std::max(out.max_grid_change, change);
    }
    if (out.max_grid_change > 10.0 * opt.tol) {
      throw ConvergenceError("effective_eigs: grids with " + std::to_string(opt.nodes) + " and " +
                             std::to_string(nf) + " nodes disagree by " +
                             std::to_string(out.max_grid_change) + " alpha^2");
    }
  } else {
    values = halfline_fd_eigs(fine, e2, out.L, neumann, levels);
  }
  for (double v : values) {
    if (v >= (kEssFraction - kEssMargin) * a2) break;
    out.shifted.push_back(v);
    out.levels.push_back(v - a2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear comparison operator

namespace {

double k1_length(double alpha, std::size_t levels) {
  const double s = -specfun::sigma(static_cast<int>(levels) - 1).value;
  return (s + 12.0) / -alpha;
}

std::vector<double> combine(const std::vector<double>& vh, const std::vector<double>& vh2) {
  const std::size_t m = std::min(vh.size(), vh2.size());
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = numerics::richardson2(vh[j], vh2[j]);
  return out;
}

}  // namespace

std::vector<double> k1_oracle_eigs(double alpha, std::size_t levels, const K1Options& opt) {
  require_attractive(alpha, "k1_oracle_eigs");
  if (levels < 1) throw DomainError("k1_oracle_eigs: levels must be >= 1");
  if (opt.nodes < 5 || opt.nodes % 2 == 0) {
    throw DomainError("k1_oracle_eigs: nodes must be odd and >= 5");
  }
  const double L = opt.L > 0.0 ? opt.L : k1_length(alpha, levels);
  const double slope = -alpha * alpha * alpha;
  auto sample = [&](std::size_t n) {
    std::vector<double> v(n);
    const std::size_t mid = (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
      const double j = static_cast<double>(i > mid ? i - mid : mid - i);
      v[i] = slope * L * j / static_cast<double>(mid);
    }
    return v;
  };
  const auto vh = fullline_fd_eigs(sample(opt.nodes), 1.0, L, levels);
  if (!opt.richardson) return vh;
  return combine(vh, fullline_fd_eigs(sample(2 * opt.nodes - 1), 1.0, L, levels));
}

std::vector<double> k1_parity_eigs(double alpha, std::size_t levels, bool even,
                                   const K1Options& opt) {
  require_attractive(alpha, "k1_parity_eigs");
  if (opt.nodes < 5 || opt.nodes % 2 == 0) {
    throw DomainError("k1_parity_eigs: nodes must be odd and >= 5");
  }
  // Same L and h as the full-line solve for 2 * levels levels.
  const double L = opt.L > 0.0 ? opt.L : k1_length(alpha, 2 * levels);
  const double slope = -alpha * alpha * alpha;
  auto sample = [&](std::size_t n_full) {
    const std::size_t m = (n_full - 1) / 2 + 1;
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = slope * L * static_cast<double>(i) / static_cast<double>(m - 1);
    }
    return v;
  };
  const auto vh = halfline_fd_eigs(sample(opt.nodes), 1.0, L, even, levels);
  if (!opt.richardson) return vh;
  return combine(vh, halfline_fd_eigs(sample(2 * opt.nodes - 1), 1.0, L, even, levels));
}

}  // namespace trimer::bo
