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

// Heavy-pair effective problem
//
//   -eps^2 d^2/dx^2 + V(x) + eps^2 R(x),  V = alpha^2 - lambda0,
//   R(x) = int |d psi / dx|^2 dy,
//
// on even (bosonic) or odd (fermionic) functions, and the linear comparison
// operator K1 = -d^2/dx^2 + |alpha|^3 |x| whose levels are |sigma_k| alpha^2.

#ifndef TRIMER_BO_EFFECTIVE_HPP_
#define TRIMER_BO_EFFECTIVE_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "trimer/core.hpp"

namespace trimer::bo {

double potential_V(double alpha, double x);

/// R(x) by adaptive quadrature over y; x != 0.
double correction_R(double alpha, double x, double rel_tol = 1e-11);

/// Offset of the one-sided sample that stands in for R(0).
inline double r_origin_offset(double alpha) { return 1e-6 / (alpha < 0 ? -alpha : alpha); }

/// R at x, with x = 0 replaced by the one-sided sample r_origin_offset.
double correction_R_or_limit(double alpha, double x);

struct DeltaResult {
  double value = 0.0;   // 2 sup sqrt(R)
  double argmax = 0.0;  // maximizing x > 0
};

/// Grid search over (0, 40/|alpha|] followed by a golden-section polish.
DeltaResult delta_search(double alpha);
double delta_constant(double alpha);

/// Lowest k eigenvalues of -kinetic u'' + potential u on [0, L] with the
/// second-order three-point stencil on x_i = i L / (n - 1). The condition at
/// 0 is Neumann (ghost reflection) or Dirichlet; u(L) = 0. `samples` holds the
/// potential at all n nodes.
std::vector<double> halfline_fd_eigs(const std::vector<double>& samples, double kinetic, double L,
                                     bool neumann, std::size_t k);

/// Same on [-L, L] with x_i = -L + 2 i L / (n - 1), Dirichlet at both ends.
std::vector<double> fullline_fd_eigs(const std::vector<double>& samples, double kinetic, double L,
                                     std::size_t k);

struct EffectiveOptions {
  std::size_t nodes = 8001;  // coarse grid; the fine grid has 2 nodes - 1
  double L = 0.0;            // <= 0 selects the automatic domain
  double tol = 1e-5;         // relative to alpha^2
  bool richardson = true;
};

struct EffectiveEigs {
  Sector sector = Sector::Bosonic;
  double alpha = -1.0;
  double epsilon = 0.1;
  std::vector<double> shifted;  // E_k + alpha^2, ascending
  std::vector<double> levels;   // E_k
  std::size_t requested = 0;
  double L = 0.0;
  bool auto_domain = true;
  std::size_t nodes = 0;
  std::size_t fine_nodes = 0;
  double max_grid_change = 0.0;  // max |coarse - fine| / alpha^2
};

/// Essential spectrum of the effective operator starts at this multiple of
/// alpha^2; levels above (kEssFraction - kEssMargin) alpha^2 are dropped.
inline constexpr double kEssFraction = 0.75;
inline constexpr double kEssMargin = 0.05;

/// Automatic half-domain length for `levels` levels.
double auto_domain_length(const PhysParams& p, std::size_t levels);

/// Throws ConvergenceError if the two grids disagree by more than 10 tol.
EffectiveEigs effective_eigs(const PhysParams& p, std::size_t levels,
                             const EffectiveOptions& opt = {});

/// Index into the sigma sequence for level k of a sector.
inline int sigma_index(Sector s, int k) { return s == Sector::Bosonic ? 2 * k : 2 * k + 1; }

/// s_k of the sector: |sigma_{2k}| or |sigma_{2k+1}|.
double airy_slope(Sector s, int k);

/// -alpha^2 + s_k alpha^2 eps^(2/3); eps = 0 is allowed here.
double airy_prediction(const PhysParams& p, int k);

struct K1Options {
  std::size_t nodes = 8001;  // full line, odd so that 0 is a node
  double L = 0.0;            // <= 0: automatic from the highest level
  bool richardson = true;
};

/// Full-line finite-difference levels of K1, ascending.
std::vector<double> k1_oracle_eigs(double alpha, std::size_t levels, const K1Options& opt = {});

/// Half-line K1 levels in one parity (Neumann even, Dirichlet odd) on the
/// same grid k1_oracle_eigs uses.
std::vector<double> k1_parity_eigs(double alpha, std::size_t levels, bool even,
                                   const K1Options& opt = {});

}  // namespace trimer::bo

#endif  // TRIMER_BO_EFFECTIVE_HPP_
