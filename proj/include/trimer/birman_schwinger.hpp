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

// Exact three-body bound states: E = -lambda is an eigenvalue in a sector iff
// the boundary operator A(lambda) = I + alpha (M_d +- M_od) is singular. A is
// discretized by a symmetric Nystrom rule in the momentum variable nu.
//
// On a grid symmetric under nu -> -nu, A commutes with the reflection and
// splits into an even and an odd block on the positive nodes. The physical
// content of the two blocks differs (the block whose parity equals the
// sector sign carries the states that are even in the light coordinate), but
// the spectrum of the full matrix is exactly the union of the two.
//
// The off-diagonal kernel peaks along nu' = -nu with a width set by lambda,
// while panel widths grow with |nu|. Each entry (nu_i, -nu_i) therefore also
// carries md(nu_i) - sum_j w_j K(nu_i, nu_j), the quadrature defect of the
// exact row integral int K(nu, nu') dnu' = md(nu). Without it the far tail
// breaks the monotonicity of A in lambda at the 1e-8 level.

#ifndef TRIMER_BIRMAN_SCHWINGER_HPP_
#define TRIMER_BIRMAN_SCHWINGER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "trimer/bs_symbols.hpp"
#include "trimer/core.hpp"
#include "trimer/numerics.hpp"

namespace trimer::bs {

/// Mirrored composite Gauss-Legendre grid on the real line: geometric panels
/// on [0, nu_max] and mapped panels nu = nu_max / s, s in (0, 1], beyond.
struct BsGrid {
  double nu_max = 0.0;
  int order = 8;
  std::vector<double> half_nodes;    // nu > 0, ascending
  std::vector<double> half_weights;

  std::size_t size() const { return 2 * half_nodes.size(); }
  numerics::Grid1D full() const;
};

inline constexpr std::size_t kDefaultBsNodes = 1600;
inline constexpr std::size_t kMaxBsNodes = 4800;

/// 12 |alpha| max(1, 1/eps).
double default_nu_max(double alpha, double epsilon);

/// `nodes` counts both halves and is rounded up to a multiple of 2 * order;
/// a tenth of the panels (at least two) go to the mapped tail. Finite panels
/// grow geometrically from width 0.05 |alpha| at the origin. A nonpositive
/// nu_max selects default_nu_max.
BsGrid make_grid(double alpha, double epsilon, std::size_t nodes = kDefaultBsNodes,
                 double nu_max = 0.0);

/// Full symmetric matrix A(lambda) on grid.full(), including the mirror
/// correction.
numerics::SymMatrix assemble(const PhysParams& p, double lambda, const BsGrid& grid);

/// k-th smallest eigenvalue of assemble(p, lambda, grid).
double curve_mu(const PhysParams& p, double lambda, const BsGrid& grid, std::size_t k);

/// The `count` smallest eigenvalues of one parity block (+1 even, -1 odd).
std::vector<double> block_mu(const PhysParams& p, double lambda, const BsGrid& grid,
                             double parity, std::size_t count);

struct BoundStateResult {
  Sector sector = Sector::Bosonic;
  double alpha = -1.0;
  double epsilon = 0.1;
  int level = 0;
  double lambda_star = 0.0;
  double E = 0.0;
  bool converged = false;
  double parity = 1.0;       // block of the root
  std::size_t nodes = 0;
  double nu_max = 0.0;
  double tol = 0.0;
  bool refinement_checked = false;
};

struct BsOptions {
  double tol = 1e-9;          // root bracket width in units of alpha^2
  bool refine_check = true;   // repeat on 1.5x nodes and 1.25x nu_max
};

/// Bracket (alpha^2/(4+eps^2) (1 + 10 tol), alpha^2 (1 + eps)).
std::pair<double, double> lambda_bracket(double alpha, double epsilon, double tol);

/// Roots lambda*_k, k < levels, strictly decreasing in k. Missing levels are
/// returned as converged = false placeholders. Empty for alpha >= 0. Throws
/// ConvergenceError when the refined grid moves a root by more than
/// 10 tol alpha^2.
std::vector<BoundStateResult> bs_bound_states(const PhysParams& p, std::size_t levels,
                                              const BsGrid& grid, const BsOptions& opt = {});

/// Frobenius norm of sqrt(w_i) K(nu_i, nu_j) sqrt(w_j) over the full grid.
double hs_norm(double epsilon, double lambda, const BsGrid& grid);

/// sqrt(1 / (2 min(eps^2, 4) lambda)).
double hs_bound(double epsilon, double lambda);

/// -alpha^2 / (4 + eps^2).
double ess_threshold(double alpha, double epsilon);

/// 1 + alpha md_symbol(eps, lambda, nu).
inline double ess_symbol(double alpha, double epsilon, double lambda, double nu) {
  return 1.0 + alpha * md_symbol(epsilon, lambda, nu);
}

}  // namespace trimer::bs

#endif  // TRIMER_BIRMAN_SCHWINGER_HPP_
