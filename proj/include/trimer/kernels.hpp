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

// Data-parallel kernels behind the dense solvers. Every kernel has a serial
// reference implementation with identical per-row arithmetic; the OpenMP
// variants only distribute rows across threads, so both produce bitwise
// identical results. Tests compare the two and the benchmark target times
// them.

#ifndef TRIMER_KERNELS_HPP_
#define TRIMER_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace trimer::kernels {

/// True when the library was built with OpenMP.
bool openmp_enabled();

/// Threads an OpenMP region would use (1 without OpenMP).
int max_threads();

/// Householder reduction of the row-major symmetric matrix `a` (n x n, both
/// triangles valid; destroyed) to tridiagonal form. diag has n entries,
/// offdiag n - 1.
void tridiagonalize_serial(std::span<double> a, std::size_t n, std::vector<double>& diag,
                           std::vector<double>& offdiag);
void tridiagonalize_omp(std::span<double> a, std::size_t n, std::vector<double>& diag,
                        std::vector<double>& offdiag);

/// Dispatches to the OpenMP variant for large matrices when available.
void tridiagonalize(std::span<double> a, std::size_t n, std::vector<double>& diag,
                    std::vector<double>& offdiag);

/// Inputs for one parity block of the discretized Birman-Schwinger matrix on
/// the positive half of a symmetric momentum grid.
struct BsBlockSpec {
  std::span<const double> nu;       // positive nodes
  std::span<const double> weights;  // matching weights
  double alpha = -1.0;
  double epsilon = 0.1;
  double lambda = 1.0;
  double sector_sign = 1.0;  // +1 bosonic, -1 fermionic
  double parity = 1.0;       // +1 even functions of nu, -1 odd
};

/// Fills `out` (row-major, m x m with m = nu.size()) with
///   delta_ij (1 + alpha md(nu_i))
///     + sector_sign * alpha * sqrt(w_i w_j) (K(nu_i, nu_j) + parity K(nu_i, -nu_j)).
void assemble_bs_block_serial(const BsBlockSpec& spec, std::vector<double>& out);
void assemble_bs_block_omp(const BsBlockSpec& spec, std::vector<double>& out);
void assemble_bs_block(const BsBlockSpec& spec, std::vector<double>& out);

}  // namespace trimer::kernels

#endif  // TRIMER_KERNELS_HPP_
