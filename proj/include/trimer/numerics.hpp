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

#ifndef TRIMER_NUMERICS_HPP_
#define TRIMER_NUMERICS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace trimer::numerics {

/// Quadrature nodes with positive weights, strictly increasing.
class Grid1D {
 public:
  Grid1D(std::vector<double> nodes, std::vector<double> weights);

  std::size_t size() const { return nodes_.size(); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Dense symmetric matrix. Only the lower triangle is stored, so A(i,j) and
/// A(j,i) are the same storage slot.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), packed_(n * (n + 1) / 2, 0.0) {}

  std::size_t order() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) {
    return i >= j ? packed_[i * (i + 1) / 2 + j] : packed_[j * (j + 1) / 2 + i];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return i >= j ? packed_[i * (i + 1) / 2 + j] : packed_[j * (j + 1) / 2 + i];
  }

  /// Largest absolute row sum (equals the 1- and infinity-norms).
  double norm_inf() const;

  /// Row-major full copy, the working layout of the eigensolvers.
  std::vector<double> to_dense() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> packed_;
};

// ---------------------------------------------------------------------------
// Quadrature

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b]. Either end
/// may be infinite; infinite tails are mapped by y = c +- t/(1 - t^2). The
/// interval is split at `breakpoints` (sorted, inside (a, b)) before any
/// adaptive subdivision. Converged when the summed error estimate is below
/// max(abs_tol, rel_tol * |I|). Throws ConvergenceError after max_panels.
double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breakpoints, double rel_tol,
                     double abs_tol = 0.0, int max_panels = 4000);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

// ---------------------------------------------------------------------------
// Symmetric eigenproblems

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, offdiag)
/// strictly below `shift` (Sturm sequence count).
std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag,
                        double shift);

/// The k smallest eigenvalues (ascending) by Sturm bisection, each bracketed
/// to the rounding floor of the matrix scale.
std::vector<double> tridiag_lowest_eigs(std::span<const double> diag,
                                        std::span<const double> offdiag, std::size_t k);

/// Maximum order accepted by the dense solvers.
inline constexpr std::size_t kMaxDenseOrder = 6000;

/// The k smallest eigenvalues of A: Householder tridiagonalization followed
/// by Sturm bisection. Throws RangeError above kMaxDenseOrder.
std::vector<double> sym_lowest_eigs(const SymMatrix& a, std::size_t k);

/// Same, on a row-major dense symmetric matrix (overwritten).
std::vector<double> dense_lowest_eigs(std::vector<double>& a, std::size_t n, std::size_t k);

struct EigenSystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j (row-major n x n) pairs with values[j]
};

/// All eigenpairs: Householder tridiagonalization with accumulated
/// transforms, then implicit-shift QL.
EigenSystem sym_eigensystem(const SymMatrix& a);

/// Implicit-shift QL on a tridiagonal matrix. `z` (row-major n x n, may be
/// empty) is multiplied by the accumulated rotations. Returns ascending
/// eigenvalues and reorders the columns of z accordingly.
std::vector<double> tridiag_ql(std::vector<double> diag, std::vector<double> offdiag,
                               std::vector<double>* z);

// ---------------------------------------------------------------------------
// Scalar roots and extrapolation

/// Bisection for a sign change of f on [lo, hi]; stops once hi - lo <= tol.
/// Throws DomainError when f(lo) and f(hi) have the same sign.
double root_bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Brent's bracketing method. The returned point lies in a bracket of width
/// <= tol that still contains the sign change.
double root_brent(const std::function<double(double)>& f, double lo, double hi, double tol,
                  int max_iter = 200);

/// Iteration bound of root_bisect: ceil(log2((hi - lo) / tol)) + 2.
int bisect_iteration_bound(double lo, double hi, double tol);

/// Second-order Richardson combination of values at steps h and h/2.
constexpr double richardson2(double v_h, double v_h2) { return (4.0 * v_h2 - v_h) / 3.0; }

/// Golden-section search for a maximum of f on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace trimer::numerics

#endif  // TRIMER_NUMERICS_HPP_
