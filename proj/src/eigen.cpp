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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "trimer/core.hpp"
#include "trimer/kernels.hpp"
#include "trimer/numerics.hpp"

namespace trimer::numerics {

Grid1D::Grid1D(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() < 2 || nodes_.size() != weights_.size()) {
    throw DomainError("Grid1D: need >= 2 nodes with one weight each");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(weights_[i] > 0.0)) throw DomainError("Grid1D: weights must be positive");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw DomainError("Grid1D: nodes must be strictly increasing");
    }
  }
}

double SymMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

std::vector<double> SymMatrix::to_dense() const {
  std::vector<double> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = (*this)(i, j);
      out[i * n_ + j] = v;
      out[j * n_ + i] = v;
    }
  }
  return out;
}

std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag,
                        double shift) {
  constexpr double kTiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  // A zero pivot is perturbed to -kTiny before it is counted.
  double q = diag[0] - shift;
  if (q == 0.0) q = -kTiny;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    q = diag[i] - shift - offdiag[i - 1] * offdiag[i - 1] / q;
    if (q == 0.0) q = -kTiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_lowest_eigs(std::span<const double> diag,
                                        std::span<const double> offdiag, std::size_t k) {
  const std::size_t n = diag.size();
  if (n == 0 || offdiag.size() + 1 != n) {
    throw DomainError("tridiag_lowest_eigs: offdiag must have length n - 1");
  }
  if (k < 1 || k > n) throw DomainError("tridiag_lowest_eigs: need 1 <= k <= n");

  // Gershgorin enclosure.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) + (i + 1 < n ? std::abs(offdiag[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), std::numeric_limits<double>::min()});
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * scale;
  lo -= floor;
  hi += floor;

  std::vector<double> eigs(k);
  double left = lo;
  for (std::size_t j = 0; j < k; ++j) {
    // eig_j = inf { x : count(x) > j }.
    double a = left, b = hi;
    while (b - a > floor) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(diag, offdiag, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    eigs[j] = 0.5 * (a + b);
    left = a;
  }
  return eigs;
}

std::vector<double> dense_lowest_eigs(std::vector<double>& a, std::size_t n, std::size_t k) {
  if (n > kMaxDenseOrder) {
    throw RangeError("dense eigensolver: order " + std::to_string(n) + " exceeds cap " +
                     std::to_string(kMaxDenseOrder));
  }
  if (k < 1 || k > n) throw DomainError("sym_lowest_eigs: need 1 <= k <= n");
  if (n == 1) return {a[0]};
  std::vector<double> diag, off;
  kernels::tridiagonalize(a, n, diag, off);
  return tridiag_lowest_eigs(diag, off, k);
}

std::vector<double> sym_lowest_eigs(const SymMatrix& a, std::size_t k) {
  if (a.order() > kMaxDenseOrder) {
    throw RangeError("sym_lowest_eigs: order " + std::to_string(a.order()) + " exceeds cap " +
                     std::to_string(kMaxDenseOrder));
  }
  std::vector<double> dense = a.to_dense();
  return dense_lowest_eigs(dense, a.order(), k);
}

std::vector<double> tridiag_ql(std::vector<double> d, std::vector<double> e,
                               std::vector<double>* z) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  e.resize(n, 0.0);  // e[i] couples i and i+1; e[n-1] = 0 sentinel
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw ConvergenceError("tridiag_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            auto& zz = *z;
            for (std::size_t row = 0; row < n; ++row) {
              f = zz[row * n + i + 1];
              zz[row * n + i + 1] = s * zz[row * n + i] + c * f;
              zz[row * n + i] = c * zz[row * n + i] - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&d](std::size_t x, std::size_t y) { return d[x] < d[y]; });
  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = d[order[j]];
  if (z != nullptr) {
    std::vector<double> sorted(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t j = 0; j < n; ++j) sorted[row * n + j] = (*z)[row * n + order[j]];
    }
    *z = std::move(sorted);
  }
  return values;
}

EigenSystem sym_eigensystem(const SymMatrix& a) {
  const std::size_t n = a.order();
  if (n > kMaxDenseOrder) throw RangeError("sym_eigensystem: order exceeds cap");
  if (n == 0) return {};
  std::vector<double> m = a.to_dense();

  // Householder reduction keeping the reflectors to rebuild Q.
  std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0, 0.0);
  std::vector<std::vector<double>> refl;
  std::vector<double> betas;
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    diag[k] = m[k * n + k];
    const std::size_t len = n - k - 1;
    const double* x = &m[k * n + k + 1];
    double tail = 0.0;
    for (std::size_t i = 1; i < len; ++i) tail += x[i] * x[i];
    if (tail == 0.0) {
      off[k] = x[0];
      refl.emplace_back();
      betas.push_back(0.0);
      continue;
    }
    const double norm = std::sqrt(x[0] * x[0] + tail);
    const double alpha = x[0] > 0.0 ? -norm : norm;
    std::vector<double> vk(x, x + len);
    vk[0] -= alpha;
    const double beta = 2.0 / (vk[0] * vk[0] + tail);
    off[k] = alpha;
    const std::size_t base = k + 1;
    for (std::size_t i = 0; i < len; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < len; ++j) s += m[(base + i) * n + base + j] * vk[j];
      p[i] = beta * s;
    }
    double pv = 0.0;
    for (std::size_t i = 0; i < len; ++i) pv += p[i] * vk[i];
    const double kappa = 0.5 * beta * pv;
    for (std::size_t i = 0; i < len; ++i) p[i] -= kappa * vk[i];
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < len; ++j) {
        m[(base + i) * n + base + j] -= vk[i] * p[j] + p[i] * vk[j];
      }
    }
    refl.push_back(std::move(vk));
    betas.push_back(beta);
  }
  if (n >= 2) {
    diag[n - 2] = m[(n - 2) * n + n - 2];
    off[n - 2] = m[(n - 2) * n + n - 1];
  }
  diag[n - 1] = m[(n - 1) * n + n - 1];

  // Q = H_0 H_1 ... applied to the identity from the right-most reflector.
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  for (std::size_t kk = refl.size(); kk-- > 0;) {
    if (betas[kk] == 0.0) continue;
    const auto& vk = refl[kk];
    const std::size_t base = kk + 1;
    const std::size_t len = vk.size();
    for (std::size_t col = 0; col < n; ++col) {
      double s = 0.0;
      for (std::size_t i = 0; i < len; ++i) s += vk[i] * q[(base + i) * n + col];
      s *= betas[kk];
      if (s == 0.0) continue;
      for (std::size_t i = 0; i < len; ++i) q[(base + i) * n + col] -= s * vk[i];
    }
  }
  EigenSystem out;
  out.values = tridiag_ql(diag, off, &q);
  out.vectors = std::move(q);
  return out;
}

}  // namespace trimer::numerics
