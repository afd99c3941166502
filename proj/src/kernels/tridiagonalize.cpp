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

#include "trimer/kernels.hpp"

#ifdef TRIMER_HAVE_OPENMP
#include <omp.h>
#endif

namespace trimer::kernels {

bool openmp_enabled() {
#ifdef TRIMER_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef TRIMER_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Householder vector for the row segment x (length m). On return v holds the
// reflector and the function yields beta = 2 / v^T v (0 when no reflection
// is needed) together with the new subdiagonal entry.
struct Reflector {
  double beta = 0.0;
  double subdiag = 0.0;
};

Reflector make_reflector(const double* x, std::size_t m, double* v) {
  double tail = 0.0;
  for (std::size_t i = 1; i < m; ++i) tail += x[i] * x[i];
  if (tail == 0.0) return {0.0, x[0]};
  const double norm = std::sqrt(x[0] * x[0] + tail);
  const double alpha = x[0] > 0.0 ? -norm : norm;
  v[0] = x[0] - alpha;
  for (std::size_t i = 1; i < m; ++i) v[i] = x[i];
  return {2.0 / (v[0] * v[0] + tail), alpha};
}

inline double row_dot(const double* row, const double* v, std::size_t m) {
  double s = 0.0;
#pragma omp simd reduction(+ : s)
  for (std::size_t j = 0; j < m; ++j) s += row[j] * v[j];
  return s;
}

inline void row_update(double* row, double vi, double wi, const double* v, const double* w,
                       std::size_t m) {
#pragma omp simd
  for (std::size_t j = 0; j < m; ++j) row[j] -= vi * w[j] + wi * v[j];
}

template <bool Parallel>
void tridiagonalize_impl(std::span<double> a, std::size_t n, std::vector<double>& diag,
                         std::vector<double>& offdiag) {
  diag.assign(n, 0.0);
  offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
  if (n == 0) return;
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    diag[k] = a[k * n + k];
    const std::size_t m = n - k - 1;
    const std::size_t base = k + 1;
    const Reflector h = make_reflector(&a[k * n + base], m, v.data());
    offdiag[k] = h.subdiag;
    if (h.beta == 0.0) continue;
    const double beta = h.beta;

    // p = beta * B v, B the trailing m x m block.
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      p[i] = beta * row_dot(&a[(base + i) * n + base], v.data(), m);
    }
    double pv = 0.0;
    for (std::size_t i = 0; i < m; ++i) pv += p[i] * v[i];
    const double kappa = 0.5 * beta * pv;
    for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * v[i];  // p becomes w

#pragma omp parallel for schedule(static) if (Parallel)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      row_update(&a[(base + i) * n + base], v[i], p[i], v.data(), p.data(), m);
    }
  }
  if (n >= 2) {
    diag[n - 2] = a[(n - 2) * n + (n - 2)];
    offdiag[n - 2] = a[(n - 2) * n + (n - 1)];
  }
  diag[n - 1] = a[(n - 1) * n + (n - 1)];
}

}  // namespace

void tridiagonalize_serial(std::span<double> a, std::size_t n, std::vector<double>& diag,
                           std::vector<double>& offdiag) {
  tridiagonalize_impl<false>(a, n, diag, offdiag);
}

void tridiagonalize_omp(std::span<double> a, std::size_t n, std::vector<double>& diag,
                        std::vector<double>& offdiag) {
  tridiagonalize_impl<true>(a, n, diag, offdiag);
}

void tridiagonalize(std::span<double> a, std::size_t n, std::vector<double>& diag,
                    std::vector<double>& offdiag) {
  if (openmp_enabled() && max_threads() > 1 && n >= 192) {
    tridiagonalize_omp(a, n, diag, offdiag);
  } else {
    tridiagonalize_serial(a, n, diag, offdiag);
  }
}

}  // namespace trimer::kernels
