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
#include <random>
#include <vector>

#include <doctest.h>

#include "trimer/birman_schwinger.hpp"
#include "trimer/kernels.hpp"
#include "trimer/numerics.hpp"

using namespace trimer;

namespace {

std::vector<double> random_symmetric(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = u(gen);
  return a;
}

double max_rel_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]) / (1.0 + std::abs(x[i])));
  return m;
}

}  // namespace

TEST_CASE("serial and OpenMP tridiagonalization agree") {
  for (std::size_t n : {1u, 2u, 7u, 64u, 257u}) {
    auto a = random_symmetric(n, 3 + static_cast<unsigned>(n));
    auto b = a;
    std::vector<double> d1, e1, d2, e2;
    kernels::tridiagonalize_serial(a, n, d1, e1);
    kernels::tridiagonalize_omp(b, n, d2, e2);
    REQUIRE(d1.size() == n);
    CHECK(max_rel_diff(d1, d2) <= 1e-12);
    std::vector<double> ae1(e1.size()), ae2(e2.size());
    std::transform(e1.begin(), e1.end(), ae1.begin(), [](double v) { return std::abs(v); });
    std::transform(e2.begin(), e2.end(), ae2.begin(), [](double v) { return std::abs(v); });
    CHECK(max_rel_diff(ae1, ae2) <= 1e-12);
  }
}

TEST_CASE("tridiagonalization preserves the spectrum") {
  const std::size_t n = 40;
  auto a = random_symmetric(n, 19);
  numerics::SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) s(i, j) = a[i * n + j];
  const auto ref = numerics::sym_eigensystem(s).values;
  std::vector<double> d, e;
  kernels::tridiagonalize(a, n, d, e);
  auto v = numerics::tridiag_ql(d, e, nullptr);
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(v[i] - ref[i]) <= 1e-12);
}

TEST_CASE("serial and OpenMP block assembly agree") {
  const bs::BsGrid g = bs::make_grid(-1.0, 0.1, 320);
  for (double parity : {1.0, -1.0}) {
    for (double sector : {1.0, -1.0}) {
      kernels::BsBlockSpec spec;
      spec.nu = g.half_nodes;
      spec.weights = g.half_weights;
      spec.lambda = 0.5;
      spec.parity = parity;
      spec.sector_sign = sector;
      std::vector<double> a, b;
      kernels::assemble_bs_block_serial(spec, a);
      kernels::assemble_bs_block_omp(spec, b);
      REQUIRE(a.size() == g.half_nodes.size() * g.half_nodes.size());
      CHECK(max_rel_diff(a, b) == 0.0);
    }
  }
}

TEST_CASE("parity blocks reproduce the full matrix spectrum") {
  const bs::BsGrid g = bs::make_grid(-1.0, 0.3, 160);
  const PhysParams p{-1.0, 0.3, Sector::Fermionic};
  const double lambda = 0.4;
  const auto full = numerics::sym_eigensystem(bs::assemble(p, lambda, g)).values;
  auto even = bs::block_mu(p, lambda, g, 1.0, g.half_nodes.size());
  const auto odd = bs::block_mu(p, lambda, g, -1.0, g.half_nodes.size());
  even.insert(even.end(), odd.begin(), odd.end());
  std::sort(even.begin(), even.end());
  REQUIRE(even.size() == full.size());
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::abs(even[i] - full[i]) <= 1e-12);
}

TEST_CASE("thread query is consistent with the build") {
  CHECK(kernels::max_threads() >= 1);
  if (!kernels::openmp_enabled()) CHECK(kernels::max_threads() == 1);
}
