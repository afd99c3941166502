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
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "trimer/core.hpp"
#include "trimer/numerics.hpp"

using namespace trimer::numerics;

namespace {

// Dirichlet FD matrix of -u'' on [0, pi] with n interior nodes.
void dirichlet_laplacian(std::size_t n, std::vector<double>& d, std::vector<double>& e) {
  const double h = std::numbers::pi / static_cast<double>(n + 1);
  d.assign(n, 2.0 / (h * h));
  e.assign(n - 1, -1.0 / (h * h));
}

}  // namespace

TEST_CASE("adaptive quadrature on elementary integrals") {
  const std::vector<double> none;
  CHECK(quad_adaptive([](double x) { return x; }, 0.0, 1.0, none, 1e-12) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(quad_adaptive([](double y) { return std::exp(-y); }, 0.0,
                      std::numeric_limits<double>::infinity(), none, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double kink[] = {0.0};
  CHECK(quad_adaptive([](double y) { return std::abs(y); }, -1.0, 1.0, kink, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(quad_adaptive([](double y) { return std::exp(-y * y); }, -inf, inf, none, 1e-12) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("tridiagonal eigenvalues") {
  const std::vector<double> d{2.0, 3.0}, e{0.0};
  const auto v = tridiag_lowest_eigs(d, e, 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == doctest::Approx(2.0));
  CHECK(v[1] == doctest::Approx(3.0));
  const std::vector<double> one{5.0}, empty;
  CHECK(tridiag_lowest_eigs(one, empty, 1).at(0) == doctest::Approx(5.0));

  std::vector<double> dd, ee;
  dirichlet_laplacian(2000, dd, ee);
  CHECK(tridiag_lowest_eigs(dd, ee, 1).at(0) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(sturm_count(dd, ee, 4.5) == 2);  // eigenvalues near 1 and 4
}

TEST_CASE("tridiagonal bisection agrees with QL") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> d(60), e(59);
  for (double& x : d) x = u(gen);
  for (double& x : e) x = u(gen);
  const auto low = tridiag_lowest_eigs(d, e, 10);
  auto all = tridiag_ql(d, e, nullptr);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < low.size(); ++i) CHECK(low[i] == doctest::Approx(all[i]).epsilon(1e-12));
}

TEST_CASE("dense symmetric eigenvalues") {
  SymMatrix a(2);
  a(0, 0) = 2.0;
  a(1, 1) = 3.0;
  CHECK(sym_lowest_eigs(a, 1).at(0) == doctest::Approx(2.0));
  SymMatrix b(2);
  b(1, 0) = 1.0;
  const auto vb = sym_lowest_eigs(b, 2);
  CHECK(vb[0] == doctest::Approx(-1.0));
  CHECK(vb[1] == doctest::Approx(1.0));
}

TEST_CASE("random symmetric matrix: lowest eigenvalues match full eigensystem") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 50;
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = u(gen);
  const auto low = sym_lowest_eigs(a, 8);
  const EigenSystem es = sym_eigensystem(a);
  for (std::size_t i = 0; i < low.size(); ++i) CHECK(std::abs(low[i] - es.values[i]) <= 1e-10);
  // Eigenvector residual of the lowest pair.
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = -es.values[0] * es.vectors[i * n];
    for (std::size_t j = 0; j < n; ++j) row += a(i, j) * es.vectors[j * n];
    res = std::max(res, std::abs(row));
  }
  CHECK(res <= 1e-10);
  std::vector<double> dense = a.to_dense();
  const auto d = dense_lowest_eigs(dense, n, 3);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(d[i] - es.values[i]) <= 1e-10);
}

TEST_CASE("root finders") {
  CHECK(root_bisect([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-14) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(root_bisect([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12) - std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(root_brent([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-14) - std::sqrt(2.0)) <= 1e-13);
  CHECK(std::abs(root_brent([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-14) - 0.7390851332151607) <= 1e-13);
  CHECK(bisect_iteration_bound(0.0, 1.0, 1e-3) >= 10);
}

TEST_CASE("Richardson extrapolation") {
  CHECK(richardson2(1.04, 1.01) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(richardson2(2.5, 2.5) == 2.5);
  std::vector<double> d1, e1, d2, e2;
  dirichlet_laplacian(199, d1, e1);  // h = pi / 200
  dirichlet_laplacian(399, d2, e2);  // h / 2
  const double vh = tridiag_lowest_eigs(d1, e1, 1)[0];
  const double vh2 = tridiag_lowest_eigs(d2, e2, 1)[0];
  CHECK(std::abs(richardson2(vh, vh2) - 1.0) * 10.0 <= std::abs(vh2 - 1.0));
}

TEST_CASE("golden-section maximization and Gauss-Legendre rule") {
  const double x = golden_max([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-9);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-8));
  std::vector<double> n, w;
  gauss_legendre(8, n, w);
  double m = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) m += w[i] * std::pow(n[i], 14);
  CHECK(m == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}
