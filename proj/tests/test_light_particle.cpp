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
#include <vector>

#include <doctest.h>

#include "trimer/core.hpp"
#include "trimer/light_particle.hpp"
#include "trimer/numerics.hpp"

using namespace trimer;
using namespace trimer::light;

namespace {

// sqrt(lambda) from bisection on 2k = |alpha| (1 + sign e^{-k|x|}).
double k_by_bisection(double alpha, double x, double sign, double lo, double hi) {
  const double a = std::abs(alpha);
  auto g = [&](double k) { return 2.0 * k - a * (1.0 + sign * std::exp(-k * std::abs(x))); };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double unnormalized_norm(double alpha, double x) {
  const double k = std::sqrt(lambda0(alpha, x));
  auto f = [&](double y) {
    const double v = std::exp(-k * std::abs(y - 0.5 * x)) + std::exp(-k * std::abs(y + 0.5 * x));
    return v * v;
  };
  const double cuts[] = {-0.5 * std::abs(x), 0.5 * std::abs(x)};
  const double inf = std::numeric_limits<double>::infinity();
  return numerics::quad_adaptive(f, -inf, inf, cuts, 1e-14);
}

}  // namespace

TEST_CASE("ground eigenvalue at reference points") {
  CHECK(lambda0(-1.0, 0.0) == 1.0);
  const double k2 = 0.5 * 0.27846454276107380 + 0.5;  // W(1/e) / 2 + 1/2
  CHECK(lambda0(-1.0, 2.0) == doctest::Approx(k2 * k2).epsilon(1e-12));
  CHECK(lambda0(-1.0, 2.0) == doctest::Approx(0.40862).epsilon(1e-4));
  CHECK(std::abs(lambda0(-1.0, 1e6) - 0.25) <= 1e-5);
  for (double a : {-0.5, -1.0, -2.0}) {
    for (double x : {1e-9, 0.01, 0.3, 1.0, 4.0, 25.0}) {
      const double k = k_by_bisection(a, x, 1.0, 0.5 * std::abs(a), std::abs(a));
      CHECK(std::sqrt(lambda0(a, x)) == doctest::Approx(k).epsilon(1e-13));
    }
  }
}

TEST_CASE("excited eigenvalue against bisection") {
  const double k = k_by_bisection(-2.0, 4.0, -1.0, 1e-12, 1.0);
  CHECK(lambda1(-2.0, 4.0) == doctest::Approx(k * k).epsilon(1e-12));
  CHECK(lambda1(-1.0, 2.0 + 1e-6) <= 1e-5);
  CHECK(lambda1(-1.0, 2.0 + 1e-6) > 0.0);
  CHECK(std::abs(lambda1(-1.0, 1e6) - 0.25) <= 1e-5);
  for (double x : {2.001, 2.1, 3.0, 8.0}) {
    const double kk = k_by_bisection(-1.0, x, -1.0, 1e-14, 0.5);
    CHECK(std::sqrt(lambda1(-1.0, x)) == doctest::Approx(kk).epsilon(1e-10));
  }
  CHECK_THROWS_AS(lambda1(-1.0, 1.5), DomainError);
}

TEST_CASE("spectrum bounds, evenness and residuals") {
  for (double a : {-0.5, -1.0, -2.0}) {
    const double a2 = a * a, a4 = a2 * a2;
    for (double x : {0.0, 0.2, 1.0, 2.0 / -a, 2.5 / -a, 7.0, 30.0}) {
      const LightSpectrum s = light_spectrum(a, x), m = light_spectrum(a, -x);
      CHECK(s.lambda0 > a2 / 4.0);
      CHECK(s.lambda0 <= a2);
      CHECK(s.lambda0 == m.lambda0);
      CHECK(s.N == m.N);
      CHECK(s.lambda1.has_value() == m.lambda1.has_value());
      CHECK(std::abs(eigen_residual(a, x, s.lambda0)) <= 1e-11 * a4);
      if (s.lambda1) {
        CHECK(*s.lambda1 > 0.0);
        CHECK(*s.lambda1 < a2 / 4.0);
        CHECK(*s.lambda1 == *m.lambda1);
        CHECK(std::abs(eigen_residual(a, x, *s.lambda1)) <= 1e-11 * a4);
      }
      CHECK(s.lambda1.has_value() == (std::abs(x) > 2.0 / -a));
    }
  }
  CHECK(eigen_residual(-1.0, 0.0, 1.0) == 0.0);
  // lambda0(1) exceeds 0.5, so the residual has the sign of the lower side.
  const double r_lo = eigen_residual(-1.0, 1.0, 0.5);
  const double r_hi = eigen_residual(-1.0, 1.0, 0.95);
  CHECK(r_lo * r_hi < 0.0);
}

TEST_CASE("normalization closed form") {
  CHECK(normalization_N(-1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normalization_N(-2.0, 3.0) == doctest::Approx(1.0 / std::sqrt(unnormalized_norm(-2.0, 3.0))).epsilon(1e-9));
  for (double x : {0.0, 0.4, 2.0, 9.0}) {
    const GroundState g = ground_state(-1.0, x);
    auto f = [&g](double y) { return g.value(y) * g.value(y); };
    const double cuts[] = {-0.5 * x, 0.5 * x};
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(std::abs(numerics::quad_adaptive(f, -inf, inf, cuts, 1e-13) - 1.0) <= 1e-9);
  }
}

TEST_CASE("eigenfunction symmetry and jump conditions") {
  CHECK(psi_bo(-1.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {0.3, 1.7, 5.0}) {
    for (double y : {0.0, 0.2, 1.1, 4.0}) {
      CHECK(psi_bo(-1.0, x, y) == psi_bo(-1.0, x, -y));
      CHECK(psi_bo(-1.0, x, y) == psi_bo(-1.0, -x, y));
    }
    for (double a : {-1.0, -2.0}) {
      for (double y : {0.5 * x, -0.5 * x}) {
        const double jump = dpsi_bo_dy(a, x, y, +1) - dpsi_bo_dy(a, x, y, -1);
        CHECK(std::abs(jump - a * psi_bo(a, x, y)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("y derivatives match finite differences away from the kinks") {
  const double a = -1.0, x = 1.4, h = 1e-5;
  for (double y : {0.1, 1.5, -2.0}) {
    const double fd = (psi_bo(a, x, y + h) - psi_bo(a, x, y - h)) / (2.0 * h);
    CHECK(std::abs(dpsi_bo_dy(a, x, y, +1) - fd) <= 1e-8);
    const double fd2 = (psi_bo(a, x, y + h) - 2.0 * psi_bo(a, x, y) + psi_bo(a, x, y - h)) / (h * h);
    CHECK(std::abs(d2psi_bo_dy2(a, x, y) - fd2) <= 1e-4);
  }
}

TEST_CASE("x derivative against central differences") {
  const double h = 1e-5;
  CHECK(std::abs(dpsi_bo_dx(-1.0, 1.0, 0.3) - (psi_bo(-1.0, 1.0 + h, 0.3) - psi_bo(-1.0, 1.0 - h, 0.3)) / (2.0 * h)) <= 1e-6);
  for (double a : {-0.5, -2.0}) {
    for (double x : {0.2, 1.3, 3.0, 6.0}) {
      for (double y : {0.0, 0.3 * x, 0.5 * x + 0.7, -(0.5 * x + 2.0)}) {
        const double fd = (psi_bo(a, x + h, y) - psi_bo(a, x - h, y)) / (2.0 * h);
        CHECK(std::abs(dpsi_bo_dx(a, x, y) - fd) <= 1e-6);
        CHECK(dpsi_bo_dx(a, -x, y) == doctest::Approx(-dpsi_bo_dx(a, x, y)).epsilon(1e-14));
      }
    }
  }
  CHECK_THROWS_AS(dpsi_bo_dx(-1.0, 0.0, 0.3), DomainError);
}

TEST_CASE("x-derivative norm stays below 2|alpha|") {
  for (double a : {-1.0, -2.0}) {
    for (double x : {0.05, 0.4, 1.0, 3.0, 10.0}) {
      const GroundState g = ground_state(a, x);
      auto f = [&g](double y) {
        const double d = g.dx_parts(y).total();
        return d * d;
      };
      const double cuts[] = {-0.5 * x, 0.5 * x};
      const double inf = std::numeric_limits<double>::infinity();
      CHECK(std::sqrt(numerics::quad_adaptive(f, -inf, inf, cuts, 1e-11)) <= 2.0 * -a);
    }
  }
}

TEST_CASE("repulsive coupling is rejected") {
  CHECK_THROWS_AS(lambda0(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(psi_bo(0.0, 1.0, 0.0), DomainError);
}
