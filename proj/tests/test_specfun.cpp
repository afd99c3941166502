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
#include <numbers>

#include <doctest.h>

#include "trimer/core.hpp"
#include "trimer/specfun.hpp"

using namespace trimer::specfun;

namespace {

// Bisection on w e^w = u over [lo, hi].
double w_by_bisection(double u, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("lambert W at exact points") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambert_w0(-kInvE) == doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("lambert W matches bisection on w e^w = u") {
  CHECK(lambert_w0(0.36787944117) == doctest::Approx(w_by_bisection(0.36787944117, 0.0, 1.0)).epsilon(1e-14));
  CHECK(lambert_w0(0.36787944117) == doctest::Approx(0.27846).epsilon(1e-4));
  for (double u : {-0.3, -0.1, 1e-6, 0.5, 3.0, 50.0, 1e4}) {
    const double w = lambert_w0(u);
    CHECK(w * std::exp(w) == doctest::Approx(u).epsilon(1e-14));
  }
}

TEST_CASE("lambert W from the branch offset resolves the neighbourhood of -1/e") {
  for (double q : {1e-14, 1e-10, 1e-6, 1e-3, 0.1}) {
    const double w = lambert_w0_from_branch_offset(q);
    const double u = -kInvE + q;
    CHECK(w > -1.0);
    // Residual in the offset variable, w e^w + 1/e = q, up to the rounding of 1/e.
    CHECK(std::abs((w * std::exp(w) + kInvE) - q) <= 1e-12 * q + 1e-16);
    if (q >= 1e-3) CHECK(w == doctest::Approx(lambert_w0(u)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(lambert_w0(-0.5), trimer::DomainError);
}

TEST_CASE("Airy values at the origin") {
  CHECK(airy_ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-10));
  CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194038).epsilon(1e-10));
  CHECK(airy_ai(0.0) == doctest::Approx(std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("Airy large-argument ratio tends to one") {
  const double x = 10.0;
  const double lead = std::exp(-2.0 / 3.0 * std::pow(x, 1.5)) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25));
  CHECK(airy_ai(x) / lead == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("Airy satisfies its differential equation") {
  const double h = 1e-4;
  for (double x : {-1.0, 0.0, 2.0, -4.0, -6.5, -7.5, 7.5}) {
    const double d2 = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    CHECK(std::abs(d2 - x * airy_ai(x)) <= 1e-6);
  }
  for (double x : {1.0, -3.0, 5.0}) {
    const double fd = (airy_ai(x + h) - airy_ai(x - h)) / (2.0 * h);
    CHECK(std::abs(fd - airy_ai_prime(x)) <= 1e-8);
  }
}

TEST_CASE("series and asymptotic branches agree at the switch") {
  for (double x : {-kAirySeriesLimit, kAirySeriesLimit}) {
    CHECK(airy_ai_series(x) == doctest::Approx(airy_ai_asymptotic(x)).epsilon(1e-9).scale(1e-3));
    CHECK(airy_ai_prime_series(x) == doctest::Approx(airy_ai_prime_asymptotic(x)).epsilon(1e-9).scale(1e-3));
  }
}

TEST_CASE("first sigma constants") {
  const AirySigma s0 = sigma(0), s1 = sigma(1);
  CHECK(s0.kind == SigmaKind::Extremum);
  CHECK(s1.kind == SigmaKind::Zero);
  CHECK(s0.value == doctest::Approx(-1.0187929716).epsilon(1e-10));
  CHECK(s1.value == doctest::Approx(-2.3381074105).epsilon(1e-10));
  CHECK(std::abs(airy_ai_prime(s0.value)) < 1e-12);
  CHECK(std::abs(airy_ai(s1.value)) < 1e-12);
}

TEST_CASE("sigma constants interlace and respect their enclosures") {
  for (int k = 0; k <= 30; ++k) {
    const AirySigma s = sigma(k);
    CHECK(s.value < 0.0);
    CHECK(sigma(k + 1).value < s.value);
    const auto [lo, hi] = sigma_bounds(k);
    CHECK(lo <= s.value);
    CHECK(s.value <= hi);
    const double r = s.kind == SigmaKind::Zero ? airy_ai(s.value) : airy_ai_prime(s.value);
    CHECK(std::abs(r) < 1e-12);
  }
  CHECK_THROWS_AS(sigma(-1), trimer::RangeError);
  CHECK_THROWS_AS(sigma(kMaxSigmaIndex + 1), trimer::RangeError);
}
