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

#include "trimer/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trimer/core.hpp"

namespace trimer::specfun {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

// Ai(0) and -Ai'(0).
constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kMinusAiPrime0 = 0.258819403792806798405183560189203963L;

// W0 around the branch point in powers of p = sqrt(2 (e u + 1)).
double branch_series(double p) {
  constexpr double c[] = {-1.0,
                          1.0,
                          -1.0 / 3.0,
                          11.0 / 72.0,
                          -43.0 / 540.0,
                          769.0 / 17280.0,
                          -221.0 / 8505.0,
                          680863.0 / 43545600.0};
  double w = c[7];
  for (int i = 6; i >= 0; --i) w = w * p + c[i];
  return w;
}

double halley_w0(double u, double w) {
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - u;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double u) {
  if (std::isnan(u)) throw DomainError("lambert_w0: NaN argument");
  const double q = u + kInvE;
  if (q < -1e-15) throw DomainError("lambert_w0: argument below -1/e");
  if (q <= 0.0) return -1.0;
  if (u == 0.0) return 0.0;
  if (std::isinf(u)) return u;
  return lambert_w0_from_branch_offset(q);
}

double lambert_w0_from_branch_offset(double q) {
  if (q < 0.0) throw DomainError("lambert_w0: negative branch offset");
  if (q == 0.0) return -1.0;
  const double p = std::sqrt(2.0 * kE * q);
  if (q < 1e-8) return branch_series(p);
  const double u = q - kInvE;
  if (u == 0.0) return 0.0;
  double guess;
  if (u < -0.32) {
    guess = branch_series(p);
  } else if (u <= 3.0) {
    guess = std::log1p(u);
  } else {
    const double l1 = std::log(u);
    const double l2 = std::log(l1);
    guess = l1 - l2 + l2 / l1;
  }
  return halley_w0(u, guess);
}

// Maclaurin pair: Ai = Ai(0) f - (-Ai'(0)) g with
//   f = sum 3^k (1/3)_k x^{3k} / (3k)!,  g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!.
double airy_ai_series(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double tf = 1.0L, tg = x;
  long double f = tf, g = tg;
  for (int k = 1; k < 400; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
    if (std::abs(tf) + std::abs(tg) < 1e-24L * (std::abs(f) + std::abs(g))) break;
  }
  return static_cast<double>(kAi0 * f - kMinusAiPrime0 * g);
}

double airy_ai_prime_series(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double tf = x * x / 2.0L, tg = 1.0L;
  long double f = tf, g = tg;
  for (int k = 1; k < 400; ++k) {
    tf *= x3 / ((3.0L * k) * (3.0L * k + 2.0L));
    tg *= x3 / ((3.0L * k - 2.0L) * (3.0L * k));
    f += tf;
    g += tg;
    if (std::abs(tf) + std::abs(tg) < 1e-24L * (std::abs(f) + std::abs(g))) break;
  }
  return static_cast<double>(kAi0 * f - kMinusAiPrime0 * g);
}

namespace {

// Coefficients u_k, v_k of the large-argument expansions.
struct AsymptoticCoeffs {
  static constexpr int kCount = 40;
  double u[kCount];
  double v[kCount];
  constexpr AsymptoticCoeffs() : u(), v() {
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 1; k < kCount; ++k) {
      const double kk = k;
      u[k] = u[k - 1] * (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
             ((2.0 * kk - 1.0) * 216.0 * kk);
      v[k] = -u[k] * (6.0 * kk + 1.0) / (6.0 * kk - 1.0);
    }
  }
};

constexpr AsymptoticCoeffs kCoeffs{};

// sum_k (-1)^k c_k z^-k, truncated at the smallest term.
double alternating_sum(const double* c, double inv_z) {
  double sum = 0.0, power = 1.0, last = INFINITY;
  for (int k = 0; k < AsymptoticCoeffs::kCount; ++k) {
    const double term = c[k] * power;
    if (std::abs(term) > last) break;
    sum += (k % 2 == 0) ? term : -term;
    last = std::abs(term);
    if (last < 1e-17 * std::abs(sum)) break;
    power *= inv_z;
  }
  return sum;
}

// Even and odd parts for the oscillatory regime:
//   P = sum (-1)^k c_{2k} z^{-2k},  Q = sum (-1)^k c_{2k+1} z^{-2k-1}.
std::pair<double, double> split_sums(const double* c, double inv_z) {
  double p = 0.0, q = 0.0, power = 1.0, last = INFINITY;
  for (int k = 0; k < AsymptoticCoeffs::kCount; ++k) {
    const double term = c[k] * power;
    if (std::abs(term) > last) break;
    const bool negative = (k / 2) % 2 == 1;
    if (k % 2 == 0) {
      p += negative ? -term : term;
    } else {
      q += negative ? -term : term;
    }
    last = std::abs(term);
    if (last < 1e-17 * (std::abs(p) + std::abs(q))) break;
    power *= inv_z;
  }
  return {p, q};
}

}  // namespace

double airy_ai_asymptotic(double x) {
  const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
  if (x > 0.0) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    return 0.5 * inv_sqrt_pi * std::exp(-zeta) / std::sqrt(std::sqrt(x)) *
           alternating_sum(kCoeffs.u, 1.0 / zeta);
  }
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const auto [p, q] = split_sums(kCoeffs.u, 1.0 / zeta);
  const double phase = zeta - 0.25 * kPi;
  return inv_sqrt_pi / std::sqrt(std::sqrt(z)) * (std::cos(phase) * p + std::sin(phase) * q);
}

double airy_ai_prime_asymptotic(double x) {
  const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
  if (x > 0.0) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    return -0.5 * inv_sqrt_pi * std::sqrt(std::sqrt(x)) * std::exp(-zeta) *
           alternating_sum(kCoeffs.v, 1.0 / zeta);
  }
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const auto [p, q] = split_sums(kCoeffs.v, 1.0 / zeta);
  const double phase = zeta - 0.25 * kPi;
  return inv_sqrt_pi * std::sqrt(std::sqrt(z)) * (std::sin(phase) * p - std::cos(phase) * q);
}

double airy_ai(double x) {
  if (std::isnan(x)) return x;
  if (std::abs(x) <= kAirySeriesLimit) return airy_ai_series(x);
  if (x > 110.0) return 0.0;
  return airy_ai_asymptotic(x);
}

double airy_ai_prime(double x) {
  if (std::isnan(x)) return x;
  if (std::abs(x) <= kAirySeriesLimit) return airy_ai_prime_series(x);
  if (x > 110.0) return 0.0;
  return airy_ai_prime_asymptotic(x);
}

std::pair<double, double> sigma_bounds(int k) {
  if (k < 0 || k > kMaxSigmaIndex + 1) {
    throw RangeError("sigma_bounds: index " + std::to_string(k) + " unsupported");
  }
  // Bounds on the (n+1)-th zero a_{n+1} = sigma_{2n+1}.
  auto zero_lower = [](int n) {
    const double m = 4.0 * n + 3.0;
    return -std::pow(3.0 * kPi / 8.0 * m + 1.5 * std::atan(5.0 / (18.0 * kPi * m)), 2.0 / 3.0);
  };
  auto zero_upper = [](int n) { return -std::pow(3.0 * kPi / 8.0 * (4.0 * n + 3.0), 2.0 / 3.0); };
  if (k % 2 == 1) {
    const int n = (k - 1) / 2;
    return {zero_lower(n), zero_upper(n)};
  }
  const int n = k / 2;
  return {zero_lower(n), n == 0 ? 0.0 : zero_upper(n - 1)};
}

namespace {

// Sign-change bisection down to a narrow bracket, then Newton with the
// bracket as safeguard.
template <class F, class DF>
double polish_root(F f, DF df, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 20; ++it) {
    const double step = f(x) / df(x);
    const double next = x - step;
    if (!(next > lo - 1e-6 && next < hi + 1e-6)) break;
    x = next;
    if (std::abs(step) <= 2e-16 * std::abs(x)) break;
  }
  return x;
}

double airy_zero(int n) {
  const auto [lo, hi] = sigma_bounds(2 * n + 1);
  return polish_root(airy_ai, airy_ai_prime, lo, hi);
}

}  // namespace

AirySigma sigma(int k) {
  if (k < 0 || k > kMaxSigmaIndex) {
    throw RangeError("sigma: index " + std::to_string(k) + " outside [0, 50]");
  }
  if (k % 2 == 1) return {k, airy_zero((k - 1) / 2), SigmaKind::Zero};
  // Exactly one stationary point of Ai lies strictly between consecutive zeros.
  const int n = k / 2;
  const double lo = airy_zero(n);
  const double hi = n == 0 ? 0.0 : airy_zero(n - 1);
  const double x = polish_root(airy_ai_prime, [](double t) { return t * airy_ai(t); }, lo, hi);
  return {k, x, SigmaKind::Extremum};
}

}  // namespace trimer::specfun
