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

// Special functions needed by the light-particle closed forms and the
// semiclassical predictor: principal-branch Lambert W, the Airy function Ai
// with its derivative, and the negative constants sigma_k that alternate
// between stationary points (k even) and zeros (k odd) of Ai.
//
// Ai is evaluated from its Maclaurin pair for |x| <= kAirySeriesLimit (summed
// in extended precision) and from the large-argument expansions outside that
// band. Both regimes stay below 1e-12 absolute error across the switch; the
// overlap band [6.5, 7.5] on either side of the origin is covered by tests.

#ifndef TRIMER_SPECFUN_HPP_
#define TRIMER_SPECFUN_HPP_

#include <utility>

namespace trimer::specfun {

inline constexpr double kInvE = 0.36787944117144232159552377016146;

/// W0(u) for u >= -1/e. Arguments up to 1e-15 below -1/e are clamped to the
/// branch point; anything lower throws DomainError.
double lambert_w0(double u);

/// W0 evaluated from the offset q = u + 1/e >= 0. Callers that can form q
/// without cancellation get full relative accuracy in W0 + 1 near the branch
/// point, which lambert_w0(u) cannot provide once u is rounded.
double lambert_w0_from_branch_offset(double q);

double airy_ai(double x);
double airy_ai_prime(double x);

/// Regime-specific evaluators, exposed so the crossover can be tested.
double airy_ai_series(double x);
double airy_ai_prime_series(double x);
double airy_ai_asymptotic(double x);
double airy_ai_prime_asymptotic(double x);

inline constexpr double kAirySeriesLimit = 7.0;

enum class SigmaKind { Extremum, Zero };

struct AirySigma {
  int k = 0;
  double value = 0.0;
  SigmaKind kind = SigmaKind::Extremum;
};

inline constexpr int kMaxSigmaIndex = 50;

/// sigma_k: the ((k/2)+1)-th stationary point of Ai for even k, the
/// (((k-1)/2)+1)-th zero of Ai for odd k. Throws RangeError for k outside
/// [0, kMaxSigmaIndex].
AirySigma sigma(int k);

/// Closed-form enclosure [lo, hi] of sigma_k. For odd k these are the
/// classical zero bounds; for even k the lower end is the bound of the next
/// zero and the upper end the bound of the previous one (0 for k = 0).
std::pair<double, double> sigma_bounds(int k);

}  // namespace trimer::specfun

#endif  // TRIMER_SPECFUN_HPP_
