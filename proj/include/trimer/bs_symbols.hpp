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

// Momentum-space symbols of the boundary operator at z = -lambda. The
// Fourier normalization 1/(2 pi) is folded into both expressions.

#ifndef TRIMER_BS_SYMBOLS_HPP_
#define TRIMER_BS_SYMBOLS_HPP_

#include <cmath>
#include <numbers>

namespace trimer::bs {

/// Multiplier of the diagonal block: 1 / sqrt(4 eps^2 nu^2 + (4 + eps^2) lambda).
inline double md_symbol(double epsilon, double lambda, double nu) {
  const double e2 = epsilon * epsilon;
  return 1.0 / std::sqrt(4.0 * e2 * nu * nu + (4.0 + e2) * lambda);
}

/// Integral kernel of the off-diagonal block:
///   (2/pi) / ((4 + eps^2)(nu^2 + nu'^2) + 2 (4 - eps^2) nu nu' + 4 lambda).
inline double mod_kernel(double epsilon, double lambda, double nu, double nu2) {
  const double e2 = epsilon * epsilon;
  const double denom =
      (4.0 + e2) * (nu * nu + nu2 * nu2) + 2.0 * (4.0 - e2) * nu * nu2 + 4.0 * lambda;
  return 2.0 / std::numbers::pi / denom;
}

}  // namespace trimer::bs

#endif  // TRIMER_BS_SYMBOLS_HPP_
