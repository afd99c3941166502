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

// Light particle in the field of two frozen heavy particles at y = +-x/2:
//
//   h_x = -d^2/dy^2 + alpha delta(y - x/2) + alpha delta(y + x/2).
//
// For alpha < 0 the bound states are -lambda0(x) (even in y, always present)
// and -lambda1(x) (odd in y, present for |x| > 2/|alpha|). Both are written
// through the principal Lambert W branch. The ground state
//
//   psi(x, y) = N(x) (exp(-k|x/2 - y|) + exp(-k|x/2 + y|)),  k = sqrt(lambda0)
//
// is even in x and in y; its x-derivative feeds the adiabatic correction.

#ifndef TRIMER_LIGHT_PARTICLE_HPP_
#define TRIMER_LIGHT_PARTICLE_HPP_

#include <optional>

namespace trimer::light {

/// (alpha + 2 sqrt(lambda))^2 - alpha^2 exp(-2 sqrt(lambda) |x|).
double eigen_residual(double alpha, double x, double lambda);

double lambda0(double alpha, double x);

/// Throws DomainError when |x| <= 2/|alpha| (no odd bound state).
double lambda1(double alpha, double x);

/// N(x) of the normalized ground state.
double normalization_N(double alpha, double x);

double psi_bo(double alpha, double x, double y);

/// One-sided y-derivative of psi at y: side > 0 takes the limit from above.
double dpsi_bo_dy(double alpha, double x, double y, int side);

/// Second y-derivative away from the kinks (equals lambda0 * psi there).
double d2psi_bo_dy2(double alpha, double x, double y);

/// Everything that depends on x alone, computed once per heavy separation.
struct GroundState {
  double alpha = -1.0;
  double x = 0.0;
  double k = 1.0;        // sqrt(lambda0)
  double dk = 0.0;       // d sqrt(lambda0) / dx
  double N = 0.5;
  double dlogN = 0.0;    // N'/N

  /// The three pieces phi1 - phi2 - phi3 of d psi / dx.
  struct Parts {
    double phi1, phi2, phi3;
    double total() const { return phi1 - phi2 - phi3; }
  };
  Parts dx_parts(double y) const;
  double value(double y) const;
};

/// Requires alpha < 0. At x = 0 the derivative data are the x -> 0+ limits.
GroundState ground_state(double alpha, double x);

/// d psi / dx at (x, y); x != 0.
double dpsi_bo_dx(double alpha, double x, double y);

struct LightSpectrum {
  double x = 0.0;
  double lambda0 = 0.0;
  std::optional<double> lambda1;
  double N = 0.0;
};

LightSpectrum light_spectrum(double alpha, double x);

/// Threshold separation 2/|alpha| beyond which lambda1 exists.
inline double lambda1_threshold(double alpha) { return 2.0 / (alpha < 0 ? -alpha : alpha); }

}  // namespace trimer::light

#endif  // TRIMER_LIGHT_PARTICLE_HPP_
