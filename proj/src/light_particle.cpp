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

#include "trimer/light_particle.hpp"

#include <cmath>
#include <numbers>

#include "trimer/core.hpp"
#include "trimer/specfun.hpp"

namespace trimer::light {

namespace {

// With u = |alpha||x|/2 the even level is sqrt(lambda0) = (|alpha|/2) nu(u),
// where nu = W(u e^-u)/u + 1 solves nu = 1 + exp(-u nu).
double nu_even(double u) {
  if (u < 1e-8) return 2.0 - 2.0 * u + 4.0 * u * u;
  return specfun::lambert_w0(u * std::exp(-u)) / u + 1.0;
}

// Odd level: sqrt(lambda1) = (|alpha|/2) nu1(u), nu1 = W(-u e^-u)/u + 1, u > 1.
// The Lambert argument is formed as an offset from -1/e without cancellation.
double nu_odd(double u) {
  const double d = u - 1.0;
  double t;  // log(u) + 1 - u
  if (std::abs(d) < 1e-3) {
    t = 0.0;
    double power = d * d;
    for (int k = 2; k < 14; ++k) {
      t += (k % 2 == 0 ? -power : power) / k;
      power *= d;
    }
  } else {
    t = std::log(u) + 1.0 - u;
  }
  const double q = -std::expm1(t) * specfun::kInvE;
  const double w = specfun::lambert_w0_from_branch_offset(q);
  return (w + u) / u;
}

}  // namespace

double eigen_residual(double alpha, double x, double lambda) {
  const double s = std::sqrt(lambda);
  const double a = alpha + 2.0 * s;
  return a * a - alpha * alpha * std::exp(-2.0 * s * std::abs(x));
}

double lambda0(double alpha, double x) {
  require_attractive(alpha, "lambda0");
  const double a = -alpha;
  const double k = 0.5 * a * nu_even(0.5 * a * std::abs(x));
  return x == 0.0 ? alpha * alpha : k * k;
}

double lambda1(double alpha, double x) {
  require_attractive(alpha, "lambda1");
  const double a = -alpha;
  const double u = 0.5 * a * std::abs(x);
  if (!(u > 1.0)) throw DomainError("lambda1: requires |x| > 2/|alpha|");
  const double k = 0.5 * a * nu_odd(u);
  return k * k;
}

GroundState ground_state(double alpha, double x) {
  require_attractive(alpha, "ground_state");
  const double a = -alpha;
  const double ax = std::abs(x);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  const double u = 0.5 * a * ax;
  GroundState g;
  g.alpha = alpha;
  g.x = x;
  const double nu = nu_even(u);
  g.k = x == 0.0 ? a : 0.5 * a * nu;
  // nu'/nu = -1 / (exp(u nu) + u); d sqrt(lambda0)/d|x| = (alpha^2/4) nu'(u).
  const double dnu = -nu / (std::exp(u * nu) + u);
  const double dk_abs = 0.25 * a * a * dnu;
  const double kx = g.k * ax;
  const double emk = std::exp(-kx);
  g.N = std::sqrt(g.k / (2.0 * (1.0 + emk * (1.0 + kx))));
  const double dlogn_abs =
      dk_abs / (2.0 * g.k) + (g.k * dk_abs * ax * ax + g.k * g.k * ax) / (2.0 * (kx + std::exp(kx) + 1.0));
  g.dk = sign * dk_abs;
  g.dlogN = sign * dlogn_abs;
  return g;
}

double GroundState::value(double y) const {
  return N * (std::exp(-k * std::abs(0.5 * x - y)) + std::exp(-k * std::abs(0.5 * x + y)));
}

GroundState::Parts GroundState::dx_parts(double y) const {
  const double t1 = 0.5 * x - y;
  const double t2 = 0.5 * x + y;
  const double a1 = std::abs(t1), a2 = std::abs(t2);
  const double e1 = std::exp(-k * a1), e2 = std::exp(-k * a2);
  auto sgn = [](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); };
  Parts p;
  p.phi1 = dlogN * N * (e1 + e2);
  p.phi2 = N * dk * (a1 * e1 + a2 * e2);
  p.phi3 = 0.5 * N * k * (sgn(t1) * e1 + sgn(t2) * e2);
  return p;
}

double normalization_N(double alpha, double x) { return ground_state(alpha, x).N; }

double psi_bo(double alpha, double x, double y) { return ground_state(alpha, x).value(y); }

double dpsi_bo_dx(double alpha, double x, double y) {
  if (x == 0.0) throw DomainError("dpsi_bo_dx: lambda0 is not differentiable at x = 0");
  return ground_state(alpha, x).dx_parts(y).total();
}

double dpsi_bo_dy(double alpha, double x, double y, int side) {
  const GroundState g = ground_state(alpha, x);
  const double t1 = 0.5 * x - y;
  const double t2 = 0.5 * x + y;
  // Signs with the kink resolved by the side of approach in y.
  const double s1 = t1 > 0.0 ? 1.0 : (t1 < 0.0 ? -1.0 : (side > 0 ? -1.0 : 1.0));
  const double s2 = t2 > 0.0 ? 1.0 : (t2 < 0.0 ? -1.0 : (side > 0 ? 1.0 : -1.0));
  return g.N * g.k *
         (s1 * std::exp(-g.k * std::abs(t1)) - s2 * std::exp(-g.k * std::abs(t2)));
}

double d2psi_bo_dy2(double alpha, double x, double y) {
  const GroundState g = ground_state(alpha, x);
  return g.N * g.k * g.k *
         (std::exp(-g.k * std::abs(0.5 * x - y)) + std::exp(-g.k * std::abs(0.5 * x + y)));
}

LightSpectrum light_spectrum(double alpha, double x) {
  LightSpectrum s;
  s.x = x;
  s.lambda0 = lambda0(alpha, x);
  if (std::abs(x) > lambda1_threshold(alpha)) s.lambda1 = lambda1(alpha, x);
  s.N = normalization_N(alpha, x);
  return s;
}

}  // namespace trimer::light
