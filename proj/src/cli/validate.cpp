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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "trimer/birman_schwinger.hpp"
#include "trimer/bo_effective.hpp"
#include "trimer/cli.hpp"
#include "trimer/light_particle.hpp"
#include "trimer/numerics.hpp"
#include "trimer/specfun.hpp"

namespace trimer::cli {

namespace {

// Regression baseline of 2 sup sqrt(R) and its maximizer at alpha = -1,
// frozen from the first run; both scale linearly with |alpha| (argmax as
// 1/|alpha|).
constexpr double kDeltaBaseline = 0.6244768917;
constexpr double kDeltaArgmaxBaseline = 0.38036502;

// Frozen threshold on |r_k(0.025) - s_k| for the effective solver ladder.
constexpr double kRatioThreshold = 0.15;
constexpr double kRatioLadder[] = {0.2, 0.1, 0.05, 0.025};

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fix(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Independent oracle for Ai and Ai' near the origin: Taylor series of
// y'' = x y about 0 in long double, a_{n+2} = a_{n-1} / ((n + 1)(n + 2)).
std::pair<long double, long double> airy_taylor(long double x) {
  constexpr int kTerms = 200;
  long double c[kTerms];
  c[0] = 1.0L / (std::pow(3.0L, 2.0L / 3.0L) * std::tgamma(2.0L / 3.0L));
  c[1] = -1.0L / (std::pow(3.0L, 1.0L / 3.0L) * std::tgamma(1.0L / 3.0L));
  c[2] = 0.0L;
  for (int n = 3; n < kTerms; ++n) c[n] = c[n - 3] / (static_cast<long double>(n) * (n - 1));
  long double value = 0.0L, deriv = 0.0L, xn = 1.0L;
  for (int n = 0; n + 1 < kTerms; ++n) {
    value += c[n] * xn;
    deriv += (n + 1) * c[n + 1] * xn;
    xn *= x;
  }
  return {value, deriv};
}

double newton_sigma0() {
  long double x = -1.0L;
  for (int it = 0; it < 50; ++it) {
    const auto [ai, dai] = airy_taylor(x);
    const long double step = dai / (x * ai);  // (Ai')' = x Ai
    x -= step;
    if (std::fabs(step) < 1e-18L) break;
  }
  return static_cast<double>(x);
}

double newton_sigma1() {
  long double x = -2.3L;
  for (int it = 0; it < 50; ++it) {
    const auto [ai, dai] = airy_taylor(x);
    const long double step = ai / dai;
    x -= step;
    if (std::fabs(step) < 1e-18L) break;
  }
  return static_cast<double>(x);
}

struct BsEntry {
  std::vector<bs::BoundStateResult> levels;
  double seconds = 0.0;
};

struct Context {
  const ValidateOptions& opt;
  std::map<std::pair<double, int>, BsEntry> bs;  // (eps, sector)
  std::map<std::pair<double, int>, bo::EffectiveEigs> eff;
  std::optional<std::string> bs_error;

  const BsEntry& bs_at(double eps, Sector s) {
    const auto key = std::make_pair(eps, static_cast<int>(s));
    auto it = bs.find(key);
    if (it != bs.end()) return it->second;
    const auto t0 = std::chrono::steady_clock::now();
    const bs::BsGrid g = bs::make_grid(opt.alpha, eps, opt.bs_nodes);
    bs::BsOptions o;
    o.tol = opt.bs_tol;
    BsEntry e;
    e.levels = bs::bs_bound_states({opt.alpha, eps, s}, opt.levels, g, o);
    e.seconds = seconds_since(t0);
    return bs.emplace(key, std::move(e)).first->second;
  }

  const bo::EffectiveEigs& eff_at(double eps, Sector s) {
    const auto key = std::make_pair(eps, static_cast<int>(s));
    auto it = eff.find(key);
    if (it != eff.end()) return it->second;
    return eff.emplace(key, bo::effective_eigs({opt.alpha, eps, s}, opt.levels)).first->second;
  }
};

constexpr Sector kSectors[] = {Sector::Bosonic, Sector::Fermionic};

std::string label(Sector s, int k) { return std::string(to_string(s)) + std::to_string(k); }

// ---------------------------------------------------------------------------

void check_closed_forms(Context&, CheckRecord& r) {
  double worst = 0.0, worst_origin = 0.0;
  for (double a : {-0.5, -1.0, -2.0}) {
    const double a4 = a * a * a * a;
    for (int i = 1; i <= 200; ++i) {
      const double x = 40.0 / -a * i / 200.0;
      const light::LightSpectrum s = light::light_spectrum(a, x);
      worst = std::max(worst, std::abs(light::eigen_residual(a, x, s.lambda0)) / a4);
      if (s.lambda1) worst = std::max(worst, std::abs(light::eigen_residual(a, x, *s.lambda1)) / a4);
    }
    worst_origin = std::max(worst_origin, std::abs(light::lambda0(a, 0.0) - a * a));
  }
  r.measured = "max residual/alpha^4 " + sci(worst) + "; |lambda0(0) - alpha^2| " + sci(worst_origin);
  r.bound = "1e-11; 1e-12";
  r.status = worst <= 1e-11 && worst_origin <= 1e-12 ? "pass" : "fail";
}

void check_psi(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, s = 1.0 / -a;
  double norm_err = 0.0, jump_err = 0.0, fd_err = 0.0;
  for (double x : {0.0, 0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0}) {
    x *= s;
    const light::GroundState g = light::ground_state(a, x);
    const double cuts[] = {-0.5 * x, 0.5 * x};
    auto f = [&g](double y) {
      const double v = g.value(y);
      return v * v;
    };
    const double inf = std::numeric_limits<double>::infinity();
    const double norm = numerics::quad_adaptive(f, -inf, inf, cuts, 1e-13);
    norm_err = std::max(norm_err, std::abs(norm - 1.0));
    if (x == 0.0) continue;
    for (double y : {0.5 * x, -0.5 * x}) {
      const double jump = light::dpsi_bo_dy(a, x, y, +1) - light::dpsi_bo_dy(a, x, y, -1);
      jump_err = std::max(jump_err, std::abs(jump - a * light::psi_bo(a, x, y)));
    }
  }
  const double h = 1e-5;
  int points = 0;
  for (int i = 0; i < 10; ++i) {
    const double x = (0.25 + 0.35 * i) * s;
    for (double y : {0.37 * 0.5 * x, 0.5 * x + 0.8 * s}) {
      const double fd = (light::psi_bo(a, x + h, y) - light::psi_bo(a, x - h, y)) / (2.0 * h);
      fd_err = std::max(fd_err, std::abs(light::dpsi_bo_dx(a, x, y) - fd));
      ++points;
    }
  }
  r.measured = "norm " + sci(norm_err) + "; jumps " + sci(jump_err) + "; d/dx vs FD (" +
               std::to_string(points) + " pts) " + sci(fd_err);
  r.bound = "1e-9; 1e-9; 1e-6";
  r.status = norm_err <= 1e-9 && jump_err <= 1e-9 && fd_err <= 1e-6 ? "pass" : "fail";
}

void check_delta(Context&, CheckRecord& r) {
  bool ok = true;
  std::string measured;
  for (double a : {-0.5, -1.0, -2.0}) {
    const bo::DeltaResult d = bo::delta_search(a);
    const double base = kDeltaBaseline * -a;
    const double base_x = kDeltaArgmaxBaseline / -a;
    const bool bound_ok = d.value <= 4.0 * -a && d.value > 0.0;
    const bool base_ok = std::abs(d.value - base) <= 1e-6 * base &&
                         std::abs(d.argmax - base_x) <= 1e-3 * base_x;
    ok = ok && bound_ok && base_ok;
    measured += (measured.empty() ? "" : "; ") + std::string("alpha=") + fix(a, 1) + ": delta " +
                fix(d.value, 10) + " at x " + fix(d.argmax, 8);
    r.details.push_back("alpha=" + fix(a, 1) + " delta=" + fix(d.value, 10) + " argmax=" +
                        fix(d.argmax, 8) + " bound=" + fix(4.0 * -a, 1) + " baseline=" +
                        fix(base, 10) + (base_ok ? "" : " (baseline mismatch)"));
  }
  r.measured = measured;
  r.bound = "delta <= 4|alpha|; baseline 0.6244768917|alpha| (rel 1e-6)";
  r.status = ok ? "pass" : "fail";
}

void check_airy(Context&, CheckRecord& r) {
  const double o0 = newton_sigma0(), o1 = newton_sigma1();
  const double e0 = std::abs(specfun::sigma(0).value - o0);
  const double e1 = std::abs(specfun::sigma(1).value - o1);
  bool ok = e0 <= 1e-10 && e1 <= 1e-10;
  int violations = 0;
  for (int k = 0; k <= 30; ++k) {
    const specfun::AirySigma s = specfun::sigma(k);
    const double next = specfun::sigma(k + 1).value;
    bool good = s.value < 0.0 && next < s.value;
    const double res = s.kind == specfun::SigmaKind::Zero ? specfun::airy_ai(s.value)
                                                          : specfun::airy_ai_prime(s.value);
    good = good && std::abs(res) < 1e-12;
    if (k % 2 == 1) {
      const double m = 4.0 * ((k - 1) / 2) + 3.0;
      const double lo = -std::pow(3.0 * std::numbers::pi * m / 8.0 +
                                      1.5 * std::atan(5.0 / (18.0 * std::numbers::pi * m)),
                                  2.0 / 3.0);
      const double hi = -std::pow(3.0 * std::numbers::pi * m / 8.0, 2.0 / 3.0);
      good = good && lo <= s.value && s.value <= hi;
    } else if (k >= 2) {
      const double hi = -std::pow(3.0 * std::numbers::pi * (4.0 * (k / 2) - 1.0) / 8.0, 2.0 / 3.0);
      good = good && s.value <= hi;
    }
    if (!good) {
      ++violations;
      r.details.push_back("k=" + std::to_string(k) + " violates interlacing/bracket/residual");
    }
  }
  ok = ok && violations == 0;
  r.measured = "|sigma0 - oracle| " + sci(e0) + "; |sigma1 - oracle| " + sci(e1) + "; " +
               std::to_string(violations) + " bracket violations (k=0..30)";
  r.bound = "1e-10; 0";
  r.status = ok ? "pass" : "fail";
}

void check_k1(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, a2 = a * a;
  const auto full = bo::k1_oracle_eigs(a, 6);
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    const double target = -specfun::sigma(k).value * a2;
    worst = std::max(worst, std::abs(full.at(k) - target) / a2);
  }
  const auto even = bo::k1_parity_eigs(a, 3, true);
  const auto odd = bo::k1_parity_eigs(a, 3, false);
  double split = 0.0;
  for (int j = 0; j < 3; ++j) {
    split = std::max(split, std::abs(even.at(j) - full.at(2 * j)) / a2);
    split = std::max(split, std::abs(odd.at(j) - full.at(2 * j + 1)) / a2);
  }
  r.measured = "max |e_k - |sigma_k| alpha^2| / alpha^2 " + sci(worst) + "; parity split " + sci(split);
  r.bound = "1e-4; 1e-8";
  r.status = worst <= 1e-4 && split <= 1e-8 ? "pass" : "fail";
}

void check_effective_ratio(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, a2 = a * a;
  bool monotone = true, threshold = true;
  double worst_final = 0.0;
  const int levels = std::min(ctx.opt.levels, 3);
  for (Sector sec : kSectors) {
    std::vector<std::optional<double>> ratios(levels * 4);  // [k * 4 + ladder index]
    for (int i = 0; i < 4; ++i) {
      const double eps = kRatioLadder[i];
      const bo::EffectiveEigs e = bo::effective_eigs({a, eps, sec}, levels);
      for (int k = 0; k < levels && k < static_cast<int>(e.shifted.size()); ++k) {
        ratios[k * 4 + i] = e.shifted[k] / (a2 * std::cbrt(eps * eps));
      }
    }
    for (int k = 0; k < levels; ++k) {
      const double s = bo::airy_slope(sec, k);
      std::string line = label(sec, k) + " s=" + fix(s) + " |r-s|:";
      std::optional<double> prev;
      bool mono_k = true;
      for (int i = 0; i < 4; ++i) {
        const auto& rv = ratios[k * 4 + i];
        if (!rv) {
          line += " eps=" + fix(kRatioLadder[i], 3) + ":absent";
          continue;
        }
        const double err = std::abs(*rv - s);
        line += " eps=" + fix(kRatioLadder[i], 3) + ":" + fix(err, 4);
        if (prev && !(err < *prev)) mono_k = false;
        prev = err;
      }
      const auto& last = ratios[k * 4 + 3];
      const double final_err = last ? std::abs(*last - s) : std::numeric_limits<double>::infinity();
      const bool thr_k = final_err <= kRatioThreshold;
      if (!last) mono_k = false;
      monotone = monotone && mono_k;
      threshold = threshold && thr_k;
      worst_final = std::max(worst_final, final_err);
      line += std::string(" [decrease ") + (mono_k ? "ok" : "FAIL") + ", threshold " +
              (thr_k ? "ok" : "FAIL") + "]";
      r.details.push_back(line);
    }
  }
  r.measured = std::string("monotone ") + (monotone ? "yes" : "no") +
               "; max |r_k(0.025) - s_k| " + fix(worst_final, 4);
  r.bound = "strictly decreasing; <= " + fix(kRatioThreshold, 2);
  r.status = monotone && threshold ? "pass" : "fail";
}

void check_bs_structure(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, a2 = a * a;
  double hs_excess = -std::numeric_limits<double>::infinity();
  for (double eps : {0.05, 0.1, 0.2, 0.5, 1.0}) {
    const bs::BsGrid g = bs::make_grid(a, eps, 800);
    for (double lf : {0.26, 0.5, 1.0, 2.0}) {
      const double lam = lf * a2;
      hs_excess = std::max(hs_excess, bs::hs_norm(eps, lam, g) - bs::hs_bound(eps, lam));
    }
  }
  double psd = std::numeric_limits<double>::infinity();
  for (double eps : {0.1, 0.5}) {
    const bs::BsGrid g = bs::make_grid(a, eps, 320);
    for (Sector sec : kSectors) {
      const PhysParams p{a, eps, sec};
      for (auto [l1, l2] : {std::pair{0.3, 0.35}, std::pair{0.5, 0.9}, std::pair{0.9, 1.2}}) {
        const numerics::SymMatrix m1 = bs::assemble(p, l1 * a2, g);
        numerics::SymMatrix m2 = bs::assemble(p, l2 * a2, g);
        for (std::size_t i = 0; i < m2.order(); ++i) {
          for (std::size_t j = 0; j <= i; ++j) m2(i, j) -= m1(i, j);
        }
        psd = std::min(psd, numerics::sym_lowest_eigs(m2, 1)[0]);
      }
    }
  }
  double symbol = 0.0;
  bool symbol_min = true;
  for (double eps : {0.01, 0.1, 0.5, 1.0}) {
    const double lam = -bs::ess_threshold(a, eps);
    symbol = std::max(symbol, std::abs(bs::ess_symbol(a, eps, lam, 0.0)));
    for (double nu : {-1.0, -0.1, 0.1, 1.0}) {
      symbol_min = symbol_min && bs::ess_symbol(a, eps, lam, nu) > 0.0;
    }
  }
  const double eps_mach = std::numeric_limits<double>::epsilon();
  r.measured = "max(hs - bound) " + sci(hs_excess) + "; min eig A(l2)-A(l1) " + sci(psd) +
               "; |symbol at threshold| " + sci(symbol);
  r.bound = "<= 1e-3; >= -1e-10; <= 4 eps_mach, minimum at nu = 0";
  r.status = hs_excess <= 1e-3 && psd >= -1e-10 && symbol <= 4.0 * eps_mach && symbol_min
                 ? "pass"
                 : "fail";
}

void check_window(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, a2 = a * a;
  bool ok = true;
  double t005 = 0.0;
  int count = 0;
  for (double eps : ctx.opt.epsilons) {
    const double upper = -a2 / (4.0 + eps * eps);
    double ground[2] = {std::numeric_limits<double>::quiet_NaN(),
                        std::numeric_limits<double>::quiet_NaN()};
    for (Sector sec : kSectors) {
      const BsEntry& e = ctx.bs_at(eps, sec);
      if (eps == 0.05) t005 += e.seconds;
      for (const auto& b : e.levels) {
        if (!b.converged) continue;
        ++count;
        if (!(b.E > -a2 && b.E < upper)) {
          ok = false;
          r.details.push_back("eps=" + fix(eps, 3) + " " + label(sec, b.level) +
                              " E=" + fix(b.E, 10) + " outside window");
        }
      }
      if (!e.levels.empty() && e.levels[0].converged) ground[static_cast<int>(sec)] = e.levels[0].E;
    }
    const bool order = ground[0] < ground[1];
    ok = ok && order;
    r.details.push_back("eps=" + fix(eps, 3) + " E_b0=" + fix(ground[0], 10) + " E_f0=" +
                        fix(ground[1], 10) + (order ? "" : " (ordering FAIL)"));
  }
  r.measured = std::to_string(count) + " converged levels in window: " + (ok ? "yes" : "no") +
               "; eps=0.05 solve " + fix(t005, 1) + " s";
  r.bound = "(-alpha^2, -alpha^2/(4+eps^2)); E_b0 < E_f0; eps=0.05 < 300 s";
  r.status = ok && t005 < 300.0 ? "pass" : "fail";
}

std::optional<double> bs_level(Context& ctx, double eps, Sector s, int k) {
  const BsEntry& e = ctx.bs_at(eps, s);
  if (k < static_cast<int>(e.levels.size()) && e.levels[k].converged) return e.levels[k].E;
  return std::nullopt;
}

void check_cross(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, a2 = a * a;
  std::vector<double> eps = ctx.opt.epsilons;
  std::sort(eps.rbegin(), eps.rend());
  bool ok = eps.size() >= 2;
  std::string measured;
  for (Sector sec : kSectors) {
    std::vector<double> lx, ly;
    bool mono = true;
    std::string line = label(sec, 0) + " |E_bs - E_eff|:";
    for (double e : eps) {
      const auto ebs = bs_level(ctx, e, sec, 0);
      const bo::EffectiveEigs& ef = ctx.eff_at(e, sec);
      if (!ebs || ef.levels.empty()) {
        ok = false;
        line += " eps=" + fix(e, 3) + ":missing";
        continue;
      }
      const double d = std::abs(*ebs - ef.levels[0]) / a2;
      if (!ly.empty() && !(std::log(d) < ly.back())) mono = false;
      lx.push_back(std::log(e));
      ly.push_back(std::log(d));
      line += " eps=" + fix(e, 3) + ":" + sci(d);
    }
    double slope = std::numeric_limits<double>::quiet_NaN();
    if (lx.size() >= 2) {
      const double n = static_cast<double>(lx.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
      }
      slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    const bool good = mono && slope >= 1.0;
    ok = ok && good;
    line += " slope=" + fix(slope, 3);
    r.details.push_back(line);
    measured += (measured.empty() ? "" : "; ") + label(sec, 0) + " slope " + fix(slope, 3);
  }
  r.measured = measured;
  r.bound = "decreasing, log-log slope >= 1.0";
  r.status = ok ? "pass" : "fail";
}

void check_bs_ratio(Context& ctx, CheckRecord& r) {
  const double a = ctx.opt.alpha, a2 = a * a;
  std::vector<double> eps = ctx.opt.epsilons;
  std::sort(eps.rbegin(), eps.rend());
  bool ok = eps.size() >= 2;
  for (Sector sec : kSectors) {
    for (int k = 0; k < 2; ++k) {
      const double s = bo::airy_slope(sec, k);
      std::string line = label(sec, k) + " s=" + fix(s) + " |r-s|:";
      std::optional<double> prev;
      bool good = true;
      for (double e : eps) {
        const auto ebs = bs_level(ctx, e, sec, k);
        if (!ebs) {
          good = false;
          line += " eps=" + fix(e, 3) + ":missing";
          continue;
        }
        const double err = std::abs((*ebs + a2) / (a2 * std::cbrt(e * e)) - s);
        if (prev && !(err < *prev)) good = false;
        prev = err;
        line += " eps=" + fix(e, 3) + ":" + fix(err, 5);
      }
      ok = ok && good;
      r.details.push_back(line + (good ? "" : " [FAIL]"));
    }
  }
  r.measured = ok ? "errors shrink along the ladder" : "non-decreasing or missing level";
  r.bound = "|error(eps/2)| < |error(eps)|, k = 0, 1";
  r.status = ok ? "pass" : "fail";
}

void check_figure(Context&, CheckRecord& r) {
  bool ok = true;
  double worst = 0.0;
  for (double a : {-1.0, -2.0}) {
    RunConfig c;
    c.command = "lightspec";
    c.alpha = a;
    const Table t = run_lightspec(c);
    const double limit = -a * a / 4.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const double x = t.number(i, "x");
      const double l0 = t.number(i, "neg_lambda0"), l1 = t.number(i, "neg_lambda1");
      if (std::abs(x) == 10.0) {
        const double err = std::max(std::abs(l0 - limit), std::isnan(l1) ? 1.0 : std::abs(l1 - limit));
        worst = std::max(worst, err);
      }
      if (x == 0.0) ok = ok && l0 == -a * a && std::isnan(l1);
      if (std::abs(x) > 2.0 / -a) ok = ok && l1 > -a * a / 4.0 && l1 < 0.0;
    }
  }
  ok = ok && worst <= 2e-2;
  r.measured = "max edge deviation " + sci(worst) + "; x=0 rows and lambda1 ranges " + (ok ? "ok" : "bad");
  r.bound = "2e-2 at x = +-10";
  r.status = ok ? "pass" : "fail";
}

struct CheckSpec {
  int id;
  const char* name;
  double budget;
  bool needs_bound_states;
  void (*fn)(Context&, CheckRecord&);
};

constexpr CheckSpec kChecks[] = {
    {1, "light-particle closed forms", 1.0, true, check_closed_forms},
    {2, "ground-state correctness", 5.0, true, check_psi},
    {3, "delta bound", 10.0, true, check_delta},
    {4, "Airy constants", 1.0, false, check_airy},
    {5, "K1 oracle", 30.0, true, check_k1},
    {6, "effective-solver asymptotics", 120.0, true, check_effective_ratio},
    {7, "Birman-Schwinger structure", 60.0, true, check_bs_structure},
    {8, "bound-state window", 600.0, true, check_window},
    {9, "cross-solver agreement", 600.0, true, check_cross},
    {10, "Birman-Schwinger asymptotics", 600.0, true, check_bs_ratio},
    {11, "light-particle figure data", 1.0, true, check_figure},
};

}  // namespace

ValidateOptions validate_options_from(const RunConfig& c) {
  ValidateOptions o;
  o.alpha = c.alpha;
  if (c.epsilons != RunConfig{}.epsilons) o.epsilons = c.epsilons;
  if (c.nodes) o.bs_nodes = *c.nodes;
  if (c.tol) o.bs_tol = *c.tol;
  return o;
}

std::vector<CheckRecord> run_validate(const ValidateOptions& opt) {
  Context ctx{opt, {}, {}, {}};
  std::vector<CheckRecord> out;
  for (const CheckSpec& spec : kChecks) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), spec.id) == opt.only.end()) {
      continue;
    }
    CheckRecord r;
    r.id = spec.id;
    r.name = spec.name;
    r.budget_seconds = spec.budget;
    if (spec.needs_bound_states && !(opt.alpha < 0.0)) {
      r.status = "skip";
      r.measured = "no bound states (alpha >= 0)";
      out.push_back(std::move(r));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      spec.fn(ctx, r);
    } catch (const std::exception& e) {
      r.status = "fail";
      r.measured = std::string("error: ") + e.what();
      if (r.bound.empty()) r.bound = "not evaluated";
    }
    r.seconds = seconds_since(t0);
    // Checks 9 and 10 reuse the bound states solved earlier; their budget
    // covers the whole solver sweep.
    double charged = r.seconds;
    if (spec.id == 9 || spec.id == 10) {
      charged = 0.0;
      for (const auto& [key, e] : ctx.bs) charged += e.seconds;
      charged += r.seconds;
    }
    if (r.status == "pass" && charged > spec.budget) {
      r.status = "fail";
      r.details.push_back("runtime " + fix(charged, 2) + " s exceeds budget " + fix(spec.budget, 0) + " s");
    }
    out.push_back(std::move(r));
  }
  return out;
}

Table validation_table(const std::vector<CheckRecord>& records) {
  Table t;
  t.columns = {"id", "name", "status", "measured", "bound", "seconds", "budget_seconds"};
  for (const auto& r : records) {
    t.rows.push_back({Cell(static_cast<std::int64_t>(r.id)), Cell(r.name), Cell(r.status),
                      Cell(r.measured), Cell(r.bound), Cell(r.seconds), Cell(r.budget_seconds)});
  }
  return t;
}

bool all_passed(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.status != "fail"; });
}

}  // namespace trimer::cli
