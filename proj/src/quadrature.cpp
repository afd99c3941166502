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
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "trimer/core.hpp"
#include "trimer/numerics.hpp"

namespace trimer::numerics {

namespace {

// Kronrod 15 / Gauss 7 abscissae and weights (QUADPACK qk15).
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// Integrand on a finite parameter interval, possibly through a tail map.
struct Piece {
  enum class Kind { Finite, RightTail, LeftTail } kind;
  double anchor;  // finite end of a tail
};

template <class G>
Panel gk15(const G& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double value = resk * half;
  const double error = std::abs((resk - resg) * half);
  return {lo, hi, value, error};
}

}  // namespace

double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breakpoints, double rel_tol, double abs_tol,
                     int max_panels) {
  if (!(a < b)) throw DomainError("quad_adaptive: requires a < b");
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breakpoints) {
    if (c > cuts.back() && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);

  // Tail maps y = c + t / (1 - t^2), t in [0, 1), dy = (1 + t^2) / (1 - t^2)^2 dt.
  auto mapped = [&f](Piece piece) {
    return [&f, piece](double t) {
      if (piece.kind == Piece::Kind::Finite) return f(t);
      const double d = 1.0 - t * t;
      const double jac = (1.0 + t * t) / (d * d);
      const double y = piece.kind == Piece::Kind::RightTail ? piece.anchor + t / d
                                                            : piece.anchor - t / d;
      const double fy = f(y);
      return fy == 0.0 ? 0.0 : fy * jac;
    };
  };

  struct Segment {
    Piece piece;
    double lo, hi;
  };
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (std::isinf(lo) && std::isinf(hi)) {
      segments.push_back({{Piece::Kind::LeftTail, 0.0}, 0.0, 1.0});
      segments.push_back({{Piece::Kind::RightTail, 0.0}, 0.0, 1.0});
    } else if (std::isinf(hi)) {
      segments.push_back({{Piece::Kind::RightTail, lo}, 0.0, 1.0});
    } else if (std::isinf(lo)) {
      segments.push_back({{Piece::Kind::LeftTail, hi}, 0.0, 1.0});
    } else {
      segments.push_back({{Piece::Kind::Finite, 0.0}, lo, hi});
    }
  }

  // One priority queue per segment keeps the panels of different maps apart.
  std::vector<std::priority_queue<Panel>> queues(segments.size());
  double total = 0.0, total_err = 0.0;
  int panels = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Panel p = gk15(mapped(segments[s].piece), segments[s].lo, segments[s].hi);
    queues[s].push(p);
    total += p.value;
    total_err += p.error;
    ++panels;
  }
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
  while (total_err > std::max({abs_tol, rel_tol * std::abs(total), kRoundoff * std::abs(total)})) {
    if (panels >= max_panels) {
      throw ConvergenceError("quad_adaptive: no convergence after " + std::to_string(panels) +
                             " panels (error estimate " + std::to_string(total_err) + ")");
    }
    std::size_t worst = 0;
    for (std::size_t s = 1; s < queues.size(); ++s) {
      if (queues[s].top().error > queues[worst].top().error) worst = s;
    }
    const Panel p = queues[worst].top();
    queues[worst].pop();
    const double mid = 0.5 * (p.lo + p.hi);
    const auto g = mapped(segments[worst].piece);
    const Panel left = gk15(g, p.lo, mid);
    const Panel right = gk15(g, mid, p.hi);
    total += left.value + right.value - p.value;
    total_err += left.error + right.error - p.error;
    queues[worst].push(left);
    queues[worst].push(right);
    ++panels;
    if (!(mid > p.lo && mid < p.hi)) {
      throw ConvergenceError("quad_adaptive: panel width reached rounding floor");
    }
  }
  // Re-sum to shed accumulated cancellation in the running totals.
  double sum = 0.0;
  for (auto& q : queues) {
    while (!q.empty()) {
      sum += q.top().value;
      q.pop();
    }
  }
  return sum;
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      const double pn = order == 1 ? x : p1;
      const double pnm1 = order == 1 ? 1.0 : p0;
      dp = order * (x * pn - pnm1) / (x * x - 1.0);
      const double step = pn / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = order == 1 ? x : p1;
      const double pnm1 = order == 1 ? 1.0 : p0;
      dp = order * (x * pn - pnm1) / (x * x - 1.0);
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;
}

}  // namespace trimer::numerics
