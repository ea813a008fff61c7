// Copyright 2026 The qrelent Authors
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

#include "qrelent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qrelent {

namespace {

// Kronrod-15 abscissae on [-1, 1] (nonnegative half; odd entries are the
// embedded Gauss-7 points) and the matching Kronrod / Gauss weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value = 0.0;
  double error = 0.0;
};

// One G7-K15 evaluation over [lo, hi] with QUADPACK-style error scaling.
PanelEstimate evaluate_panel(const std::function<double(double)>& g, double lo, double hi,
                             long& evaluations) {
  const double centre = 0.5 * (lo + hi);
  const double hlgth = 0.5 * (hi - lo);

  auto sample = [&](double x) {
    const double v = g(x);
    ++evaluations;
    if (!std::isfinite(v)) {
      throw NonFiniteIntegrand("integrand returned " + std::to_string(v) + " at t = " +
                               std::to_string(x));
    }
    return v;
  };

  double fv[15];
  fv[7] = sample(centre);
  for (int j = 0; j < 7; ++j) {
    const double dx = hlgth * kXgk[j];
    fv[j] = sample(centre - dx);
    fv[14 - j] = sample(centre + dx);
  }

  double resg = kWg[3] * fv[7];
  double resk = kWgk[7] * fv[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 7; ++j) {
    const double fsum = fv[j] + fv[14 - j];
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv[j] - reskh) + std::fabs(fv[14 - j] - reskh));
  }

  const double dhlgth = std::fabs(hlgth);
  resabs *= dhlgth;
  resasc *= dhlgth;

  PanelEstimate out;
  out.value = resk * hlgth;
  out.error = std::fabs((resk - resg) * hlgth);
  if (resasc != 0.0 && out.error != 0.0) {
    out.error = resasc * std::min(1.0, std::pow(200.0 * out.error / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) {
    out.error = std::max(out.error, 50.0 * eps * resabs);
  }
  return out;
}

struct Panel {
  double lo;
  double hi;
  int segment;
  double value;
  double error;
};

// A segment is a piece of the original domain together with the change of
// variables that makes it finite. Tail segments integrate over u in [0, 1].
struct Segment {
  std::function<double(double)> g;
  double lo;
  double hi;
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const std::vector<double>& breakpoints, const QuadConfig& config) {
  if (std::isnan(a) || std::isnan(b) || !(a < b)) {
    throw DomainError("integration bounds must satisfy a < b");
  }

  std::vector<double> pts = breakpoints;
  for (double p : pts) {
    if (!std::isfinite(p) || !(p > a) || !(p < b)) {
      throw DomainError("breakpoints must be finite and strictly inside (a, b)");
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const bool left_inf = std::isinf(a);
  const bool right_inf = std::isinf(b);
  if (left_inf && right_inf && pts.empty()) pts.push_back(0.0);

  // Edges of the original-variable segments.
  std::vector<double> edges;
  edges.push_back(a);
  edges.insert(edges.end(), pts.begin(), pts.end());
  edges.push_back(b);

  std::vector<Segment> segments;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    Segment seg;
    if (std::isinf(lo)) {
      // t = hi - u/(1-u), dt = -du/(1-u)^2; orientation flip folds into +.
      seg.g = [&f, hi](double u) {
        const double s = 1.0 - u;
        return f(hi - u / s) / (s * s);
      };
      seg.lo = 0.0;
      seg.hi = 1.0;
    } else if (std::isinf(hi)) {
      seg.g = [&f, lo](double u) {
        const double s = 1.0 - u;
        return f(lo + u / s) / (s * s);
      };
      seg.lo = 0.0;
      seg.hi = 1.0;
    } else {
      seg.g = f;
      seg.lo = lo;
      seg.hi = hi;
    }
    segments.push_back(std::move(seg));
  }

  QuadResult result;
  std::vector<Panel> panels;
  panels.reserve(segments.size() + 16);
  for (size_t i = 0; i < segments.size(); ++i) {
    const Segment& seg = segments[i];
    const PanelEstimate est = evaluate_panel(seg.g, seg.lo, seg.hi, result.evaluations);
    panels.push_back({seg.lo, seg.hi, static_cast<int>(i), est.value, est.error});
  }

  auto totals = [&panels]() {
    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair<double, double>(value, error);
  };

  auto within_tolerance = [&config](double value, double error) {
    return error <= std::max(config.abs_tol, config.rel_tol * std::fabs(value));
  };

  auto [value, error] = totals();
  while (!within_tolerance(value, error) &&
         static_cast<int>(panels.size()) < config.max_subdivisions) {
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const Panel target = panels[worst];
    const double mid = 0.5 * (target.lo + target.hi);
    if (mid <= target.lo || mid >= target.hi) break;  // panel width at rounding limit

    const Segment& seg = segments[static_cast<size_t>(target.segment)];
    const PanelEstimate left = evaluate_panel(seg.g, target.lo, mid, result.evaluations);
    const PanelEstimate right = evaluate_panel(seg.g, mid, target.hi, result.evaluations);
    panels[worst] = {target.lo, mid, target.segment, left.value, left.error};
    panels.push_back({mid, target.hi, target.segment, right.value, right.error});

    std::tie(value, error) = totals();
  }

  // Deterministic final sum: panels ordered by segment then left edge.
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
    if (x.segment != y.segment) return x.segment < y.segment;
    return x.lo < y.lo;
  });
  result.value = 0.0;
  result.error_estimate = 0.0;
  for (const Panel& p : panels) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  result.converged = within_tolerance(result.value, result.error_estimate);
  return result;
}

}  // namespace qrelent
