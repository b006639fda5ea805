// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "eqm/errors.hpp"

namespace eqm {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Brent's method on a sign-changing bracket: bisection fallback with
// secant / inverse-quadratic refinement.  Stops when the bracket is below
// xtol or |f| is below ftol.
template <class F>
RootResult brent_root(F&& f, double a, double b, double fa, double fb,
                      double xtol = 1e-15, double ftol = 0.0, int max_iter = 200) {
  if (!(fa * fb <= 0.0)) throw NumericError("brent_root: interval does not bracket a root");
  if (fa == 0.0) return {a, fa, 0};
  if (fb == 0.0) return {b, fb, 0};

  double c = a, fc = fa;
  double d = b - a, e = d;
  int it = 0;
  for (; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= ftol) break;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // attempt inverse quadratic / secant interpolation
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      d = b - a; e = d;
    }
  }
  return {b, fb, it};
}

// Golden-section search for a maximum inside [a, b].
template <class F>
RootResult golden_max(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 400) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  int it = 0;
  while (b - a > xtol && it < max_iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
    ++it;
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm), it};
}

// Sign-change brackets of f over a uniform grid.  Returns pairs of adjacent
// grid abscissae with f of opposite (nonzero) sign.
template <class F>
std::vector<std::pair<double, double>> sign_change_brackets(F&& f, double lo, double hi, int n) {
  std::vector<std::pair<double, double>> out;
  double xprev = lo, fprev = f(lo);
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    const double fx = f(x);
    if (std::isfinite(fprev) && std::isfinite(fx) && fprev * fx < 0.0) out.emplace_back(xprev, x);
    xprev = x;
    fprev = fx;
  }
  return out;
}

}  // namespace eqm
