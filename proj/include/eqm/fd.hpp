// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

namespace eqm::fd {

// eps^(1/3): near-optimal step scale for a second-order centered first
// derivative of a function evaluated to machine precision.
inline const double kCbrtEps = std::cbrt(std::numeric_limits<double>::epsilon());
// eps^(1/6): wider scale used when differentiating quantities that are
// themselves finite-difference results (their noise floor is ~eps^(2/3)).
inline const double kSixthRootEps = std::sqrt(kCbrtEps);

// Centered difference, O(h^2).
template <class F>
double central(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// One Richardson extrapolation level on the centered difference, O(h^4).
template <class F>
double richardson(F&& f, double x, double h) {
  const double d1 = central(f, x, h);
  const double d2 = central(f, x, h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

template <class F>
double derivative(F&& f, double x, double h, bool use_richardson) {
  return use_richardson ? richardson(f, x, h) : central(f, x, h);
}

inline double step(double x) { return std::max(std::abs(x), 1.0) * kCbrtEps; }

}  // namespace eqm::fd
