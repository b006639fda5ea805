// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace eqm {

// Forward-mode scalar over two independent variables carrying the value,
// the gradient and the (symmetric) Hessian.  Arithmetic plus log is all the
// fundamental equations in this toolkit need, so the derivatives of every
// reduced potential are exact to round-off rather than finite-differenced.
struct Dual2 {
  double f = 0.0;
  double d1 = 0.0, d2 = 0.0;
  double d11 = 0.0, d12 = 0.0, d22 = 0.0;

  static Dual2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Dual2 var1(double x) { return {x, 1, 0, 0, 0, 0}; }
  static Dual2 var2(double x) { return {x, 0, 1, 0, 0, 0}; }
};

inline double value_of(double x) { return x; }
inline double value_of(const Dual2& x) { return x.f; }

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
  return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2,
          a.d11 + b.d11, a.d12 + b.d12, a.d22 + b.d22};
}

inline Dual2 operator-(const Dual2& a, const Dual2& b) {
  return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2,
          a.d11 - b.d11, a.d12 - b.d12, a.d22 - b.d22};
}

inline Dual2 operator-(const Dual2& a) {
  return {-a.f, -a.d1, -a.d2, -a.d11, -a.d12, -a.d22};
}

inline Dual2 operator*(const Dual2& a, const Dual2& b) {
  return {a.f * b.f,
          a.d1 * b.f + a.f * b.d1,
          a.d2 * b.f + a.f * b.d2,
          a.d11 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d11,
          a.d12 * b.f + a.d1 * b.d2 + a.d2 * b.d1 + a.f * b.d12,
          a.d22 * b.f + 2.0 * a.d2 * b.d2 + a.f * b.d22};
}

// From u = w v:  w_i = (u_i - w v_i)/v,  w_ij = (u_ij - w_i v_j - w_j v_i - w v_ij)/v.
inline Dual2 operator/(const Dual2& a, const Dual2& b) {
  Dual2 w;
  w.f = a.f / b.f;
  w.d1 = (a.d1 - w.f * b.d1) / b.f;
  w.d2 = (a.d2 - w.f * b.d2) / b.f;
  w.d11 = (a.d11 - 2.0 * w.d1 * b.d1 - w.f * b.d11) / b.f;
  w.d12 = (a.d12 - w.d1 * b.d2 - w.d2 * b.d1 - w.f * b.d12) / b.f;
  w.d22 = (a.d22 - 2.0 * w.d2 * b.d2 - w.f * b.d22) / b.f;
  return w;
}

inline Dual2 operator+(const Dual2& a, double c) { return a + Dual2::constant(c); }
inline Dual2 operator+(double c, const Dual2& a) { return Dual2::constant(c) + a; }
inline Dual2 operator-(const Dual2& a, double c) { return a - Dual2::constant(c); }
inline Dual2 operator-(double c, const Dual2& a) { return Dual2::constant(c) - a; }

inline Dual2 operator*(const Dual2& a, double c) {
  return {a.f * c, a.d1 * c, a.d2 * c, a.d11 * c, a.d12 * c, a.d22 * c};
}
inline Dual2 operator*(double c, const Dual2& a) { return a * c; }
inline Dual2 operator/(const Dual2& a, double c) { return a * (1.0 / c); }
inline Dual2 operator/(double c, const Dual2& a) { return Dual2::constant(c) / a; }

inline Dual2 log(const Dual2& a) {
  Dual2 w;
  const double inv = 1.0 / a.f;
  w.f = std::log(a.f);
  w.d1 = a.d1 * inv;
  w.d2 = a.d2 * inv;
  w.d11 = a.d11 * inv - w.d1 * w.d1;
  w.d12 = a.d12 * inv - w.d1 * w.d2;
  w.d22 = a.d22 * inv - w.d2 * w.d2;
  return w;
}

}  // namespace eqm
