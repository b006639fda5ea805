// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/diffgeo.hpp"

#include <cmath>
#include <sstream>

#include "eqm/errors.hpp"

namespace eqm {

namespace {

void check_in_domain(const ReducedPotential& phi, const Vec2& p, const char* who) {
  if (!phi.domain.contains(p[0], p[1])) {
    std::ostringstream msg;
    msg << who << ": point (" << p[0] << ", " << p[1] << ") outside the coordinate domain ["
        << phi.domain.lo1 << ", " << phi.domain.hi1 << "] x [" << phi.domain.lo2 << ", "
        << phi.domain.hi2 << "]";
    throw DomainError(msg.str());
  }
}

// Derivative of the metric components with respect to coordinate c.
Mat2 metric_derivative(const ReducedPotential& phi, const Vec2& p, int c, const FdPolicy& pol) {
  const double h = std::max(std::abs(p[c]), 1.0) * pol.step_scale;
  auto g_shifted = [&](double hh, double sign) {
    Vec2 q = p;
    q[c] += sign * hh;
    return metric_at(phi, q).g;
  };
  Mat2 d1 = (g_shifted(h, +1.0) - g_shifted(h, -1.0)) / (2.0 * h);
  if (!pol.richardson) return d1;
  Mat2 d2 = (g_shifted(h / 2.0, +1.0) - g_shifted(h / 2.0, -1.0)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

void check_stencil(const ReducedPotential& phi, const Vec2& p, double h1, double h2,
                   const char* who) {
  if (!phi.domain.contains(p[0] - h1, p[1] - h2) || !phi.domain.contains(p[0] + h1, p[1] + h2)) {
    std::ostringstream msg;
    msg << who << ": finite-difference stencil around (" << p[0] << ", " << p[1]
        << ") leaves the coordinate domain";
    throw DomainError(msg.str());
  }
}

using Gamma = std::array<std::array<std::array<double, 2>, 2>, 2>;

}  // namespace

MetricPoint metric_at(const ReducedPotential& phi, const Vec2& point) {
  check_in_domain(phi, point, "metric_at");
  const Jet2 j = phi.jet(point[0], point[1]);

  const double p1 = point[0] * j.grad[0];
  const double p2 = point[1] * j.grad[1];
  const double scale = kSingularityRel * (std::abs(j.value) + 1e-300);
  for (int a = 0; a < 2; ++a) {
    const double pa = (a == 0) ? p1 : p2;
    if (std::abs(pa) < scale) {
      std::ostringstream msg;
      msg << "coordinate singularity: E^" << (a + 1) << " dPhi/dE^" << (a + 1) << " = " << pa
          << " vanishes at (" << point[0] << ", " << point[1] << ")";
      throw SingularityError(msg.str(), a + 1, pa);
    }
  }

  MetricPoint m;
  m.coords = point;
  m.g(0, 0) = -j.hess(0, 0) / p1;
  m.g(1, 1) = -j.hess(1, 1) / p2;
  m.g(0, 1) = m.g(1, 0) = -0.5 * (1.0 / p1 + 1.0 / p2) * j.hess(0, 1);
  m.det_g = m.g(0, 0) * m.g(1, 1) - m.g(0, 1) * m.g(0, 1);

  const double det_scale = std::abs(m.g(0, 0) * m.g(1, 1)) + m.g(0, 1) * m.g(0, 1) + 1e-300;
  if (std::abs(m.det_g) < 1e-12 * det_scale)
    throw SingularityError("metric determinant vanishes", 0, m.det_g);
  m.g_inv(0, 0) = m.g(1, 1) / m.det_g;
  m.g_inv(1, 1) = m.g(0, 0) / m.det_g;
  m.g_inv(0, 1) = m.g_inv(1, 0) = -m.g(0, 1) / m.det_g;
  return m;
}

ConnectionPoint christoffel_at(const ReducedPotential& phi, const Vec2& point,
                               const FdPolicy& policy) {
  const double h1 = std::max(std::abs(point[0]), 1.0) * policy.step_scale;
  const double h2 = std::max(std::abs(point[1]), 1.0) * policy.step_scale;
  check_stencil(phi, point, h1, 0.0, "christoffel_at");
  check_stencil(phi, point, 0.0, h2, "christoffel_at");

  const MetricPoint m = metric_at(phi, point);
  const Mat2 dg[2] = {metric_derivative(phi, point, 0, policy),
                      metric_derivative(phi, point, 1, policy)};

  ConnectionPoint c;
  c.coords = point;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = b; d < 2; ++d) {
        double sum = 0.0;
        for (int e = 0; e < 2; ++e)
          sum += m.g_inv(a, e) * (dg[d](e, b) + dg[b](e, d) - dg[e](b, d));
        c.gamma[a][b][d] = c.gamma[a][d][b] = 0.5 * sum;
      }
  return c;
}

CurvaturePoint curvature_at(const ReducedPotential& phi, const Vec2& point,
                            const CurvaturePolicy& policy) {
  const MetricPoint m = metric_at(phi, point);
  const Gamma g0 = christoffel_at(phi, point, policy.inner).gamma;

  // dGamma[c][a][b][d] = d Gamma^a_{bd} / d E^c
  Gamma dgamma[2];
  for (int c = 0; c < 2; ++c) {
    const double h = std::max(std::abs(point[c]) * policy.outer_scale, fd::kCbrtEps);
    auto gamma_shifted = [&](double hh, double sign) {
      Vec2 q = point;
      q[c] += sign * hh;
      return christoffel_at(phi, q, policy.inner).gamma;
    };
    const Gamma gp = gamma_shifted(h, +1.0), gm = gamma_shifted(h, -1.0);
    Gamma gp2{}, gm2{};
    if (policy.richardson) {
      gp2 = gamma_shifted(h / 2.0, +1.0);
      gm2 = gamma_shifted(h / 2.0, -1.0);
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          const double d1 = (gp[a][b][d] - gm[a][b][d]) / (2.0 * h);
          if (policy.richardson) {
            const double d2 = (gp2[a][b][d] - gm2[a][b][d]) / h;
            dgamma[c][a][b][d] = (4.0 * d2 - d1) / 3.0;
          } else {
            dgamma[c][a][b][d] = d1;
          }
        }
  }

  CurvaturePoint out;
  out.coords = point;
  out.metric = m;
  // R^a_{bcd} = d_c Gamma^a_{bd} - d_d Gamma^a_{bc}
  //           + Gamma^a_{ec} Gamma^e_{bd} - Gamma^a_{ed} Gamma^e_{bc}
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          double r = dgamma[c][a][b][d] - dgamma[d][a][b][c];
          for (int e = 0; e < 2; ++e)
            r += g0[a][e][c] * g0[e][b][d] - g0[a][e][d] * g0[e][b][c];
          out.riemann[a][b][c][d] = r;
        }

  // Ricci_{ab} = g^{cd} R_{acbd}, scalar = g^{ab} Ricci_{ab}.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double r = 0.0;
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) r += m.g_inv(c, d) * out.lowered(a, c, b, d);
      out.ricci(a, b) = r;
    }
  out.scalar = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.scalar += m.g_inv(a, b) * out.ricci(a, b);
  return out;
}

}  // namespace eqm
