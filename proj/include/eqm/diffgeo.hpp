// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "eqm/fd.hpp"
#include "eqm/potentials.hpp"
#include "eqm/types.hpp"

namespace eqm {

// Metric of the equilibrium manifold induced by a reduced potential, with
// the fixed gauge k = -1, Lambda = -1:
//
//   g_11 = -(E^1 Phi,1)^-1 Phi,11
//   g_22 = -(E^2 Phi,2)^-1 Phi,22
//   g_12 = g_21 = -1/2 [(E^1 Phi,1)^-1 + (E^2 Phi,2)^-1] Phi,12
//
// The off-diagonal term is the symmetric-tensor reading of the single
// dE^1 (x) dE^2 term of the defining line element: the geodesic equations
// require a symmetric metric, so the coefficient is split evenly between
// g_12 and g_21.
struct MetricPoint {
  Vec2 coords;
  Mat2 g;
  Mat2 g_inv;
  double det_g = 0.0;
};

// Christoffel symbols Gamma^a_{bc}, symmetric in (b, c).
struct ConnectionPoint {
  Vec2 coords;
  std::array<std::array<std::array<double, 2>, 2>, 2> gamma{};  // [a][b][c]
};

struct CurvaturePoint {
  Vec2 coords;
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> riemann{};  // R^a_{bcd}
  Mat2 ricci;
  double scalar = 0.0;
  MetricPoint metric;

  // Fully lowered component R_{abcd} = g_{ae} R^e_{bcd}.
  double lowered(int a, int b, int c, int d) const {
    return metric.g(a, 0) * riemann[0][b][c][d] + metric.g(a, 1) * riemann[1][b][c][d];
  }
};

// Step policy for differentiating the (analytic) metric components:
// h_a = max(|E^a|, 1) * step_scale, with one optional Richardson level.
struct FdPolicy {
  double step_scale = fd::kCbrtEps;
  bool richardson = true;
};

// The outer derivatives for the curvature differentiate quantities that are
// themselves finite differences, so they use a wider, relative step:
// H_a = max(|E^a| * outer_scale, cbrt(eps)).
struct CurvaturePolicy {
  FdPolicy inner{};
  double outer_scale = fd::kSixthRootEps;
  bool richardson = true;
};

// Relative threshold below which |E^a Phi,a| counts as a coordinate
// singularity (compared against the local potential magnitude).
inline constexpr double kSingularityRel = 1e-8;

MetricPoint metric_at(const ReducedPotential& phi, const Vec2& point);
ConnectionPoint christoffel_at(const ReducedPotential& phi, const Vec2& point,
                               const FdPolicy& policy = {});
CurvaturePoint curvature_at(const ReducedPotential& phi, const Vec2& point,
                            const CurvaturePolicy& policy = {});

}  // namespace eqm
