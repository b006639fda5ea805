// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/legendre.hpp"

#include <cmath>
#include <string>

#include "eqm/errors.hpp"
#include "eqm/fd.hpp"

namespace eqm {

PhasePoint legendre_transform(const PhasePoint& point, const std::vector<int>& index_set) {
  if (point.E.size() != point.I.size())
    throw ArgumentError("legendre_transform: E and I must have the same length");
  PhasePoint out = point;
  if (out.conjugated.empty()) out.conjugated.assign(out.E.size(), false);

  for (int k : index_set) {
    if (k < 0 || static_cast<std::size_t>(k) >= out.E.size())
      throw ArgumentError("legendre_transform: index " + std::to_string(k) + " out of range");
    if (k == out.xi_index)
      throw UnsupportedError(
          "legendre_transform: transformations that swap the role of the extent coordinate are "
          "not supported");
    const double e = out.E[k], i = out.I[k];
    if (!out.conjugated[k]) {
      out.phi -= e * i;
      out.E[k] = i;
      out.I[k] = -e;
      out.conjugated[k] = true;
    } else {
      // inverse of the forward map; phi - E~ I~ = phi + E I restores phi
      out.phi -= e * i;
      out.E[k] = -i;
      out.I[k] = e;
      out.conjugated[k] = false;
    }
  }
  return out;
}

PhasePoint phase_point(const ReducedPotential& phi, const Vec2& point) {
  const Jet2 j = phi.jet(point[0], point[1]);
  PhasePoint p;
  p.phi = j.value;
  p.E = {point[0], point[1]};
  p.I = {j.grad[0], j.grad[1]};
  p.conjugated = {false, false};
  p.xi_index = 1;
  return p;
}

double verify_first_law(const ReducedPotential& phi, const Vec2& point) {
  const Jet2 j = phi.jet(point[0], point[1]);
  double residual = 0.0;
  for (int a = 0; a < 2; ++a) {
    const double h = fd::step(point[a]);
    if (!phi.domain.contains(point[0] - (a == 0 ? h : 0.0), point[1] - (a == 1 ? h : 0.0)) ||
        !phi.domain.contains(point[0] + (a == 0 ? h : 0.0), point[1] + (a == 1 ? h : 0.0)))
      throw DomainError("verify_first_law: stencil leaves the coordinate domain");
    auto slice = [&](double x) {
      Vec2 q = point;
      q[a] = x;
      return phi.eval(q[0], q[1]);
    };
    const double fd_grad = fd::richardson(slice, point[a], h);
    const double scale = std::max(1.0, std::abs(j.grad[a]));
    residual = std::max(residual, std::abs(fd_grad - j.grad[a]) / scale);
  }
  return residual;
}

}  // namespace eqm
