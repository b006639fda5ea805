// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "eqm/potentials.hpp"
#include "eqm/types.hpp"

namespace eqm {

// A point of the thermodynamic phase space: potential value, extensive
// coordinates E^a and intensive coordinates I_a.  On the equilibrium
// submanifold I_a = dPhi/dE^a.
//
// `conjugated` records which index pairs are currently swapped by a Legendre
// transformation, so that transforming the same index twice applies the
// exact inverse map and is the identity.
struct PhasePoint {
  double phi = 0.0;
  std::vector<double> E;
  std::vector<double> I;
  std::vector<bool> conjugated;  // empty = none
  int xi_index = -1;             // index whose role must not be swapped (-1 = none)
};

// Legendre transformation over a subset of 0-based coordinate indices.
// Forward map per index k:  phi -> phi - E^k I_k,  (E^k, I_k) -> (I_k, -E^k),
// chosen so that the entropy representation transformed over the energy
// index yields the Massieu potential phi = S - beta U with the new
// coordinate beta and the new intensive variable -U = dphi/dbeta.
// Transforming an already-conjugated index applies the inverse map, making
// the operation an involution index-by-index.
PhasePoint legendre_transform(const PhasePoint& point, const std::vector<int>& index_set);

// On-shell lift of a reduced potential at a coordinate point.
// The extent coordinate (index 1) is marked as not swappable.
PhasePoint phase_point(const ReducedPotential& phi, const Vec2& point);

// Max over coordinates of |finite-difference dPhi/dE^a - analytic I_a|,
// scaled by max(1, |I|).  The Gibbs relation holds iff this is ~0.
double verify_first_law(const ReducedPotential& phi, const Vec2& point);

}  // namespace eqm
