// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <string>
#include <vector>

#include "eqm/potentials.hpp"
#include "eqm/reaction.hpp"

namespace eqm {

enum class EquilibriumStatus {
  interior,              // unique interior equilibrium located
  proceeds_to_boundary,  // no sign change: the reaction runs to an endpoint
};

struct MethodDetail {
  double residual = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
};

// Final extent of reaction from three independent routes:
//   xi_root     — root of sum_i nu_i mu_i (chemical-potential balance)
//   xi_scan     — argmax of the reduced potential over xi at the anchor slice
//   xi_singular — zero of the g_xixi denominator factor of the metric
struct EquilibriumReport {
  EquilibriumStatus status = EquilibriumStatus::interior;
  double xi_root = std::numeric_limits<double>::quiet_NaN();
  double xi_scan = std::numeric_limits<double>::quiet_NaN();
  double xi_singular = std::numeric_limits<double>::quiet_NaN();
  double spread = std::numeric_limits<double>::quiet_NaN();  // max pairwise difference
  MethodDetail root_detail, scan_detail, singular_detail;
  std::string warning;  // e.g. non-unimodal potential scan
};

// D(xi) = xi sum_i nu_i mu_i / T: the denominator factor of the metric's
// g_xixi component.  Chemical equilibrium is exactly its zero.  The species
// states are taken at the representation's anchor slice (fixed total energy,
// fixed beta, or fixed volume with frozen total energy).
double singularity_function(const ReactionSpec& spec, const ReducedPotential& phi, double xi);

// Throws NumericError if the balance D has several sign changes on the
// numeric extent domain (multiple candidate equilibria are surfaced, not
// silently resolved).
EquilibriumReport find_equilibrium(const ReactionSpec& spec, const ReducedPotential& phi);

// Closed-form final extent for the bundled two-gas reference configuration
// (one mole of reactant, products absent, c = 3/2, reference energies 1 and
// 2 J): xi_f = 1/(1 + 2 sqrt(2) e^{-1/R}).  Specific to that configuration.
double ideal_closed_form_xi(double R);

struct ScanRow {
  double xi = 0.0;
  double value = 0.0;  // Phi(e1_anchor, xi)
};

// Uniform sampling of the reduced potential over the numeric extent domain
// at the anchor slice; grid_size >= 2 includes both endpoints.
std::vector<ScanRow> scan_potential(const ReactionSpec& spec, const ReducedPotential& phi,
                                    int grid_size);

}  // namespace eqm
