// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "eqm/types.hpp"

namespace eqm {

// Per-species constants of the fundamental equation.  The reference state
// (s0, U0, V0, n0) pins the entropy scale; the implied reference temperature
// is T0 = U0/(c R n0).  a and b are the van der Waals constants and vanish
// for an ideal gas.
struct SpeciesParams {
  std::string label;
  double c = 1.5;   // heat capacity constant, C_v = c R
  double s0 = 0.0;  // molar standard entropy, J/(mol K)
  double U0 = 1.0;  // reference internal energy, J
  double V0 = 1.0;  // reference volume, L
  double n0 = 1.0;  // reference moles, mol
  double a = 0.0;   // attraction, J L / mol^2
  double b = 0.0;   // covolume, L / mol
};

// A closed-system reaction: species, signed stoichiometric numbers
// (negative for reactants), initial moles and the lab conditions.
struct ReactionSpec {
  std::vector<SpeciesParams> species;
  std::vector<double> nu;
  std::vector<double> n_init;  // mol
  double T = 300.0;            // K
  double V = 20.0;             // L
  double R = kGasConstant;     // J/(mol K)
};

// Throws ConfigError naming the offending field.
void validate(const ReactionSpec& spec);

// Physically admissible extent-of-reaction interval: every mole count stays
// nonnegative on [xi_min, xi_max] and the endpoints drive one species to 0.
struct ExtentInterval {
  double xi_min = 0.0;
  double xi_max = 0.0;

  double lo(double margin = kDomainMargin) const { return xi_min + margin; }
  double hi(double margin = kDomainMargin) const { return xi_max - margin; }
  bool contains_closed(double xi) const { return xi >= xi_min && xi <= xi_max; }
};

// n_i = n_{i,0} + nu_i xi.  xi must lie in the closed admissible interval;
// otherwise throws DomainError naming the first species driven negative.
std::vector<double> moles_at(const ReactionSpec& spec, double xi);

ExtentInterval extent_bounds(const ReactionSpec& spec);

}  // namespace eqm
