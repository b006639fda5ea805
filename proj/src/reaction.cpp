// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/reaction.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "eqm/errors.hpp"

namespace eqm {

void validate(const ReactionSpec& spec) {
  const std::size_t n = spec.species.size();
  if (n < 2) throw ConfigError("species: at least two species are required");
  if (spec.nu.size() != n || spec.n_init.size() != n)
    throw ConfigError("nu/n_init: lengths must match the species list");

  bool has_reactant = false, has_product = false;
  for (std::size_t i = 0; i < n; ++i) {
    const SpeciesParams& sp = spec.species[i];
    const std::string where = "species '" + (sp.label.empty() ? std::to_string(i) : sp.label) + "': ";
    if (!(sp.c > 0.0)) throw ConfigError(where + "heat_capacity_c must be > 0");
    if (!(sp.n0 > 0.0)) throw ConfigError(where + "standard_moles_mol must be > 0");
    if (!(sp.V0 > 0.0)) throw ConfigError(where + "standard_volume_L must be > 0");
    if (!(sp.U0 > 0.0)) throw ConfigError(where + "standard_internal_energy_J must be > 0");
    if (sp.a < 0.0) throw ConfigError(where + "vdw_a_JL_per_mol2 must be >= 0");
    if (sp.b < 0.0) throw ConfigError(where + "vdw_b_L_per_mol must be >= 0");
    if (!std::isfinite(spec.nu[i]) || spec.nu[i] == 0.0)
      throw ConfigError(where + "nu must be a nonzero finite number");
    if (!(spec.n_init[i] >= 0.0)) throw ConfigError(where + "initial_moles_mol must be >= 0");
    if (spec.nu[i] < 0.0) has_reactant = true;
    if (spec.nu[i] > 0.0) has_product = true;
  }
  if (!has_reactant || !has_product)
    throw ConfigError("nu: need at least one reactant (nu < 0) and one product (nu > 0)");
  if (!(spec.T > 0.0) || !std::isfinite(spec.T)) throw ConfigError("temperature_K must be > 0");
  if (!(spec.V > 0.0) || !std::isfinite(spec.V)) throw ConfigError("volume_L must be > 0");
  if (!(spec.R > 0.0) || !std::isfinite(spec.R)) throw ConfigError("gas_constant must be > 0");
}

std::vector<double> moles_at(const ReactionSpec& spec, double xi) {
  std::vector<double> n(spec.species.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    n[i] = spec.n_init[i] + spec.nu[i] * xi;
    if (n[i] < 0.0) {
      std::ostringstream msg;
      msg << "extent xi = " << xi << " drives species '" << spec.species[i].label
          << "' to negative moles (n = " << n[i] << ")";
      throw DomainError(msg.str());
    }
  }
  return n;
}

ExtentInterval extent_bounds(const ReactionSpec& spec) {
  validate(spec);
  double xi_max = std::numeric_limits<double>::infinity();
  double xi_min = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < spec.nu.size(); ++i) {
    if (spec.nu[i] < 0.0) xi_max = std::min(xi_max, spec.n_init[i] / -spec.nu[i]);
    if (spec.nu[i] > 0.0) xi_min = std::max(xi_min, -spec.n_init[i] / spec.nu[i]);
  }
  if (!(xi_min < xi_max)) {
    std::ostringstream msg;
    msg << "degenerate extent interval [" << xi_min << ", " << xi_max
        << "]: no admissible extent of reaction";
    throw ConfigError(msg.str());
  }
  return {xi_min, xi_max};
}

}  // namespace eqm
