// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqm/diffgeo.hpp"
#include "eqm/potentials.hpp"
#include "eqm/types.hpp"

namespace eqm {

struct GeodesicState {
  double tau = 0.0;
  Vec2 E = Vec2::Zero();  // coordinates
  Vec2 V = Vec2::Zero();  // dE/dtau
};

enum class Termination {
  singularity_reached,  // the metric-denominator monitor collapsed (equilibrium)
  step_collapse,        // accepted step fell below the minimum
  domain_boundary,      // trajectory left the coordinate domain
  max_steps,
};

const char* to_string(Termination t);

struct TrajectorySample {
  double tau = 0.0;
  Vec2 E = Vec2::Zero();
  Vec2 V = Vec2::Zero();
  double norm = 0.0;  // g_ab V^a V^b (NaN where the metric is singular)
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  Termination termination = Termination::max_steps;
  double terminal_xi = 0.0;
  // Max relative change of the affine norm over samples outside the terminal
  // zone |xi - xi*| <= terminal_zone_xi (0 for a zero-velocity trajectory).
  double norm_drift = 0.0;
  long accepted_steps = 0;
  long rejected_steps = 0;
  long rhs_evaluations = 0;
};

// Embedded Dormand-Prince 5(4) stepper configuration.
struct StepperConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  double min_step = 1e-13;
  double max_step = 100.0;
  long max_steps = 1'000'000;
  // Terminate when |D(E)| < singularity_rel * |D(E_0)| where
  // D(E) = -E^2 dPhi/dE^2 is the g_xixi denominator factor.
  double singularity_rel = 1e-6;
  double terminal_zone_xi = 1e-2;
};

// Integrates d^2 E^a/dtau^2 + Gamma^a_{bc} dE^b/dtau dE^c/dtau = 0 from the
// given state until the singularity monitor fires, the step collapses, the
// domain boundary is reached or the step budget runs out.  A sign change of
// the monitor within one accepted step is refined on the cubic Hermite
// interpolant so the terminal extent does not overshoot the singular locus.
Trajectory integrate_geodesic(const ReducedPotential& phi, const GeodesicState& init,
                              const StepperConfig& cfg = {}, const FdPolicy& fd_policy = {});

struct GeodesicRunResult {
  std::optional<Trajectory> trajectory;
  std::string error;  // nonempty if the run failed
};

// Independent integrations, order-preserving; per-item failures are
// collected instead of aborting the batch.  threads > 1 runs items
// concurrently (inputs are immutable, results are deterministic).
std::vector<GeodesicRunResult> batch_geodesics(const ReducedPotential& phi,
                                               const std::vector<GeodesicState>& inits,
                                               const StepperConfig& cfg = {}, int threads = 1);

}  // namespace eqm
