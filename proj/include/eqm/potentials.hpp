// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "eqm/dual2.hpp"
#include "eqm/errors.hpp"
#include "eqm/reaction.hpp"
#include "eqm/types.hpp"

namespace eqm {

enum class GasModel { ideal, vdw };

// A species occupying the full reaction vessel: internal energy U (J),
// volume V (L) and moles n.  n == 0 marks an absent species.
struct GasState {
  double U = 0.0;
  double V = 0.0;
  double n = 0.0;
};

// vdw is the safe default: with a = b = 0 the van der Waals fundamental
// equation reduces to the ideal one exactly (same reference constants).
GasModel infer_model(const ReactionSpec& spec);

// ---------------------------------------------------------------------------
// Per-species fundamental equations, entropy representation.
//
// ideal:  S = n s0 + n R ln[(U/U0)^c (V/V0) (n/n0)^-(c+1)]
// vdW:    S = n s0 + n R ln[((U/n + a n/V)/(c R T0))^c (n0/V0)(V/n - b)]
// with T0 = U0/(c R n0); the two coincide as a, b -> 0.
// ---------------------------------------------------------------------------

double ideal_entropy(const GasState& st, const SpeciesParams& sp, double R = kGasConstant);
double vdw_entropy(const GasState& st, const SpeciesParams& sp, double R = kGasConstant);

// mu = -T (dS/dn)_{U,V}, p = T (dS/dV)_{U,n}; analytic, valid for both
// models (a = b = 0 gives the ideal limit).  T is the state temperature the
// caller works at; the entropy derivatives themselves come from the state.
double chemical_potential(const GasState& st, const SpeciesParams& sp, double T,
                          double R = kGasConstant);
double pressure(const GasState& st, const SpeciesParams& sp, double T, double R = kGasConstant);

// Temperature of a state from 1/T = dS/dU.
double temperature_of(const GasState& st, const SpeciesParams& sp, double R = kGasConstant);

// Sum of per-species entropies, no cross terms.  The states must agree with
// moles_at(spec, xi) and the vessel volume; otherwise ArgumentError.
double total_entropy(const ReactionSpec& spec, const std::vector<GasState>& states, double xi);
double total_entropy(const ReactionSpec& spec, const std::vector<GasState>& states, double xi,
                     GasModel model);

// Massieu potential phi = S - beta U at fixed (beta, xi).  The ideal branch
// uses the closed form in (beta0/beta); the van der Waals branch assembles
// -beta sum_i (mu_i n_i - p_i V) from the analytic mu and p.
double massieu_potential(const ReactionSpec& spec, double beta, double xi);
double massieu_potential(const ReactionSpec& spec, double beta, double xi, GasModel model);

// Energy split across species at a common temperature.
// ideal: U_i = c_i n_i / (sum_j c_j n_j) * U.
// vdW:   U_i = c_i n_i / (sum_j c_j n_j) * (U + a/V sum_j n_j^2) - a/V n_i^2,
// which requires a common attraction constant a (UnsupportedError otherwise).
std::vector<double> reduce_ideal(const ReactionSpec& spec, double U_total, double xi);
std::vector<double> reduce_vdw(const ReactionSpec& spec, double U_total, double xi);

// Common temperature implied by a total energy at extent xi.
double temperature_from_total_energy(const ReactionSpec& spec, GasModel model, double U_total,
                                     double xi, double V);

// Per-species states at a common temperature (U_i = c_i n_i R T - a n_i^2/V).
std::vector<GasState> equal_temperature_states(const ReactionSpec& spec, GasModel model, double T,
                                               double xi);
std::vector<GasState> states_from_total_energy(const ReactionSpec& spec, GasModel model,
                                               double U_total, double xi, double V);

// ---------------------------------------------------------------------------
// Reduced two-coordinate potential
// ---------------------------------------------------------------------------

enum class Representation {
  entropy_U,     // Phi(U, xi) = S at fixed vessel volume
  massieu_beta,  // phi(beta, xi) = S - beta U
  entropy_V,     // Phi(V, xi) = S at fixed total energy (set from the lab beta)
};

const char* to_string(Representation rep);
const char* to_string(GasModel model);

struct CoordRect {
  double lo1 = 0.0, hi1 = 0.0;
  double lo2 = 0.0, hi2 = 0.0;
  bool contains(double e1, double e2) const {
    return e1 >= lo1 && e1 <= hi1 && e2 >= lo2 && e2 <= hi2;
  }
};

// Value, gradient and Hessian of a scalar function of two coordinates.
struct Jet2 {
  double value = 0.0;
  Vec2 grad = Vec2::Zero();
  Mat2 hess = Mat2::Zero();
};

// An immutable twice-differentiable potential Phi(E^1, E^2) with E^2 = xi.
// eval/grad/hess come from one forward-mode evaluation and are therefore
// mutually consistent and exact to round-off.
struct ReducedPotential {
  Representation rep = Representation::entropy_U;
  GasModel model = GasModel::ideal;
  CoordRect domain;
  double e1_anchor = 0.0;  // fixed-E1 slice used for scans and root solves
  double xi_anchor = 0.0;  // extent at which internal constants were fixed
  double u_total = std::numeric_limits<double>::quiet_NaN();  // entropy_V only

  std::function<double(double, double)> eval;
  std::function<Jet2(double, double)> jet;

  Vec2 grad(double e1, double e2) const { return jet(e1, e2).grad; }
  Mat2 hess(double e1, double e2) const { return jet(e1, e2).hess; }
};

struct BuildOptions {
  // Extent at which anchor constants (total energy etc.) are fixed.
  // NaN = midpoint of the numeric extent domain.
  double xi_anchor = std::numeric_limits<double>::quiet_NaN();
  double domain_margin = kDomainMargin;
};

ReducedPotential build_reduced_potential(const ReactionSpec& spec, Representation rep);
ReducedPotential build_reduced_potential(const ReactionSpec& spec, Representation rep,
                                         GasModel model, const BuildOptions& opts = {});

// ---------------------------------------------------------------------------
// Templated kernels (double for plain evaluation, Dual2 for derivatives,
// long double for test oracles).
// ---------------------------------------------------------------------------
namespace detail {

template <class T>
void require_positive(const T& x, const char* what) {
  if (!(value_of(x) > 0.0)) {
    throw DomainError(std::string(what) + " must be positive (got " +
                      std::to_string(value_of(x)) + ")");
  }
}

// Molar-form entropy, valid for both gas models; a, b are passed explicitly
// so a model switch can zero them out.
template <class T>
T species_entropy(const SpeciesParams& sp, double R, double a, double b, const T& U, const T& V,
                  const T& n) {
  using std::log;
  require_positive(n, "moles n");
  require_positive(V, "volume V");
  T x = U / n + a * n / V;  // molar energy including the attraction term
  T w = V / n - b;
  require_positive(x, "energy argument U/n + a n/V");
  require_positive(w, "free molar volume V/n - b");
  const double T0 = sp.U0 / (sp.c * R * sp.n0);
  return n * (sp.s0 + R * (sp.c * log(x / (sp.c * R * T0)) + log((sp.n0 / sp.V0) * w)));
}

// Reduced potential value in any representation; e2 is always the extent.
// For entropy_V the total energy is frozen (u_total) and the vessel volume
// is the free coordinate, so the energy split keeps sum U_i = u_total and
// the metric singularity stays on the chemical-equilibrium locus.
template <class T>
T reduced_value(const ReactionSpec& spec, GasModel model, Representation rep, double u_total,
                const T& e1, const T& e2) {
  const std::size_t ns = spec.species.size();
  const double R = spec.R;
  std::vector<T> n(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    n[i] = spec.nu[i] * e2 + spec.n_init[i];
    if (!(value_of(n[i]) > 0.0))
      throw DomainError("extent leaves the open admissible interval (species '" +
                        spec.species[i].label + "')");
  }

  const bool vdw = (model == GasModel::vdw);
  const double a = vdw ? spec.species.front().a : 0.0;

  T C = T{} + 0.0;  // sum c_i n_i
  for (std::size_t i = 0; i < ns; ++i) C = C + spec.species[i].c * n[i];
  require_positive(C, "heat-capacity weight sum");

  T phi = T{} + 0.0;
  switch (rep) {
    case Representation::entropy_U: {
      const T& U = e1;
      T Q = T{} + 0.0;
      if (vdw)
        for (const T& ni : n) Q = Q + ni * ni;
      T W = U + (a / spec.V) * Q;
      require_positive(W, "total energy argument");
      for (std::size_t i = 0; i < ns; ++i) {
        const SpeciesParams& sp = spec.species[i];
        T Ui = (sp.c * n[i] / C) * W - (a / spec.V) * (n[i] * n[i]);
        phi = phi + species_entropy(sp, R, vdw ? sp.a : 0.0, vdw ? sp.b : 0.0, Ui,
                                    T{} + spec.V, n[i]);
      }
      break;
    }
    case Representation::massieu_beta: {
      const T& beta = e1;
      require_positive(beta, "inverse temperature beta");
      for (std::size_t i = 0; i < ns; ++i) {
        const SpeciesParams& sp = spec.species[i];
        const double ai = vdw ? sp.a : 0.0;
        T Ui = sp.c * n[i] * R / beta - (ai / spec.V) * (n[i] * n[i]);
        phi = phi + species_entropy(sp, R, ai, vdw ? sp.b : 0.0, Ui, T{} + spec.V, n[i]) -
              beta * Ui;
      }
      break;
    }
    case Representation::entropy_V: {
      const T& V = e1;
      require_positive(V, "volume V");
      T Q = T{} + 0.0;
      if (vdw)
        for (const T& ni : n) Q = Q + ni * ni;
      T W = u_total + (a / V) * Q;
      require_positive(W, "total energy argument");
      for (std::size_t i = 0; i < ns; ++i) {
        const SpeciesParams& sp = spec.species[i];
        T Ui = (sp.c * n[i] / C) * W - (a / V) * (n[i] * n[i]);
        phi = phi + species_entropy(sp, R, vdw ? sp.a : 0.0, vdw ? sp.b : 0.0, Ui, V, n[i]);
      }
      break;
    }
  }
  return phi;
}

}  // namespace detail

}  // namespace eqm
