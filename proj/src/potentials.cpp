// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eqm {

namespace {

void check_state(const GasState& st, const SpeciesParams& sp) {
  if (!(st.n > 0.0)) throw DomainError("state moles must be positive");
  if (!(st.V > 0.0)) throw DomainError("state volume must be positive");
  if (!(st.V / st.n > sp.b))
    throw DomainError("molar volume V/n must exceed the covolume b for species '" + sp.label +
                      "'");
  if (!(st.U / st.n + sp.a * st.n / st.V > 0.0))
    throw DomainError("energy argument U/n + a n/V must be positive for species '" + sp.label +
                      "'");
}

// Common attraction constant required by the van der Waals energy split.
double common_attraction(const ReactionSpec& spec) {
  const double a = spec.species.front().a;
  for (const SpeciesParams& sp : spec.species) {
    if (std::abs(sp.a - a) > 1e-12 * std::max(1.0, std::abs(a)))
      throw UnsupportedError(
          "van der Waals reduction assumes a simple mixture: all species must share the same "
          "attraction constant a (species '" +
          sp.label + "' differs)");
  }
  return a;
}

}  // namespace

GasModel infer_model(const ReactionSpec& spec) {
  for (const SpeciesParams& sp : spec.species)
    if (sp.a != 0.0 || sp.b != 0.0) return GasModel::vdw;
  return GasModel::ideal;
}

const char* to_string(Representation rep) {
  switch (rep) {
    case Representation::entropy_U: return "entropy_U";
    case Representation::massieu_beta: return "massieu_beta";
    case Representation::entropy_V: return "entropy_V";
  }
  return "?";
}

const char* to_string(GasModel model) {
  return model == GasModel::ideal ? "ideal" : "vdw";
}

double ideal_entropy(const GasState& st, const SpeciesParams& sp, double R) {
  if (!(st.U > 0.0)) throw DomainError("ideal-gas internal energy must be positive");
  check_state(st, sp);
  return st.n * sp.s0 +
         st.n * R *
             (sp.c * std::log(st.U / sp.U0) + std::log(st.V / sp.V0) -
              (sp.c + 1.0) * std::log(st.n / sp.n0));
}

double vdw_entropy(const GasState& st, const SpeciesParams& sp, double R) {
  check_state(st, sp);
  return detail::species_entropy(sp, R, sp.a, sp.b, st.U, st.V, st.n);
}

double chemical_potential(const GasState& st, const SpeciesParams& sp, double T, double R) {
  check_state(st, sp);
  // (dS/dn)_{U,V} = s0 + R ln[(x/(c R T0))^c (n0/V0) w] - c R
  //                 + 2 a c R n/(V x) - R V/(V - n b)
  const double x = st.U / st.n + sp.a * st.n / st.V;
  const double w = st.V / st.n - sp.b;
  const double T0 = sp.U0 / (sp.c * R * sp.n0);
  const double dSdn = sp.s0 + R * (sp.c * std::log(x / (sp.c * R * T0)) + std::log((sp.n0 / sp.V0) * w)) -
                      sp.c * R + 2.0 * sp.a * sp.c * R * st.n / (st.V * x) -
                      R * st.V / (st.V - st.n * sp.b);
  return -T * dSdn;
}

double pressure(const GasState& st, const SpeciesParams& sp, double T, double R) {
  if (st.n == 0.0) return 0.0;
  check_state(st, sp);
  const double x = st.U / st.n + sp.a * st.n / st.V;
  return T * (st.n * R / (st.V - st.n * sp.b) - sp.a * sp.c * R * st.n * st.n / (st.V * st.V * x));
}

double temperature_of(const GasState& st, const SpeciesParams& sp, double R) {
  check_state(st, sp);
  return (st.U / st.n + sp.a * st.n / st.V) / (sp.c * R);
}

double total_entropy(const ReactionSpec& spec, const std::vector<GasState>& states, double xi) {
  return total_entropy(spec, states, xi, infer_model(spec));
}

double total_entropy(const ReactionSpec& spec, const std::vector<GasState>& states, double xi,
                     GasModel model) {
  validate(spec);
  if (states.size() != spec.species.size())
    throw ArgumentError("total_entropy: one state per species is required");
  const std::vector<double> n = moles_at(spec, xi);
  double S = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (std::abs(states[i].n - n[i]) > 1e-9 * std::max(1.0, n[i])) {
      std::ostringstream msg;
      msg << "total_entropy: state of species '" << spec.species[i].label << "' has n = "
          << states[i].n << " but the mole balance at xi = " << xi << " gives " << n[i];
      throw ArgumentError(msg.str());
    }
    if (states[i].n == 0.0) continue;  // absent species contributes nothing
    S += (model == GasModel::vdw) ? vdw_entropy(states[i], spec.species[i], spec.R)
                                  : ideal_entropy(states[i], spec.species[i], spec.R);
  }
  return S;
}

double massieu_potential(const ReactionSpec& spec, double beta, double xi) {
  return massieu_potential(spec, beta, xi, infer_model(spec));
}

double massieu_potential(const ReactionSpec& spec, double beta, double xi, GasModel model) {
  validate(spec);
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  const std::vector<double> n = moles_at(spec, xi);
  const double T = 1.0 / beta;
  double phi = 0.0;
  if (model == GasModel::ideal) {
    // phi = sum_i n_i { s0 + R ln[(beta0/beta)^c (n/n0)^-1 (V/V0)] - c R },
    // beta0 = c R n0 / U0.
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0.0) continue;
      const SpeciesParams& sp = spec.species[i];
      const double beta0 = sp.c * spec.R * sp.n0 / sp.U0;
      phi += n[i] * (sp.s0 +
                     spec.R * (sp.c * std::log(beta0 / beta) - std::log(n[i] / sp.n0) +
                               std::log(spec.V / sp.V0)) -
                     sp.c * spec.R);
    }
  } else {
    // phi = -beta sum_i (mu_i n_i - p_i V) via the analytic mu and p.
    const std::vector<GasState> states = equal_temperature_states(spec, model, T, xi);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0.0) continue;
      const double mu = chemical_potential(states[i], spec.species[i], T, spec.R);
      const double p = pressure(states[i], spec.species[i], T, spec.R);
      phi += -beta * (mu * n[i] - p * spec.V);
    }
  }
  return phi;
}

std::vector<double> reduce_ideal(const ReactionSpec& spec, double U_total, double xi) {
  validate(spec);
  if (!(U_total > 0.0)) throw DomainError("total internal energy must be positive");
  const std::vector<double> n = moles_at(spec, xi);
  double C = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) C += spec.species[i].c * n[i];
  if (!(C > 0.0)) throw DomainError("heat-capacity weight sum vanished");
  std::vector<double> U(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) U[i] = spec.species[i].c * n[i] / C * U_total;
  return U;
}

std::vector<double> reduce_vdw(const ReactionSpec& spec, double U_total, double xi) {
  validate(spec);
  const double a = common_attraction(spec);
  const std::vector<double> n = moles_at(spec, xi);
  double C = 0.0, Q = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    C += spec.species[i].c * n[i];
    Q += n[i] * n[i];
  }
  if (!(C > 0.0)) throw DomainError("heat-capacity weight sum vanished");
  const double W = U_total + a * Q / spec.V;
  if (!(W > 0.0)) throw DomainError("total energy argument U + a/V sum n^2 must be positive");
  std::vector<double> U(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    U[i] = spec.species[i].c * n[i] / C * W - a * n[i] * n[i] / spec.V;
  return U;
}

double temperature_from_total_energy(const ReactionSpec& spec, GasModel model, double U_total,
                                     double xi, double V) {
  const double a = (model == GasModel::vdw) ? common_attraction(spec) : 0.0;
  const std::vector<double> n = moles_at(spec, xi);
  double C = 0.0, Q = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    C += spec.species[i].c * n[i];
    Q += n[i] * n[i];
  }
  const double T = (U_total + a * Q / V) / (spec.R * C);
  if (!(T > 0.0)) throw DomainError("implied temperature is not positive");
  return T;
}

std::vector<GasState> equal_temperature_states(const ReactionSpec& spec, GasModel model, double T,
                                               double xi) {
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  const std::vector<double> n = moles_at(spec, xi);
  std::vector<GasState> states(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const SpeciesParams& sp = spec.species[i];
    const double a = (model == GasModel::vdw) ? sp.a : 0.0;
    states[i] = {sp.c * n[i] * spec.R * T - a * n[i] * n[i] / spec.V, spec.V, n[i]};
  }
  return states;
}

std::vector<GasState> states_from_total_energy(const ReactionSpec& spec, GasModel model,
                                               double U_total, double xi, double V) {
  const std::vector<double> U = (model == GasModel::vdw) ? reduce_vdw(spec, U_total, xi)
                                                         : reduce_ideal(spec, U_total, xi);
  const std::vector<double> n = moles_at(spec, xi);
  std::vector<GasState> states(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) states[i] = {U[i], V, n[i]};
  return states;
}

ReducedPotential build_reduced_potential(const ReactionSpec& spec, Representation rep) {
  return build_reduced_potential(spec, rep, infer_model(spec));
}

ReducedPotential build_reduced_potential(const ReactionSpec& spec, Representation rep,
                                         GasModel model, const BuildOptions& opts) {
  validate(spec);
  if (model == GasModel::vdw) common_attraction(spec);  // reduction premise

  const ExtentInterval bounds = extent_bounds(spec);
  const double lo2 = bounds.lo(opts.domain_margin);
  const double hi2 = bounds.hi(opts.domain_margin);
  if (!(lo2 < hi2)) throw ConfigError("domain margin leaves an empty extent interval");

  double xi_anchor = opts.xi_anchor;
  if (std::isnan(xi_anchor)) xi_anchor = 0.5 * (lo2 + hi2);
  if (!(xi_anchor >= lo2 && xi_anchor <= hi2))
    throw ConfigError("xi_anchor lies outside the numeric extent domain");

  // Total energy at the lab conditions and the anchor extent.
  double u_anchor = 0.0;
  for (const GasState& st : equal_temperature_states(spec, model, spec.T, xi_anchor))
    u_anchor += st.U;

  ReducedPotential phi;
  phi.rep = rep;
  phi.model = model;
  phi.xi_anchor = xi_anchor;
  phi.domain.lo2 = lo2;
  phi.domain.hi2 = hi2;

  double u_total = std::numeric_limits<double>::quiet_NaN();
  switch (rep) {
    case Representation::entropy_U:
      phi.e1_anchor = u_anchor;
      phi.domain.lo1 = 1e-4 * u_anchor;
      phi.domain.hi1 = 1e4 * u_anchor;
      break;
    case Representation::massieu_beta:
      phi.e1_anchor = 1.0 / spec.T;
      phi.domain.lo1 = 1e-4 / spec.T;
      phi.domain.hi1 = 1e4 / spec.T;
      break;
    case Representation::entropy_V: {
      u_total = u_anchor;
      phi.e1_anchor = spec.V;
      double covolume = 0.0;
      for (std::size_t i = 0; i < spec.species.size(); ++i) {
        const double bi = (model == GasModel::vdw) ? spec.species[i].b : 0.0;
        const double n_max = std::max(spec.n_init[i] + spec.nu[i] * bounds.xi_min,
                                      spec.n_init[i] + spec.nu[i] * bounds.xi_max);
        covolume = std::max(covolume, n_max * bi);
      }
      phi.domain.lo1 = std::max(1e-4 * spec.V, 1.01 * covolume);
      phi.domain.hi1 = 1e4 * spec.V;
      break;
    }
  }
  phi.u_total = u_total;

  // Capture a private copy of the reaction description; the closures make
  // the potential a self-contained immutable value.
  const ReactionSpec s = spec;
  phi.eval = [s, model, rep, u_total](double e1, double e2) {
    return detail::reduced_value<double>(s, model, rep, u_total, e1, e2);
  };
  phi.jet = [s, model, rep, u_total](double e1, double e2) {
    const Dual2 r =
        detail::reduced_value<Dual2>(s, model, rep, u_total, Dual2::var1(e1), Dual2::var2(e2));
    Jet2 out;
    out.value = r.f;
    out.grad << r.d1, r.d2;
    out.hess << r.d11, r.d12, r.d12, r.d22;
    return out;
  };
  return phi;
}

}  // namespace eqm
