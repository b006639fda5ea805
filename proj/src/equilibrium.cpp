// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "eqm/errors.hpp"
#include "eqm/rootfind.hpp"

namespace eqm {

namespace {

constexpr int kBracketGrid = 256;
constexpr int kScanGrid = 10'000;

// Unique sign-change bracket of f on [lo, hi], or nothing.
template <class F>
std::optional<std::pair<double, double>> unique_bracket(F&& f, double lo, double hi,
                                                        const char* what) {
  const auto brackets = sign_change_brackets(f, lo, hi, kBracketGrid);
  if (brackets.empty()) return std::nullopt;
  if (brackets.size() > 1)
    throw NumericError(std::string("find_equilibrium: ") + what + " changes sign " +
                       std::to_string(brackets.size()) +
                       " times on the extent domain; the equilibrium is not unique");
  return brackets.front();
}

}  // namespace

double singularity_function(const ReactionSpec& spec, const ReducedPotential& phi, double xi) {
  double T = 0.0;
  std::vector<GasState> states;
  switch (phi.rep) {
    case Representation::entropy_U:
      T = temperature_from_total_energy(spec, phi.model, phi.e1_anchor, xi, spec.V);
      states = states_from_total_energy(spec, phi.model, phi.e1_anchor, xi, spec.V);
      break;
    case Representation::massieu_beta:
      T = 1.0 / phi.e1_anchor;
      states = equal_temperature_states(spec, phi.model, T, xi);
      break;
    case Representation::entropy_V:
      T = temperature_from_total_energy(spec, phi.model, phi.u_total, xi, phi.e1_anchor);
      states = states_from_total_energy(spec, phi.model, phi.u_total, xi, phi.e1_anchor);
      break;
  }
  double balance = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    balance += spec.nu[i] * chemical_potential(states[i], spec.species[i], T, spec.R);
  return xi * balance / T;
}

EquilibriumReport find_equilibrium(const ReactionSpec& spec, const ReducedPotential& phi) {
  const double lo = phi.domain.lo2, hi = phi.domain.hi2;
  EquilibriumReport report;

  // Potential-extremum scan (always available, boundary maxima included).
  {
    auto f = [&](double xi) { return phi.eval(phi.e1_anchor, xi); };
    int best = 0;
    double fbest = -std::numeric_limits<double>::infinity();
    std::vector<double> values(kScanGrid);
    for (int i = 0; i < kScanGrid; ++i) {
      const double xi = lo + (hi - lo) * static_cast<double>(i) / (kScanGrid - 1);
      values[i] = f(xi);
      if (values[i] > fbest) {
        fbest = values[i];
        best = i;
      }
    }
    int maxima = 0;
    for (int i = 1; i + 1 < kScanGrid; ++i) {
      const double tol = 1e-12 * (std::abs(values[i]) + 1.0);
      if (values[i] > values[i - 1] + tol && values[i] > values[i + 1] + tol) ++maxima;
    }
    if (maxima > 1) report.warning = "potential scan is not unimodal; argmax reported anyway";
    if (best == 0 || best == kScanGrid - 1) {
      report.xi_scan = (best == 0) ? lo : hi;
      report.scan_detail = {0.0, 0};
    } else {
      const double step = (hi - lo) / (kScanGrid - 1);
      const double a = lo + (best - 1) * step, b = lo + (best + 1) * step;
      const RootResult r = golden_max(f, a, b, 1e-13 * std::max(1.0, hi - lo));
      report.xi_scan = r.x;
      report.scan_detail = {step, r.iterations};
    }
  }

  // Chemical-potential balance root.
  auto balance = [&](double xi) { return singularity_function(spec, phi, xi); };
  const auto root_bracket = unique_bracket(balance, lo, hi, "the chemical-potential balance");

  if (!root_bracket) {
    report.status = EquilibriumStatus::proceeds_to_boundary;
    return report;
  }

  {
    double dmax = 0.0;
    for (int i = 0; i < kBracketGrid; ++i) {
      const double xi = lo + (hi - lo) * static_cast<double>(i) / (kBracketGrid - 1);
      dmax = std::max(dmax, std::abs(balance(xi)));
    }
    const auto [a, b] = *root_bracket;
    const RootResult r = brent_root(balance, a, b, balance(a), balance(b), 1e-15, 1e-10 * dmax);
    report.xi_root = r.x;
    report.root_detail = {std::abs(r.fx), r.iterations};
  }

  // Metric-singularity locus: zero of the g_xixi denominator E^2 Phi,2.
  {
    auto denominator = [&](double xi) { return xi * phi.grad(phi.e1_anchor, xi)[1]; };
    const auto den_bracket = unique_bracket(denominator, lo, hi, "the g_xixi denominator");
    if (den_bracket) {
      const auto [a, b] = *den_bracket;
      const RootResult r = brent_root(denominator, a, b, denominator(a), denominator(b), 1e-15);
      report.xi_singular = r.x;
      report.singular_detail = {std::abs(r.fx), r.iterations};
    }
  }

  const double s1 = std::abs(report.xi_root - report.xi_scan);
  const double s2 = std::abs(report.xi_root - report.xi_singular);
  const double s3 = std::abs(report.xi_scan - report.xi_singular);
  report.spread = (std::isfinite(s1) && std::isfinite(s2) && std::isfinite(s3))
                      ? std::max({s1, s2, s3})
                      : std::numeric_limits<double>::quiet_NaN();
  return report;
}

double ideal_closed_form_xi(double R) {
  if (!(R > 0.0)) throw DomainError("gas constant must be positive");
  return 1.0 / (1.0 + 2.0 * std::sqrt(2.0) * std::exp(-1.0 / R));
}

std::vector<ScanRow> scan_potential(const ReactionSpec& spec, const ReducedPotential& phi,
                                    int grid_size) {
  validate(spec);
  if (grid_size < 2) throw ArgumentError("scan_potential: grid_size must be >= 2");
  const double lo = phi.domain.lo2, hi = phi.domain.hi2;
  std::vector<ScanRow> rows(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double xi = lo + (hi - lo) * static_cast<double>(i) / (grid_size - 1);
    rows[i] = {xi, phi.eval(phi.e1_anchor, xi)};
  }
  return rows;
}

}  // namespace eqm
