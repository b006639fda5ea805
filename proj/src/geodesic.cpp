// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/geodesic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>

#include "eqm/errors.hpp"

namespace eqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using State4 = Eigen::Vector4d;  // (E1, E2, V1, V2)

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0, kA53 = 64448.0 / 6561.0,
                 kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                 kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
constexpr double kE1 = kB1 - 5179.0 / 57600.0, kE3 = kB3 - 7571.0 / 16695.0,
                 kE4 = kB4 - 393.0 / 640.0, kE5 = kB5 + 92097.0 / 339200.0,
                 kE6 = kB6 - 187.0 / 2100.0, kE7 = -1.0 / 40.0;

// g_xixi denominator factor along the trajectory; its zero is the
// coordinate singularity that marks chemical equilibrium.
double monitor(const ReducedPotential& phi, const Vec2& E) {
  return -E[1] * phi.grad(E[0], E[1])[1];
}

double metric_norm(const ReducedPotential& phi, const Vec2& E, const Vec2& V) {
  try {
    const MetricPoint m = metric_at(phi, E);
    return V.dot(m.g * V);
  } catch (const SingularityError&) {
    return kNaN;
  } catch (const DomainError&) {
    return kNaN;
  }
}

// Cubic Hermite interpolation of the state between two accepted samples.
State4 hermite(const State4& y0, const State4& f0, const State4& y1, const State4& f1, double dt,
               double theta) {
  const double t2 = theta * theta, t3 = t2 * theta;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + theta;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y0 + (h10 * dt) * f0 + h01 * y1 + (h11 * dt) * f1;
}

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::singularity_reached: return "singularity_reached";
    case Termination::step_collapse: return "step_collapse";
    case Termination::domain_boundary: return "domain_boundary";
    case Termination::max_steps: return "max_steps";
  }
  return "?";
}

Trajectory integrate_geodesic(const ReducedPotential& phi, const GeodesicState& init,
                              const StepperConfig& cfg, const FdPolicy& fd_policy) {
  if (!phi.domain.contains(init.E[0], init.E[1]))
    throw DomainError("integrate_geodesic: initial point outside the coordinate domain");
  if (!init.E.allFinite() || !init.V.allFinite())
    throw ArgumentError("integrate_geodesic: initial state has non-finite components");
  metric_at(phi, init.E);  // throws if the initial point is singular

  const double d0 = monitor(phi, init.E);
  const double d_threshold = cfg.singularity_rel * std::abs(d0);
  if (std::abs(d0) == 0.0)
    throw SingularityError("integrate_geodesic: initial point lies on the singular locus", 2, d0);

  Trajectory traj;
  auto rhs = [&](const State4& y) {
    const Vec2 E(y[0], y[1]);
    const Vec2 V(y[2], y[3]);
    const ConnectionPoint c = christoffel_at(phi, E, fd_policy);
    State4 f;
    f[0] = V[0];
    f[1] = V[1];
    for (int a = 0; a < 2; ++a) {
      double acc = 0.0;
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) acc += c.gamma[a][b][d] * V[b] * V[d];
      f[2 + a] = -acc;
    }
    ++traj.rhs_evaluations;
    if (!f.allFinite()) throw NumericError("integrate_geodesic: non-finite derivative");
    return f;
  };

  State4 y;
  y << init.E[0], init.E[1], init.V[0], init.V[1];
  double tau = init.tau;
  double h = cfg.initial_step;
  double d_prev = d0;

  auto push_sample = [&](double t, const State4& s) {
    const Vec2 E(s[0], s[1]), V(s[2], s[3]);
    traj.samples.push_back({t, E, V, metric_norm(phi, E, V)});
  };
  push_sample(tau, y);

  State4 k1 = rhs(y);
  bool have_k1 = true;
  Termination term = Termination::max_steps;
  double terminal_xi = y[1];

  for (long step = 0; step < cfg.max_steps; ++step) {
    h = std::min(h, cfg.max_step);
    if (h < cfg.min_step) {
      // Step collapse right at the singular locus is the expected way the
      // integrator "finds" the equilibrium point.
      term = (std::abs(d_prev) < std::sqrt(cfg.singularity_rel) * std::abs(d0))
                 ? Termination::singularity_reached
                 : Termination::step_collapse;
      terminal_xi = y[1];
      break;
    }

    State4 k2, k3, k4, k5, k6, k7, ynew;
    bool rejected_by_error = false;
    try {
      if (!have_k1) {
        k1 = rhs(y);
        have_k1 = true;
      }
      k2 = rhs(y + h * (kA21 * k1));
      k3 = rhs(y + h * (kA31 * k1 + kA32 * k2));
      k4 = rhs(y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
      k5 = rhs(y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
      k6 = rhs(y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
      ynew = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
      k7 = rhs(ynew);
    } catch (const SingularityError&) {
      rejected_by_error = true;
    } catch (const DomainError&) {
      rejected_by_error = true;
    }
    if (rejected_by_error) {
      h *= 0.5;
      ++traj.rejected_steps;
      continue;
    }

    const State4 err4 = h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double e = err4[i] / sc;
      err += e * e;
    }
    err = std::sqrt(err / 4.0);

    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      ++traj.rejected_steps;
      continue;
    }

    // accepted
    const double tau_new = tau + h;
    ++traj.accepted_steps;
    const double d_new = monitor(phi, Vec2(ynew[0], ynew[1]));

    if (d_prev * d_new < 0.0) {
      // Crossed the singular locus inside this step: refine on the Hermite
      // interpolant so the recorded endpoint sits on the locus.
      double lo = 0.0, hi = 1.0;
      State4 ymid = ynew;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        ymid = hermite(y, k1, ynew, k7, h, mid);
        const double dm = monitor(phi, Vec2(ymid[0], ymid[1]));
        if (dm * d_prev < 0.0)
          hi = mid;
        else
          lo = mid;
      }
      push_sample(tau + 0.5 * (lo + hi) * h, ymid);
      term = Termination::singularity_reached;
      terminal_xi = ymid[1];
      break;
    }

    y = ynew;
    tau = tau_new;
    k1 = k7;  // FSAL
    d_prev = d_new;
    push_sample(tau, y);

    if (std::abs(d_new) < d_threshold) {
      term = Termination::singularity_reached;
      terminal_xi = y[1];
      break;
    }
    if (!phi.domain.contains(y[0], y[1])) {
      term = Termination::domain_boundary;
      terminal_xi = y[1];
      break;
    }
    terminal_xi = y[1];

    h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-10), -0.2)));
  }

  traj.termination = term;
  traj.terminal_xi = terminal_xi;

  // Affine-norm drift away from the terminal zone.
  const double norm0 = traj.samples.front().norm;
  double drift = 0.0;
  if (std::isfinite(norm0) && std::abs(norm0) > 0.0) {
    for (const TrajectorySample& s : traj.samples) {
      if (!std::isfinite(s.norm)) continue;
      if (term == Termination::singularity_reached &&
          std::abs(s.E[1] - terminal_xi) <= cfg.terminal_zone_xi)
        continue;
      drift = std::max(drift, std::abs(s.norm - norm0) / std::abs(norm0));
    }
  }
  traj.norm_drift = drift;
  return traj;
}

std::vector<GeodesicRunResult> batch_geodesics(const ReducedPotential& phi,
                                               const std::vector<GeodesicState>& inits,
                                               const StepperConfig& cfg, int threads) {
  std::vector<GeodesicRunResult> out(inits.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i].trajectory = integrate_geodesic(phi, inits[i], cfg);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  };
  if (threads <= 1 || inits.size() <= 1) {
    for (std::size_t i = 0; i < inits.size(); ++i) run_one(i);
    return out;
  }
  std::vector<std::future<void>> futures;
  std::atomic<std::size_t> next{0};
  const int workers = std::min<int>(threads, static_cast<int>(inits.size()));
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&]() {
      for (std::size_t i = next.fetch_add(1); i < inits.size(); i = next.fetch_add(1)) run_one(i);
    }));
  }
  for (auto& f : futures) f.get();
  return out;
}

}  // namespace eqm
