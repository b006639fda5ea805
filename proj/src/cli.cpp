// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqm/diffgeo.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/errors.hpp"
#include "eqm/geodesic.hpp"

namespace eqm {

namespace {

const char* kUnitsComment = "# units: energy J, volume L, temperature K, amount mol";

ReducedPotential build_from(const RunConfig& cfg) {
  BuildOptions opts;
  opts.xi_anchor = cfg.xi_anchor;
  opts.domain_margin = cfg.domain_margin;
  return build_reduced_potential(cfg.reaction, cfg.representation, cfg.model, opts);
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

int batch_threads() {
  const char* env = std::getenv("EQM_THREADS");
  if (!env) return 1;
  const long n = std::strtol(env, nullptr, 10);
  return (n > 1 && n < 256) ? static_cast<int>(n) : 1;
}

// Default first-coordinate initial value for a geodesic run.
double default_e1(const RunConfig& cfg, const ReducedPotential& phi, double xi0) {
  switch (cfg.representation) {
    case Representation::entropy_U: {
      double u = 0.0;
      for (const GasState& st :
           equal_temperature_states(cfg.reaction, cfg.model, cfg.reaction.T, xi0))
        u += st.U;
      return u;
    }
    case Representation::massieu_beta:
      return 1.0 / cfg.reaction.T;
    case Representation::entropy_V:
      return cfg.reaction.V;
  }
  return phi.e1_anchor;
}

}  // namespace

int cmd_equilibrium(const RunConfig& cfg, std::ostream& csv, std::ostream& human) {
  const ReducedPotential phi = build_from(cfg);
  const EquilibriumReport rep = find_equilibrium(cfg.reaction, phi);

  csv << kUnitsComment << '\n';
  write_row(csv, {"status", "xi_root_mol", "xi_scan_mol", "xi_singular_mol", "spread_mol",
                  "root_residual", "root_iterations", "scan_iterations", "singular_iterations"});
  write_row(csv, {rep.status == EquilibriumStatus::interior ? "interior" : "boundary",
                  csv_format(rep.xi_root), csv_format(rep.xi_scan), csv_format(rep.xi_singular),
                  csv_format(rep.spread), csv_format(rep.root_detail.residual),
                  std::to_string(rep.root_detail.iterations),
                  std::to_string(rep.scan_detail.iterations),
                  std::to_string(rep.singular_detail.iterations)});

  if (rep.status == EquilibriumStatus::proceeds_to_boundary) {
    human << "no interior equilibrium: the reaction proceeds to the extent boundary "
          << "(potential argmax at xi = " << rep.xi_scan << ")\n";
    return kExitOk;
  }
  human << "equilibrium extent (" << to_string(cfg.model) << ", " << to_string(cfg.representation)
        << ")\n"
        << "  xi_root     = " << rep.xi_root << '\n'
        << "  xi_scan     = " << rep.xi_scan << '\n'
        << "  xi_singular = " << rep.xi_singular << '\n'
        << "  spread      = " << rep.spread << "  (tolerance " << cfg.tolerance << ")\n";
  if (!rep.warning.empty()) human << "  warning: " << rep.warning << '\n';
  return rep.spread <= cfg.tolerance ? kExitOk : kExitTolerance;
}

int cmd_scan(const RunConfig& cfg, std::ostream& csv, std::ostream& human) {
  const ReducedPotential phi = build_from(cfg);
  const std::vector<ScanRow> rows = scan_potential(cfg.reaction, phi, cfg.scan_grid);

  csv << kUnitsComment << '\n';
  csv << "# potential at fixed " << to_string(cfg.representation)
      << " anchor E1 = " << csv_format(phi.e1_anchor) << '\n';
  write_row(csv, {"xi", "potential", "D", "g_xixi"});
  double best_xi = rows.front().xi, best_value = rows.front().value;
  for (const ScanRow& row : rows) {
    const double d = singularity_function(cfg.reaction, phi, row.xi);
    std::string g_cell;
    try {
      g_cell = csv_format(metric_at(phi, Vec2(phi.e1_anchor, row.xi)).g(1, 1));
    } catch (const SingularityError&) {
      g_cell = kCsvSingular;
    }
    write_row(csv, {csv_format(row.xi), csv_format(row.value), csv_format(d), g_cell});
    if (row.value > best_value) {
      best_value = row.value;
      best_xi = row.xi;
    }
  }
  human << "scan: " << rows.size() << " rows, potential argmax at xi = " << best_xi << '\n';
  return kExitOk;
}

int cmd_geodesic(const RunConfig& cfg, std::ostream& csv, std::ostream& human) {
  if (cfg.runs.empty()) throw ConfigError("geodesic: at least one 'run' is required");
  const ReducedPotential phi = build_from(cfg);

  std::vector<GeodesicState> inits;
  for (const GeodesicRunInit& run : cfg.runs) {
    GeodesicState st;
    const double e1 = run.e1_0 ? *run.e1_0 : default_e1(cfg, phi, run.xi0);
    const double e1dot = run.e1dot_0 ? *run.e1dot_0 : 0.0;
    st.E << e1, run.xi0;
    st.V << e1dot, run.xidot0;
    inits.push_back(st);
  }

  const std::vector<GeodesicRunResult> results =
      batch_geodesics(phi, inits, cfg.stepper, batch_threads());

  csv << kUnitsComment << '\n';
  write_row(csv, {"run_id", "tau", "E1", "E2", "V1", "V2", "norm"});
  bool any_failed = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].trajectory) continue;
    for (const TrajectorySample& s : results[i].trajectory->samples) {
      write_row(csv, {std::to_string(i), csv_format(s.tau), csv_format(s.E[0]),
                      csv_format(s.E[1]), csv_format(s.V[0]), csv_format(s.V[1]),
                      std::isfinite(s.norm) ? csv_format(s.norm) : kCsvSingular});
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].trajectory) {
      const Trajectory& t = *results[i].trajectory;
      human << "run " << i << ": terminal xi = " << t.terminal_xi << ", termination = "
            << to_string(t.termination) << ", norm drift = " << t.norm_drift << ", steps = "
            << t.accepted_steps << '\n';
    } else {
      any_failed = true;
      human << "run " << i << ": FAILED: " << results[i].error << '\n';
    }
  }
  return any_failed ? kExitNumeric : kExitOk;
}

int cmd_curvature(const RunConfig& cfg, std::ostream& csv, std::ostream& human) {
  const ReducedPotential phi = build_from(cfg);
  const int n = cfg.curvature_grid;
  if (n < 1) throw ConfigError("curvature: grid must be >= 1");

  // Inset grid: stays clear of the domain edges so the FD stencils fit.
  auto grid_point = [](double lo, double hi, int i, int count) {
    const double inset = 0.05 * (hi - lo);
    if (count == 1) return 0.5 * (lo + hi);
    return lo + inset + (hi - lo - 2.0 * inset) * static_cast<double>(i) / (count - 1);
  };

  csv << kUnitsComment << '\n';
  write_row(csv, {"E1", "E2", "R_scalar"});
  int flagged = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double e1 = grid_point(phi.domain.lo1, phi.domain.hi1, i, n);
      const double e2 = grid_point(phi.domain.lo2, phi.domain.hi2, k, n);
      std::string cell;
      try {
        cell = csv_format(curvature_at(phi, Vec2(e1, e2)).scalar);
      } catch (const SingularityError&) {
        cell = kCsvSingular;
        ++flagged;
      } catch (const DomainError&) {
        cell = kCsvSingular;
        ++flagged;
      }
      write_row(csv, {csv_format(e1), csv_format(e2), cell});
    }
  }
  human << "curvature: " << n * n << " grid points, " << flagged << " singular\n";
  return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"equilibrium-manifold toolkit: chemical reactions as geodesics of a "
               "thermodynamic metric"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  int grid_override = 0;
  double tolerance_override = -1.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file (key-value or JSON)")
        ->required();
    sub->add_option("--out", out_path, "CSV output path (default: <command>.csv)");
    sub->add_option("--grid", grid_override, "override the grid size");
    sub->add_option("--tolerance", tolerance_override, "override the equilibrium tolerance");
  };
  CLI::App* eq = app.add_subcommand("equilibrium", "locate the final extent of reaction");
  CLI::App* scan = app.add_subcommand("scan", "tabulate potential, balance and g_xixi over xi");
  CLI::App* geo = app.add_subcommand("geodesic", "integrate the configured geodesic runs");
  CLI::App* curv = app.add_subcommand("curvature", "sample the curvature scalar on a grid");
  for (CLI::App* sub : {eq, scan, geo, curv}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (grid_override > 0) {
      cfg.scan_grid = grid_override;
      cfg.curvature_grid = grid_override;
    }
    if (tolerance_override >= 0.0) cfg.tolerance = tolerance_override;

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (out_path.empty()) out_path = cmd + ".csv";
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw ConfigError("cannot open output path '" + out_path + "'");

    if (cmd == "equilibrium") return cmd_equilibrium(cfg, csv, std::cout);
    if (cmd == "scan") return cmd_scan(cfg, csv, std::cout);
    if (cmd == "geodesic") return cmd_geodesic(cfg, csv, std::cout);
    if (cmd == "curvature") return cmd_curvature(cfg, csv, std::cout);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnsupportedError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace eqm
