// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqm/geodesic.hpp"
#include "eqm/potentials.hpp"
#include "eqm/reaction.hpp"

namespace eqm {

struct GeodesicRunInit {
  double xi0 = 0.0;
  double xidot0 = 0.0;
  std::optional<double> e1_0;     // default depends on the representation
  std::optional<double> e1dot_0;  // default 0
};

// Everything a CLI run needs.  Loaded from a sectioned key-value file or an
// equivalent JSON document (see README for the schema).
struct RunConfig {
  ReactionSpec reaction;
  GasModel model = GasModel::ideal;
  Representation representation = Representation::entropy_U;
  double xi_anchor = std::numeric_limits<double>::quiet_NaN();  // NaN = domain midpoint
  double domain_margin = kDomainMargin;
  int scan_grid = 512;
  int curvature_grid = 5;
  double tolerance = 1e-3;  // equilibrium spread tolerance (exit-code gate)
  StepperConfig stepper;
  std::vector<GeodesicRunInit> runs;
};

// Parses a config file, dispatching on the leading character ('{' = JSON).
// Throws ConfigError with file/line (or JSON path) diagnostics.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& filename);

// CSV conventions shared by all subcommands: '.' decimal separator, ','
// field separator, 17 significant digits, literal token SINGULAR for
// undefined values, '#' comment lines.
std::string csv_format(double value);
inline constexpr const char* kCsvSingular = "SINGULAR";

}  // namespace eqm
