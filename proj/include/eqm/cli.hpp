// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "eqm/config.hpp"

namespace eqm {

// Process exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;     // configuration / usage error
inline constexpr int kExitNumeric = 3;    // numerical failure
inline constexpr int kExitTolerance = 4;  // result outside the configured tolerance

// Subcommand drivers: write machine-readable CSV to `csv` and a
// human-readable summary to `human`, and return the exit code.
int cmd_equilibrium(const RunConfig& cfg, std::ostream& csv, std::ostream& human);
int cmd_scan(const RunConfig& cfg, std::ostream& csv, std::ostream& human);
int cmd_geodesic(const RunConfig& cfg, std::ostream& csv, std::ostream& human);
int cmd_curvature(const RunConfig& cfg, std::ostream& csv, std::ostream& human);

// Full argv interface (CLI11 wiring, config loading, --out handling).
int run_cli(int argc, const char* const* argv);

}  // namespace eqm
