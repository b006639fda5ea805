// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/cli.hpp"

int main(int argc, char** argv) { return eqm::run_cli(argc, argv); }
