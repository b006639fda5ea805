// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace eqm {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Units used throughout: energy J, volume L, temperature K, amount mol.
// Pressure therefore carries J/L and entropies J/K.
inline constexpr double kGasConstant = 8.314;  // J/(mol K)

// Default margin that turns the closed physical extent interval into the
// open numeric domain (the potentials contain ln n_i terms).
inline constexpr double kDomainMargin = 1e-9;  // mol

}  // namespace eqm
