// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace eqm {

// Invalid reaction description or run configuration (bad stoichiometry,
// nonpositive volume, unknown representation, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coordinates left the admissible region of a fundamental equation
// (nonpositive log argument, molar volume below the covolume, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arguments inconsistent with each other (e.g. states that do not match the
// mole balance at the requested extent of reaction).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Model/representation/transformation combination the toolkit refuses,
// e.g. van der Waals reduction with species-dependent attraction constants.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The metric degenerates at a coordinate point.  `axis` is the 1-based
// coordinate whose E^a dPhi/dE^a factor vanished; 0 means the determinant.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, int axis, double factor)
      : std::runtime_error(what), axis_(axis), factor_(factor) {}

  int axis() const noexcept { return axis_; }
  double factor() const noexcept { return factor_; }

 private:
  int axis_;
  double factor_;
};

// Numerical breakdown: non-finite values, failed bracketing, multiple
// equilibria where a unique one is required.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqm
