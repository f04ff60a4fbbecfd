// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#pragma once

#include <stdexcept>
#include <string>

namespace qic {

// Caller handed us something malformed (bad dimensions, unnormalized state,
// out-of-range parameter). Maps to CLI exit code 2.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine could not deliver its contract (e.g. eigensolver
// failed to converge). Never expected on valid inputs.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qic
