// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// The qft-infocalc command-line interface, callable in-process so tests can
// drive it and compare output documents byte for byte.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qic::cli {

// Dispatches the given arguments (without the program name). Structured
// output (JSON or CSV) goes to `out`; the human-readable summary and
// diagnostics go to `err`. Returns 0 when every requested check passed,
// 1 on a check violation, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qic::cli
