// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace speclab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomain = 2;
inline constexpr int kUsage = 64;
inline constexpr int kSchema = 65;
inline constexpr int kNumeric = 70;

// Runs one command line (without the program name). Reports go to `out`,
// errors to `err` as a one-line JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace speclab::cli
