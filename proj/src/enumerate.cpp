// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "speclab/errors.hpp"

namespace speclab {

int workerCount() {
  if (const char* env = std::getenv("SPECLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v > 256 ? 256 : v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void requireExhaustive(const Graph& g, const char* operation) {
  if (g.order() > Graph::kMaxExhaustive)
    throw SizeError(std::string(operation) + ": " + std::to_string(g.order()) +
                    " vertices exceeds the exhaustive limit of " +
                    std::to_string(Graph::kMaxExhaustive));
}

}  // namespace speclab
