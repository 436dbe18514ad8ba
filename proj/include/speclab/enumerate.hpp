// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

struct BipartitionSample {
  Mask mask;
  std::int64_t volume;  // vol(A)
  std::int64_t cut;     // cut(A, V\A)
};

// Worker count for subset sweeps: SPECLAB_THREADS if set and positive,
// otherwise the hardware concurrency.
int workerCount();

// Throws SizeError when g is above the exhaustive cap.
void requireExhaustive(const Graph& g, const char* operation);

namespace detail {

inline Mask gray(std::uint64_t i) { return i ^ (i >> 1); }

// Walks masks 1 | gray(i) << 1 for i in [begin, end), updating volume and cut
// incrementally: one vertex flips per step.
template <class Acc, class Visit>
void sweepRange(const Graph& g, std::uint64_t begin, std::uint64_t end, Acc& acc, Visit& visit) {
  const int n = g.order();
  const Mask full = g.fullMask();
  std::vector<std::int64_t> plain(n);  // degree without the loop
  for (int v = 0; v < n; ++v) plain[v] = g.degree(v) - g.loopWeight(v);

  Mask a = 1 | (gray(begin) << 1);
  BipartitionSample s{a, volume(g, a), cut(g, a)};
  for (std::uint64_t i = begin;;) {
    if (s.mask != full) visit(acc, s);
    if (++i >= end) break;
    const int v = std::countr_zero(i) + 1;
    std::int64_t inside = 0;
    for (const auto& [u, w] : g.neighbors(v))
      if ((s.mask >> u) & 1U) inside += w;
    if ((s.mask >> v) & 1U) {
      s.mask &= ~(Mask{1} << v);
      s.volume -= g.degree(v);
      s.cut += 2 * inside - plain[v];
    } else {
      s.mask |= Mask{1} << v;
      s.volume += g.degree(v);
      s.cut += plain[v] - 2 * inside;
    }
  }
}

}  // namespace detail

// Visits every bipartition (A, V\A) once, with A canonicalised to contain
// vertex 0 and A != V. Each worker folds into its own copy of `init`; the
// per-worker accumulators are returned in worker order so callers can reduce
// them deterministically.
template <class Acc, class Visit>
std::vector<Acc> sweepBipartitions(const Graph& g, const Acc& init, Visit visit) {
  requireExhaustive(g, "bipartition sweep");
  const int n = g.order();
  std::vector<Acc> out;
  if (n < 2) return out;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::uint64_t workers = static_cast<std::uint64_t>(workerCount());
  if (total < (std::uint64_t{1} << 12)) workers = 1;
  if (workers > total) workers = total;
  out.assign(workers, init);
  if (workers == 1) {
    detail::sweepRange(g, 0, total, out[0], visit);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    pool.emplace_back([&, lo, hi, w] {
      Visit local = visit;
      detail::sweepRange(g, lo, hi, out[w], local);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace speclab
