// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "speclab/rational.hpp"

namespace speclab {

using Mask = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t w = 1;
};

struct Loop {
  int v = 0;
  std::int64_t w = 1;
};

// Immutable weighted undirected graph on vertices 0..n-1 (1-based in every
// external format). Weights are positive integers. A self-loop of weight w
// contributes w, once, to its vertex's degree.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;
  // Cap for routines that sweep all bipartitions.
  static constexpr int kMaxExhaustive = 24;

  Graph(int n, std::vector<Edge> edges, std::vector<Loop> loops = {}, std::string name = "");

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Loop>& loops() const { return loops_; }
  bool hasLoops() const { return !loops_.empty(); }

  std::int64_t degree(int i) const { return degree_[i]; }
  std::int64_t loopWeight(int i) const { return loop_[i]; }
  std::int64_t volume() const { return volume_; }
  std::int64_t maxDegree() const;
  std::int64_t minDegree() const;
  // w_ij; for i == j this is the loop weight.
  std::int64_t weight(int i, int j) const;
  // Non-loop neighbours of i with edge weights.
  const std::vector<std::pair<int, std::int64_t>>& neighbors(int i) const { return adj_[i]; }
  Mask neighborMask(int i) const { return nbrMask_[i]; }
  Mask fullMask() const;
  bool connected() const;

  Graph renamed(std::string name) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Loop> loops_;
  std::string name_;
  std::vector<std::int64_t> degree_;
  std::vector<std::int64_t> loop_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
  std::vector<Mask> nbrMask_;
  std::int64_t volume_ = 0;
};

// One side of a bipartition with cached volume and cut weight.
struct VertexSubset {
  Mask members = 0;
  std::int64_t volume = 0;
  std::int64_t cutWeight = 0;

  static VertexSubset of(const Graph& g, Mask members);
  static VertexSubset fromVertices(const Graph& g, const std::vector<int>& zeroBased);
  int size() const;
  bool contains(int v) const { return (members >> v) & 1U; }
  // Zero-based, ascending.
  std::vector<int> vertices() const;
  VertexSubset complement(const Graph& g) const;
};

Mask maskOf(const std::vector<int>& zeroBased);

std::int64_t cut(const Graph& g, Mask a);
std::int64_t volume(const Graph& g, Mask a);
// cut(A, V\A) * (1/vol(A) + 1/vol(V\A)). A must be nonempty and proper.
Rational ncut(const Graph& g, Mask a);
Rational ncut(const Graph& g, const VertexSubset& a);

// Minimum cut over all nonempty proper subsets (exhaustive, |V| <= 24).
// Returns 0 for disconnected graphs.
std::int64_t edgeConnectivity(const Graph& g);

// Unweighted BFS hop distance.
int distance(const Graph& g, int u, int v);
int diameter(const Graph& g);

// True iff the vertex permutation preserves every weight (PA = AP).
bool isAutomorphism(const Graph& g, const std::vector<int>& perm);
void requireBijection(const std::vector<int>& perm, int n);

// Vertex (u, v) of G x H gets index u * |H| + v.
Graph cartesianProduct(const Graph& g, const Graph& h);

}  // namespace speclab
