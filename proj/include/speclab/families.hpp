// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

enum class Family {
  Path,            // P_n
  Cycle,           // C_n, n >= 3
  Complete,        // K_n
  Tree,            // T_depth: binary strings of length < depth
  DoubleTree,      // DT_depth: two copies of T_depth joined at the roots
  CycleCrossPath,  // C_m x P_n
  Roach,           // R_{n,k}: two n-vertex antennae on a 2 x k ladder
  WeightedPath,    // P_{n,k}: path of n+k vertices, unit loops on the last k
  Lollipop,        // LP_{n,m}: path P_m attached to K_n
};

// Family plus its parameters. Unused parameters stay 0.
// Tree/DoubleTree keep the depth in `n`.
struct FamilySpec {
  Family family = Family::Path;
  int n = 0;
  int k = 0;
  int m = 0;

  static FamilySpec path(int n) { return {Family::Path, n, 0, 0}; }
  static FamilySpec cycle(int n) { return {Family::Cycle, n, 0, 0}; }
  static FamilySpec complete(int n) { return {Family::Complete, n, 0, 0}; }
  static FamilySpec tree(int depth) { return {Family::Tree, depth, 0, 0}; }
  static FamilySpec doubleTree(int depth) { return {Family::DoubleTree, depth, 0, 0}; }
  static FamilySpec cycleCrossPath(int m, int n) { return {Family::CycleCrossPath, n, 0, m}; }
  static FamilySpec roach(int n, int k) { return {Family::Roach, n, k, 0}; }
  static FamilySpec weightedPath(int n, int k) { return {Family::WeightedPath, n, k, 0}; }
  static FamilySpec lollipop(int n, int m) { return {Family::Lollipop, n, 0, m}; }

  // Largest parameter accepted for closed-form evaluation.
  static constexpr int kMaxFormulaParameter = 100000;

  // Throws DomainError naming the violated bound. validateParameters checks
  // the family's parameter domain only; validate also enforces the vertex cap
  // needed to materialize the graph.
  void validateParameters() const;
  void validate() const;
  int vertexCount() const;
  // Short label such as "roach(6,4)".
  std::string label() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view familyName(Family f);
// Accepts the names produced by familyName plus a few hyphenated aliases.
std::optional<Family> parseFamily(std::string_view name);

Graph generate(const FamilySpec& spec);

// Order-2 automorphism built into the family's definition, if any:
// x_i <-> y_i for roach graphs, the two halves of a double tree, and the
// end-to-end reversal of a plain path.
std::optional<std::vector<int>> builtinInvolution(const FamilySpec& spec);

// Vertex indices of a roach graph: x_i (1 <= i <= n+k) is i-1 and
// y_i is n+k+i-1.
inline int roachX(const FamilySpec&, int i) { return i - 1; }
inline int roachY(const FamilySpec& s, int i) { return s.n + s.k + i - 1; }

// The fixed example graph on 7 vertices used for the normalized-cut
// illustration: edges 12 23 31 34 14 15 36 65 75 76.
Graph exampleGraph7();

}  // namespace speclab
