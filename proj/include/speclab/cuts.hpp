// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/families.hpp"
#include "speclab/graph.hpp"
#include "speclab/rational.hpp"

namespace speclab {

enum class CutMethod { BruteForce, Pruned, Formula };
std::string_view methodName(CutMethod m);

struct CutReport {
  Rational value;
  // Present for enumeration results and for every formula branch whose
  // optimal subset has a closed description.
  std::optional<VertexSubset> witness;
  std::int64_t cutWeight = 0;  // j such that value = Mcut_j
  CutMethod method = CutMethod::BruteForce;
  // Active condition of a piecewise formula, e.g. "*1&k>=4&n<K1". ASCII, no
  // commas, so it can go straight into CSV.
  std::string branch;
  std::optional<FamilySpec> family;
  // Largest cut weight enumerated by mcutPruned.
  std::optional<std::int64_t> restriction;
};

// Exhaustive minimum of Ncut over bipartitions; ties go to the smallest
// bitmask among subsets containing vertex 0. Connected, 2 <= |V| <= 24.
CutReport mcutBrute(const Graph& g);

// Same minimum, enumerating only bipartitions with cut <= cut(seed). The seed
// must satisfy (vol(A) - vol(B))^2 (cut + 1) <= vol(V)^2, otherwise
// PreconditionError.
CutReport mcutPruned(const Graph& g, const VertexSubset& seed);

// Mcut_j for every cut weight j that occurs, keyed by j.
std::map<std::int64_t, CutReport> mcutByCutWeight(const Graph& g);

// Closed-form Mcut of a family instance. Throws DomainError outside the
// formula's domain (trees have no formula); callers fall back to mcutBrute.
CutReport mcutFormula(const FamilySpec& spec);
// True when mcutFormula accepts the spec.
bool hasMcutFormula(const FamilySpec& spec);

struct SweepRow {
  int n = 0;
  int k = 0;
  std::string branch;
  Rational value;
};

// Formula values over a parameter grid for Roach or WeightedPath. Grid points
// outside the formula's domain are skipped.
std::vector<SweepRow> mcutRegionSweep(Family family, int nLo, int nHi, int kLo, int kHi);

// Exhaustive constants, |V| <= 24, connected.
// i(G) = min cut(S)/|S| over 1 <= |S| <= n/2.
Rational isoperimetric(const Graph& g);
// h_G = min cut(S)/min(vol S, vol S^c).
Rational cheegerEdge(const Graph& g);
// g_G = min vol(dS)/min(vol S, vol S^c), dS the outside neighbours of S.
Rational cheegerVertex(const Graph& g);

}  // namespace speclab
