// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "speclab/cuts.hpp"
#include "speclab/graph.hpp"
#include "speclab/rational.hpp"
#include "speclab/spectra.hpp"

namespace speclab {

enum class Parity { Odd, Even, Neither, NoAutomorphism };
std::string_view parityName(Parity p);

// Entries of the unit Fiedler vector with |u_i| <= kZeroTol form V0.
inline constexpr double kZeroTol = 1e-9;
// ||u -+ Pu|| threshold for the even/odd classification.
inline constexpr double kParityTol = 1e-6;

struct BisectReport {
  double lambda2 = 0;
  bool simple = false;
  double gap = 0;                // lambda_3 - lambda_2
  std::vector<double> fiedler;   // unit norm, first significant entry positive
  VertexSubset positiveSide;     // V+ together with V0
  Rational lcut;                 // ncut(positiveSide)
  Parity parity = Parity::NoAutomorphism;
  int zeroCount = 0;             // |V0|
  // With V0 != {} the opposite orientation puts V0 on the other side; its
  // Ncut is reported here.
  std::optional<Rational> altLcut;
};

// Spectral bisection on the normalized Laplacian. When an order-2
// automorphism is given, the Fiedler vector's parity is classified under it.
// Throws ConnectivityError or MultiplicityError when Lcut is undefined.
BisectReport lcut(const Graph& g, const std::optional<std::vector<int>>& involution = std::nullopt);

// Even if ||u - Pu|| <= kParityTol, Odd if ||u + Pu|| <= kParityTol, where
// (Pu)_i = u_{perm(i)}. u is normalised first. perm must be an involutive
// automorphism of g.
Parity classifyParity(const Graph& g, const std::vector<int>& perm, const std::vector<double>& u);

// Restrictions of NL(R_{n,k}) to the even and odd sectors of the x <-> y swap:
// P = L_xx + L_xy (equal to NL(P_{n,k})) and Q = L_xx - L_xy.
struct PQBlocks {
  SymmetricMatrix p;
  SymmetricMatrix q;
};
PQBlocks pqBlocks(int n, int k);

struct LuxburgCheck {
  double quadratic = 0;     // y^T L y
  double volTimesNcut = 0;  // vol(V) * Ncut(A, V\A)
  double degreeNorm = 0;    // y^T D y, equal to vol(V)
  double degreeSum = 0;     // (Dy)^T 1, equal to 0
  double volume = 0;
};
// y_i = sqrt(vol(B)/vol(A)) on A and -sqrt(vol(A)/vol(B)) on B = V\A.
LuxburgCheck luxburgIdentityCheck(const Graph& g, const VertexSubset& a);

struct CounterexampleVerdict {
  int k = 0;
  CutReport mcut;
  BisectReport bisect;
  Rational topRowNcut;     // Ncut(A1), A1 = {x_1..x_{n+k}}
  bool lcutIsTopRow = false;
  bool strictlyLess = false;  // mcut < lcut, and also < altLcut when present
  bool holds = false;         // parity Odd && lcutIsTopRow && strictlyLess
};

// Mcut versus Lcut on R_{2k,k}, k >= 3. Mcut is enumerated while the graph
// has at most 24 vertices (k <= 4), otherwise taken from the closed form.
CounterexampleVerdict counterexampleCheck(int k);

struct RegionVerdict {
  bool member = false;
  std::optional<Rational> mcut;
  std::optional<Rational> lcut;
  // mcut < lcut, evaluated when the pair is a member and Lcut is defined.
  std::optional<bool> confirmed;
};

// Membership of (n, k) in the region where Mcut(R_{n,k}) < Lcut(R_{n,k})
// is claimed: (k >= 4, 2|k, 3|n, n >= K1) or (k = 2, n >= 2) or (k = 3, n >= 3).
bool inRegionR(int n, int k);
RegionVerdict regionRCheck(int n, int k);

}  // namespace speclab
