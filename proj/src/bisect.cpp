// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/bisect.hpp"

#include <bit>
#include <cmath>

#include "speclab/errors.hpp"
#include "speclab/families.hpp"

namespace speclab {

std::string_view parityName(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Neither: return "neither";
    case Parity::NoAutomorphism: return "none";
  }
  return "unknown";
}

Parity classifyParity(const Graph& g, const std::vector<int>& perm, const std::vector<double>& u) {
  requireBijection(perm, g.order());
  for (int i = 0; i < g.order(); ++i)
    if (perm[perm[i]] != i) throw DomainError("permutation is not an involution");
  if (!isAutomorphism(g, perm)) throw DomainError("permutation is not an automorphism");
  if (static_cast<int>(u.size()) != g.order()) throw DomainError("vector length differs from graph order");
  double norm = 0;
  for (double x : u) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0) throw DomainError("zero vector has no parity");
  double even = 0, odd = 0;
  for (int i = 0; i < g.order(); ++i) {
    const double a = u[i] / norm, b = u[perm[i]] / norm;
    even += (a - b) * (a - b);
    odd += (a + b) * (a + b);
  }
  if (std::sqrt(even) <= kParityTol) return Parity::Even;
  if (std::sqrt(odd) <= kParityTol) return Parity::Odd;
  return Parity::Neither;
}

BisectReport lcut(const Graph& g, const std::optional<std::vector<int>>& involution) {
  if (g.order() < 2) throw DomainError("Lcut needs at least 2 vertices");
  if (!g.connected()) throw ConnectivityError("Lcut needs a connected graph");
  const Spectrum s = eigSym(buildMatrix(g, MatrixKind::NormalizedLaplacian));
  BisectReport r;
  r.lambda2 = s.eigenvalues[1];
  r.gap = lambda2Gap(s);
  r.simple = lambda2Simple(s);
  if (!r.simple)
    throw MultiplicityError("lambda_2 = " + std::to_string(r.lambda2) +
                            " is not simple (gap " + std::to_string(r.gap) + "); Lcut is undefined");
  r.fiedler = s.eigenvectors[1];
  for (double x : r.fiedler)
    if (std::abs(x) > kZeroTol) {
      if (x < 0)
        for (double& y : r.fiedler) y = -y;
      break;
    }
  Mask pos = 0, zero = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (std::abs(r.fiedler[i]) <= kZeroTol)
      zero |= Mask{1} << i;
    else if (r.fiedler[i] > 0)
      pos |= Mask{1} << i;
  }
  r.zeroCount = std::popcount(zero);
  r.positiveSide = VertexSubset::of(g, pos | zero);
  r.lcut = ncut(g, r.positiveSide);
  if (zero) {
    // Flipping the sign makes the old negative side positive, and V0 follows it.
    const Mask alt = g.fullMask() & ~pos;
    if (alt != g.fullMask() && alt != 0) r.altLcut = ncut(g, alt);
  }
  if (involution) r.parity = classifyParity(g, *involution, r.fiedler);
  return r;
}

PQBlocks pqBlocks(int n, int k) {
  const FamilySpec spec = FamilySpec::roach(n, k);
  spec.validate();
  const Graph r = generate(spec);
  const SymmetricMatrix nl = buildMatrix(r, MatrixKind::NormalizedLaplacian);
  const int half = n + k;
  PQBlocks out{SymmetricMatrix(half, MatrixKind::NormalizedLaplacian, "P(" + spec.label() + ")"),
               SymmetricMatrix(half, MatrixKind::NormalizedLaplacian, "Q(" + spec.label() + ")")};
  for (int i = 0; i < half; ++i)
    for (int j = 0; j <= i; ++j) {
      const double xx = nl(i, j), xy = nl(i, j + half);
      out.p.set(i, j, xx + xy);
      out.q.set(i, j, xx - xy);
    }
  return out;
}

LuxburgCheck luxburgIdentityCheck(const Graph& g, const VertexSubset& a) {
  const Rational nc = ncut(g, a.members);
  const VertexSubset side = VertexSubset::of(g, a.members);
  const double va = static_cast<double>(side.volume);
  const double vb = static_cast<double>(g.volume() - side.volume);
  const double inA = std::sqrt(vb / va), inB = -std::sqrt(va / vb);
  std::vector<double> y(g.order());
  for (int i = 0; i < g.order(); ++i) y[i] = side.contains(i) ? inA : inB;

  LuxburgCheck c;
  c.volume = static_cast<double>(g.volume());
  c.volTimesNcut = c.volume * nc.toDouble();
  // y^T L y = sum over edges w (y_u - y_v)^2; loops cancel in L.
  for (const Edge& e : g.edges()) {
    const double d = y[e.u] - y[e.v];
    c.quadratic += static_cast<double>(e.w) * d * d;
  }
  for (int i = 0; i < g.order(); ++i) {
    const double d = static_cast<double>(g.degree(i));
    c.degreeNorm += d * y[i] * y[i];
    c.degreeSum += d * y[i];
  }
  return c;
}

CounterexampleVerdict counterexampleCheck(int k) {
  if (k < 3) throw DomainError("counterexample check needs k >= 3");
  const FamilySpec spec = FamilySpec::roach(2 * k, k);
  spec.validate();
  const Graph g = generate(spec);
  CounterexampleVerdict v;
  v.k = k;
  v.mcut = g.order() <= Graph::kMaxExhaustive ? mcutBrute(g) : mcutFormula(spec);
  v.mcut.family = spec;
  v.bisect = lcut(g, builtinInvolution(spec));
  Mask top = 0;
  for (int i = 1; i <= spec.n + spec.k; ++i) top |= Mask{1} << roachX(spec, i);
  v.topRowNcut = ncut(g, top);
  const Mask side = v.bisect.positiveSide.members;
  v.lcutIsTopRow = v.bisect.lcut == v.topRowNcut && (side == top || side == (g.fullMask() & ~top));
  v.strictlyLess = v.mcut.value < v.bisect.lcut && (!v.bisect.altLcut || v.mcut.value < *v.bisect.altLcut);
  v.holds = v.bisect.parity == Parity::Odd && v.lcutIsTopRow && v.strictlyLess;
  return v;
}

bool inRegionR(int n, int k) {
  if (n < 1 || k < 2) return false;
  if (k == 2) return n >= 2;
  if (k == 3) return n >= 3;
  if (k % 2 != 0 || n % 3 != 0) return false;
  // K1 <= n, the complement of the strict test used by the Mcut formula.
  const std::int64_t L = 2 * std::int64_t{n} - 2 + 3 * std::int64_t{k};
  return !(L * L < 2 * (3 * std::int64_t{k} - 1) * (3 * std::int64_t{k} - 1));
}

RegionVerdict regionRCheck(int n, int k) {
  RegionVerdict v;
  v.member = inRegionR(n, k);
  if (!v.member) return v;
  const FamilySpec spec = FamilySpec::roach(n, k);
  if (spec.vertexCount() > Graph::kMaxVertices) return v;
  v.mcut = mcutFormula(spec).value;
  try {
    const BisectReport b = lcut(generate(spec), builtinInvolution(spec));
    v.lcut = b.lcut;
    v.confirmed = *v.mcut < b.lcut && (!b.altLcut || *v.mcut < *b.altLcut);
  } catch (const MultiplicityError&) {
    // Lcut undefined; leave unconfirmed.
  }
  return v;
}

}  // namespace speclab
