// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/cuts.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "speclab/enumerate.hpp"
#include "speclab/errors.hpp"

namespace speclab {

std::string_view methodName(CutMethod m) {
  switch (m) {
    case CutMethod::BruteForce: return "brute";
    case CutMethod::Pruned: return "pruned";
    case CutMethod::Formula: return "formula";
  }
  return "unknown";
}

namespace {

using i128 = __int128;

// Running minimum of cut * vol / (va * vb). vol is common to every
// candidate, so comparing cut / (va * vb) suffices.
struct Best {
  bool found = false;
  Mask mask = 0;
  std::int64_t cut = 0;
  std::int64_t va = 1;
  std::int64_t vb = 1;

  // Strictly better value, or an equal value on a smaller mask.
  bool improvedBy(const BipartitionSample& s, std::int64_t vb2) const {
    if (!found) return true;
    const i128 lhs = static_cast<i128>(s.cut) * va * vb;
    const i128 rhs = static_cast<i128>(cut) * s.volume * vb2;
    return lhs < rhs || (lhs == rhs && s.mask < mask);
  }
  void offer(const BipartitionSample& s, std::int64_t vol) {
    const std::int64_t vb2 = vol - s.volume;
    if (s.volume <= 0 || vb2 <= 0) return;
    if (improvedBy(s, vb2)) *this = {true, s.mask, s.cut, s.volume, vb2};
  }
  void merge(const Best& o) {
    if (!o.found) return;
    if (!found) {
      *this = o;
      return;
    }
    if (improvedBy({o.mask, o.va, o.cut}, o.vb)) *this = o;
  }
};

void requireMcutInput(const Graph& g) {
  requireExhaustive(g, "Mcut enumeration");
  if (g.order() < 2) throw DomainError("Mcut needs at least 2 vertices");
  if (!g.connected()) throw ConnectivityError("Mcut needs a connected graph");
}

CutReport reportOf(const Graph& g, const Best& b, CutMethod method) {
  if (!b.found) throw DomainError("no admissible bipartition");
  CutReport r;
  r.value = ncut(g, b.mask);
  r.witness = VertexSubset::of(g, b.mask);
  r.cutWeight = b.cut;
  r.method = method;
  r.branch = std::string(methodName(method));
  return r;
}

Best sweepMin(const Graph& g, std::int64_t maxCut) {
  const std::int64_t vol = g.volume();
  auto parts = sweepBipartitions(g, Best{}, [vol, maxCut](Best& acc, const BipartitionSample& s) {
    if (s.cut <= maxCut) acc.offer(s, vol);
  });
  Best total;
  for (const Best& p : parts) total.merge(p);
  return total;
}

}  // namespace

CutReport mcutBrute(const Graph& g) {
  requireMcutInput(g);
  return reportOf(g, sweepMin(g, std::numeric_limits<std::int64_t>::max()), CutMethod::BruteForce);
}

CutReport mcutPruned(const Graph& g, const VertexSubset& seed) {
  requireMcutInput(g);
  if (seed.members == 0 || seed.members == g.fullMask() || (seed.members & ~g.fullMask()))
    throw DomainError("pruning seed must be a nonempty proper subset");
  const VertexSubset s = VertexSubset::of(g, seed.members);
  const std::int64_t vol = g.volume();
  const i128 diff = s.volume - (vol - s.volume);
  if (diff * diff * (s.cutWeight + 1) > static_cast<i128>(vol) * vol)
    throw PreconditionError("seed is not volume-balanced enough for cut-weight pruning; use brute force");
  CutReport r = reportOf(g, sweepMin(g, s.cutWeight), CutMethod::Pruned);
  r.restriction = s.cutWeight;
  r.branch = "cut<=" + std::to_string(s.cutWeight);
  return r;
}

std::map<std::int64_t, CutReport> mcutByCutWeight(const Graph& g) {
  requireMcutInput(g);
  const std::int64_t vol = g.volume();
  using Table = std::map<std::int64_t, Best>;
  auto parts = sweepBipartitions(g, Table{}, [vol](Table& acc, const BipartitionSample& s) { acc[s.cut].offer(s, vol); });
  Table total;
  for (const Table& p : parts)
    for (const auto& [j, b] : p) total[j].merge(b);
  std::map<std::int64_t, CutReport> out;
  for (const auto& [j, b] : total) {
    if (!b.found) continue;
    CutReport r = reportOf(g, b, CutMethod::BruteForce);
    r.branch = "cut=" + std::to_string(j);
    out.emplace(j, std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace {

struct Formula {
  Rational value;
  std::string branch;
};

Rational q(std::int64_t a, std::int64_t b) { return Rational(a, b); }

Formula cycleFormula(int n) {
  return {q(n, static_cast<std::int64_t>(n / 2) * ((n + 1) / 2)), n % 2 == 0 ? "n even" : "n odd"};
}

Formula pathFormula(int n) {
  const std::int64_t a = n / 2, b = (n + 1) / 2;
  return {q(2 * n - 2, 4 * a * b - 2 * n + 1), n % 2 == 0 ? "n even" : "n odd"};
}

Formula cycleCrossPathFormula(int m, int n) {
  if (2 * n > m) {
    const std::int64_t a = n / 2, b = (n + 1) / 2;
    return {q(2 * (2 * n - 1), 16 * a * b - 4 * n + 1), "2n>m"};
  }
  const std::int64_t a = m / 2, b = (m + 1) / 2;
  return {q(static_cast<std::int64_t>(n) * m, (2 * n - 1) * a * b), "2n<=m"};
}

// Values reached by balanced or nearly balanced cut-2 ladder splits, with
// S = 3k + 2n.
struct LadderValues {
  Rational a, b, c, d;
  explicit LadderValues(std::int64_t S)
      : a(q(4, S - 2)),
        b(q(4 * (S - 2), (S - 5) * (S + 1))),
        c(q(4 * (S - 2), (S - 4) * S)),
        d(q(4 * (S - 2), (S - 3) * (S - 1))) {}
};

Formula roachFormula(std::int64_t n, std::int64_t k) {
  const std::int64_t S = 3 * k + 2 * n;
  const LadderValues v(S);
  const Rational c2 = q(6 * k + 4 * n - 4, (2 * n - 1) * (6 * k + 2 * n - 3));
  if (n == 1 && k == 2) return {q(2, 3), "n=1&k=2"};
  if (k == 3 && n <= 2) return {v.d, "k=3&n<=2"};
  if (k <= 3) return {c2, "k<=3"};

  // Thresholds K1..K4 contain square roots; with L = 2n - 2 + 3k each test
  // n < K_i is equivalent to an integer inequality on L^2.
  const std::int64_t L = 2 * n - 2 + 3 * k;
  const std::int64_t L2 = L * L;
  const bool n3 = n % 3 == 0, k2 = k % 2 == 0;
  if (n3 && k2 && L2 < 2 * (3 * k - 1) * (3 * k - 1)) return {v.a, "*1&k>=4&n<K1"};
  if (n3 && !k2 && L2 < 18 * k * k - 12 * k - 7) return {v.b, "*4&k>=4&n<K4"};
  if (!n3 && k2 && L2 < 2 * (9 * k * k - 6 * k - 1)) return {v.c, "*3&k>=4&n<K3"};
  if (!n3 && !k2 && L2 < 18 * k * k - 12 * k + 1) return {v.d, "*2&k>=4&n<K2"};
  return {c2, "k>=4&n>=K"};
}

bool weightedPathInDomain(int n, int k) { return n >= 1 && k >= 1 && 3 * k >= 11 - 2 * n; }

Formula weightedPathFormula(std::int64_t n, std::int64_t k) {
  const std::int64_t S = 3 * k + 2 * n;
  const LadderValues v(S);
  const bool n3 = n % 3 == 0, k2 = k % 2 == 0;
  // R1 = 2n/3, R2 = (2n+3)/3, R3 = (2n+6)/3, compared after scaling by 3.
  if (3 * k > 2 * n + 6) {
    if (n3 && k2) return {v.a, "k>R3&3|n&2|k"};
    if (n3) return {v.b, "k>R3&3|n&2!|k"};
    if (k2) return {v.c, "k>R3&3!|n&2|k"};
    return {v.d, "k>R3&3!|n&2!|k"};
  }
  if (3 * k <= 2 * n) {
    if (S % 4 == 0) return {v.a, "k<=R1&o1"};
    if (k2) return {v.c, "k<=R1&!o1&2|k"};
    return {v.d, "k<=R1&!o1&2!|k"};
  }
  if (3 * k <= 2 * n + 3) return {q(3 * k + 2 * n - 2, (3 * k - 1) * (2 * n - 1)), "R1<k<=R2"};
  return {q(2 - 3 * k - 2 * n, 8 - 6 * k + 8 * n - 6 * k * n), "R2<k<=R3"};
}

Formula lollipopFormula(std::int64_t n, std::int64_t m) {
  const std::int64_t s = n * n - n + 2 * m;
  if (m == 1) return {q(n * n - n + 2, (n + 1) * (n - 1)), "m=1"};
  if (2 * m <= n * n - n + 4) return {q(s, (2 * m - 1) * (n * n - n + 1)), "2<=m<=(n^2-n+4)/2"};
  if ((s + 2) % 4 == 0) return {q(4, s), "m>(n^2-n+4)/2&o1"};
  return {q(4 * s, (n * (n - 1) + 2 * (m - 1)) * (n * (n - 1) + 2 * (m + 1))), "m>(n^2-n+4)/2&o2"};
}

Mask range(int lo, int hi) {  // vertices lo..hi-1
  Mask m = 0;
  for (int i = lo; i < hi; ++i) m |= Mask{1} << i;
  return m;
}

// The optimal subsets of every family formula are path prefixes, ladder splits, or
// similar structured sets; return the first candidate that attains the value.
std::vector<Mask> witnessCandidates(const FamilySpec& s) {
  std::vector<Mask> c;
  switch (s.family) {
    case Family::Path:
    case Family::Cycle:
    case Family::WeightedPath:
      for (int a = 1; a < s.vertexCount(); ++a) c.push_back(range(0, a));
      break;
    case Family::Complete:
      c.push_back(1);
      break;
    case Family::DoubleTree:
      c.push_back(range(0, s.vertexCount() / 2));
      break;
    case Family::CycleCrossPath: {
      // Vertex (i, j) of C_m x P_n is i * n + j.
      Mask layers = 0, arc = 0;
      for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.n / 2; ++j) layers |= Mask{1} << (i * s.n + j);
      for (int i = 0; i < s.m / 2; ++i)
        for (int j = 0; j < s.n; ++j) arc |= Mask{1} << (i * s.n + j);
      if (layers) c.push_back(layers);
      c.push_back(arc);
      break;
    }
    case Family::Roach: {
      const int len = s.n + s.k;
      Mask top = 0;
      for (int a = 1; a < len; ++a) {
        const Mask row = range(0, a);
        c.push_back(row | (row << len));
      }
      c.push_back(range(0, s.n));
      for (int i = 1; i <= len; ++i) top |= Mask{1} << roachX(s, i);
      c.push_back(top);
      break;
    }
    case Family::Lollipop:
      for (int a = 1; a <= s.m; ++a) c.push_back(range(0, a));
      for (int a = 1; a <= s.m; ++a) c.push_back(range(0, a) | (Mask{1} << s.m));
      break;
    case Family::Tree:
      break;
  }
  return c;
}

Formula evaluate(const FamilySpec& s) {
  switch (s.family) {
    case Family::Path:
      if (s.n < 2) break;
      return pathFormula(s.n);
    case Family::Cycle:
      return cycleFormula(s.n);
    case Family::Complete:
      if (s.n < 2) break;
      return {q(s.n, s.n - 1), "complete"};
    case Family::DoubleTree:
      return {q(2, (std::int64_t{1} << (s.n + 1)) - 3), "double tree"};
    case Family::CycleCrossPath:
      if (s.n < 2) break;
      return cycleCrossPathFormula(s.m, s.n);
    case Family::Roach:
      return roachFormula(s.n, s.k);
    case Family::WeightedPath:
      if (!weightedPathInDomain(s.n, s.k)) break;
      return weightedPathFormula(s.n, s.k);
    case Family::Lollipop:
      return lollipopFormula(s.n, s.m);
    case Family::Tree:
      throw DomainError("no closed-form Mcut for tree; use brute force");
  }
  throw DomainError(s.label() + " is outside the closed-form Mcut domain; use brute force");
}

}  // namespace

bool hasMcutFormula(const FamilySpec& spec) {
  try {
    spec.validateParameters();
    evaluate(spec);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

CutReport mcutFormula(const FamilySpec& spec) {
  spec.validateParameters();
  Formula f = evaluate(spec);
  CutReport r;
  r.value = f.value;
  r.branch = std::move(f.branch);
  r.method = CutMethod::Formula;
  r.family = spec;
  if (spec.vertexCount() > Graph::kMaxVertices) return r;
  const Graph g = generate(spec);
  for (Mask m : witnessCandidates(spec)) {
    if (m == 0 || m == g.fullMask()) continue;
    if (ncut(g, m) == r.value) {
      // Canonical side contains vertex 0.
      const Mask canon = (m & 1U) ? m : (g.fullMask() & ~m);
      r.witness = VertexSubset::of(g, canon);
      r.cutWeight = r.witness->cutWeight;
      break;
    }
  }
  return r;
}

std::vector<SweepRow> mcutRegionSweep(Family family, int nLo, int nHi, int kLo, int kHi) {
  if (family != Family::Roach && family != Family::WeightedPath)
    throw UnsupportedError("region sweeps cover roach and weightedpath only");
  std::vector<SweepRow> rows;
  for (int n = nLo; n <= nHi; ++n)
    for (int k = kLo; k <= kHi; ++k) {
      const FamilySpec s = family == Family::Roach ? FamilySpec::roach(n, k) : FamilySpec::weightedPath(n, k);
      if (!hasMcutFormula(s)) continue;
      const Formula f = evaluate(s);
      rows.push_back({n, k, f.branch, f.value});
    }
  return rows;
}

// ---------------------------------------------------------------------------
// Expansion constants.

namespace {

// Minimum of num/den over candidates, fractions compared by cross
// multiplication with nonnegative parts and den > 0.
struct MinFrac {
  bool found = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
  void offer(std::int64_t n, std::int64_t d) {
    if (d <= 0) return;
    if (!found || static_cast<i128>(n) * den < static_cast<i128>(num) * d) *this = {true, n, d};
  }
  void merge(const MinFrac& o) {
    if (o.found) offer(o.num, o.den);
  }
};

template <class Visit>
Rational minOverSweep(const Graph& g, const char* what, Visit visit) {
  requireExhaustive(g, what);
  if (g.order() < 2) throw DomainError(std::string(what) + " needs at least 2 vertices");
  if (!g.connected()) throw ConnectivityError(std::string(what) + " needs a connected graph");
  auto parts = sweepBipartitions(g, MinFrac{}, visit);
  MinFrac total;
  for (const MinFrac& p : parts) total.merge(p);
  return Rational(total.num, total.den);
}

}  // namespace

Rational isoperimetric(const Graph& g) {
  const int n = g.order();
  return minOverSweep(g, "isoperimetric number", [n](MinFrac& acc, const BipartitionSample& s) {
    const int a = std::popcount(s.mask);
    if (2 * a <= n) acc.offer(s.cut, a);
    if (2 * (n - a) <= n) acc.offer(s.cut, n - a);
  });
}

Rational cheegerEdge(const Graph& g) {
  const std::int64_t vol = g.volume();
  return minOverSweep(g, "Cheeger constant", [vol](MinFrac& acc, const BipartitionSample& s) {
    acc.offer(s.cut, std::min(s.volume, vol - s.volume));
  });
}

Rational cheegerVertex(const Graph& g) {
  const std::int64_t vol = g.volume();
  const int n = g.order();
  const Mask full = g.fullMask();
  std::vector<Mask> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = g.neighborMask(v);
  return minOverSweep(g, "vertex expansion", [&, vol, full](MinFrac& acc, const BipartitionSample& s) {
    const Mask a = s.mask, b = full & ~a;
    Mask outA = 0, outB = 0;
    for (Mask m = a; m; m &= m - 1) outA |= nbr[std::countr_zero(m)];
    for (Mask m = b; m; m &= m - 1) outB |= nbr[std::countr_zero(m)];
    const std::int64_t den = std::min(s.volume, vol - s.volume);
    acc.offer(volume(g, outA & b), den);
    acc.offer(volume(g, outB & a), den);
  });
}

}  // namespace speclab
