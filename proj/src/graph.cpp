// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "speclab/enumerate.hpp"
#include "speclab/errors.hpp"

namespace speclab {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Loop> loops, std::string name)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)), name_(std::move(name)) {
  if (n_ < 1 || n_ > kMaxVertices)
    throw DomainError("graph order " + std::to_string(n_) + " outside 1.." +
                      std::to_string(kMaxVertices));
  degree_.assign(n_, 0);
  loop_.assign(n_, 0);
  adj_.assign(n_, {});
  nbrMask_.assign(n_, 0);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw DomainError("self-loop listed as an edge; use loops");
    if (e.w <= 0) throw DomainError("edge weight must be a positive integer");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw DomainError("duplicate edge (" + std::to_string(e.u + 1) + "," +
                        std::to_string(e.v + 1) + ")");
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
    nbrMask_[e.u] |= Mask{1} << e.v;
    nbrMask_[e.v] |= Mask{1} << e.u;
  }
  for (const Loop& l : loops_) {
    if (l.v < 0 || l.v >= n_) throw DomainError("loop vertex out of range");
    if (l.w <= 0) throw DomainError("loop weight must be a positive integer");
    if (loop_[l.v] != 0) throw DomainError("duplicate loop on vertex " + std::to_string(l.v + 1));
    loop_[l.v] = l.w;
    degree_[l.v] += l.w;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (auto d : degree_) volume_ += d;
}

std::int64_t Graph::maxDegree() const { return *std::max_element(degree_.begin(), degree_.end()); }
std::int64_t Graph::minDegree() const { return *std::min_element(degree_.begin(), degree_.end()); }

std::int64_t Graph::weight(int i, int j) const {
  if (i == j) return loop_[i];
  for (const auto& [u, w] : adj_[i])
    if (u == j) return w;
  return 0;
}

Mask Graph::fullMask() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

bool Graph::connected() const {
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nbrMask_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == fullMask();
}

Graph Graph::renamed(std::string name) const { return Graph(n_, edges_, loops_, std::move(name)); }

VertexSubset VertexSubset::of(const Graph& g, Mask members) {
  if (members & ~g.fullMask()) throw DomainError("subset has vertices outside the graph");
  return {members, speclab::volume(g, members), speclab::cut(g, members)};
}

VertexSubset VertexSubset::fromVertices(const Graph& g, const std::vector<int>& zeroBased) {
  for (int v : zeroBased)
    if (v < 0 || v >= g.order()) throw DomainError("subset vertex out of range");
  return of(g, maskOf(zeroBased));
}

int VertexSubset::size() const { return std::popcount(members); }

std::vector<int> VertexSubset::vertices() const {
  std::vector<int> out;
  for (Mask m = members; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexSubset VertexSubset::complement(const Graph& g) const {
  return {g.fullMask() & ~members, g.volume() - volume, cutWeight};
}

Mask maskOf(const std::vector<int>& zeroBased) {
  Mask m = 0;
  for (int v : zeroBased) {
    if (v < 0 || v >= Graph::kMaxVertices) throw DomainError("vertex index out of range");
    m |= Mask{1} << v;
  }
  return m;
}

std::int64_t cut(const Graph& g, Mask a) {
  std::int64_t c = 0;
  for (const Edge& e : g.edges())
    if (((a >> e.u) ^ (a >> e.v)) & 1U) c += e.w;
  return c;
}

std::int64_t volume(const Graph& g, Mask a) {
  std::int64_t v = 0;
  for (Mask m = a; m; m &= m - 1) v += g.degree(std::countr_zero(m));
  return v;
}

Rational ncut(const Graph& g, Mask a) {
  if (a == 0 || (a & g.fullMask()) == g.fullMask())
    throw DomainError("ncut needs a nonempty proper subset");
  if (a & ~g.fullMask()) throw DomainError("subset has vertices outside the graph");
  const std::int64_t va = volume(g, a);
  const std::int64_t vb = g.volume() - va;
  if (va == 0 || vb == 0) throw DomainError("ncut undefined: a side has zero volume");
  return Rational(cut(g, a)) * (Rational(1, va) + Rational(1, vb));
}

Rational ncut(const Graph& g, const VertexSubset& a) { return ncut(g, a.members); }

std::int64_t edgeConnectivity(const Graph& g) {
  requireExhaustive(g, "edgeConnectivity");
  if (g.order() < 2) return 0;
  if (!g.connected()) return 0;
  auto parts = sweepBipartitions(g, INT64_MAX, [](std::int64_t& best, const BipartitionSample& s) {
    if (s.cut < best) best = s.cut;
  });
  return *std::min_element(parts.begin(), parts.end());
}

namespace {

std::vector<int> bfs(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (const auto& [y, w] : g.neighbors(x)) {
      (void)w;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

int distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) throw DomainError("vertex out of range");
  int d = bfs(g, u)[v];
  if (d < 0)
    throw ConnectivityError("vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1) +
                            " are not connected");
  return d;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s)
    for (int d : bfs(g, s)) {
      if (d < 0) throw ConnectivityError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  return best;
}

void requireBijection(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw DomainError("permutation is not a bijection");
    hit[p] = true;
  }
}

bool isAutomorphism(const Graph& g, const std::vector<int>& perm) {
  requireBijection(perm, g.order());
  for (int i = 0; i < g.order(); ++i)
    if (g.loopWeight(i) != g.loopWeight(perm[i])) return false;
  for (const Edge& e : g.edges())
    if (g.weight(perm[e.u], perm[e.v]) != e.w) return false;
  // Same edge count and every edge maps onto an equal-weight edge, so the
  // map is onto the edge set as well.
  return true;
}

Graph cartesianProduct(const Graph& g, const Graph& h) {
  if (g.hasLoops() || h.hasLoops()) throw UnsupportedError("cartesianProduct needs loop-free inputs");
  const int ng = g.order(), nh = h.order();
  if (ng * nh > Graph::kMaxVertices)
    throw DomainError("cartesian product exceeds " + std::to_string(Graph::kMaxVertices) + " vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < ng; ++u)
    for (const Edge& e : h.edges()) edges.push_back({u * nh + e.u, u * nh + e.v, e.w});
  for (const Edge& e : g.edges())
    for (int v = 0; v < nh; ++v) edges.push_back({e.u * nh + v, e.v * nh + v, e.w});
  return Graph(ng * nh, std::move(edges), {}, g.name() + " x " + h.name());
}

}  // namespace speclab
