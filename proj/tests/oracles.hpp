// Independent reference implementations used only by tests. Nothing here
// shares code with the library's enumeration or eigensolver.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "speclab/graph.hpp"
#include "speclab/rational.hpp"
#include "speclab/spectra.hpp"

namespace oracle {

// Minimum Ncut over every nonempty proper subset, each evaluated from
// scratch with exact rationals.
inline std::pair<speclab::Rational, std::uint64_t> naiveMcut(const speclab::Graph& g) {
  const int n = g.order();
  std::vector<std::int64_t> deg(n, 0);
  std::int64_t vol = 0;
  for (const auto& e : g.edges()) {
    deg[e.u] += e.w;
    deg[e.v] += e.w;
  }
  for (const auto& l : g.loops()) deg[l.v] += l.w;
  for (auto d : deg) vol += d;
  bool have = false;
  speclab::Rational best;
  std::uint64_t arg = 0;
  for (std::uint64_t a = 1; a + 1 < (std::uint64_t{1} << n); ++a) {
    std::int64_t va = 0, c = 0;
    for (int i = 0; i < n; ++i)
      if ((a >> i) & 1U) va += deg[i];
    for (const auto& e : g.edges())
      if (((a >> e.u) & 1U) != ((a >> e.v) & 1U)) c += e.w;
    if (va == 0 || va == vol) continue;
    const speclab::Rational v = speclab::Rational(c) * (speclab::Rational(1, va) + speclab::Rational(1, vol - va));
    if (!have || v < best) {
      have = true;
      best = v;
      arg = a;
    }
  }
  return {best, arg};
}

// Determinant by LU with partial pivoting (row-major input).
inline double denseDet(std::vector<double> a, int n) {
  double det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    if (a[p * n + c] == 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

// det(lambda I - M).
inline double charpolyAt(const speclab::SymmetricMatrix& m, double lambda) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = (i == j ? lambda : 0.0) - m(i, j);
  return denseDet(std::move(a), n);
}

inline std::vector<double> eigenvalues(const speclab::SymmetricMatrix& m) {
  const int n = m.order();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

// Connected random graph: a random spanning tree plus extra edges, weights
// in 1..maxW, optional unit loops.
inline speclab::Graph randomConnected(std::mt19937_64& rng, int n, double density, int maxW, bool loops = false) {
  std::vector<speclab::Edge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  std::uniform_int_distribution<int> w(1, maxW);
  std::uniform_real_distribution<double> u(0, 1);
  for (int v = 1; v < n; ++v) {
    const int p = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({p, v, w(rng)});
    has[p][v] = has[v][p] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!has[i][j] && u(rng) < density) edges.push_back({i, j, w(rng)});
  std::vector<speclab::Loop> ls;
  if (loops)
    for (int i = 0; i < n; ++i)
      if (u(rng) < 0.3) ls.push_back({i, 1});
  return speclab::Graph(n, std::move(edges), std::move(ls), "random");
}

}  // namespace oracle
