// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/families.hpp"

#include <array>
#include <utility>

#include "speclab/errors.hpp"

namespace speclab {

namespace {

[[noreturn]] void bad(const FamilySpec& s, const std::string& bound) {
  throw DomainError(std::string(familyName(s.family)) + ": parameter violates " + bound);
}

std::vector<Edge> pathEdges(int first, int count) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < count; ++i) e.push_back({first + i, first + i + 1, 1});
  return e;
}

std::vector<Edge> treeEdges(int offset, int depth) {
  // Heap order: the string w has children w0, w1 at 2i+1, 2i+2.
  std::vector<Edge> e;
  const int size = (1 << depth) - 1;
  for (int c = 1; c < size; ++c) e.push_back({offset + (c - 1) / 2, offset + c, 1});
  return e;
}

void append(std::vector<Edge>& dst, const std::vector<Edge>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

void FamilySpec::validateParameters() const {
  switch (family) {
    case Family::Path:
      if (n < 1) bad(*this, "n >= 1");
      break;
    case Family::Cycle:
      if (n < 3) bad(*this, "n >= 3");
      break;
    case Family::Complete:
      if (n < 1) bad(*this, "n >= 1");
      break;
    case Family::Tree:
      if (n < 1) bad(*this, "depth >= 1");
      break;
    case Family::DoubleTree:
      if (n < 1) bad(*this, "depth >= 1");
      break;
    case Family::CycleCrossPath:
      if (m < 3) bad(*this, "m >= 3");
      if (n < 1) bad(*this, "n >= 1");
      break;
    case Family::Roach:
      if (n < 1) bad(*this, "n >= 1");
      if (k < 2) bad(*this, "k >= 2");
      break;
    case Family::WeightedPath:
      if (n < 1) bad(*this, "n >= 1");
      if (k < 1) bad(*this, "k >= 1");
      break;
    case Family::Lollipop:
      if (n < 3) bad(*this, "n >= 3");
      if (m < 1) bad(*this, "m >= 1");
      break;
  }
  // Trees keep vertexCount inside int.
  if ((family == Family::Tree || family == Family::DoubleTree) && n > 29) bad(*this, "depth <= 29");
  if (n > kMaxFormulaParameter || k > kMaxFormulaParameter || m > kMaxFormulaParameter)
    bad(*this, "parameters at most " + std::to_string(kMaxFormulaParameter));
}

void FamilySpec::validate() const {
  validateParameters();
  if (n > Graph::kMaxVertices || k > Graph::kMaxVertices || m > Graph::kMaxVertices ||
      vertexCount() > Graph::kMaxVertices)
    bad(*this, "at most " + std::to_string(Graph::kMaxVertices) + " vertices");
}

int FamilySpec::vertexCount() const {
  switch (family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Complete:
      return n;
    case Family::Tree:
      return (1 << n) - 1;
    case Family::DoubleTree:
      return (1 << (n + 1)) - 2;
    case Family::CycleCrossPath:
      return m * n;
    case Family::Roach:
      return 2 * (n + k);
    case Family::WeightedPath:
      return n + k;
    case Family::Lollipop:
      return n + m;
  }
  return 0;
}

std::string FamilySpec::label() const {
  std::string base(familyName(family));
  switch (family) {
    case Family::CycleCrossPath:
      return base + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::Roach:
    case Family::WeightedPath:
      return base + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Family::Lollipop:
      return base + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    default:
      return base + "(" + std::to_string(n) + ")";
  }
}

std::string_view familyName(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Tree: return "tree";
    case Family::DoubleTree: return "doubletree";
    case Family::CycleCrossPath: return "cyclecrosspath";
    case Family::Roach: return "roach";
    case Family::WeightedPath: return "weightedpath";
    case Family::Lollipop: return "lollipop";
  }
  return "unknown";
}

std::optional<Family> parseFamily(std::string_view name) {
  static const std::array<std::pair<std::string_view, Family>, 13> table{{
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"tree", Family::Tree},
      {"doubletree", Family::DoubleTree},
      {"double-tree", Family::DoubleTree},
      {"cyclecrosspath", Family::CycleCrossPath},
      {"cycle-cross-path", Family::CycleCrossPath},
      {"roach", Family::Roach},
      {"weightedpath", Family::WeightedPath},
      {"weighted-path", Family::WeightedPath},
      {"lollipop", Family::Lollipop},
      {"lp", Family::Lollipop},
  }};
  for (const auto& [key, fam] : table)
    if (key == name) return fam;
  return std::nullopt;
}

Graph generate(const FamilySpec& s) {
  s.validate();
  const std::string name = s.label();
  switch (s.family) {
    case Family::Path:
      return Graph(s.n, pathEdges(0, s.n), {}, name);
    case Family::Cycle: {
      auto e = pathEdges(0, s.n);
      e.push_back({s.n - 1, 0, 1});
      return Graph(s.n, std::move(e), {}, name);
    }
    case Family::Complete: {
      std::vector<Edge> e;
      for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) e.push_back({i, j, 1});
      return Graph(s.n, std::move(e), {}, name);
    }
    case Family::Tree:
      return Graph(s.vertexCount(), treeEdges(0, s.n), {}, name);
    case Family::DoubleTree: {
      const int t = (1 << s.n) - 1;
      auto e = treeEdges(0, s.n);
      append(e, treeEdges(t, s.n));
      e.push_back({0, t, 1});
      return Graph(2 * t, std::move(e), {}, name);
    }
    case Family::CycleCrossPath:
      return cartesianProduct(generate(FamilySpec::cycle(s.m)), generate(FamilySpec::path(s.n))).renamed(name);
    case Family::Roach: {
      const int len = s.n + s.k;
      auto e = pathEdges(0, len);
      append(e, pathEdges(len, len));
      for (int i = s.n + 1; i <= len; ++i) e.push_back({roachX(s, i), roachY(s, i), 1});
      return Graph(2 * len, std::move(e), {}, name);
    }
    case Family::WeightedPath: {
      std::vector<Loop> loops;
      for (int i = s.n; i < s.n + s.k; ++i) loops.push_back({i, 1});
      return Graph(s.n + s.k, pathEdges(0, s.n + s.k), std::move(loops), name);
    }
    case Family::Lollipop: {
      // x_1..x_m are 0..m-1, y_1..y_n are m..m+n-1.
      auto e = pathEdges(0, s.m);
      for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) e.push_back({s.m + i, s.m + j, 1});
      e.push_back({s.m - 1, s.m, 1});
      return Graph(s.n + s.m, std::move(e), {}, name);
    }
  }
  throw DomainError("unknown family");
}

std::optional<std::vector<int>> builtinInvolution(const FamilySpec& s) {
  s.validate();
  const int n = s.vertexCount();
  std::vector<int> perm(n);
  switch (s.family) {
    case Family::Roach: {
      const int half = s.n + s.k;
      for (int i = 0; i < half; ++i) {
        perm[i] = i + half;
        perm[i + half] = i;
      }
      return perm;
    }
    case Family::DoubleTree: {
      const int t = n / 2;
      for (int i = 0; i < t; ++i) {
        perm[i] = i + t;
        perm[i + t] = i;
      }
      return perm;
    }
    case Family::Path:
      for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
      return perm;
    default:
      return std::nullopt;
  }
}

Graph exampleGraph7() {
  const std::array<std::pair<int, int>, 10> pairs{{{1, 2}, {2, 3}, {3, 1}, {3, 4}, {1, 4},
                                                   {1, 5}, {3, 6}, {6, 5}, {7, 5}, {7, 6}}};
  std::vector<Edge> e;
  for (auto [u, v] : pairs) e.push_back({u - 1, v - 1, 1});
  return Graph(7, std::move(e), {}, "example7");
}

}  // namespace speclab
