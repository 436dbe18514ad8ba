#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/errors.hpp"
#include "speclab/families.hpp"
#include "speclab/graph.hpp"

using namespace speclab;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(6, -8) == Rational(-3, 4));
  CHECK(Rational(6, -8).denominator() == "4");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational(4, 33) < Rational(4, 11));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("family generators") {
  SUBCASE("cycle") {
    const Graph c4 = generate(FamilySpec::cycle(4));
    CHECK(c4.order() == 4);
    CHECK(c4.edges().size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(c4.volume() == 8);
  }
  SUBCASE("roach volume") {
    const Graph r = generate(FamilySpec::roach(5, 5));
    CHECK(r.order() == 20);
    CHECK(r.volume() == 46);
    for (int n = 1; n <= 6; ++n)
      for (int k = 2; k <= 6; ++k) CHECK(generate(FamilySpec::roach(n, k)).volume() == 6 * k + 4 * n - 4);
  }
  SUBCASE("double tree sizes") {
    const Graph d3 = generate(FamilySpec::doubleTree(3));
    CHECK(d3.order() == 14);
    CHECK(d3.volume() == 26);
    for (int d = 2; d <= 5; ++d) {
      const Graph g = generate(FamilySpec::doubleTree(d));
      CHECK(g.order() == (1 << (d + 1)) - 2);
      CHECK(g.volume() == (1 << (d + 2)) - 6);
      CHECK(g.connected());
    }
    CHECK_THROWS_AS(generate(FamilySpec::doubleTree(6)), DomainError);
  }
  SUBCASE("weighted path degrees") {
    const Graph p = generate(FamilySpec::weightedPath(4, 3));
    const std::vector<std::int64_t> want{1, 2, 2, 2, 3, 3, 2};
    for (int v = 0; v < 7; ++v) CHECK(p.degree(v) == want[v]);
  }
  SUBCASE("lollipop") {
    const Graph g = generate(FamilySpec::lollipop(4, 3));
    CHECK(g.order() == 7);
    CHECK(g.edges().size() == 2 + 6 + 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(3) == 4);
  }
  SUBCASE("domain errors name the bound") {
    CHECK_THROWS_WITH_AS(generate(FamilySpec::cycle(2)), doctest::Contains("n >= 3"), DomainError);
    CHECK_THROWS_WITH_AS(generate(FamilySpec::roach(1, 1)), doctest::Contains("k >= 2"), DomainError);
    CHECK_THROWS_AS(generate(FamilySpec::lollipop(2, 1)), DomainError);
    CHECK_THROWS_AS(generate(FamilySpec::weightedPath(0, 1)), DomainError);
    CHECK_THROWS_AS(generate(FamilySpec::complete(65)), DomainError);
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1}, {1, 0, 2}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 0, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(0, {}), DomainError);
}

TEST_CASE("cartesian product") {
  const Graph p2 = generate(FamilySpec::path(2));
  const Graph sq = cartesianProduct(p2, p2);
  CHECK(sq.order() == 4);
  CHECK(sq.edges().size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(sq.degree(v) == 2);

  const Graph c3p2 = cartesianProduct(generate(FamilySpec::cycle(3)), p2);
  CHECK(c3p2.order() == 6);
  CHECK(c3p2.volume() == 18);
  for (int v = 0; v < 6; ++v) CHECK(c3p2.degree(v) == 3);

  const Graph c4p3 = generate(FamilySpec::cycleCrossPath(4, 3));
  CHECK(c4p3.order() == 12);
  CHECK(c4p3.edges().size() == 20);

  CHECK_THROWS_AS(cartesianProduct(generate(FamilySpec::weightedPath(2, 1)), p2), UnsupportedError);

  // Degree multisets agree in both orders.
  for (auto [a, b] : std::vector<std::pair<FamilySpec, FamilySpec>>{
           {FamilySpec::cycle(5), FamilySpec::path(3)},
           {FamilySpec::complete(4), FamilySpec::path(2)},
           {FamilySpec::cycle(3), FamilySpec::roach(1, 2)}}) {
    const Graph g = generate(a), h = generate(b);
    const Graph gh = cartesianProduct(g, h), hg = cartesianProduct(h, g);
    std::vector<std::int64_t> d1, d2;
    for (int v = 0; v < gh.order(); ++v) {
      d1.push_back(gh.degree(v));
      d2.push_back(hg.degree(v));
    }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    CHECK(d1 == d2);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < h.order(); ++v) CHECK(gh.degree(u * h.order() + v) == g.degree(u) + h.degree(v));
  }
}

TEST_CASE("cut, volume and ncut") {
  const Graph example = exampleGraph7();
  CHECK(example.volume() == 20);
  const Mask a = maskOf({0, 1, 2, 3});
  CHECK(cut(example, a) == 2);
  CHECK(volume(example, a) == 12);
  CHECK(volume(example, example.fullMask() & ~a) == 8);
  CHECK(ncut(example, a) == Rational(5, 12));

  const Graph c4 = generate(FamilySpec::cycle(4));
  CHECK(ncut(c4, 1) == Rational(4, 3));
  CHECK_THROWS_AS(ncut(c4, 0), DomainError);
  CHECK_THROWS_AS(ncut(c4, c4.fullMask()), DomainError);

  const VertexSubset s = VertexSubset::fromVertices(example, {0, 1, 2, 3});
  CHECK(s.cutWeight == 2);
  CHECK(s.complement(example).volume == 8);
  CHECK(s.vertices() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("volume split and normalized-cut identity on random subsets") {
  std::mt19937_64 rng(7);
  const std::vector<FamilySpec> specs{FamilySpec::roach(3, 4), FamilySpec::weightedPath(4, 3),
                                      FamilySpec::lollipop(5, 3), FamilySpec::cycleCrossPath(4, 3),
                                      FamilySpec::doubleTree(3), FamilySpec::complete(6)};
  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    const std::int64_t vol = g.volume();
    std::uniform_int_distribution<Mask> pick(1, g.fullMask() - 1);
    for (int t = 0; t < 40; ++t) {
      const Mask a = pick(rng);
      const std::int64_t va = volume(g, a), vb = volume(g, g.fullMask() & ~a), j = cut(g, a);
      CHECK(va + vb == vol);
      const Rational nc = ncut(g, a);
      CHECK(nc > Rational(0));
      CHECK(nc <= Rational(j) * Rational(2, g.minDegree()));
      const Rational identity = Rational(4 * j * vol) / Rational(vol * vol - (va - vb) * (va - vb));
      CHECK(nc == identity);
    }
  }
}

TEST_CASE("edge connectivity") {
  CHECK(edgeConnectivity(generate(FamilySpec::cycle(6))) == 2);
  CHECK(edgeConnectivity(generate(FamilySpec::complete(5))) == 4);
  CHECK(edgeConnectivity(generate(FamilySpec::cycleCrossPath(4, 3))) == 3);
  CHECK(edgeConnectivity(Graph(4, {{0, 1, 1}, {2, 3, 1}})) == 0);
  CHECK_THROWS_AS(edgeConnectivity(generate(FamilySpec::path(25))), SizeError);
}

TEST_CASE("distance and diameter") {
  const Graph p5 = generate(FamilySpec::path(5));
  CHECK(distance(p5, 0, 4) == 4);
  CHECK(diameter(p5) == 4);
  CHECK(diameter(generate(FamilySpec::complete(5))) == 1);
  CHECK(diameter(generate(FamilySpec::cycle(6))) == 3);
  CHECK_THROWS_AS(distance(Graph(3, {{0, 1, 1}}), 0, 2), ConnectivityError);
}

TEST_CASE("automorphisms") {
  const Graph p6 = generate(FamilySpec::path(6));
  CHECK(isAutomorphism(p6, {5, 4, 3, 2, 1, 0}));
  const FamilySpec r = FamilySpec::roach(3, 4);
  CHECK(isAutomorphism(generate(r), *builtinInvolution(r)));
  CHECK(isAutomorphism(generate(FamilySpec::doubleTree(3)), *builtinInvolution(FamilySpec::doubleTree(3))));
  CHECK_FALSE(isAutomorphism(generate(FamilySpec::path(4)), {1, 0, 2, 3}));
  CHECK_THROWS_AS(isAutomorphism(p6, {0, 0, 1, 2, 3, 4}), DomainError);
  CHECK_THROWS_AS(isAutomorphism(p6, {0, 1}), DomainError);
}

TEST_CASE("bipartition sweep visits every canonical subset once") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 10; ++n) {
    const Graph g = oracle::randomConnected(rng, n, 0.4, 3, true);
    std::vector<Mask> seen;
    auto parts = sweepBipartitions(g, std::vector<BipartitionSample>{},
                                   [](std::vector<BipartitionSample>& acc, const BipartitionSample& s) { acc.push_back(s); });
    for (const auto& p : parts)
      for (const auto& s : p) {
        CHECK((s.mask & 1U) == 1U);
        CHECK(s.volume == volume(g, s.mask));
        CHECK(s.cut == cut(g, s.mask));
        seen.push_back(s.mask);
      }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(seen.size() == (std::size_t{1} << (n - 1)) - 1);
  }
}

TEST_CASE("parallel sweep matches a single worker") {
  const Graph g = generate(FamilySpec::roach(4, 4));
  auto run = [&] {
    auto parts = sweepBipartitions(g, std::int64_t{0}, [](std::int64_t& acc, const BipartitionSample& s) {
      acc += s.cut * 3 + s.volume;
    });
    std::int64_t total = 0;
    for (auto p : parts) total += p;
    return total;
  };
  setenv("SPECLAB_THREADS", "1", 1);
  const auto one = run();
  setenv("SPECLAB_THREADS", "4", 1);
  const auto four = run();
  unsetenv("SPECLAB_THREADS");
  CHECK(one == four);
}
