#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "speclab/charpoly.hpp"
#include "speclab/errors.hpp"
#include "speclab/families.hpp"
#include "speclab/spectra.hpp"

using namespace speclab;

namespace {

SymmetricMatrix nl(const FamilySpec& s) { return buildMatrix(generate(s), MatrixKind::NormalizedLaplacian); }

}  // namespace

TEST_CASE("Chebyshev values") {
  CHECK(chebyshevT(3, 0.5) == doctest::Approx(-1.0));
  CHECK(chebyshevT(3, 0.3) == doctest::Approx(4 * 0.027 - 0.9));
  CHECK(chebyshevU(3, 1.0) == doctest::Approx(3.0));
  CHECK(chebyshevU(3, 0.3) == doctest::Approx(4 * 0.09 - 1));
  for (int n = 0; n <= 20; ++n) {
    CHECK(chebyshevT(n, 1.0) == 1.0);
    CHECK(chebyshevU(n, 1.0) == n);
  }
  CHECK_THROWS_AS(chebyshev(-1, 0.0), DomainError);
}

TEST_CASE("Chebyshev trigonometric identities") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> th(1e-3, M_PI - 1e-3);
  for (int t = 0; t < 100; ++t) {
    const double theta = th(rng);
    for (int n = 0; n <= 30; ++n) {
      const auto c = chebyshev(n, std::cos(theta));
      CHECK(std::abs(c.t - std::cos(n * theta)) < 1e-11);
      CHECK(std::abs(c.u * std::sin(theta) - std::sin(n * theta)) < 1e-11);
    }
  }
}

TEST_CASE("tridiagonal determinants") {
  CHECK(tridiagDetA(2, 3.0, 2.0) == doctest::Approx(9.0 - 4.0));
  CHECK(tridiagDetA(0, 3.0, 2.0) == 1.0);
  CHECK(tridiagDetA(1, 3.0, 2.0) == 3.0);
  const double th = M_PI / 7;
  CHECK(std::abs(tridiagDetA(5, 2 * std::cos(th), 1.0) - std::sin(6 * th) / std::sin(th)) < 1e-12);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 20; ++t) {
    const double a = u(rng), b = u(rng);
    std::vector<double> m(36, 0.0);
    for (int i = 0; i < 6; ++i) {
      m[i * 6 + i] = a;
      if (i + 1 < 6) m[i * 6 + i + 1] = m[(i + 1) * 6 + i] = b;
    }
    CHECK(std::abs(tridiagDetA(6, a, b) - oracle::denseDet(m, 6)) < 1e-10);
  }
  for (int t = 0; t < 50; ++t) {
    const double b = u(rng) + (u(rng) > 0 ? 2.5 : -2.5);
    const double inside = std::uniform_real_distribution<double>(-1, 1)(rng) * 2 * b;
    const double outside = (1.0 + std::uniform_real_distribution<double>(0.01, 2)(rng)) * 2 * b;
    for (int n = 0; n <= 20; ++n) {
      CHECK(std::abs(tridiagDetA(n, inside, b) - tridiagDetAClosed(n, inside, b)) <
            1e-10 * std::max(1.0, std::pow(std::abs(b), n)));
      const double rec = tridiagDetA(n, outside, b), closed = tridiagDetAClosed(n, outside, b);
      CHECK(std::abs(rec - closed) <= 1e-9 * std::abs(closed));
    }
  }
  CHECK_THROWS_AS(tridiagDetAClosed(3, 1.0, 0.0), DomainError);
}

TEST_CASE("g and h in polynomial form") {
  // U_j(1) = j, so g_k(1) = 2k + 3 and h_k(1) = 3.
  for (int k = 1; k < 10; ++k) {
    CHECK(gFunction(k, 1.0) == doctest::Approx(2 * k + 3.0));
    CHECK(hFunction(k, 1.0) == doctest::Approx(3.0));
  }
  const double beta = 0.3;
  CHECK(std::abs(gFunction(4, std::cos(beta)) * std::sin(beta) -
                 (2 * std::sin(5 * beta) + std::sin(4 * beta) - std::sin(3 * beta))) < 1e-12);
  const double gamma = 1.1;
  CHECK(std::abs(hFunction(5, std::cos(gamma)) * std::sin(gamma) -
                 (2 * std::sin(6 * gamma) - std::sin(5 * gamma) - std::sin(4 * gamma))) < 1e-12);
  CHECK_THROWS_AS(gFunction(0, 0.5), DomainError);
}

TEST_CASE("trig substitution") {
  const auto s = TrigSubstitution::at(0.8);
  CHECK(s.cosAlpha == doctest::Approx(-0.2));
  CHECK(s.cosBeta == doctest::Approx(0.2));
  CHECK(s.cosGamma == doctest::Approx(-0.8));
  CHECK(1 + s.cosAlpha == doctest::Approx(2.0 / 3 * (1 + s.cosBeta)));
  CHECK(1 + s.cosAlpha == doctest::Approx(2.0 / 3 * (2 + s.cosGamma)));
}

TEST_CASE("p_{n,k} vanishes on the spectrum of the weighted path") {
  CHECK(std::abs(evalPnk(4, 3, 0.0)) < 1e-14);
  for (auto [n, k] : {std::pair{4, 3}, {3, 3}, {5, 4}, {6, 3}}) {
    for (double l : eigSym(nl(FamilySpec::weightedPath(n, k))).eigenvalues) CHECK(std::abs(evalPnk(n, k, l)) < 1e-8);
  }
  // Sign change across each eigenvalue of P_{6,3}.
  for (double l : eigSym(nl(FamilySpec::weightedPath(6, 3))).eigenvalues)
    CHECK(evalPnk(6, 3, l - 1e-4) * evalPnk(6, 3, l + 1e-4) < 0);
  CHECK_THROWS_AS(evalPnk(2, 3, 0.5), DomainError);
  CHECK_THROWS_AS(evalQnk(3, 2, 0.5), DomainError);
}

TEST_CASE("p * q factorises the roach characteristic polynomial") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1, 3);
  for (auto [n, k] : {std::pair{3, 3}, {4, 3}, {5, 4}, {5, 5}}) {
    const auto m = nl(FamilySpec::roach(n, k));
    for (double l : eigSym(m).eigenvalues) CHECK(std::abs(evalPnk(n, k, l) * evalQnk(n, k, l)) < 1e-8);
    const auto wp = nl(FamilySpec::weightedPath(n, k));
    for (int t = 0; t < 20; ++t) {
      const double l = u(rng);
      const double dr = oracle::charpolyAt(m, l), pq = evalPnk(n, k, l) * evalQnk(n, k, l);
      CHECK(std::abs(dr - pq) <= 1e-8 * std::abs(dr));
      const double dp = oracle::charpolyAt(wp, l), p = evalPnk(n, k, l);
      CHECK(std::abs(dp - p) <= 1e-8 * std::abs(dp));
    }
    CHECK(std::abs(evalQnk(n, k, 0.0)) > 1e-6);
  }
}

TEST_CASE("normalized path characteristic polynomial") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1, 3);
  for (int n = 4; n <= 10; ++n) {
    const auto m = nl(FamilySpec::path(n));
    for (int t = 0; t < 10; ++t) {
      const double l = u(rng);
      const double d = oracle::charpolyAt(m, l);
      CHECK(std::abs(d - evalPathCharpoly(n, l)) <= 1e-9 * std::max(1e-3, std::abs(d)));
    }
  }
}

TEST_CASE("lambda_2 lower bound for P_{2k,k}") {
  CHECK(lambda2LowerBound(3) == doctest::Approx(0.0405).epsilon(1e-3));
  CHECK(std::floor(lambda2LowerBound(3) * 1e4) == 405);
  CHECK(std::floor(lambda2LowerBound(4) * 1e5) == 2185);
  for (int k = 3; k <= 5; ++k)
    CHECK(eigSym(nl(FamilySpec::weightedPath(2 * k, k))).eigenvalues[1] >= lambda2LowerBound(k));
  CHECK_THROWS_AS(lambda2LowerBound(2), DomainError);
}

TEST_CASE("root bracketing") {
  const auto roots = bracketRoots([](double x) { return evalPnk(4, 3, x); }, 0.0, 2.0, 2000);
  const auto ev = eigSym(nl(FamilySpec::weightedPath(4, 3))).eigenvalues;
  REQUIRE(roots.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(roots[i].hi - roots[i].lo <= kBracketWidth);
    CHECK(std::abs(roots[i].root() - ev[i]) < 1e-8);
  }
  CHECK(bracketRoots([](double) { return 1.0; }, 0.0, 2.0, 100).empty());

  // Simple roots of p*q on R_{6,3} are all found.
  const auto pq = bracketRoots([](double x) { return evalPnk(6, 3, x) * evalQnk(6, 3, x); }, 0.0, 2.0, 4000);
  const auto rev = eigSym(nl(FamilySpec::roach(6, 3))).eigenvalues;
  std::vector<double> simple;
  for (std::size_t i = 0; i < rev.size(); ++i) {
    const bool lonely = (i == 0 || rev[i] - rev[i - 1] > 1e-6) && (i + 1 == rev.size() || rev[i + 1] - rev[i] > 1e-6);
    if (lonely) simple.push_back(rev[i]);
  }
  for (double l : simple) {
    bool hit = false;
    for (const auto& b : pq) hit = hit || std::abs(b.root() - l) < 1e-8;
    CHECK(hit);
  }
}
