// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/charpoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "speclab/errors.hpp"

namespace speclab {

ChebyshevPair chebyshev(int n, double x) {
  if (n < 0) throw DomainError("Chebyshev degree must be nonnegative");
  double t0 = 1, t1 = x, u0 = 0, u1 = 1;
  if (n == 0) return {0, t0, u0};
  for (int i = 1; i < n; ++i) {
    const double t2 = 2 * x * t1 - t0;
    const double u2 = 2 * x * u1 - u0;
    t0 = t1;
    t1 = t2;
    u0 = u1;
    u1 = u2;
  }
  return {n, t1, u1};
}

double chebyshevT(int n, double x) { return chebyshev(n, x).t; }
double chebyshevU(int n, double x) { return chebyshev(n, x).u; }

TrigSubstitution TrigSubstitution::at(double lambda) {
  return {lambda, lambda - 1.0, 1.5 * lambda - 1.0, 1.5 * lambda - 2.0};
}

double tridiagDetA(int n, double a, double b) {
  if (n < 0) throw DomainError("matrix order must be nonnegative");
  double prev = 1, cur = a;
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    const double next = a * cur - b * b * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double tridiagDetAClosed(int n, double a, double b) {
  if (b == 0) throw DomainError("closed form needs b != 0");
  return std::pow(b, n) * chebyshevU(n + 1, a / (2 * b));
}

double gFunction(int k, double c) {
  if (k < 1) throw DomainError("g_k needs k >= 1");
  return 2 * chebyshevU(k + 1, c) + chebyshevU(k, c) - chebyshevU(k - 1, c);
}

double hFunction(int k, double c) {
  if (k < 1) throw DomainError("h_k needs k >= 1");
  return 2 * chebyshevU(k + 1, c) - chebyshevU(k, c) - chebyshevU(k - 1, c);
}

namespace {

void requireCharpolyDomain(int n, int k) {
  if (n < 3) throw DomainError("characteristic polynomial needs n >= 3, got n = " + std::to_string(n));
  if (k < 3) throw DomainError("characteristic polynomial needs k >= 3, got k = " + std::to_string(k));
}

double scale(int n, int k) { return std::ldexp(std::pow(3.0, -k), -n); }

}  // namespace

double evalPnk(int n, int k, double lambda) {
  requireCharpolyDomain(n, k);
  const auto s = TrigSubstitution::at(lambda);
  return scale(n, k) * (gFunction(k, s.cosBeta) * chebyshevT(n, s.cosAlpha) -
                        gFunction(k - 1, s.cosBeta) * chebyshevT(n - 1, s.cosAlpha));
}

double evalQnk(int n, int k, double lambda) {
  requireCharpolyDomain(n, k);
  const auto s = TrigSubstitution::at(lambda);
  return scale(n, k) * (hFunction(k, s.cosGamma) * chebyshevT(n, s.cosAlpha) -
                        hFunction(k - 1, s.cosGamma) * chebyshevT(n - 1, s.cosAlpha));
}

double evalPathCharpoly(int n, double lambda) {
  if (n < 2) throw DomainError("path characteristic polynomial needs n >= 2");
  const double c = lambda - 1.0;
  return -std::ldexp(1.0, -(n - 2)) * (1 - c * c) * chebyshevU(n - 1, c);
}

double lambda2LowerBound(int k) {
  if (k < 3) throw DomainError("lambda_2 bound needs k >= 3");
  return 1.0 - std::cos(std::numbers::pi / (4.0 * k - 1.0));
}

std::vector<RootBracket> bracketRoots(const std::function<double(double)>& f, double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("root scan needs at least one step");
  if (!(hi > lo)) throw DomainError("root scan needs lo < hi");
  std::vector<RootBracket> out;
  const double h = (hi - lo) / steps;
  double x0 = lo, f0 = f(lo);
  if (f0 == 0) out.push_back({x0, x0});
  for (int i = 1; i <= steps; ++i) {
    const double x1 = (i == steps) ? hi : lo + i * h;
    const double f1 = f(x1);
    if (f1 == 0) {
      out.push_back({x1, x1});
    } else if (f0 != 0 && std::signbit(f0) != std::signbit(f1)) {
      double a = x0, b = x1, fa = f0;
      while (b - a > kBracketWidth) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      out.push_back({a, b});
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

}  // namespace speclab
