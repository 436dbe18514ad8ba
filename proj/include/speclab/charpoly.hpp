// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

namespace speclab {

// Chebyshev values with U shifted so that sin(n t) = U_n(cos t) sin t:
// T_0 = 1, T_1 = x; U_0 = 0, U_1 = 1; both follow P_{n+1} = 2x P_n - P_{n-1}.
struct ChebyshevPair {
  int degree = 0;
  double t = 1;
  double u = 0;
};

ChebyshevPair chebyshev(int n, double x);
double chebyshevT(int n, double x);
double chebyshevU(int n, double x);

// Cosines of the three angle substitutions used by the weighted path and
// roach characteristic polynomials.
struct TrigSubstitution {
  double lambda = 0;
  double cosAlpha = 0;  // lambda - 1
  double cosBeta = 0;   // 3 lambda / 2 - 1
  double cosGamma = 0;  // 3 lambda / 2 - 2

  static TrigSubstitution at(double lambda);
};

// Determinant of the n x n tridiagonal matrix with a on the diagonal and b
// off it, by the two-term recurrence.
double tridiagDetA(int n, double a, double b);
// b^n U_{n+1}(a / 2b); b must be nonzero.
double tridiagDetAClosed(int n, double a, double b);

// g_k / sin(beta) and h_k / sin(gamma) written as polynomials in the cosine.
double gFunction(int k, double cosBeta);
double hFunction(int k, double cosGamma);

// Characteristic polynomials det(lambda I - NL) of the normalized Laplacian
// of the weighted path P_{n,k} (p) and the odd factor of the roach R_{n,k}
// (q), so that det(lambda I - NL(R_{n,k})) = p * q. Need n, k >= 3.
double evalPnk(int n, int k, double lambda);
double evalQnk(int n, int k, double lambda);
// Characteristic polynomial of NL(P_n), n >= 2.
double evalPathCharpoly(int n, double lambda);

// 1 - cos(pi / (4k - 1)), a lower bound on lambda_2 of NL(P_{2k,k}); k >= 3.
double lambda2LowerBound(int k);

struct RootBracket {
  double lo = 0;
  double hi = 0;
  double root() const { return 0.5 * (lo + hi); }
};

inline constexpr double kBracketWidth = 1e-10;

// Scans [lo, hi] on a uniform grid and bisects every sign change down to
// kBracketWidth. Exact zeros on grid points are reported as degenerate
// brackets. Tangential roots are missed, so the count is a lower bound.
std::vector<RootBracket> bracketRoots(const std::function<double(double)>& f, double lo, double hi, int steps);

}  // namespace speclab
