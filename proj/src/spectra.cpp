// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "speclab/errors.hpp"

namespace speclab {

std::string_view kindName(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::DifferenceLaplacian: return "laplacian";
    case MatrixKind::NormalizedLaplacian: return "normalized";
    case MatrixKind::SignlessLaplacian: return "signless";
  }
  return "unknown";
}

std::optional<MatrixKind> parseKind(std::string_view name) {
  if (name == "adjacency" || name == "A") return MatrixKind::Adjacency;
  if (name == "laplacian" || name == "difference" || name == "L") return MatrixKind::DifferenceLaplacian;
  if (name == "normalized" || name == "normalized-laplacian" || name == "NL")
    return MatrixKind::NormalizedLaplacian;
  if (name == "signless" || name == "signless-laplacian" || name == "SL") return MatrixKind::SignlessLaplacian;
  return std::nullopt;
}

SymmetricMatrix::SymmetricMatrix(int order, MatrixKind kind, std::string source)
    : n_(order), kind_(kind), source_(std::move(source)) {
  if (order < 1) throw DomainError("matrix order must be positive");
  a_.assign(static_cast<std::size_t>(order) * (order + 1) / 2, 0.0);
}

double SymmetricMatrix::maxAbs() const {
  double m = 0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> SymmetricMatrix::multiply(const std::vector<double>& x) const {
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> SymmetricMatrix::dense() const {
  std::vector<double> out(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i) * n_ + j] = (*this)(i, j);
  return out;
}

std::string SymmetricMatrix::csv() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(15);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

SymmetricMatrix buildMatrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SymmetricMatrix m(n, kind, g.name());
  std::vector<double> isd(n, 0.0);
  if (kind == MatrixKind::NormalizedLaplacian) {
    for (int i = 0; i < n; ++i) {
      if (g.degree(i) <= 0)
        throw DomainError("normalized Laplacian needs positive degrees; vertex " + std::to_string(i + 1) +
                          " is isolated");
      isd[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
    }
  }
  for (int i = 0; i < n; ++i) {
    const double d = static_cast<double>(g.degree(i));
    const double wii = static_cast<double>(g.loopWeight(i));
    switch (kind) {
      case MatrixKind::Adjacency: m.set(i, i, wii); break;
      case MatrixKind::DifferenceLaplacian: m.set(i, i, d - wii); break;
      case MatrixKind::NormalizedLaplacian: m.set(i, i, 1.0 - wii / d); break;
      case MatrixKind::SignlessLaplacian: m.set(i, i, d + wii); break;
    }
  }
  for (const Edge& e : g.edges()) {
    const double w = static_cast<double>(e.w);
    switch (kind) {
      case MatrixKind::Adjacency:
      case MatrixKind::SignlessLaplacian: m.set(e.u, e.v, w); break;
      case MatrixKind::DifferenceLaplacian: m.set(e.u, e.v, -w); break;
      case MatrixKind::NormalizedLaplacian: m.set(e.u, e.v, -w * isd[e.u] * isd[e.v]); break;
    }
  }
  return m;
}

namespace {

using Dense = std::vector<std::vector<double>>;

// Householder reduction to tridiagonal form, accumulating the transform in v.
// On exit d holds the diagonal and e the subdiagonal in e[1..n-1].
void tridiagonalize(Dense& v, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int j = 0; j < n; ++j) d[j] = v[n - 1][j];

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0, h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = v[i - 1][j];
        v[i][j] = 0.0;
        v[j][i] = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        v[j][i] = f;
        g = e[j] + v[j][j] * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += v[k][j] * d[k];
          e[k] += v[k][j] * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) v[k][j] -= (f * e[k] + g * d[k]);
        d[j] = v[i - 1][j];
        v[i][j] = 0.0;
      }
    }
    d[i] = h;
  }

  for (int i = 0; i < n - 1; ++i) {
    v[n - 1][i] = v[i][i];
    v[i][i] = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = v[k][i + 1] / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += v[k][i + 1] * v[k][j];
        for (int k = 0; k <= i; ++k) v[k][j] -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) v[k][i + 1] = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = v[n - 1][j];
    v[n - 1][j] = 0.0;
  }
  v[n - 1][n - 1] = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of v.
void qlImplicit(Dense& v, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0, tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxSweeps)
          throw NumericError("QL iteration did not converge for eigenvalue " + std::to_string(l + 1), std::abs(e[l]));
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = c, c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = v[k][i + 1];
            v[k][i + 1] = s * v[k][i] + c * h;
            v[k][i] = c * v[k][i] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

Spectrum eigSym(const SymmetricMatrix& m) {
  const int n = m.order();
  Dense v(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i][j] = m(i, j);
  std::vector<double> d(n), e(n);
  tridiagonalize(v, d, e);
  qlImplicit(v, d, e);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  Spectrum s;
  s.kind = m.kind();
  s.eigenvalues.resize(n);
  s.eigenvectors.assign(n, std::vector<double>(n));
  for (int c = 0; c < n; ++c) {
    s.eigenvalues[c] = d[order[c]];
    for (int r = 0; r < n; ++r) s.eigenvectors[c][r] = v[r][order[c]];
  }
  for (int c = 0; c < n; ++c) {
    const auto mu = m.multiply(s.eigenvectors[c]);
    double acc = 0;
    for (int r = 0; r < n; ++r) {
      const double diff = mu[r] - s.eigenvalues[c] * s.eigenvectors[c][r];
      acc += diff * diff;
    }
    s.residual = std::max(s.residual, std::sqrt(acc));
    for (int c2 = c; c2 < n; ++c2) {
      double dot = 0;
      for (int r = 0; r < n; ++r) dot += s.eigenvectors[c][r] * s.eigenvectors[c2][r];
      s.orthogonality = std::max(s.orthogonality, std::abs(dot - (c == c2 ? 1.0 : 0.0)));
    }
  }
  for (int i = 0; i + 1 < n; ++i) s.gaps.push_back(s.eigenvalues[i + 1] - s.eigenvalues[i]);
  return s;
}

double lambda2Gap(const Spectrum& s) {
  if (s.eigenvalues.size() < 3) return INFINITY;
  return s.eigenvalues[2] - s.eigenvalues[1];
}

bool lambda2Simple(const Spectrum& s) {
  if (s.eigenvalues.size() < 2) return false;
  if (s.eigenvalues.size() == 2) return true;
  const double l3 = s.eigenvalues[2];
  return lambda2Gap(s) > kSimplicityTol * std::max(1.0, std::abs(l3));
}

namespace {

void normalize(std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  for (double& v : x) v /= s;
}

ClosedFormSpectrum sortPairs(std::vector<double> values, std::optional<std::vector<std::vector<double>>> vecs) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  ClosedFormSpectrum out;
  for (int i : order) out.eigenvalues.push_back(values[i]);
  if (vecs) {
    out.eigenvectors.emplace();
    for (int i : order) out.eigenvectors->push_back((*vecs)[i]);
  }
  return out;
}

}  // namespace

ClosedFormSpectrum closedFormSpectrum(const FamilySpec& spec, MatrixKind kind) {
  constexpr double pi = std::numbers::pi;
  const int n = spec.n;
  std::vector<double> values(n > 0 ? n : 0);
  if (spec.family == Family::Cycle) {
    if (n < 3) throw DomainError("closed-form cycle spectrum needs n >= 3");
    for (int k = 0; k < n; ++k) {
      const double c = std::cos(2.0 * k * pi / n);
      switch (kind) {
        case MatrixKind::Adjacency: values[k] = 2.0 * c; break;
        case MatrixKind::DifferenceLaplacian: values[k] = 2.0 - 2.0 * c; break;
        case MatrixKind::NormalizedLaplacian: values[k] = 1.0 - c; break;
        case MatrixKind::SignlessLaplacian: values[k] = 2.0 + 2.0 * c; break;
      }
    }
    return sortPairs(std::move(values), std::nullopt);
  }
  if (spec.family != Family::Path)
    throw DomainError("closed-form spectra exist only for paths and cycles, not " + std::string(familyName(spec.family)));
  if (n < 2) throw DomainError("closed-form path spectrum needs n >= 2");

  std::vector<std::vector<double>> vecs(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      double& u = vecs[k][i];
      switch (kind) {
        case MatrixKind::Adjacency:
          u = std::sin((i + 1.0) * (k + 1.0) * pi / (n + 1.0));
          break;
        case MatrixKind::DifferenceLaplacian:
          u = std::cos((2.0 * i + 1.0) * k * pi / (2.0 * n));
          break;
        case MatrixKind::NormalizedLaplacian: {
          const double c = std::cos(2.0 * i * pi * k / (2.0 * n - 2.0));
          u = (i == 0 || i == n - 1) ? c : std::sqrt(2.0) * c;
          break;
        }
        case MatrixKind::SignlessLaplacian:
          // Vector and value both use the shifted index k+1 so they pair up.
          u = std::sin((2.0 * i + 1.0) * (k + 1.0) * pi / (2.0 * n));
          break;
      }
    }
    normalize(vecs[k]);
    switch (kind) {
      case MatrixKind::Adjacency: values[k] = 2.0 * std::cos((k + 1.0) * pi / (n + 1.0)); break;
      case MatrixKind::DifferenceLaplacian: values[k] = 2.0 - 2.0 * std::cos(k * pi / n); break;
      case MatrixKind::NormalizedLaplacian: values[k] = 1.0 - std::cos(k * pi / (n - 1.0)); break;
      case MatrixKind::SignlessLaplacian: values[k] = 2.0 + 2.0 * std::cos((k + 1.0) * pi / n); break;
    }
  }
  return sortPairs(std::move(values), std::move(vecs));
}

std::vector<CirculantEigenpair> circulantEigenpairs(const std::vector<double>& firstRow) {
  const int n = static_cast<int>(firstRow.size());
  if (n < 1) throw DomainError("circulant needs at least one entry");
  std::vector<CirculantEigenpair> out(n);
  for (int k = 0; k < n; ++k) {
    // Reduce k*j mod n before forming the angle so large orders stay accurate.
    auto root = [&](long long power) {
      const long long r = power % n;
      return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / n);
    };
    std::complex<double> lambda = 0;
    for (int j = 0; j < n; ++j) lambda += firstRow[j] * root(static_cast<long long>(k) * j);
    out[k].value = lambda;
    out[k].vector.resize(n);
    for (int i = 0; i < n; ++i) out[k].vector[i] = root(static_cast<long long>(k) * i);
  }
  return out;
}

std::vector<double> circulantMatrix(const std::vector<double>& firstRow) {
  const int n = static_cast<int>(firstRow.size());
  std::vector<double> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i) * n + j] = firstRow[((j - i) % n + n) % n];
  return c;
}

}  // namespace speclab
