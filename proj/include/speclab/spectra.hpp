// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/families.hpp"
#include "speclab/graph.hpp"

namespace speclab {

enum class MatrixKind {
  Adjacency,            // W
  DifferenceLaplacian,  // D - W
  NormalizedLaplacian,  // I - D^{-1/2} W D^{-1/2}
  SignlessLaplacian,    // D + W
};

std::string_view kindName(MatrixKind k);
std::optional<MatrixKind> parseKind(std::string_view name);

// Dense real symmetric matrix. Only the lower triangle is stored, so the
// matrix is symmetric by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix(int order, MatrixKind kind, std::string source = "");

  int order() const { return n_; }
  MatrixKind kind() const { return kind_; }
  const std::string& source() const { return source_; }

  double operator()(int i, int j) const { return i >= j ? a_[idx(i, j)] : a_[idx(j, i)]; }
  void set(int i, int j, double v) { (i >= j ? a_[idx(i, j)] : a_[idx(j, i)]) = v; }

  double maxAbs() const;
  std::vector<double> multiply(const std::vector<double>& x) const;
  // Row-major full matrix.
  std::vector<double> dense() const;
  std::string csv() const;

 private:
  static std::size_t idx(int i, int j) { return static_cast<std::size_t>(i) * (i + 1) / 2 + j; }
  int n_;
  MatrixKind kind_;
  std::string source_;
  std::vector<double> a_;
};

// Throws DomainError for a zero-degree vertex when kind is normalized.
SymmetricMatrix buildMatrix(const Graph& g, MatrixKind kind);

struct Spectrum {
  MatrixKind kind = MatrixKind::Adjacency;
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i]
  double residual = 0;                            // max_i ||M u_i - lambda_i u_i||_2
  double orthogonality = 0;                       // ||Q^T Q - I||_max
  std::vector<double> gaps;                       // eigenvalues[i+1] - eigenvalues[i]
};

// Householder tridiagonalisation followed by implicit-shift QL. At most
// kMaxSweeps QL sweeps per eigenvalue; otherwise NumericError.
inline constexpr int kMaxSweeps = 50;
Spectrum eigSym(const SymmetricMatrix& m);

// lambda_3 - lambda_2 > 1e-8 * max(1, |lambda_3|). Graphs of order 2 have a
// simple lambda_2 by definition.
inline constexpr double kSimplicityTol = 1e-8;
bool lambda2Simple(const Spectrum& s);
double lambda2Gap(const Spectrum& s);

struct ClosedFormSpectrum {
  std::vector<double> eigenvalues;                               // ascending
  std::optional<std::vector<std::vector<double>>> eigenvectors;  // unit norm, paths only
};

// Closed forms for paths (n >= 2) and cycles (n >= 3), all four kinds.
ClosedFormSpectrum closedFormSpectrum(const FamilySpec& spec, MatrixKind kind);

struct CirculantEigenpair {
  std::complex<double> value;
  std::vector<std::complex<double>> vector;  // entries (omega^k)^i, unnormalised
};

// Circulant matrix with c_ij = c_{(j - i) mod n}; omega = exp(2 pi i / n).
std::vector<CirculantEigenpair> circulantEigenpairs(const std::vector<double>& firstRow);
// Dense circulant built from its first row (row-major), for checking.
std::vector<double> circulantMatrix(const std::vector<double>& firstRow);

}  // namespace speclab
