#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "surplab/graph.hpp"

namespace surplab {

class SpectralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Jacobi sweeps exhausted without meeting the residual tolerance.
class ConvergenceError : public SpectralError {
public:
  ConvergenceError(const std::string &what, double best_residual)
      : SpectralError(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

private:
  double best_residual_;
};

/// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  /// Throws SpectralError if `entries` is not an exactly symmetric n x n block.
  static SymMatrix from_rows(std::size_t n, std::vector<double> entries);
  static SymMatrix adjacency(const Graph &g);
  static SymMatrix identity(std::size_t n);
  static SymMatrix ones(std::size_t n) { return SymMatrix(n, 1.0); }

  std::size_t order() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Writes (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value) {
    a_[i * n_ + j] = value;
    a_[j * n_ + i] = value;
  }
  void add(std::size_t i, std::size_t j, double value);

  std::span<const double> data() const { return a_; }
  std::vector<double> diagonal() const;

  double max_abs() const;
  double frobenius() const;
  double trace() const;
  /// 1_S^T M 1_S.
  double indicator_form(const VertexSet &s) const;

private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// <A, B> = sum_ij A_ij B_ij.
double inner(const SymMatrix &a, const SymMatrix &b);

/// Eigenpairs in descending eigenvalue order with orthonormal eigenvectors.
struct SpectralDecomposition {
  std::size_t n = 0;
  std::vector<double> eigenvalues;
  /// Column i (eigenvector i) is stored contiguously at [i*n, (i+1)*n).
  std::vector<double> eigenvectors;
  double residual_tol = 0.0;
  double max_residual = 0.0;
  double max_orthogonality_error = 0.0;
  int sweeps = 0;

  std::span<const double> vector(std::size_t i) const { return {eigenvectors.data() + i * n, n}; }
  double lambda_max() const { return n ? eigenvalues.front() : 0.0; }
  double lambda_min() const { return n ? eigenvalues.back() : 0.0; }

  /// sum_i w_i v_i v_i^T.
  SymMatrix weighted_projection(std::span<const double> weights) const;
};

/// 1e-10 * n * max|entry|, floored so zero matrices still get a positive value.
double default_eigen_tolerance(const SymMatrix &m);

inline constexpr int kMaxJacobiSweeps = 30;

/// Cyclic Jacobi eigensolver. The first component of each eigenvector with
/// magnitude above `tol` is made positive. Throws ConvergenceError when the
/// residual or orthonormality checks fail after kMaxJacobiSweeps.
SpectralDecomposition eigendecompose(const SymMatrix &m, std::optional<double> tol = std::nullopt);
SpectralDecomposition eigendecompose(const Graph &g, std::optional<double> tol = std::nullopt);

/// Magnitude at or below which an eigenvalue counts as zero: 1e-8 * |lambda_1|
/// (never below 1e-12).
double zero_classification_tol(const SpectralDecomposition &dec);

struct PowerSums {
  double lambda1 = 0.0;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;  // positive, excluding the largest
  double n1 = 0.0, n2 = 0.0, n3 = 0.0;  // |negative|
  double t = 0.0;                        // n3 - p3
  std::size_t triangles = 0;
  // relative residuals of the three identities
  double trace_residual = 0.0;
  double frobenius_residual = 0.0;
  double triangle_residual = 0.0;
  double tol = 0.0;
};

/// Power sums of the spectrum of G's adjacency matrix. Verifies
/// lambda1 + P1 - N1 = 0, lambda1^2 + P2 + N2 = 2m and
/// lambda1^3 - T = 6 * triangles to relative tolerance `tol`; throws
/// SpectralError otherwise.
PowerSums power_sums(const SpectralDecomposition &dec, const Graph &g, double tol = 1e-6);

/// Entrywise product. Throws SpectralError on an empty list or order mismatch.
SymMatrix hadamard(std::span<const SymMatrix> ms);
SymMatrix hadamard(const SymMatrix &a, const SymMatrix &b);

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double scale = 1.0;      // max(1, ||M||_F)
  double threshold = 0.0;  // -tol * scale
};

PsdVerdict psd_check(const SymMatrix &m, double tol = 1e-8);

struct PrincipalVectorReport {
  bool applicable = false;
  double complement_density = 0.0;
  std::size_t complement_max_degree = 0;
  double lower = 0.0;
  double upper = 0.0;
  double tol = 0.0;
  std::vector<vertex_t> violations;
};

/// Checks (1 - 2D/n)/sqrt(n) <= v1(i) <= (1 + 2p + 2/n)/sqrt(n) where p and D
/// are the density and max degree of the complement. Applicable iff p <= 1/10.
PrincipalVectorReport principal_vector_check(const Graph &g, const SpectralDecomposition &dec);

struct WeylReport {
  bool ok = true;
  double max_slack = 0.0;  // max_i (1 + mu_{i+1} + lambda_{n+1-i})
  std::size_t equality_cases = 0;  // |slack| <= tol: holds only up to tolerance
  double tol = 0.0;
  std::vector<double> slacks;
};

/// Verifies 1 + mu_{i+1} <= -lambda_{n+1-i} + tol for i = 1..n-1, where mu are
/// the eigenvalues of the complement.
WeylReport weyl_check(const Graph &g, double tol = 1e-6);

} // namespace surplab
