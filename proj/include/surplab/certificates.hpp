#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surplab/graph.hpp"
#include "surplab/spectral.hpp"

namespace surplab {

enum class CertificateKind {
  NegEigenSum,      // X = sum_{lambda<0} v v^T
  NegEigenSquares,  // convex mix of the Sum and Cubes witnesses
  NegEigenCubes,    // X = beta sum_{lambda<0} lambda^2 v v^T
  LowRankFactor,    // X = V V^T
  ExplicitCut,
  BiasedCut,
};

/// Which quantity the bound is a lower bound for. `surp_star` is the
/// semidefinite relaxation max -<A, X> over PSD X with X_ii <= 1 (no 1/4
/// factor); `surp` is mc(G) - m/2.
enum class CertificateTarget { surp, surp_star };

const char *to_string(CertificateKind k);
const char *to_string(CertificateTarget t);

struct FeasibilityCheck {
  bool passed = false;
  double min_eigenvalue = 0.0;
  double psd_threshold = 0.0;
  double max_diag = 0.0;
  double witness_value = 0.0;  // -<A,X> for surp_star, cut surplus for surp
  double tol = 0.0;
};

struct SurplusCertificate {
  CertificateKind kind = CertificateKind::ExplicitCut;
  CertificateTarget target = CertificateTarget::surp;
  double bound = 0.0;
  std::string witness;  // human-readable description of the witness

  std::optional<SymMatrix> test_matrix;  // eigen certificates
  std::vector<double> factor;            // LowRankFactor, n x rank row-major
  std::size_t rank = 0;
  std::optional<Cut> cut;                // ExplicitCut / BiasedCut

  bool feasibility_checked = false;
  FeasibilityCheck check;

  /// Dense X for surp_star certificates.
  SymMatrix witness_matrix(std::size_t n) const;
};

struct CertificateTolerances {
  double psd = 1e-8;    // relative to max(1, ||X||_F)
  double diag = 1e-8;   // X_ii <= 1 + diag
  double bound = 1e-6;  // |-<A,X> - bound| for surp_star; cut slack for surp
};

/// Re-verifies a certificate from scratch and records the outcome in
/// `cert.check`; sets feasibility_checked iff every condition holds.
bool verify_certificate(const Graph &g, SurplusCertificate &cert, const CertificateTolerances &tol = {});

/// |lambda_n| * n / 4.
double surplus_upper_bound_lambda(const Graph &g);
double surplus_upper_bound_lambda(const Graph &g, const SpectralDecomposition &dec);

struct NegEigenCertificates {
  /// Ordered (i) NegEigenSum, (ii) NegEigenSquares, (iii) NegEigenCubes.
  std::vector<SurplusCertificate> certificates;
  std::size_t complement_max_degree = 0;
  double beta = 0.0;            // 1 / (100 (D + 1))
  double cubes_max_diag = 0.0;  // measured before rescaling
  double cubes_rescale = 1.0;   // 1 / max_diag when that exceeded 1
  double squares_mix = 1.0;     // weight of the (i) witness in (ii)
  double cauchy_schwarz_form = 0.0;  // sqrt(beta_eff) * sum lambda_i^2
};

/// Eigen test-matrix certificates for surp*. Requires n >= 2.
NegEigenCertificates certificates_neg_eigen(const Graph &g, const CertificateTolerances &tol = {});
NegEigenCertificates certificates_neg_eigen(const Graph &g, const SpectralDecomposition &dec,
                                            const CertificateTolerances &tol = {});

struct LowRankOptions {
  std::size_t rank = 4;
  std::uint64_t seed = 1;
  std::size_t rounding_trials = 64;
  std::size_t max_sweeps = 500;
  double rel_tol = 1e-12;  // stop when a sweep gains less than this fraction
  std::size_t polish_passes = 100;
};

struct LowRankResult {
  SurplusCertificate certificate;  // LowRankFactor, target surp_star
  Cut cut;                         // best rounded cut
  double cut_surplus = 0.0;
  double rounding_ratio = 0.0;     // cut_surplus / bound, 0 when bound is 0
  std::size_t sweeps = 0;
};

/// Row-wise projected ascent of -<A, V V^T> over unit-norm rows, followed by
/// random-hyperplane rounding with 1-flip polishing.
LowRankResult surp_star_lowrank(const Graph &g, const LowRankOptions &opts = {});

struct BiasedCutResult {
  SurplusCertificate certificate;  // target surp
  std::size_t a = 0, b = 0, c = 0;  // e(G[X]), e(G[X,Y]), e(G[Y])
  bool deterministic = false;       // a <= b/2 branch
  double bias = 0.0;                // p = b / (4a)
  double expected_surplus = 0.0;    // b^2/(8a) - c/2 on the random branch
  double analytic_bound = 0.0;         // b^2/(4n^2) - c
};

/// Cuts from the unbalanced partition (X, Y). X and Y must partition [n].
BiasedCutResult biased_partition_cut(const Graph &g, const VertexSet &x, const VertexSet &y,
                                     std::uint64_t seed = 1, std::size_t samples = 256);

struct TwoCliqueResult {
  Graph graph;
  VertexSet private_a, private_b, shared;
  Cut cut;
  double cut_surplus = 0.0;
  double bound = 0.0;  // min{a^2, b^2, c^2} / 4
};

/// Union of cliques C1 = A u C and C2 = B u C with |A| = a, |B| = b,
/// |C| = c, plus the explicit large-surplus cut. Vertices are laid out as
/// A, then B, then C.
TwoCliqueResult two_clique_cut(std::size_t a, std::size_t b, std::size_t c);
Graph two_clique_graph(std::size_t a, std::size_t b, std::size_t c);

} // namespace surplab
