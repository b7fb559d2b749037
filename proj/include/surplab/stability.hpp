#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surplab/extraction.hpp"
#include "surplab/graph.hpp"

namespace surplab {

/// Dense 0/1 matrix, row-major.
struct BoolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;

  BoolMatrix() = default;
  BoolMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return bits[i * cols + j]; }
  std::uint8_t &operator()(std::size_t i, std::size_t j) { return bits[i * cols + j]; }
  std::size_t ones() const;
  /// The rectangle x y^T.
  static BoolMatrix outer(const std::vector<std::uint8_t> &x, const std::vector<std::uint8_t> &y);
};

/// Number of entries where a and b differ.
std::size_t hamming(const BoolMatrix &a, const BoolMatrix &b);

inline constexpr double kRoundingAlphaFloor = 1e-12;

struct Rank1Rounding {
  std::vector<std::uint8_t> x, y;
  std::size_t error = 0;  // ||A - x y^T||_F^2
  double delta = 0.0;     // ||A - u v^T||_F^2 / (rows * cols)
  double alpha = 0.0;
  bool degenerate = false;
};

/// Rounds a real factorisation u v^T of A to a combinatorial rectangle.
/// Throws std::invalid_argument on length mismatch.
Rank1Rounding rank1_boolean_round(const BoolMatrix &a, const std::vector<double> &u, const std::vector<double> &v);

/// Top singular pair with A ~ u v^T: v is a unit right singular vector and
/// u = A v.
std::pair<std::vector<double>, std::vector<double>> top_singular_pair(const BoolMatrix &a);

enum class BlockLabel { Dense, Sparse, Ambiguous };
const char *to_string(BlockLabel l);

struct Block {
  std::size_t i = 0, j = 0;  // clique indices, i < j
  std::size_t edges = 0;
  double density = 0.0;
  BlockLabel label = BlockLabel::Sparse;
};

struct BlockClassification {
  std::vector<Block> blocks;  // pairs in lexicographic order
  std::vector<std::size_t> ambiguous;  // indices into blocks
  double theta_lo = 0.25;
  double theta_hi = 0.75;
};

/// Throws GraphError if the cliques overlap or theta_lo >= theta_hi.
BlockClassification classify_blocks(const Graph &g, const std::vector<VertexSet> &cliques, double theta_lo,
                                    double theta_hi);

/// Gamma: vertex i stands for clique i; edge iff the block is Dense.
Graph clique_graph(std::size_t count, const BlockClassification &blocks);

struct CherryAudit {
  bool cherry_free = true;
  std::optional<std::array<std::size_t, 3>> witness;  // ij, jk edges, ik missing, i < k
  std::optional<std::vector<VertexSet>> clusters;
};

CherryAudit cherry_audit(const Graph &gamma);

enum class StabilityStatus { certified, cherry_failure, ambiguous_failure, residual_too_large };
const char *to_string(StabilityStatus s);

struct StabilityReport {
  StabilityStatus status = StabilityStatus::certified;
  std::string failure;  // empty when certified

  CliqueCover cover;
  std::size_t residual_edges = 0;  // edges with an endpoint outside the cliques
  double residual_edge_fraction = 0.0;
  BlockClassification blocks;
  Graph gamma;
  CherryAudit audit;

  std::vector<VertexSet> parts;  // Y-parts then residual singletons
  std::size_t cluster_parts = 0; // leading entries of `parts` built from clusters
  Graph model;
  std::optional<std::size_t> edit_distance;
  std::optional<double> closeness;  // edit_distance / n^2

  // Eigenvalue gate: surp(G) <= n |lambda_n| / 4.
  double lambda_min = 0.0;
  double gate_surplus_bound = 0.0;
};

/// pull cliques, classify blocks, audit Gamma, build the model graph.
StabilityReport stability_certificate(const Graph &g, const PipelineParams &params);

} // namespace surplab
