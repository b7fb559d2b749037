#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surplab {

using vertex_t = std::uint32_t;

/// Raised for malformed inputs to graph-level operations.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  /// Throws GraphError unless `members` is strictly increasing.
  explicit VertexSet(std::vector<vertex_t> members);

  static VertexSet from_unsorted(std::vector<vertex_t> members);
  static VertexSet range(vertex_t n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(vertex_t v) const;
  vertex_t operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<vertex_t> &members() const { return members_; }

  /// Maps local indices of a subgraph induced on *this back to parent labels.
  VertexSet lift(const VertexSet &local) const;

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  std::vector<vertex_t> members_;
};

/// Two-sided partition of [n]; side[v] is 0 or 1.
struct Cut {
  std::vector<std::uint8_t> side;

  static Cut from_set(std::size_t n, const VertexSet &one_side);
  std::size_t size() const { return side.size(); }
  friend bool operator==(const Cut &, const Cut &) = default;
};

/// Simple undirected graph stored as packed adjacency bit rows.
///
/// Immutable after construction. Rows are padded to whole 64-bit words so
/// neighbourhood intersections are word-parallel.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Collapses duplicate edges; throws GraphError on self-loops or indices
  /// outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const std::pair<vertex_t, vertex_t>> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(vertex_t u, vertex_t v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(vertex_t v) const { return degrees_[v]; }
  const std::vector<std::size_t> &degrees() const { return degrees_; }
  std::span<const std::uint64_t> row(vertex_t u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::vector<vertex_t> neighbors(vertex_t u) const;
  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<vertex_t, vertex_t>> edges() const;
  /// Row-major 0/1 adjacency matrix.
  std::vector<double> adjacency_matrix() const;

  std::size_t triangle_count() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

private:
  void set_edge(vertex_t u, vertex_t v);
  void finalize();

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> degrees_;
};

/// n = n_hint when given, otherwise 1 + max index (0 for no edges).
Graph build_graph(std::span<const std::pair<vertex_t, vertex_t>> edges,
                  std::optional<std::size_t> n_hint = std::nullopt);

Graph complement(const Graph &g);
Graph induced_subgraph(const Graph &g, const VertexSet &s);

struct DegreeStats {
  double edge_density = 0.0;
  std::size_t max_degree = 0;
  double avg_degree = 0.0;
};
DegreeStats densities_and_degrees(const Graph &g);
double edge_density(const Graph &g);

struct CutValue {
  std::size_t cut_size = 0;
  double surplus = 0.0;
};
CutValue cut_evaluate(const Graph &g, const Cut &c);

std::size_t bipartite_edges(const Graph &g, const VertexSet &u, const VertexSet &v);

/// Missing within-part pairs plus present cross-part edges. `parts` must
/// partition [n].
std::size_t edit_distance_to_partition_cliques(const Graph &g, std::span<const VertexSet> parts);

/// Disjoint union of cliques on `parts`, on n vertices.
Graph clique_union(std::size_t n, std::span<const VertexSet> parts);

} // namespace surplab
