#include "surplab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace surplab {

VertexSet::VertexSet(std::vector<vertex_t> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i - 1] >= members_[i]) {
      throw GraphError("vertex set must be strictly increasing");
    }
  }
}

VertexSet VertexSet::from_unsorted(std::vector<vertex_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VertexSet(std::move(members));
}

VertexSet VertexSet::range(vertex_t n) {
  std::vector<vertex_t> all(n);
  std::iota(all.begin(), all.end(), vertex_t{0});
  return VertexSet(std::move(all));
}

bool VertexSet::contains(vertex_t v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::lift(const VertexSet &local) const {
  std::vector<vertex_t> out;
  out.reserve(local.size());
  for (vertex_t i : local) {
    if (i >= members_.size()) {
      throw GraphError("local index out of range in lift");
    }
    out.push_back(members_[i]);
  }
  return VertexSet(std::move(out));
}

Cut Cut::from_set(std::size_t n, const VertexSet &one_side) {
  Cut c{std::vector<std::uint8_t>(n, 0)};
  for (vertex_t v : one_side) {
    if (v >= n) {
      throw GraphError("cut vertex out of range");
    }
    c.side[v] = 1;
  }
  return c;
}

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), degrees_(n, 0) {}

void Graph::set_edge(vertex_t u, vertex_t v) {
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::finalize() {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    std::size_t d = 0;
    for (std::uint64_t w : row(static_cast<vertex_t>(u))) {
      d += static_cast<std::size_t>(std::popcount(w));
    }
    degrees_[u] = d;
    total += d;
  }
  m_ = total / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<vertex_t, vertex_t>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    g.set_edge(u, v);
  }
  g.finalize();
  return g;
}

std::vector<vertex_t> Graph::neighbors(vertex_t u) const {
  std::vector<vertex_t> out;
  out.reserve(degrees_[u]);
  auto r = row(u);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<vertex_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<vertex_t, vertex_t>> Graph::edges() const {
  std::vector<std::pair<vertex_t, vertex_t>> out;
  out.reserve(m_);
  for (vertex_t u = 0; u < n_; ++u) {
    for (vertex_t v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::vector<double> Graph::adjacency_matrix() const {
  std::vector<double> a(n_ * n_, 0.0);
  for (vertex_t u = 0; u < n_; ++u) {
    for (vertex_t v : neighbors(u)) {
      a[u * n_ + v] = 1.0;
    }
  }
  return a;
}

std::size_t Graph::triangle_count() const {
  // Each triangle u < v < w is counted once, at its two smallest vertices.
  std::size_t count = 0;
  for (vertex_t u = 0; u < n_; ++u) {
    auto ru = row(u);
    for (vertex_t v : neighbors(u)) {
      if (v <= u) {
        continue;
      }
      auto rv = row(v);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t common = ru[w] & rv[w];
        // keep only indices > v
        std::size_t base = w * 64;
        if (base + 63 <= v) {
          continue;
        }
        if (base <= v) {
          std::size_t shift = v - base + 1;
          common = shift >= 64 ? 0 : common & (~std::uint64_t{0} << shift);
        }
        count += static_cast<std::size_t>(std::popcount(common));
      }
    }
  }
  return count;
}

Graph build_graph(std::span<const std::pair<vertex_t, vertex_t>> edges,
                  std::optional<std::size_t> n_hint) {
  std::size_t n = 0;
  if (n_hint) {
    n = *n_hint;
  } else {
    for (auto [u, v] : edges) {
      n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph &g) {
  const std::size_t n = g.n();
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(n * (n - (n ? 1 : 0)) / 2 - g.m());
  for (vertex_t u = 0; u < n; ++u) {
    for (vertex_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

void check_in_range(const Graph &g, const VertexSet &s) {
  if (!s.empty() && s.members().back() >= g.n()) {
    throw GraphError("vertex " + std::to_string(s.members().back()) +
                     " out of range for n=" + std::to_string(g.n()));
  }
}

} // namespace

Graph induced_subgraph(const Graph &g, const VertexSet &s) {
  check_in_range(g, s);
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t i = 0; i < s.size(); ++i) {
    for (vertex_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edges(s.size(), edges);
}

double edge_density(const Graph &g) {
  const double n = static_cast<double>(g.n());
  if (g.n() < 2) {
    return 0.0;
  }
  return static_cast<double>(g.m()) / (n * (n - 1.0) / 2.0);
}

DegreeStats densities_and_degrees(const Graph &g) {
  DegreeStats s;
  s.edge_density = edge_density(g);
  if (g.n() > 0) {
    s.max_degree = *std::max_element(g.degrees().begin(), g.degrees().end());
    s.avg_degree = 2.0 * static_cast<double>(g.m()) / static_cast<double>(g.n());
  }
  return s;
}

CutValue cut_evaluate(const Graph &g, const Cut &c) {
  if (c.size() != g.n()) {
    throw GraphError("cut length " + std::to_string(c.size()) + " does not match n=" +
                     std::to_string(g.n()));
  }
  std::size_t crossing = 0;
  for (auto [u, v] : g.edges()) {
    crossing += (c.side[u] != c.side[v]) ? 1 : 0;
  }
  return {crossing, static_cast<double>(crossing) - static_cast<double>(g.m()) / 2.0};
}

std::size_t bipartite_edges(const Graph &g, const VertexSet &u, const VertexSet &v) {
  check_in_range(g, u);
  check_in_range(g, v);
  for (vertex_t x : u) {
    if (v.contains(x)) {
      throw GraphError("bipartite_edges: sets overlap at vertex " + std::to_string(x));
    }
  }
  std::size_t count = 0;
  for (vertex_t x : u) {
    for (vertex_t y : v) {
      count += g.adjacent(x, y) ? 1 : 0;
    }
  }
  return count;
}

namespace {

std::vector<std::size_t> part_labels(std::size_t n, std::span<const VertexSet> parts) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (vertex_t v : parts[p]) {
      if (v >= n) {
        throw GraphError("partition vertex " + std::to_string(v) + " out of range");
      }
      if (label[v] != unset) {
        throw GraphError("partition parts overlap at vertex " + std::to_string(v));
      }
      label[v] = p;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (label[v] == unset) {
      throw GraphError("partition does not cover vertex " + std::to_string(v));
    }
  }
  return label;
}

} // namespace

std::size_t edit_distance_to_partition_cliques(const Graph &g, std::span<const VertexSet> parts) {
  const auto label = part_labels(g.n(), parts);
  std::size_t distance = 0;
  for (vertex_t u = 0; u < g.n(); ++u) {
    for (vertex_t v = u + 1; v < g.n(); ++v) {
      const bool same = label[u] == label[v];
      distance += (same != g.adjacent(u, v)) ? 1 : 0;
    }
  }
  return distance;
}

Graph clique_union(std::size_t n, std::span<const VertexSet> parts) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (const auto &part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        edges.emplace_back(part[i], part[j]);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

} // namespace surplab
