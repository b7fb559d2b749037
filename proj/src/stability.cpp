#include "surplab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "surplab/parallel.hpp"
#include "surplab/spectral.hpp"

namespace surplab {

std::size_t BoolMatrix::ones() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

BoolMatrix BoolMatrix::outer(const std::vector<std::uint8_t> &x, const std::vector<std::uint8_t> &y) {
  BoolMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      m(i, j) = static_cast<std::uint8_t>(x[i] & y[j]);
    }
  }
  return m;
}

std::size_t hamming(const BoolMatrix &a, const BoolMatrix &b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument("hamming: shape mismatch");
  }
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.bits.size(); ++k) {
    d += a.bits[k] != b.bits[k] ? 1 : 0;
  }
  return d;
}

Rank1Rounding rank1_boolean_round(const BoolMatrix &a, const std::vector<double> &u, const std::vector<double> &v) {
  if (u.size() != a.rows || v.size() != a.cols) {
    throw std::invalid_argument("rank1_boolean_round: u and v must match the matrix shape");
  }
  Rank1Rounding out;
  double resid = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      const double d = static_cast<double>(a(i, j)) - u[i] * v[j];
      resid += d * d;
    }
  }
  const double cells = static_cast<double>(std::max<std::size_t>(a.rows * a.cols, 1));
  out.delta = resid / cells;

  std::vector<double> au(u.size()), av(v.size());
  std::transform(u.begin(), u.end(), au.begin(), [](double t) { return std::abs(t); });
  std::transform(v.begin(), v.end(), av.begin(), [](double t) { return std::abs(t); });
  const double nu = std::sqrt(std::inner_product(au.begin(), au.end(), au.begin(), 0.0));
  const double nv = std::sqrt(std::inner_product(av.begin(), av.end(), av.begin(), 0.0));

  out.x.assign(a.rows, 0);
  out.y.assign(a.cols, 0);
  if (nu == 0.0 || nv == 0.0) {
    out.degenerate = a.ones() > 0;
    out.error = a.ones();
    return out;
  }
  const double s = std::sqrt(nu / nv);
  for (auto &t : au) {
    t /= s;
  }
  for (auto &t : av) {
    t *= s;
  }
  const double root = std::pow(out.delta, 1.0 / 6.0);
  const bool at_floor = root < kRoundingAlphaFloor;
  out.alpha = at_floor ? kRoundingAlphaFloor : root;
  auto keep = [&](double t) { return at_floor ? t > out.alpha : t >= out.alpha; };
  for (std::size_t i = 0; i < au.size(); ++i) {
    out.x[i] = keep(au[i]) ? 1 : 0;
  }
  for (std::size_t j = 0; j < av.size(); ++j) {
    out.y[j] = keep(av[j]) ? 1 : 0;
  }
  out.error = hamming(a, BoolMatrix::outer(out.x, out.y));
  return out;
}

std::pair<std::vector<double>, std::vector<double>> top_singular_pair(const BoolMatrix &a) {
  SymMatrix ata(a.cols);
  for (std::size_t j = 0; j < a.cols; ++j) {
    for (std::size_t k = j; k < a.cols; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < a.rows; ++i) {
        s += static_cast<double>(a(i, j) & a(i, k));
      }
      ata.set(j, k, s);
    }
  }
  std::vector<double> v(a.cols, 0.0), u(a.rows, 0.0);
  if (a.cols == 0) {
    return {u, v};
  }
  const auto dec = eigendecompose(ata);
  const auto top = dec.vector(0);
  v.assign(top.begin(), top.end());
  for (std::size_t i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      s += a(i, j) * v[j];
    }
    u[i] = s;
  }
  return {u, v};
}

const char *to_string(BlockLabel l) {
  switch (l) {
  case BlockLabel::Dense:
    return "dense";
  case BlockLabel::Sparse:
    return "sparse";
  case BlockLabel::Ambiguous:
    return "ambiguous";
  }
  return "?";
}

BlockClassification classify_blocks(const Graph &g, const std::vector<VertexSet> &cliques, double theta_lo,
                                    double theta_hi) {
  if (!(theta_lo >= 0.0 && theta_lo < theta_hi && theta_hi <= 1.0)) {
    throw GraphError("classify_blocks: need 0 <= theta_lo < theta_hi <= 1");
  }
  std::vector<std::uint8_t> seen(g.n(), 0);
  for (const auto &c : cliques) {
    for (vertex_t v : c) {
      if (v >= g.n()) {
        throw GraphError("classify_blocks: vertex out of range");
      }
      if (seen[v]) {
        throw GraphError("classify_blocks: cliques overlap at vertex " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  BlockClassification out;
  out.theta_lo = theta_lo;
  out.theta_hi = theta_hi;
  const std::size_t k = cliques.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Block b;
      b.i = i;
      b.j = j;
      out.blocks.push_back(b);
    }
  }
  const auto count = static_cast<std::ptrdiff_t>(out.blocks.size());
  const int threads = static_cast<int>(effective_workers());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    Block &b = out.blocks[static_cast<std::size_t>(t)];
    const auto &ci = cliques[b.i];
    const auto &cj = cliques[b.j];
    b.edges = bipartite_edges(g, ci, cj);
    const double cells = static_cast<double>(ci.size()) * static_cast<double>(cj.size());
    b.density = cells > 0 ? static_cast<double>(b.edges) / cells : 0.0;
    b.label = b.density >= theta_hi   ? BlockLabel::Dense
              : b.density <= theta_lo ? BlockLabel::Sparse
                                      : BlockLabel::Ambiguous;
  }
  for (std::size_t t = 0; t < out.blocks.size(); ++t) {
    if (out.blocks[t].label == BlockLabel::Ambiguous) {
      out.ambiguous.push_back(t);
    }
  }
  return out;
}

Graph clique_graph(std::size_t count, const BlockClassification &blocks) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (const auto &b : blocks.blocks) {
    if (b.label == BlockLabel::Dense) {
      edges.emplace_back(static_cast<vertex_t>(b.i), static_cast<vertex_t>(b.j));
    }
  }
  return build_graph(edges, count);
}

CherryAudit cherry_audit(const Graph &gamma) {
  CherryAudit out;
  const std::size_t n = gamma.n();
  for (vertex_t i = 0; i < n && !out.witness; ++i) {
    for (vertex_t j : gamma.neighbors(i)) {
      for (vertex_t k : gamma.neighbors(j)) {
        if (k > i && !gamma.adjacent(i, k)) {
          out.witness = std::array<std::size_t, 3>{i, j, k};
          break;
        }
      }
      if (out.witness) {
        break;
      }
    }
  }
  if (out.witness) {
    out.cherry_free = false;
    return out;
  }

  std::vector<long> comp(n, -1);
  std::vector<VertexSet> clusters;
  for (vertex_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) {
      continue;
    }
    std::vector<vertex_t> members{s};
    comp[s] = static_cast<long>(clusters.size());
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (vertex_t u : gamma.neighbors(members[h])) {
        if (comp[u] < 0) {
          comp[u] = static_cast<long>(clusters.size());
          members.push_back(u);
        }
      }
    }
    VertexSet set = VertexSet::from_unsorted(std::move(members));
    if (!is_clique(gamma, set)) {
      throw std::logic_error("cherry_audit: cherry-free component is not complete");
    }
    clusters.push_back(std::move(set));
  }
  out.clusters = std::move(clusters);
  return out;
}

const char *to_string(StabilityStatus s) {
  switch (s) {
  case StabilityStatus::certified:
    return "certified";
  case StabilityStatus::cherry_failure:
    return "cherry_failure";
  case StabilityStatus::ambiguous_failure:
    return "ambiguous_failure";
  case StabilityStatus::residual_too_large:
    return "residual_too_large";
  }
  return "?";
}

StabilityReport stability_certificate(const Graph &g, const PipelineParams &params) {
  params.validate();
  StabilityReport rep;
  const std::size_t n = g.n();

  if (n > 0) {
    const auto dec = eigendecompose(g);
    rep.lambda_min = dec.lambda_min();
    rep.gate_surplus_bound = std::abs(rep.lambda_min) * static_cast<double>(n) / 4.0;
  }

  rep.cover = pull_cliques(g, params);
  std::vector<std::uint8_t> covered(n, 0);
  for (const auto &c : rep.cover.cliques) {
    for (vertex_t v : c) {
      covered[v] = 1;
    }
  }
  for (const auto &[u, v] : g.edges()) {
    rep.residual_edges += (covered[u] && covered[v]) ? 0 : 1;
  }
  rep.residual_edge_fraction = g.m() ? static_cast<double>(rep.residual_edges) / static_cast<double>(g.m()) : 0.0;
  if (rep.residual_edge_fraction > params.max_residual_edge_fraction) {
    rep.status = StabilityStatus::residual_too_large;
    rep.failure = std::to_string(rep.residual_edges) + " of " + std::to_string(g.m()) +
                  " edges touch vertices outside the " + std::to_string(rep.cover.cliques.size()) +
                  " pulled cliques (limit " + std::to_string(params.max_residual_edge_fraction) + " of m)";
    return rep;
  }

  rep.blocks = classify_blocks(g, rep.cover.cliques, params.theta_lo, params.theta_hi);
  rep.gamma = clique_graph(rep.cover.cliques.size(), rep.blocks);
  if (!rep.blocks.ambiguous.empty()) {
    const auto &b = rep.blocks.blocks[rep.blocks.ambiguous.front()];
    rep.status = StabilityStatus::ambiguous_failure;
    rep.failure = "block between cliques " + std::to_string(b.i) + " and " + std::to_string(b.j) +
                  " has density " + std::to_string(b.density) + ", strictly between theta_lo and theta_hi (" +
                  std::to_string(rep.blocks.ambiguous.size()) + " ambiguous blocks)";
    return rep;
  }

  rep.audit = cherry_audit(rep.gamma);
  if (!rep.audit.cherry_free) {
    const auto &w = *rep.audit.witness;
    rep.status = StabilityStatus::cherry_failure;
    rep.failure = "clique graph has cherry (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                  std::to_string(w[2]) + ")";
    return rep;
  }

  for (const auto &cluster : *rep.audit.clusters) {
    std::vector<vertex_t> part;
    for (vertex_t idx : cluster) {
      const auto &c = rep.cover.cliques[idx];
      part.insert(part.end(), c.begin(), c.end());
    }
    rep.parts.push_back(VertexSet::from_unsorted(std::move(part)));
  }
  rep.cluster_parts = rep.parts.size();
  for (vertex_t v = 0; v < n; ++v) {
    if (!covered[v]) {
      rep.parts.push_back(VertexSet({v}));
    }
  }
  rep.model = clique_union(n, rep.parts);
  rep.edit_distance = edit_distance_to_partition_cliques(g, rep.parts);
  rep.closeness = n ? static_cast<double>(*rep.edit_distance) / (static_cast<double>(n) * static_cast<double>(n)) : 0.0;
  rep.status = StabilityStatus::certified;
  return rep;
}

} // namespace surplab
