#include "surplab/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "surplab/parallel.hpp"
#include "surplab/random.hpp"

namespace surplab {

const char *to_string(MaxCutMethod m) {
  return m == MaxCutMethod::exact ? "exact" : "local_search";
}

namespace {

using mask_t = std::uint64_t;

void check_limit(const Graph &g, std::size_t limit) {
  const std::size_t cap = std::min(limit, kHardExactLimit);
  if (g.n() > cap) {
    throw OracleLimitError("exact MaxCut limited to n <= " + std::to_string(cap) + " (graph has n=" +
                           std::to_string(g.n()) + "); use the local-search heuristic instead");
  }
}

std::vector<mask_t> adjacency_masks(const Graph &g) {
  std::vector<mask_t> adj(g.n(), 0);
  for (vertex_t u = 0; u < g.n(); ++u) {
    adj[u] = g.n() ? g.row(u)[0] : 0;
  }
  return adj;
}

// Side sequence of `a` precedes that of `b`: at the lowest differing vertex,
// `a` has side 0.
bool mask_lex_less(mask_t a, mask_t b) {
  if (a == b) {
    return false;
  }
  return ((a >> std::countr_zero(a ^ b)) & 1u) == 0;
}

struct Best {
  std::size_t value = 0;
  mask_t mask = 0;
  bool set = false;

  void offer(std::size_t v, mask_t m) {
    if (!set || v > value || (v == value && mask_lex_less(m, mask))) {
      value = v;
      mask = m;
      set = true;
    }
  }
  void merge(const Best &o) {
    if (o.set) {
      offer(o.value, o.mask);
    }
  }
};

std::size_t full_count(const std::vector<mask_t> &adj, mask_t s) {
  std::size_t cut = 0;
  mask_t rest = s;
  while (rest) {
    const int v = std::countr_zero(rest);
    cut += static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(v)] & ~s));
    rest &= rest - 1;
  }
  return cut;
}

MaxCutResult make_result(const Graph &g, const Best &best) {
  MaxCutResult r;
  r.value = best.value;
  r.surplus = static_cast<double>(best.value) - static_cast<double>(g.m()) / 2.0;
  r.cut.side.assign(g.n(), 0);
  for (std::size_t v = 0; v < g.n(); ++v) {
    r.cut.side[v] = static_cast<std::uint8_t>((best.mask >> v) & 1u);
  }
  r.method = MaxCutMethod::exact;
  r.exact = true;
  return r;
}

} // namespace

MaxCutResult maxcut_exact_reference(const Graph &g, std::size_t limit) {
  check_limit(g, limit);
  const auto adj = adjacency_masks(g);
  Best best;
  if (g.n() == 0) {
    best.offer(0, 0);
    return make_result(g, best);
  }
  const mask_t total = mask_t{1} << (g.n() - 1);
  for (mask_t k = 0; k < total; ++k) {
    const mask_t s = k << 1;
    best.offer(full_count(adj, s), s);
  }
  return make_result(g, best);
}

MaxCutResult maxcut_exact(const Graph &g, std::size_t limit) {
  check_limit(g, limit);
  Best best;
  if (g.n() == 0) {
    best.offer(0, 0);
    return make_result(g, best);
  }
  const auto adj = adjacency_masks(g);
  std::vector<std::size_t> deg(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(static_cast<vertex_t>(v));
  }

  const std::size_t free_bits = g.n() - 1;
  const mask_t total = mask_t{1} << free_bits;
  const std::size_t chunk_bits = std::min<std::size_t>(free_bits, 8);
  const mask_t chunks = mask_t{1} << chunk_bits;
  const mask_t chunk_len = total / chunks;

  std::vector<Best> partial(chunks);
  const auto n_chunks = static_cast<std::ptrdiff_t>(chunks);
  const int threads = static_cast<int>(effective_workers());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t c = 0; c < n_chunks; ++c) {
    const mask_t begin = static_cast<mask_t>(c) * chunk_len;
    const mask_t end = begin + chunk_len;
    // Gray code k ^ (k >> 1) over free vertices 1..n-1 (bit i <-> vertex i+1).
    mask_t s = (begin ^ (begin >> 1)) << 1;
    std::size_t cut = full_count(adj, s);
    Best local;
    local.offer(cut, s);
    for (mask_t k = begin + 1; k < end; ++k) {
      const int v = std::countr_zero(k) + 1;
      const mask_t bit = mask_t{1} << v;
      const mask_t other = (s & bit) ? ~s : s;
      const auto crossing = static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(v)] & other));
      cut = cut + deg[static_cast<std::size_t>(v)] - 2 * crossing;
      s ^= bit;
      local.offer(cut, s);
    }
    partial[static_cast<std::size_t>(c)] = local;
  }
  for (const auto &p : partial) {
    best.merge(p);
  }
  return make_result(g, best);
}

void normalize_cut(Cut &cut) {
  if (!cut.side.empty() && cut.side[0] == 1) {
    for (auto &s : cut.side) {
      s ^= 1u;
    }
  }
}

bool cut_lex_less(const Cut &a, const Cut &b) { return a.side < b.side; }

Cut greedy_balanced_cut(const Graph &g) {
  Cut cut{std::vector<std::uint8_t>(g.n(), 0)};
  std::vector<std::uint8_t> placed(g.n(), 0);
  for (vertex_t v = 0; v < g.n(); ++v) {
    std::size_t on_one = 0;
    std::size_t total = 0;
    for (vertex_t u : g.neighbors(v)) {
      if (placed[u]) {
        ++total;
        on_one += cut.side[u];
      }
    }
    // join the side with fewer placed neighbours
    cut.side[v] = (on_one * 2 < total) ? 1 : 0;
    placed[v] = 1;
  }
  return cut;
}

std::size_t polish_one_flip(const Graph &g, Cut &cut, std::size_t max_passes) {
  const std::size_t n = g.n();
  std::vector<std::vector<vertex_t>> nbrs(n);
  std::vector<long> same(n, 0);
  for (vertex_t v = 0; v < n; ++v) {
    nbrs[v] = g.neighbors(v);
    for (vertex_t u : nbrs[v]) {
      same[v] += cut.side[u] == cut.side[v] ? 1 : 0;
    }
  }
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    bool improved = false;
    for (vertex_t v = 0; v < n; ++v) {
      const long deg = static_cast<long>(nbrs[v].size());
      // flipping v turns same-side edges into crossing ones and vice versa
      if (2 * same[v] > deg) {
        for (vertex_t u : nbrs[v]) {
          same[u] += cut.side[u] == cut.side[v] ? -1 : 1;
        }
        same[v] = deg - same[v];
        cut.side[v] ^= 1u;
        improved = true;
      }
    }
    if (!improved) {
      break;
    }
  }
  return cut_evaluate(g, cut).cut_size;
}

MaxCutResult maxcut_local_search(const Graph &g, const LocalSearchOptions &opts) {
  struct Candidate {
    std::size_t value = 0;
    Cut cut;
  };
  auto better = [](const Candidate &a, const Candidate &b) {
    return a.value > b.value || (a.value == b.value && cut_lex_less(a.cut, b.cut));
  };

  Candidate best;
  best.cut = greedy_balanced_cut(g);
  best.value = polish_one_flip(g, best.cut, opts.max_passes);
  normalize_cut(best.cut);

  std::vector<Candidate> starts(opts.restarts);
  const auto count = static_cast<std::ptrdiff_t>(opts.restarts);
  const int threads = static_cast<int>(effective_workers());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t r = 0; r < count; ++r) {
    const CounterRng rng(opts.seed, static_cast<std::uint64_t>(r));
    Candidate c;
    c.cut.side.resize(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
      c.cut.side[v] = static_cast<std::uint8_t>(rng.bits(v) >> 63);
    }
    c.value = polish_one_flip(g, c.cut, opts.max_passes);
    normalize_cut(c.cut);
    starts[static_cast<std::size_t>(r)] = std::move(c);
  }
  for (auto &c : starts) {
    if (better(c, best)) {
      best = std::move(c);
    }
  }

  MaxCutResult r;
  r.value = best.value;
  r.surplus = static_cast<double>(best.value) - static_cast<double>(g.m()) / 2.0;
  r.cut = std::move(best.cut);
  r.method = MaxCutMethod::local_search;
  r.exact = false;
  return r;
}

} // namespace surplab
