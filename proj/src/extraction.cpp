#include "surplab/extraction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace surplab {

void PipelineParams::validate() const {
  if (!(eps > 0.0 && eps < 0.25)) {
    throw ParamError("eps", "must lie in (0, 1/4)");
  }
  if (!(alpha > 0.0)) {
    throw ParamError("alpha", "must be positive");
  }
  if (strict_ranges) {
    const double cap = std::min(1.0 / 12.0 - eps / 6.0, 1.0 / 6.0 - 2.0 * eps / 3.0);
    if (!(alpha < cap)) {
      throw ParamError("alpha", "must be below min{1/12 - eps/6, 1/6 - 2 eps/3} = " + std::to_string(cap));
    }
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParamError("delta", "must lie in (0, 1)");
  }
  if (balance_c < 0.0) {
    throw ParamError("C", "must be non-negative (0 selects 4 log2 n)");
  }
  if (eps0 != 0.0 && !(eps0 > eps && eps0 < 0.25)) {
    throw ParamError("eps0", "must lie in (eps, 1/4)");
  }
  if (alpha0 != 0.0 && !(alpha0 > alpha)) {
    throw ParamError("alpha0", "must exceed alpha");
  }
  if (!(theta_lo >= 0.0 && theta_lo < theta_hi && theta_hi <= 1.0)) {
    throw ParamError("theta", "need 0 <= theta_lo < theta_hi <= 1");
  }
  if (!(max_residual_edge_fraction >= 0.0 && max_residual_edge_fraction <= 1.0)) {
    throw ParamError("max_residual_edge_fraction", "must lie in [0, 1]");
  }
  if (min_degree && *min_degree < 0.0) {
    throw ParamError("min_degree", "must be non-negative");
  }
  if (exact_limit == 0) {
    throw ParamError("exact_limit", "must be positive");
  }
  dense_finder_names();  // make sure built-ins are registered
  (void)::surplab::dense_finder(dense_finder);
}

double PipelineParams::balance_for(std::size_t n) const {
  if (balance_c > 0.0) {
    return balance_c;
  }
  return 4.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
}

// ---------------------------------------------------------------------------
// density increment

DensityStepResult density_increment_step(const Graph &g, const PipelineParams &params) {
  const std::size_t n = g.n();
  if (n < 4) {
    throw GraphError("density_increment_step requires n >= 4");
  }
  (void)params;
  DensityStepResult out;
  auto &dg = out.diagnostics;
  dg.complement_density = 1.0 - edge_density(g);
  const double p = dg.complement_density;
  dg.small_p_regime = p < 1e-5;

  const auto dec = eigendecompose(g);
  const double zero = zero_classification_tol(dec);
  dg.lambda1 = dec.lambda_max();
  const auto v1 = dec.vector(0);
  out.v1.assign(v1.begin(), v1.end());

  const SymMatrix a = SymMatrix::adjacency(g);
  SymMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      b.set(i, j, a(i, j) - dg.lambda1 * v1[i] * v1[j]);
    }
  }
  std::vector<double> e_weights(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (dec.eigenvalues[k] < -zero) {
      e_weights[k] = -dec.eigenvalues[k];
    }
  }
  const SymMatrix e = dec.weighted_projection(e_weights);
  out.e_diag = e.diagonal();
  dg.trace_e = e.trace();

  const double nd = static_cast<double>(n);
  dg.theta_e = 4.0 * dg.trace_e / nd;
  dg.theta_e_tol = 1e-9 * std::max(1.0, dg.theta_e);
  dg.v1_threshold = (1.0 - 8.0 * p) / std::sqrt(nd);
  dg.v1_tol = dec.residual_tol;

  std::vector<vertex_t> chosen;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.e_diag[i] <= dg.theta_e + dg.theta_e_tol && v1[i] >= dg.v1_threshold - dg.v1_tol) {
      chosen.push_back(static_cast<vertex_t>(i));
    }
  }
  out.selected = VertexSet(std::move(chosen));
  const Graph gi = induced_subgraph(g, out.selected);
  out.new_density = edge_density(gi);
  const std::size_t k = out.selected.size();
  dg.complement_edges_in_i = k * (k - (k ? 1 : 0)) / 2 - gi.m();
  dg.size_guarantee_applicable = p <= 0.1;
  dg.size_guarantee_holds = 4 * k >= n;

  SymMatrix b_plus_e(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      b_plus_e.set(i, j, b(i, j) + e(i, j));
    }
  }
  const SymMatrix bbb[] = {b, b, b};
  const SymMatrix bbe[] = {b, b, e};
  const SymMatrix bee[] = {b, e, e};
  const SymMatrix eee[] = {e, e, e};
  const SymMatrix ddd[] = {b_plus_e, b_plus_e, b_plus_e};
  dg.term_bbb = hadamard(bbb).indicator_form(out.selected);
  dg.term_bbe = 3.0 * hadamard(bbe).indicator_form(out.selected);
  dg.term_bee = 3.0 * hadamard(bee).indicator_form(out.selected);
  dg.term_eee = hadamard(eee).indicator_form(out.selected);
  const SymMatrix d = hadamard(ddd);
  dg.quadratic_form = d.indicator_form(out.selected);
  dg.d_psd = psd_check(d);
  return out;
}

std::size_t density_increment_step_cap(std::size_t n) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 4));
  return 3 * static_cast<std::size_t>(std::ceil(std::log2(std::log2(nn)))) + 3;
}

double density_increment_size_floor(std::size_t n, const PipelineParams &params) {
  const double nd = static_cast<double>(n);
  const double by_eps = std::pow(nd, (1.0 + params.eps) / (1.0 + params.eps0_value()));
  const double by_alpha = std::pow(nd, params.alpha / params.alpha0_value());
  return std::max({by_eps, by_alpha, 4.0});
}

ExtractionTrace density_increment_iterate(const Graph &g, const PipelineParams &params) {
  params.validate();
  ExtractionTrace trace;
  const std::size_t n = g.n();
  VertexSet current = VertexSet::range(static_cast<vertex_t>(n));
  Graph gi = g;
  auto record = [&](std::string note) {
    TraceStep st;
    st.vertices = current;
    st.n = gi.n();
    st.density = edge_density(gi);
    st.complement_density = gi.n() >= 2 ? 1.0 - st.density : 0.0;
    st.note = std::move(note);
    trace.steps.push_back(std::move(st));
  };
  record("input");

  const double stop_density = std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), -params.alpha);
  const double floor = density_increment_size_floor(n, params);
  const std::size_t cap = density_increment_step_cap(n);

  for (std::size_t step = 0;; ++step) {
    const double p = trace.steps.back().complement_density;
    if (p < stop_density) {
      trace.halt_reason = "complement density below n^-alpha";
      break;
    }
    if (static_cast<double>(gi.n()) < floor) {
      trace.halt_reason = "size floor reached";
      break;
    }
    if (step >= cap) {
      trace.halt_reason = "step cap reached";
      break;
    }
    const auto res = density_increment_step(gi, params);
    const double new_p = 1.0 - res.new_density;
    if (res.selected.size() == gi.n() || res.selected.size() < 2 || !(new_p < p)) {
      trace.stalled = true;
      trace.halt_reason = "stalled: complement density did not decrease";
      break;
    }
    current = current.lift(res.selected);
    gi = induced_subgraph(g, current);
    record(res.diagnostics.small_p_regime ? "step" : "step (outside p < 1e-5 regime)");
  }
  return trace;
}

// ---------------------------------------------------------------------------
// balanced peeling

BalancedResult extract_balanced(const Graph &g, double balance_c) {
  BalancedResult out;
  const std::size_t n = g.n();
  out.balance_c = balance_c;
  const double log_n = std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
  out.size_bound_applies = balance_c >= 4.0 * log_n;
  out.size_bound = balance_c > 0.0 ? (1.0 - 2.0 * log_n / balance_c) * static_cast<double>(n) : 0.0;

  VertexSet kept = VertexSet::range(static_cast<vertex_t>(n));
  Graph cur = g;
  double prev_avg = -1.0;
  while (cur.n() > 0) {
    const double d = densities_and_degrees(cur).avg_degree;
    if (prev_avg >= 0.0 && d >= prev_avg / 2.0) {
      break;
    }
    if (d == 0.0) {
      break;
    }
    const double cutoff = balance_c * d / 2.0;
    std::vector<vertex_t> stay;
    for (vertex_t v = 0; v < cur.n(); ++v) {
      if (static_cast<double>(cur.degree(v)) < cutoff) {
        stay.push_back(v);
      }
    }
    if (stay.size() == cur.n()) {
      break;
    }
    const VertexSet local(std::move(stay));
    kept = kept.lift(local);
    cur = induced_subgraph(cur, local);
    prev_avg = d;
    ++out.rounds;
  }
  out.h = std::move(cur);
  out.kept = std::move(kept);
  return out;
}

// ---------------------------------------------------------------------------
// clique search

bool is_clique(const Graph &g, const VertexSet &s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits &b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Max clique by branch and bound with greedy colouring (MCQ style). Vertices
// are relabelled by non-increasing degree so colour classes stay small.
class CliqueSearch {
public:
  explicit CliqueSearch(const Graph &g) : n_(g.n()), words_((g.n() + 63) / 64) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), vertex_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); });
    std::vector<vertex_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      pos[order_[i]] = static_cast<vertex_t>(i);
    }
    adj_.assign(n_, Bits(words_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (vertex_t u : g.neighbors(order_[i])) {
        const vertex_t j = pos[u];
        adj_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
      }
    }
  }

  VertexSet run() {
    Bits all(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      all[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    if (n_ > 0) {
      expand(all);
    }
    std::vector<vertex_t> out;
    for (vertex_t i : best_) {
      out.push_back(order_[i]);
    }
    return VertexSet::from_unsorted(std::move(out));
  }

private:
  void colour_sort(const Bits &p, std::vector<vertex_t> &verts, std::vector<std::size_t> &colours) const {
    Bits uncoloured = p;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits q = uncoloured;
      while (any(q)) {
        std::size_t w = 0;
        while (q[w] == 0) {
          ++w;
        }
        const auto v = static_cast<vertex_t>(w * 64 + std::countr_zero(q[w]));
        q[w] &= q[w] - 1;
        uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        for (std::size_t k = 0; k < words_; ++k) {
          q[k] &= ~adj_[v][k];
        }
        verts.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  void expand(Bits p) {
    std::vector<vertex_t> verts;
    std::vector<std::size_t> colours;
    colour_sort(p, verts, colours);
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colours[idx] <= best_.size()) {
        return;
      }
      const vertex_t v = verts[idx];
      current_.push_back(v);
      Bits next(words_);
      for (std::size_t k = 0; k < words_; ++k) {
        next[k] = p[k] & adj_[v][k];
      }
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<vertex_t> order_;
  std::vector<Bits> adj_;
  std::vector<vertex_t> current_;
  std::vector<vertex_t> best_;
};

VertexSet greedy_clique_from(const Graph &g, vertex_t start) {
  std::vector<vertex_t> clique{start};
  std::vector<vertex_t> cand = g.neighbors(start);
  while (!cand.empty()) {
    vertex_t pick = cand.front();
    std::size_t best_links = 0;
    bool first = true;
    for (vertex_t c : cand) {
      std::size_t links = 0;
      for (vertex_t d : cand) {
        links += g.adjacent(c, d) ? 1 : 0;
      }
      if (first || links > best_links) {
        pick = c;
        best_links = links;
        first = false;
      }
    }
    clique.push_back(pick);
    std::vector<vertex_t> next;
    for (vertex_t c : cand) {
      if (c != pick && g.adjacent(c, pick)) {
        next.push_back(c);
      }
    }
    cand = std::move(next);
  }
  return VertexSet::from_unsorted(std::move(clique));
}

} // namespace

CliqueResult find_max_clique(const Graph &g, std::size_t limit_exact) {
  CliqueResult out;
  if (g.n() <= limit_exact) {
    out.clique = CliqueSearch(g).run();
    out.exact = true;
  } else {
    for (vertex_t v = 0; v < g.n(); ++v) {
      auto c = greedy_clique_from(g, v);
      if (c.size() > out.clique.size()) {
        out.clique = std::move(c);
      }
    }
    out.exact = false;
  }
  if (!is_clique(g, out.clique)) {
    throw std::logic_error("find_max_clique produced a non-clique");
  }
  return out;
}

// ---------------------------------------------------------------------------
// clique pulling

double clique_pull_degree_floor(std::size_t n, const PipelineParams &params) {
  if (params.min_degree) {
    return *params.min_degree;
  }
  return std::pow(static_cast<double>(n), 1.0 - 2.0 * params.eps);
}

std::size_t clique_pull_target(std::size_t n, const PipelineParams &params) {
  const auto by_delta = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), 1.0 - params.delta)));
  return std::max({params.clique_target, by_delta, std::size_t{1}});
}

CliqueCover pull_cliques(const Graph &g, const PipelineParams &params) {
  params.validate();
  CliqueCover out;
  const std::size_t n = g.n();
  out.degree_floor = clique_pull_degree_floor(n, params);
  out.target = clique_pull_target(n, params);

  std::vector<vertex_t> survivors;
  std::vector<vertex_t> removed;
  for (vertex_t v = 0; v < n; ++v) {
    (static_cast<double>(g.degree(v)) < out.degree_floor ? removed : survivors).push_back(v);
  }
  out.low_degree_removed = VertexSet(std::move(removed));
  VertexSet current(std::move(survivors));

  while (current.size() >= out.target) {
    const Graph gi = induced_subgraph(g, current);
    const auto found = find_max_clique(gi, params.clique_exact_limit);
    out.exact = out.exact && found.exact;
    if (found.clique.size() < out.target || found.clique.empty()) {
      break;
    }
    out.cliques.push_back(current.lift(found.clique));
    std::vector<vertex_t> rest;
    for (std::size_t i = 0, j = 0; i < current.size(); ++i) {
      if (j < found.clique.size() && found.clique[j] == i) {
        ++j;
        continue;
      }
      rest.push_back(current[i]);
    }
    current = VertexSet(std::move(rest));
  }
  out.residual = std::move(current);
  return out;
}

// ---------------------------------------------------------------------------
// dense finders

namespace {

std::mutex &registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, DenseFinder> &registry() {
  static std::map<std::string, DenseFinder> r{{"peel", peel_dense_subgraph}};
  return r;
}

} // namespace

void register_dense_finder(const std::string &name, DenseFinder finder) {
  std::lock_guard lock(registry_mutex());
  registry()[name] = std::move(finder);
}

DenseFinder dense_finder(const std::string &name) {
  std::lock_guard lock(registry_mutex());
  auto it = registry().find(name);
  if (it == registry().end()) {
    throw ParamError("dense_finder", "unknown strategy '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> dense_finder_names() {
  std::lock_guard lock(registry_mutex());
  std::vector<std::string> names;
  for (const auto &[name, fn] : registry()) {
    names.push_back(name);
  }
  return names;
}

std::optional<VertexSet> peel_dense_subgraph(const Graph &g, double min_density, std::size_t min_size) {
  const std::size_t n = g.n();
  if (n == 0 || n < min_size) {
    return std::nullopt;
  }
  std::vector<std::size_t> deg = g.degrees();
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<vertex_t> removal;
  std::size_t edges = g.m();

  // Densest admissible remaining set; ties favour the larger set, which is
  // seen first.
  auto density_of = [](std::size_t e, std::size_t k) {
    return k < 2 ? 0.0 : static_cast<double>(e) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
  };
  std::size_t best_removed = 0;
  double best_density = density_of(edges, n);
  for (std::size_t k = n; k > std::max<std::size_t>(min_size, 1); --k) {
    vertex_t pick = 0;
    bool found = false;
    for (vertex_t v = 0; v < n; ++v) {
      if (alive[v] && (!found || deg[v] < deg[pick])) {
        pick = v;
        found = true;
      }
    }
    alive[pick] = 0;
    removal.push_back(pick);
    edges -= deg[pick];
    for (vertex_t u : g.neighbors(pick)) {
      if (alive[u]) {
        --deg[u];
      }
    }
    const double dens = density_of(edges, k - 1);
    if (dens > best_density) {
      best_density = dens;
      best_removed = removal.size();
    }
  }
  if (best_density < min_density) {
    return std::nullopt;
  }
  std::vector<std::uint8_t> gone(n, 0);
  for (std::size_t i = 0; i < best_removed; ++i) {
    gone[removal[i]] = 1;
  }
  std::vector<vertex_t> keep;
  for (vertex_t v = 0; v < n; ++v) {
    if (!gone[v]) {
      keep.push_back(v);
    }
  }
  return VertexSet(std::move(keep));
}

// ---------------------------------------------------------------------------
// master chain

MasterChainReport master_chain(const Graph &g, const PipelineParams &params) {
  params.validate();
  MasterChainReport rep;
  const std::size_t n = g.n();
  rep.target_size = std::pow(static_cast<double>(std::max<std::size_t>(g.m(), 1)), 0.5 - 30.0 * params.eps);

  auto stage = [&](std::string name, const VertexSet &vs, bool met, std::string note) {
    ChainStage st;
    st.name = std::move(name);
    st.vertices = vs;
    st.n = vs.size();
    st.density = edge_density(induced_subgraph(g, vs));
    st.met = met;
    st.note = std::move(note);
    rep.stages.push_back(std::move(st));
  };

  // Stage 1: dense subgraph.
  const std::size_t min_size = clique_pull_target(n, params);
  const auto finder = dense_finder(params.dense_finder);
  const auto dense = finder(g, kDenseStageDensity, min_size);
  VertexSet s1 = dense ? *dense : VertexSet::range(static_cast<vertex_t>(n));
  stage("dense_subgraph", s1, dense.has_value(),
        dense ? "finder '" + params.dense_finder + "' reached density >= 1 - 1e-5"
              : "finder '" + params.dense_finder + "' found no set of size >= " + std::to_string(min_size) +
                    " with density >= 1 - 1e-5; continuing with the whole graph");

  // Stage 2: density increment.
  const Graph g1 = induced_subgraph(g, s1);
  VertexSet s2 = s1;
  if (g1.n() >= 4) {
    rep.increment_trace = density_increment_iterate(g1, params);
    s2 = s1.lift(rep.increment_trace.steps.back().vertices);
    stage("density_increment", s2, !rep.increment_trace.stalled, rep.increment_trace.halt_reason);
  } else {
    stage("density_increment", s2, true, "skipped: fewer than 4 vertices");
  }

  // Stage 3: balanced peeling of the complement.
  const Graph g2 = induced_subgraph(g, s2);
  const double c = params.balance_for(g2.n());
  const auto bal = extract_balanced(complement(g2), c);
  const VertexSet s3 = s2.lift(bal.kept);
  {
    const double n2 = static_cast<double>(std::max<std::size_t>(g2.n(), 2));
    const double target = 1.0 - std::pow(std::log2(n2), 2.0) * std::pow(n2, 2.0 * params.eps - 1.0);
    const double dens = edge_density(induced_subgraph(g, s3));
    const bool met = dens >= target && 2 * s3.size() >= g2.n();
    stage("balanced_complement", s3, met,
          "complement C-balanced with C = " + std::to_string(c) + "; density target " + std::to_string(target));
  }

  // Stage 4: clique.
  const Graph g3 = induced_subgraph(g, s3);
  const auto cl = find_max_clique(g3, params.clique_exact_limit);
  rep.clique = s3.lift(cl.clique);
  rep.clique_exact = cl.exact;
  stage("clique", rep.clique, !rep.clique.empty(), cl.exact ? "exact search" : "heuristic search");
  return rep;
}

} // namespace surplab
