#include "surplab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "surplab/certificates.hpp"
#include "surplab/generators.hpp"
#include "surplab/maxcut.hpp"
#include "surplab/random.hpp"
#include "surplab/spectral.hpp"
#include "surplab/stability.hpp"

namespace surplab {

Json SuiteResult::to_json() const {
  Json j{{"suite", suite}, {"count", count}, {"passed", passed}, {"ok", ok()}, {"tol", tol}};
  j["failures"] = failures;
  j["stats"] = stats;
  return j;
}

Graph sample_graph(std::uint64_t seed, std::uint64_t stream, std::size_t index, std::size_t n_min, std::size_t n_max,
                   double p_min, double p_max) {
  const CounterRng rng(seed, stream);
  const std::uint64_t k = 3 * static_cast<std::uint64_t>(index);
  const std::size_t n = n_min + static_cast<std::size_t>(rng.below(k, n_max - n_min + 1));
  const double p = p_min + (p_max - p_min) * rng.uniform(k + 1);
  return gnp(n, p, rng.bits(k + 2));
}

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

// Collects the outcome of one instance.
class Instance {
public:
  Instance(SuiteResult &r, std::string label) : r_(r), label_(std::move(label)) {}
  ~Instance() {
    ++r_.count;
    if (ok_) {
      ++r_.passed;
    }
  }
  void check(bool cond, const std::string &what) {
    if (!cond) {
      if (ok_ && r_.failures.size() < kMaxReportedFailures) {
        r_.failures.push_back(label_ + ": " + what);
      }
      ok_ = false;
    }
  }

private:
  SuiteResult &r_;
  std::string label_;
  bool ok_ = true;
};

std::string describe(std::size_t idx, const Graph &g) {
  std::ostringstream os;
  os << "#" << idx << " (n=" << g.n() << ", m=" << g.m() << ")";
  return os.str();
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double edwards_bound(std::size_t m) {
  const double md = static_cast<double>(m);
  return md / 2.0 + (std::sqrt(8.0 * md + 1.0) - 1.0) / 8.0;
}

// Stream ids keep the suites' instance families independent of each other.
enum Stream : std::uint64_t {
  kEdwards = 101,
  kEgk,
  kSpectralBound,
  kNegEigen,
  kPrincipalVector,
  kWeyl,
  kPowerSums,
  kDensityIterate,
  kDensityStep,
  kBalanced,
  kBiasedCut,
  kRank1Round,
  kStability,
};

SuiteResult suite_edwards(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "edwards";
  r.tol = 1e-9;
  double min_slack = 1e300;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kEdwards, i, 1, 12, 0.0, 1.0);
    Instance inst(r, describe(i, g));
    const auto mc = maxcut_exact(g);
    const double md = static_cast<double>(g.m());
    inst.check(static_cast<double>(mc.value) >= md / 2.0, "mc < m/2");
    const double slack = static_cast<double>(mc.value) - edwards_bound(g.m());
    min_slack = std::min(min_slack, slack);
    inst.check(slack >= -r.tol, "mc below Edwards bound by " + num(-slack));
  }
  Json eq = Json::array();
  for (std::size_t n : {3, 5, 7}) {
    const Graph g = complete_graph(n);
    Instance inst(r, "K" + std::to_string(n));
    const double gap = static_cast<double>(maxcut_exact(g).value) - edwards_bound(g.m());
    inst.check(std::abs(gap) <= r.tol, "Edwards bound not tight, gap " + num(gap));
    eq.push_back(Json{{"n", n}, {"gap", gap}});
  }
  r.stats["min_slack"] = count ? min_slack : 0.0;
  r.stats["odd_cliques"] = eq;
  return r;
}

SuiteResult suite_egk(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "egk";
  r.tol = 1e-9;
  double min_ratio = 1e300;
  for (std::size_t i = 0; i < count; ++i) {
    Graph g0 = sample_graph(seed, kEgk, i, 2, 12, 0.1, 1.0);
    // Attach each isolated vertex v to v+1 mod n.
    auto edges = g0.edges();
    for (vertex_t v = 0; v < g0.n(); ++v) {
      if (g0.degree(v) == 0) {
        edges.emplace_back(v, static_cast<vertex_t>((v + 1) % g0.n()));
      }
    }
    std::vector<std::pair<vertex_t, vertex_t>> fixed;
    for (auto [u, v] : edges) {
      fixed.emplace_back(std::min(u, v), std::max(u, v));
    }
    const Graph g = build_graph(fixed, g0.n());
    Instance inst(r, describe(i, g));
    const double s = maxcut_exact(g).surplus;
    const double bound = static_cast<double>(g.n()) / 6.0;
    min_ratio = std::min(min_ratio, s / bound);
    inst.check(s >= bound - r.tol, "surplus " + num(s) + " < n/6");
  }
  r.stats["min_surplus_over_n6"] = count ? min_ratio : 0.0;
  return r;
}

SuiteResult suite_spectral_bound(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "spectral_bound";
  r.tol = 1e-6;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kSpectralBound, i, 1, 12, 0.0, 1.0);
    Instance inst(r, describe(i, g));
    const double s = maxcut_exact(g).surplus;
    const double ub = surplus_upper_bound_lambda(g);
    inst.check(s <= ub + r.tol, "surplus " + num(s) + " exceeds |lambda_n| n/4 = " + num(ub));
  }
  {
    const Graph k2 = complete_graph(2);
    Instance inst(r, "K2");
    const double gap = surplus_upper_bound_lambda(k2) - maxcut_exact(k2).surplus;
    inst.check(std::abs(gap) <= r.tol, "K2 not tight, gap " + num(gap));
    r.stats["k2_gap"] = gap;
  }
  return r;
}

SuiteResult suite_neg_eigen(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "neg_eigen";
  r.tol = 1e-6;
  std::size_t emitted = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kNegEigen, i, 2, 40, 0.0, 1.0);
    Instance inst(r, describe(i, g));
    const auto certs = certificates_neg_eigen(g);
    for (const auto &c : certs.certificates) {
      ++emitted;
      inst.check(c.feasibility_checked, std::string(to_string(c.kind)) + " failed verification (min eig " +
                                            num(c.check.min_eigenvalue) + ", max diag " + num(c.check.max_diag) +
                                            ", value " + num(c.check.witness_value) + " vs " + num(c.bound) + ")");
    }
    const auto &sum = certs.certificates[0];
    inst.check(certs.certificates[1].bound <= sum.bound + r.tol, "(ii) exceeds (i)");
  }
  Json kn = Json::array();
  for (std::size_t n : {2, 3, 5, 8, 13, 20}) {
    Instance inst(r, "K" + std::to_string(n));
    const auto certs = certificates_neg_eigen(complete_graph(n));
    const double b = certs.certificates[0].bound;
    inst.check(std::abs(b - static_cast<double>(n - 1)) <= r.tol, "(i) bound " + num(b) + " != n-1");
    kn.push_back(Json{{"n", n}, {"bound_i", b}});
  }
  r.stats["certificates_checked"] = emitted;
  r.stats["complete_graphs"] = kn;
  return r;
}

SuiteResult suite_principal_vector(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "principal_vector";
  r.tol = 0.0;
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kPrincipalVector, i, 8, 40, 0.88, 1.0);
    Instance inst(r, describe(i, g));
    const auto dec = eigendecompose(g);
    const auto rep = principal_vector_check(g, dec);
    r.tol = std::max(r.tol, rep.tol);
    if (rep.applicable) {
      ++applicable;
      inst.check(rep.violations.empty(), std::to_string(rep.violations.size()) + " vertices outside [" +
                                             num(rep.lower) + ", " + num(rep.upper) + "]");
    }
  }
  r.stats["applicable"] = applicable;
  return r;
}

SuiteResult suite_weyl(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "weyl";
  r.tol = 1e-6;
  double max_slack = -1e300;
  std::size_t equalities = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kWeyl, i, 2, 30, 0.0, 1.0);
    Instance inst(r, describe(i, g));
    const auto w = weyl_check(g, r.tol);
    max_slack = std::max(max_slack, w.max_slack);
    equalities += w.equality_cases;
    inst.check(w.ok, "max slack " + num(w.max_slack));
  }
  r.stats["max_slack"] = count ? max_slack : 0.0;
  r.stats["equality_cases"] = equalities;
  return r;
}

SuiteResult suite_powersums(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "powersums";
  r.tol = 1e-5;
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kPowerSums, i, 1, 30, 0.0, 1.0);
    Instance inst(r, describe(i, g));
    try {
      const auto ps = power_sums(eigendecompose(g), g, r.tol);
      worst = std::max({worst, ps.trace_residual, ps.frobenius_residual, ps.triangle_residual});
    } catch (const SpectralError &e) {
      inst.check(false, e.what());
    }
  }
  r.stats["max_relative_residual"] = worst;
  return r;
}

void check_trace(Instance &inst, const Graph &g, const ExtractionTrace &tr, double tol) {
  inst.check(tr.steps.size() - 1 <= density_increment_step_cap(g.n()), "too many steps");
  for (std::size_t k = 0; k < tr.steps.size(); ++k) {
    const auto &st = tr.steps[k];
    const Graph sub = induced_subgraph(g, st.vertices);
    inst.check(std::abs(edge_density(sub) - st.density) <= tol, "recorded density mismatch at step " +
                                                                    std::to_string(k));
    if (k > 0) {
      const auto &prev = tr.steps[k - 1];
      const bool nested = st.vertices.size() < prev.vertices.size() &&
                          std::includes(prev.vertices.begin(), prev.vertices.end(), st.vertices.begin(),
                                        st.vertices.end());
      inst.check(nested, "step " + std::to_string(k) + " not strictly nested");
      inst.check(st.density >= prev.density - tol, "density decreased at step " + std::to_string(k));
    }
  }
}

// K_k plus one or two vertices joined to at most k/6 clique vertices; the
// stragglers have small v1 entries, so a density step removes them.
Graph clique_with_stragglers(std::uint64_t seed, std::uint64_t stream, std::size_t index) {
  const CounterRng rng(seed, stream + 500);
  const std::uint64_t base = 100 * static_cast<std::uint64_t>(index);
  const std::size_t k = 12 + static_cast<std::size_t>(rng.below(base, 19));
  const std::size_t extra = 1 + static_cast<std::size_t>(rng.below(base + 1, 2));
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < k; ++u) {
    for (vertex_t v = u + 1; v < k; ++v) {
      edges.emplace_back(u, v);
    }
  }
  for (std::size_t e = 0; e < extra; ++e) {
    const auto w = static_cast<vertex_t>(k + e);
    const std::size_t links = 1 + static_cast<std::size_t>(rng.below(base + 2 + e, k / 6));
    for (auto u : sample_distinct(k, links, rng.bits(base + 10 + e), 0)) {
      edges.emplace_back(static_cast<vertex_t>(u), w);
    }
  }
  return build_graph(edges, k + extra);
}

// At desk scale n^-alpha is close to 1, so the configured iteration usually
// halts at once; a relaxed run with alpha = 1 exercises actual steps.
SuiteResult suite_density_iterate(std::size_t count, std::uint64_t seed, const PipelineParams &params) {
  SuiteResult r;
  r.suite = "density_iterate";
  r.tol = 1e-12;
  PipelineParams relaxed = params;
  relaxed.strict_ranges = false;
  relaxed.alpha = 1.0;
  relaxed.alpha0 = 0.0;
  std::size_t max_steps = 0;
  std::size_t relaxed_steps = 0;
  std::size_t stalls = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = i % 2 == 0 ? sample_graph(seed, kDensityIterate, i, 8, 40, 0.85, 1.0)
                               : clique_with_stragglers(seed, kDensityIterate, i);
    Instance inst(r, describe(i, g));
    const auto tr = density_increment_iterate(g, params);
    max_steps = std::max(max_steps, tr.steps.size() - 1);
    stalls += tr.stalled ? 1 : 0;
    check_trace(inst, g, tr, r.tol);
    const auto tr2 = density_increment_iterate(g, relaxed);
    relaxed_steps += tr2.steps.size() - 1;
    check_trace(inst, g, tr2, r.tol);
  }
  r.stats["max_steps"] = max_steps;
  r.stats["stalled_runs"] = stalls;
  r.stats["relaxed_alpha"] = relaxed.alpha;
  r.stats["relaxed_total_steps"] = relaxed_steps;
  return r;
}

// Re-derives I from a fresh eigendecomposition and compares.
bool membership_reverified(const Graph &g, const DensityStepResult &res) {
  const auto dec = eigendecompose(g);
  const std::size_t n = g.n();
  const double zero = zero_classification_tol(dec);
  std::vector<double> e_diag(n, 0.0);
  double trace = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (dec.eigenvalues[k] < -zero) {
      const auto v = dec.vector(k);
      for (std::size_t i = 0; i < n; ++i) {
        e_diag[i] += -dec.eigenvalues[k] * v[i] * v[i];
      }
      trace += -dec.eigenvalues[k];
    }
  }
  const auto &d = res.diagnostics;
  const double theta = 4.0 * trace / static_cast<double>(n);
  const auto v1 = dec.vector(0);
  for (vertex_t i = 0; i < n; ++i) {
    const bool in = e_diag[i] <= theta + d.theta_e_tol && v1[i] >= d.v1_threshold - d.v1_tol;
    if (in != res.selected.contains(i)) {
      return false;
    }
  }
  return true;
}

SuiteResult suite_density_step(std::size_t count, std::uint64_t seed, const PipelineParams &params) {
  SuiteResult r;
  r.suite = "density_step";
  r.tol = 1e-8;
  std::size_t applicable = 0;
  auto run = [&](const Graph &g, const std::string &label) {
    Instance inst(r, label);
    const auto res = density_increment_step(g, params);
    const auto &d = res.diagnostics;
    if (d.size_guarantee_applicable) {
      ++applicable;
      inst.check(d.size_guarantee_holds, "|I| = " + std::to_string(res.selected.size()) + " < n/4");
    }
    inst.check(membership_reverified(g, res), "membership of I not reproduced");
    inst.check(d.d_psd.psd, "D not PSD, min eigenvalue " + num(d.d_psd.min_eigenvalue));
    inst.check(d.quadratic_form >= -r.tol * d.d_psd.scale, "1_I^T D 1_I negative");
  };
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kDensityStep, i, 12, 60, 0.9, 1.0);
    run(g, describe(i, g));
  }
  for (std::size_t n = 12; n <= 60; ++n) {
    run(clique_minus_matching(n), "K" + std::to_string(n) + " minus matching");
  }
  r.stats["size_guarantee_applicable"] = applicable;
  return r;
}

SuiteResult suite_balanced(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "balanced";
  r.tol = 1e-9;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kBalanced, i, 2, 60, 0.0, 1.0);
    Instance inst(r, describe(i, g));
    const double c = 4.0 * std::log2(static_cast<double>(g.n()));
    const auto res = extract_balanced(g, c);
    const auto st = densities_and_degrees(res.h);
    inst.check(static_cast<double>(st.max_degree) <= c * st.avg_degree + r.tol, "not C-balanced");
    inst.check(static_cast<double>(res.kept.size()) >= res.size_bound - r.tol,
               "kept " + std::to_string(res.kept.size()) + " < " + num(res.size_bound));
    inst.check(st.edge_density <= edge_density(g) + r.tol, "density increased");
    inst.check(induced_subgraph(g, res.kept) == res.h, "H is not G[S]");
  }
  return r;
}

SuiteResult suite_biased_cut(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "biased_cut";
  r.tol = 1e-9;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = sample_graph(seed, kBiasedCut, i, 2, 12, 0.0, 1.0);
    const CounterRng rng(seed, kBiasedCut + 1000);
    std::vector<vertex_t> x, y;
    for (vertex_t v = 0; v < g.n(); ++v) {
      (rng.bits(i * 64 + v) >> 63 ? x : y).push_back(v);
    }
    Instance inst(r, describe(i, g));
    const auto res = biased_partition_cut(g, VertexSet(x), VertexSet(y), seed);
    const double s = maxcut_exact(g).surplus;
    inst.check(s >= res.analytic_bound - r.tol, "surplus " + num(s) + " < b^2/(4n^2) - c = " + num(res.analytic_bound));
    inst.check(res.certificate.feasibility_checked, "biased cut certificate failed verification");
    inst.check(res.certificate.bound >= res.analytic_bound - r.tol, "emitted cut below the analytic bound");
  }
  return r;
}

SuiteResult suite_rank1_round(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "rank1_round";
  r.tol = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const CounterRng rng(seed, kRank1Round);
    const std::uint64_t base = 1000 * static_cast<std::uint64_t>(i);
    const std::size_t n = 4 + static_cast<std::size_t>(rng.below(base, 27));
    std::vector<std::uint8_t> x(n), y(n);
    for (std::size_t t = 0; t < n; ++t) {
      x[t] = static_cast<std::uint8_t>(rng.bits(base + 1 + t) >> 63);
      y[t] = static_cast<std::uint8_t>(rng.bits(base + 101 + t) >> 63);
    }
    x[0] = y[0] = 1;
    BoolMatrix a = BoolMatrix::outer(x, y);
    const std::size_t k = i % 5 == 0 ? 0 : static_cast<std::size_t>(rng.below(base + 500, n * n / 10 + 1));
    for (auto cell : sample_distinct(n * n, k, rng.bits(base + 501), 0)) {
      a.bits[cell] ^= 1u;
    }
    Instance inst(r, "#" + std::to_string(i) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    const auto [u, v] = top_singular_pair(a);
    const auto res = rank1_boolean_round(a, u, v);
    const double nn = static_cast<double>(n * n);
    const double allowed = 20.0 * std::cbrt(res.delta) * nn;
    if (allowed > 0) {
      worst = std::max(worst, static_cast<double>(res.error) / allowed);
    }
    inst.check(static_cast<double>(res.error) <= allowed,
               "error " + std::to_string(res.error) + " > 20 delta^(1/3) n^2 = " + num(allowed));
    if (k == 0) {
      inst.check(res.error == 0, "planted rectangle not recovered exactly");
    }
    inst.check(res.error == hamming(a, BoolMatrix::outer(res.x, res.y)), "error count not reproducible");
  }
  r.stats["max_error_over_allowed"] = worst;
  return r;
}

SuiteResult suite_two_cliques() {
  SuiteResult r;
  r.suite = "two_cliques";
  r.tol = 1e-9;
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (std::size_t c = 1; c <= 4; ++c) {
        Instance inst(r, "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c));
        const auto res = two_clique_cut(a, b, c);
        inst.check(res.cut_surplus >= res.bound - r.tol, "construction surplus " + num(res.cut_surplus));
        const double s = maxcut_exact(res.graph).surplus;
        inst.check(s >= res.bound - r.tol, "oracle surplus " + num(s));
      }
    }
  }
  return r;
}

SuiteResult suite_stability(std::size_t count, std::uint64_t seed, const PipelineParams &params) {
  SuiteResult r;
  r.suite = "stability";
  r.tol = 0.0;
  std::size_t certified_perturbed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const CounterRng rng(seed, kStability);
    const std::uint64_t base = 100 * static_cast<std::uint64_t>(i);
    // 3-4 cliques of 15-20 vertices keep every clique degree above the
    // default floor n^(1 - 2 eps) (at most 80^0.6 ~ 13.9).
    std::vector<std::size_t> sizes(3 + static_cast<std::size_t>(rng.below(base, 2)));
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      sizes[t] = 15 + static_cast<std::size_t>(rng.below(base + 1 + t, 6));
    }
    const int kind = static_cast<int>(i % 3);
    GraphSpec spec;
    spec.sizes = sizes;
    spec.seed = rng.bits(base + 50);
    Graph g;
    if (kind == 0) {
      spec.family = Family::disjoint_cliques;
    } else if (kind == 1) {
      spec.family = Family::perturbed_clique_union;
      spec.flips = 1 + static_cast<std::size_t>(rng.below(base + 51, 8));
    }
    if (kind == 2) {
      g = gnp(60, 0.5, spec.seed);
    } else {
      g = generate(spec);
    }
    Instance inst(r, describe(i, g) + (kind == 0 ? " disjoint" : kind == 1 ? " perturbed" : " gnp"));
    const auto rep = stability_certificate(g, params);
    const bool certified = rep.status == StabilityStatus::certified;
    if (kind == 0) {
      inst.check(certified && rep.edit_distance == std::size_t{0}, "planted disjoint cliques not recovered");
    } else if (kind == 2) {
      inst.check(!certified && !rep.failure.empty(), "G(60, 0.5) certified");
    }
    if (certified) {
      certified_perturbed += kind == 1 ? 1 : 0;
      inst.check(rep.edit_distance == edit_distance_to_partition_cliques(g, rep.parts), "edit distance mismatch");
      inst.check(rep.model == clique_union(g.n(), rep.parts), "model graph mismatch");
      for (std::size_t p = 0; p < rep.cluster_parts; ++p) {
        inst.check(is_clique(rep.gamma, (*rep.audit.clusters)[p]), "cluster is not complete in Gamma");
      }
    }
  }
  r.stats["certified_perturbed"] = certified_perturbed;
  return r;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"edwards", "egk",     "spectral_bound", "neg_eigen", "principal_vector",
                                              "weyl",    "powersums", "density_iterate", "density_step", "balanced",
                                              "biased_cut", "rank1_round", "two_cliques", "stability"};
  return names;
}

SuiteResult run_suite(const std::string &name, std::size_t count, std::uint64_t seed, const PipelineParams &params) {
  if (name == "edwards") return suite_edwards(count, seed);
  if (name == "egk") return suite_egk(count, seed);
  if (name == "spectral_bound") return suite_spectral_bound(count, seed);
  if (name == "neg_eigen") return suite_neg_eigen(count, seed);
  if (name == "principal_vector") return suite_principal_vector(count, seed);
  if (name == "weyl") return suite_weyl(count, seed);
  if (name == "powersums") return suite_powersums(count, seed);
  if (name == "density_iterate") return suite_density_iterate(count, seed, params);
  if (name == "density_step") return suite_density_step(count, seed, params);
  if (name == "balanced") return suite_balanced(count, seed);
  if (name == "biased_cut") return suite_biased_cut(count, seed);
  if (name == "rank1_round") return suite_rank1_round(count, seed);
  if (name == "two_cliques") return suite_two_cliques();
  if (name == "stability") return suite_stability(count, seed, params);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace surplab
