#include "surplab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "surplab/maxcut.hpp"
#include "surplab/parallel.hpp"
#include "surplab/random.hpp"

namespace surplab {

const char *to_string(CertificateKind k) {
  switch (k) {
  case CertificateKind::NegEigenSum: return "NegEigenSum";
  case CertificateKind::NegEigenSquares: return "NegEigenSquares";
  case CertificateKind::NegEigenCubes: return "NegEigenCubes";
  case CertificateKind::LowRankFactor: return "LowRankFactor";
  case CertificateKind::ExplicitCut: return "ExplicitCut";
  case CertificateKind::BiasedCut: return "BiasedCut";
  }
  return "unknown";
}

const char *to_string(CertificateTarget t) {
  return t == CertificateTarget::surp ? "surp" : "surp_star";
}

SymMatrix SurplusCertificate::witness_matrix(std::size_t n) const {
  if (test_matrix) {
    return *test_matrix;
  }
  SymMatrix x(n);
  if (factor.size() != n * rank) {
    return x;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < rank; ++k) {
        dot += factor[i * rank + k] * factor[j * rank + k];
      }
      x.set(i, j, dot);
    }
  }
  return x;
}

bool verify_certificate(const Graph &g, SurplusCertificate &cert, const CertificateTolerances &tol) {
  FeasibilityCheck chk;
  chk.tol = tol.bound;
  if (cert.target == CertificateTarget::surp_star) {
    const SymMatrix x = cert.witness_matrix(g.n());
    const auto psd = psd_check(x, tol.psd);
    chk.min_eigenvalue = psd.min_eigenvalue;
    chk.psd_threshold = psd.threshold;
    const auto diag = x.diagonal();
    chk.max_diag = diag.empty() ? 0.0 : *std::max_element(diag.begin(), diag.end());
    chk.witness_value = -inner(SymMatrix::adjacency(g), x);
    chk.passed = psd.psd && chk.max_diag <= 1.0 + tol.diag &&
                 std::abs(chk.witness_value - cert.bound) <= tol.bound;
  } else {
    if (cert.cut) {
      chk.witness_value = cut_evaluate(g, *cert.cut).surplus;
      chk.passed = chk.witness_value >= cert.bound - tol.bound;
    }
  }
  cert.check = chk;
  cert.feasibility_checked = chk.passed;
  return chk.passed;
}

double surplus_upper_bound_lambda(const Graph &g, const SpectralDecomposition &dec) {
  if (g.n() == 0) {
    return 0.0;
  }
  return std::abs(dec.lambda_min()) * static_cast<double>(g.n()) / 4.0;
}

double surplus_upper_bound_lambda(const Graph &g) {
  return surplus_upper_bound_lambda(g, eigendecompose(g));
}

NegEigenCertificates certificates_neg_eigen(const Graph &g, const CertificateTolerances &tol) {
  if (g.n() < 2) {
    throw GraphError("certificates_neg_eigen requires n >= 2");
  }
  return certificates_neg_eigen(g, eigendecompose(g), tol);
}

NegEigenCertificates certificates_neg_eigen(const Graph &g, const SpectralDecomposition &dec,
                                            const CertificateTolerances &tol) {
  const std::size_t n = g.n();
  if (n < 2) {
    throw GraphError("certificates_neg_eigen requires n >= 2");
  }
  NegEigenCertificates out;
  const double zero = zero_classification_tol(dec);

  std::vector<double> w_sum(n, 0.0);
  std::vector<double> w_cubes(n, 0.0);
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  double sum_cube = 0.0;
  std::size_t neg_count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double l = dec.eigenvalues[k];
    if (l < -zero) {
      w_sum[k] = 1.0;
      w_cubes[k] = l * l;
      sum_abs += -l;
      sum_sq += l * l;
      sum_cube += -l * l * l;
      ++neg_count;
    }
  }

  out.complement_max_degree = densities_and_degrees(complement(g)).max_degree;
  out.beta = 1.0 / (100.0 * (static_cast<double>(out.complement_max_degree) + 1.0));

  // (i)
  SurplusCertificate sum_cert;
  sum_cert.kind = CertificateKind::NegEigenSum;
  sum_cert.target = CertificateTarget::surp_star;
  sum_cert.bound = sum_abs;
  sum_cert.test_matrix = dec.weighted_projection(w_sum);
  sum_cert.witness = "X = sum of v_i v_i^T over " + std::to_string(neg_count) + " negative eigenvalues";

  // (iii), rescaled to unit diagonal when the density hypothesis fails
  for (auto &w : w_cubes) {
    w *= out.beta;
  }
  SymMatrix cubes_x = dec.weighted_projection(w_cubes);
  const auto cubes_diag = cubes_x.diagonal();
  out.cubes_max_diag = *std::max_element(cubes_diag.begin(), cubes_diag.end());
  if (out.cubes_max_diag > 1.0) {
    out.cubes_rescale = 1.0 / out.cubes_max_diag;
    for (auto &w : w_cubes) {
      w *= out.cubes_rescale;
    }
    cubes_x = dec.weighted_projection(w_cubes);
  }
  const double beta_eff = out.beta * out.cubes_rescale;
  SurplusCertificate cubes_cert;
  cubes_cert.kind = CertificateKind::NegEigenCubes;
  cubes_cert.target = CertificateTarget::surp_star;
  cubes_cert.bound = beta_eff * sum_cube;
  cubes_cert.test_matrix = std::move(cubes_x);
  {
    std::ostringstream os;
    os.precision(17);
    os << "X = beta * sum lambda_i^2 v_i v_i^T, beta = " << out.beta << ", rescale = " << out.cubes_rescale;
    cubes_cert.witness = os.str();
  }

  // (ii): sqrt(b_i * b_iii) lies between the two bounds, so a convex mix of
  // the two witnesses attains it exactly.
  const double b1 = sum_cert.bound;
  const double b3 = cubes_cert.bound;
  const double geo = std::sqrt(b1 * b3);
  out.squares_mix = (b1 == b3) ? 1.0 : (geo - b3) / (b1 - b3);
  out.squares_mix = std::clamp(out.squares_mix, 0.0, 1.0);
  std::vector<double> w_mix(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    w_mix[k] = out.squares_mix * w_sum[k] + (1.0 - out.squares_mix) * w_cubes[k];
  }
  SurplusCertificate sq_cert;
  sq_cert.kind = CertificateKind::NegEigenSquares;
  sq_cert.target = CertificateTarget::surp_star;
  sq_cert.bound = geo;
  sq_cert.test_matrix = dec.weighted_projection(w_mix);
  {
    std::ostringstream os;
    os.precision(17);
    os << "X = " << out.squares_mix << " * X_sum + " << (1.0 - out.squares_mix) << " * X_cubes";
    sq_cert.witness = os.str();
  }
  out.cauchy_schwarz_form = std::sqrt(beta_eff) * sum_sq;

  out.certificates.push_back(std::move(sum_cert));
  out.certificates.push_back(std::move(sq_cert));
  out.certificates.push_back(std::move(cubes_cert));
  for (auto &c : out.certificates) {
    verify_certificate(g, c, tol);
  }
  return out;
}

namespace {

double lowrank_objective(const Graph &g, const std::vector<double> &v, std::size_t r) {
  double f = 0.0;
  for (auto [i, j] : g.edges()) {
    double dot = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      dot += v[i * r + k] * v[j * r + k];
    }
    f -= 2.0 * dot;
  }
  return f;
}

} // namespace

LowRankResult surp_star_lowrank(const Graph &g, const LowRankOptions &opts) {
  if (opts.rank < 1) {
    throw GraphError("surp_star_lowrank: rank must be >= 1");
  }
  const std::size_t n = g.n();
  const std::size_t r = opts.rank;
  const CounterRng init(opts.seed, 0);
  std::vector<double> v(n * r);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      v[i * r + k] = init.normal(i * r + k);
      norm += v[i * r + k] * v[i * r + k];
    }
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < r; ++k) {
      v[i * r + k] = norm > 0.0 ? v[i * r + k] / norm : (k == 0 ? 1.0 : 0.0);
    }
  }

  std::vector<std::vector<vertex_t>> nbrs(n);
  for (vertex_t i = 0; i < n; ++i) {
    nbrs[i] = g.neighbors(i);
  }

  LowRankResult out;
  double f = lowrank_objective(g, v, r);
  std::vector<double> s(r);
  for (std::size_t sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    // The objective is linear in row i, so the projected step with unbounded
    // step size lands on -s/|s|.
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(s.begin(), s.end(), 0.0);
      for (vertex_t j : nbrs[i]) {
        for (std::size_t k = 0; k < r; ++k) {
          s[k] += v[j * r + k];
        }
      }
      double norm = 0.0;
      for (double x : s) {
        norm += x * x;
      }
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        for (std::size_t k = 0; k < r; ++k) {
          v[i * r + k] = -s[k] / norm;
        }
      }
    }
    ++out.sweeps;
    const double next = lowrank_objective(g, v, r);
    const double gain = next - f;
    f = next;
    if (gain <= opts.rel_tol * std::max(1.0, std::abs(f))) {
      break;
    }
  }

  auto &cert = out.certificate;
  cert.kind = CertificateKind::LowRankFactor;
  cert.target = CertificateTarget::surp_star;
  cert.bound = f;
  cert.factor = v;
  cert.rank = r;
  cert.witness = "X = V V^T, V is " + std::to_string(n) + " x " + std::to_string(r) + " with unit rows";
  verify_certificate(g, cert);

  // Random-hyperplane rounding, each trial on its own counter stream.
  struct Trial {
    std::size_t value = 0;
    Cut cut;
  };
  std::vector<Trial> trials(opts.rounding_trials);
  const auto count = static_cast<std::ptrdiff_t>(opts.rounding_trials);
  const int threads = static_cast<int>(effective_workers());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    const CounterRng rng(opts.seed, 1 + static_cast<std::uint64_t>(t));
    std::vector<double> normal(r);
    for (std::size_t k = 0; k < r; ++k) {
      normal[k] = rng.normal(k);
    }
    Trial tr;
    tr.cut.side.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t k = 0; k < r; ++k) {
        dot += v[i * r + k] * normal[k];
      }
      tr.cut.side[i] = dot < 0.0 ? 1 : 0;
    }
    tr.value = polish_one_flip(g, tr.cut, opts.polish_passes);
    normalize_cut(tr.cut);
    trials[static_cast<std::size_t>(t)] = std::move(tr);
  }
  Trial best;
  best.cut = greedy_balanced_cut(g);
  best.value = polish_one_flip(g, best.cut, opts.polish_passes);
  normalize_cut(best.cut);
  for (auto &tr : trials) {
    if (tr.value > best.value || (tr.value == best.value && cut_lex_less(tr.cut, best.cut))) {
      best = std::move(tr);
    }
  }
  out.cut = std::move(best.cut);
  out.cut_surplus = cut_evaluate(g, out.cut).surplus;
  out.rounding_ratio = cert.bound > 0.0 ? out.cut_surplus / cert.bound : 0.0;
  return out;
}

BiasedCutResult biased_partition_cut(const Graph &g, const VertexSet &x, const VertexSet &y,
                                     std::uint64_t seed, std::size_t samples) {
  const std::size_t n = g.n();
  {
    std::vector<std::uint8_t> seen(n, 0);
    for (const auto *part : {&x, &y}) {
      for (vertex_t v : *part) {
        if (v >= n || seen[v]) {
          throw GraphError("biased_partition_cut: X and Y must partition the vertex set");
        }
        seen[v] = 1;
      }
    }
    if (x.size() + y.size() != n) {
      throw GraphError("biased_partition_cut: X and Y must partition the vertex set");
    }
  }

  BiasedCutResult out;
  out.a = induced_subgraph(g, x).m();
  out.b = bipartite_edges(g, x, y);
  out.c = induced_subgraph(g, y).m();
  const double a = static_cast<double>(out.a);
  const double b = static_cast<double>(out.b);
  const double c = static_cast<double>(out.c);
  const double nd = static_cast<double>(std::max<std::size_t>(n, 1));
  out.analytic_bound = b * b / (4.0 * nd * nd) - c;

  Cut best = Cut::from_set(n, x);
  std::size_t best_value = cut_evaluate(g, best).cut_size;
  auto &cert = out.certificate;
  cert.target = CertificateTarget::surp;

  if (2 * out.a <= out.b) {
    out.deterministic = true;
    cert.kind = CertificateKind::ExplicitCut;
    cert.witness = "cut (X, Y)";
  } else {
    out.bias = b / (4.0 * a);
    out.expected_surplus = b * b / (8.0 * a) - c / 2.0;
    cert.kind = CertificateKind::BiasedCut;
    const double keep = 0.5 + out.bias;
    for (std::size_t s = 0; s < samples; ++s) {
      const CounterRng rng(seed, s);
      Cut cand{std::vector<std::uint8_t>(n, 0)};
      for (vertex_t v : x) {
        cand.side[v] = rng.uniform(v) < keep ? 1 : 0;
      }
      const std::size_t value = cut_evaluate(g, cand).cut_size;
      if (value > best_value || (value == best_value && cut_lex_less(cand, best))) {
        best = std::move(cand);
        best_value = value;
      }
    }
    std::ostringstream os;
    os.precision(17);
    os << "best of " << samples << " cuts (U, rest) with U sampled from X at rate " << keep;
    cert.witness = os.str();
  }
  cert.bound = static_cast<double>(best_value) - static_cast<double>(g.m()) / 2.0;
  cert.cut = std::move(best);
  verify_certificate(g, cert);
  return out;
}

Graph two_clique_graph(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = a + b + c;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  auto add_clique = [&](std::vector<vertex_t> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        edges.emplace_back(members[i], members[j]);
      }
    }
  };
  std::vector<vertex_t> c1, c2;
  for (std::size_t v = 0; v < a; ++v) c1.push_back(static_cast<vertex_t>(v));
  for (std::size_t v = a; v < a + b; ++v) c2.push_back(static_cast<vertex_t>(v));
  for (std::size_t v = a + b; v < n; ++v) {
    c1.push_back(static_cast<vertex_t>(v));
    c2.push_back(static_cast<vertex_t>(v));
  }
  add_clique(c1);
  add_clique(c2);
  return Graph::from_edges(n, edges);
}

TwoCliqueResult two_clique_cut(std::size_t a, std::size_t b, std::size_t c) {
  if (a + b + c == 0) {
    throw GraphError("two_clique_cut requires a + b + c >= 1");
  }
  TwoCliqueResult out;
  out.graph = two_clique_graph(a, b, c);
  const std::size_t n = a + b + c;
  std::vector<vertex_t> va, vb, vc;
  for (std::size_t v = 0; v < a; ++v) va.push_back(static_cast<vertex_t>(v));
  for (std::size_t v = a; v < a + b; ++v) vb.push_back(static_cast<vertex_t>(v));
  for (std::size_t v = a + b; v < n; ++v) vc.push_back(static_cast<vertex_t>(v));
  out.private_a = VertexSet(va);
  out.private_b = VertexSet(vb);
  out.shared = VertexSet(vc);

  // Work on the balanced core with both private sides truncated to s.
  const std::size_t s = std::min(a, b);
  const std::size_t k = (s + c) / 2;
  Cut cut{std::vector<std::uint8_t>(n, 0)};
  std::vector<std::uint8_t> placed(n, 0);
  for (std::size_t i = 0; i < s; ++i) {
    placed[va[i]] = placed[vb[i]] = 1;
  }
  for (vertex_t v : vc) {
    placed[v] = 1;
  }
  if (c <= s) {
    for (std::size_t i = 0; i < k; ++i) {
      cut.side[va[i]] = cut.side[vb[i]] = 1;
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      cut.side[vc[i]] = 1;
    }
  }
  // Truncated vertices go opposite the majority of their placed neighbours.
  for (const auto *side : {&va, &vb}) {
    for (std::size_t i = s; i < side->size(); ++i) {
      const vertex_t v = (*side)[i];
      std::size_t in_one = 0;
      std::size_t total = 0;
      for (vertex_t u : out.graph.neighbors(v)) {
        if (placed[u]) {
          ++total;
          in_one += cut.side[u];
        }
      }
      cut.side[v] = (2 * in_one > total) ? 0 : 1;
      placed[v] = 1;
    }
  }
  out.cut_surplus = cut_evaluate(out.graph, cut).surplus;
  out.cut = std::move(cut);
  const double m2 = static_cast<double>(std::min({a * a, b * b, c * c}));
  out.bound = m2 / 4.0;
  return out;
}

} // namespace surplab
