#include "surplab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "surplab/certificates.hpp"
#include "surplab/extraction.hpp"
#include "surplab/generators.hpp"
#include "surplab/graph_io.hpp"
#include "surplab/maxcut.hpp"
#include "surplab/parallel.hpp"
#include "surplab/report.hpp"
#include "surplab/spectral.hpp"
#include "surplab/stability.hpp"
#include "surplab/verify.hpp"

namespace surplab::cli {

namespace {

struct Options {
  std::string json_path;
  std::size_t workers = 0;
  std::uint64_t seed = 1;
  PipelineParams params;
  double min_degree = -1.0;
  std::string graph_path;

  // maxcut
  bool heuristic = false;
  bool relaxed = false;
  std::size_t restarts = 16;
  // certify
  std::size_t rank = 4;
  std::size_t trials = 64;
  // extract
  std::string mode = "chain";
  // gen
  GraphSpec spec;
  std::string family = "gnp";
  std::string spec_json;
  std::string output;
  // verify
  std::string suite = "all";
  std::size_t count = 100;
};

struct Outcome {
  int code = kOk;
  Json findings = Json::object();
  std::optional<Graph> input;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

Graph load(const Options &o) {
  if (o.graph_path == "-") {
    return read_graph(std::cin);
  }
  return read_graph_file(o.graph_path);
}

Outcome cmd_maxcut(const Options &o, std::ostream &out) {
  Outcome res;
  const Graph g = load(o);
  res.input = g;
  MaxCutResult mc;
  if (!o.heuristic && g.n() <= o.params.exact_limit) {
    mc = maxcut_exact(g, o.params.exact_limit);
  } else {
    LocalSearchOptions ls;
    ls.seed = o.seed;
    ls.restarts = o.restarts;
    mc = maxcut_local_search(g, ls);
  }
  const double md = static_cast<double>(g.m());
  const double edwards = md / 2.0 + (std::sqrt(8.0 * md + 1.0) - 1.0) / 8.0;
  res.findings["maxcut"] = to_json(mc);
  res.findings["bounds"] = Json{{"half_edges", md / 2.0},
                                {"edwards_lower", edwards},
                                {"lambda_upper_surplus", surplus_upper_bound_lambda(g)}};
  out << "maxcut: value " << mc.value << ", surplus " << fmt(mc.surplus) << " (" << to_string(mc.method) << ")\n";
  out << "  n " << g.n() << ", m " << g.m() << ", Edwards bound " << fmt(edwards)
      << ", |lambda_n| n/4 = " << fmt(surplus_upper_bound_lambda(g)) << "\n";
  return res;
}

Outcome cmd_certify(const Options &o, std::ostream &out) {
  Outcome res;
  const Graph g = load(o);
  res.input = g;
  Json certs = Json::array();
  bool all_ok = true;
  auto emit = [&](const SurplusCertificate &c) {
    certs.push_back(to_json(c));
    all_ok = all_ok && c.feasibility_checked;
    out << "  " << to_string(c.kind) << " (" << to_string(c.target) << "): bound " << fmt(c.bound) << ", "
        << (c.feasibility_checked ? "verified" : "FAILED verification") << "\n";
  };
  out << "certify: n " << g.n() << ", m " << g.m() << "\n";
  const double upper = surplus_upper_bound_lambda(g);
  out << "  upper bound surp <= |lambda_n| n/4 = " << fmt(upper) << "\n";
  res.findings["surplus_upper_bound"] = upper;

  if (g.n() >= 2) {
    const auto neg = certificates_neg_eigen(g);
    for (const auto &c : neg.certificates) {
      emit(c);
    }
    res.findings["neg_eigen"] = Json{{"complement_max_degree", neg.complement_max_degree},
                                     {"beta", neg.beta},
                                     {"cubes_max_diag", neg.cubes_max_diag},
                                     {"cubes_rescale", neg.cubes_rescale},
                                     {"squares_mix", neg.squares_mix},
                                     {"cauchy_schwarz_form", neg.cauchy_schwarz_form}};
  }
  LowRankOptions lr;
  lr.rank = o.rank;
  lr.seed = o.seed;
  lr.rounding_trials = o.trials;
  const auto low = surp_star_lowrank(g, lr);
  emit(low.certificate);
  res.findings["lowrank"] = Json{{"sweeps", low.sweeps},
                                 {"rounded_cut_surplus", low.cut_surplus},
                                 {"rounding_ratio", low.rounding_ratio},
                                 {"cut", to_json(low.cut)}};

  SurplusCertificate cut_cert;
  cut_cert.kind = CertificateKind::ExplicitCut;
  cut_cert.target = CertificateTarget::surp;
  MaxCutResult mc;
  if (g.n() <= o.params.exact_limit) {
    mc = maxcut_exact(g, o.params.exact_limit);
  } else {
    LocalSearchOptions ls;
    ls.seed = o.seed;
    mc = maxcut_local_search(g, ls);
  }
  cut_cert.bound = mc.surplus;
  cut_cert.cut = mc.cut;
  cut_cert.witness = std::string("cut from ") + to_string(mc.method);
  verify_certificate(g, cut_cert);
  emit(cut_cert);
  res.findings["certificates"] = certs;
  res.code = all_ok ? kOk : kNotCertified;
  return res;
}

Outcome cmd_spectrum(const Options &o, std::ostream &out) {
  Outcome res;
  const Graph g = load(o);
  res.input = g;
  const auto dec = eigendecompose(g);
  res.findings["spectrum"] = spectrum_summary(dec);
  out << "spectrum: n " << g.n() << ", lambda_1 " << fmt(dec.lambda_max()) << ", lambda_n " << fmt(dec.lambda_min())
      << ", sweeps " << dec.sweeps << "\n";
  try {
    const auto ps = power_sums(dec, g);
    res.findings["power_sums"] = to_json(ps);
    out << "  power sums: trace/frobenius/triangle residuals " << fmt(ps.trace_residual) << " "
        << fmt(ps.frobenius_residual) << " " << fmt(ps.triangle_residual) << "\n";
  } catch (const SpectralError &e) {
    res.findings["power_sums"] = Json{{"error", e.what()}};
    out << "  power sums: FAILED: " << e.what() << "\n";
    res.code = kNotCertified;
  }
  if (g.n() >= 2) {
    const auto w = weyl_check(g);
    res.findings["weyl"] = to_json(w);
    out << "  Weyl complement inequality: " << (w.ok ? "holds" : "VIOLATED") << ", max slack " << fmt(w.max_slack)
        << "\n";
    if (!w.ok) {
      res.code = kNotCertified;
    }
  }
  const auto pv = principal_vector_check(g, dec);
  res.findings["principal_vector"] = to_json(pv);
  if (pv.applicable) {
    out << "  principal vector bounds: " << pv.violations.size() << " violations\n";
    if (!pv.violations.empty()) {
      res.code = kNotCertified;
    }
  } else {
    out << "  principal vector bounds: not applicable (complement density " << fmt(pv.complement_density)
        << " > 0.1)\n";
  }
  return res;
}

Outcome cmd_extract(const Options &o, std::ostream &out) {
  Outcome res;
  const Graph g = load(o);
  res.input = g;
  const auto &p = o.params;
  res.findings["mode"] = o.mode;
  if (o.mode == "step") {
    const auto s = density_increment_step(g, p);
    res.findings["step"] = to_json(s);
    out << "density step: |I| = " << s.selected.size() << " of " << g.n() << ", density "
        << fmt(edge_density(g)) << " -> " << fmt(s.new_density) << ", D psd: " << (s.diagnostics.d_psd.psd ? "yes" : "NO")
        << "\n";
  } else if (o.mode == "increment") {
    const auto tr = density_increment_iterate(g, p);
    res.findings["trace"] = to_json(tr);
    out << "density increment: " << tr.steps.size() - 1 << " steps, final n " << tr.steps.back().n << ", density "
        << fmt(tr.steps.back().density) << " (" << tr.halt_reason << ")\n";
  } else if (o.mode == "balanced") {
    const double c = p.balance_for(g.n());
    const auto b = extract_balanced(g, c);
    res.findings["balanced"] = to_json(b);
    out << "balanced: kept " << b.kept.size() << " of " << g.n() << " after " << b.rounds << " rounds (C = " << fmt(c)
        << ")\n";
  } else if (o.mode == "cliques") {
    const auto cover = pull_cliques(g, p);
    res.findings["cliques"] = to_json(cover);
    out << "cliques: " << cover.cliques.size() << " pulled (target " << cover.target << "), residual "
        << cover.residual.size() << ", low degree " << cover.low_degree_removed.size() << "\n";
  } else if (o.mode == "clique") {
    const auto c = find_max_clique(g, p.clique_exact_limit);
    res.findings["clique"] = Json{{"clique", to_json(c.clique)}, {"size", c.clique.size()}, {"exact", c.exact}};
    out << "max clique: size " << c.clique.size() << (c.exact ? " (exact)" : " (heuristic)") << "\n";
  } else {
    const auto chain = master_chain(g, p);
    res.findings["chain"] = to_json(chain);
    out << "master chain: clique of size " << chain.clique.size() << ", target m^(1/2-30eps) = "
        << fmt(chain.target_size) << "\n";
    for (const auto &st : chain.stages) {
      out << "  " << st.name << ": n " << st.n << ", density " << fmt(st.density) << (st.met ? "" : " [unmet]")
          << " - " << st.note << "\n";
    }
  }
  return res;
}

Outcome cmd_stability(const Options &o, std::ostream &out) {
  Outcome res;
  const Graph g = load(o);
  res.input = g;
  const auto rep = stability_certificate(g, o.params);
  res.findings["stability"] = to_json(rep);
  out << "stability: " << to_string(rep.status) << ", " << rep.cover.cliques.size() << " cliques\n";
  if (rep.status == StabilityStatus::certified) {
    out << "  edit distance " << *rep.edit_distance << ", closeness " << fmt(*rep.closeness) << "\n";
  } else {
    out << "  " << rep.failure << "\n";
  }
  out << "  eigenvalue gate: surp <= " << fmt(rep.gate_surplus_bound) << "\n";
  res.code = rep.status == StabilityStatus::certified ? kOk : kNotCertified;
  return res;
}

Outcome cmd_gen(Options o, std::ostream &out) {
  Outcome res;
  GraphSpec spec = o.spec;
  if (!o.spec_json.empty()) {
    spec = GraphSpec::from_json(o.spec_json);
  } else {
    spec.family = family_from_string(o.family);
    spec.seed = o.seed;
  }
  const Graph g = generate(spec);
  res.findings["spec"] = Json::parse(spec.to_json());
  res.findings["graph"] = Json{{"n", g.n()}, {"m", g.m()}, {"digest", graph_digest(g)}};
  if (o.output.empty() || o.output == "-") {
    write_graph(out, g);
  } else {
    write_graph_file(o.output, g);
    out << "wrote " << to_string(spec.family) << " graph (n " << g.n() << ", m " << g.m() << ") to " << o.output
        << "\n";
  }
  return res;
}

Outcome cmd_verify(const Options &o, std::ostream &out) {
  Outcome res;
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  Json arr = Json::array();
  bool all_ok = true;
  for (const auto &name : suites) {
    const auto r = run_suite(name, o.count, o.seed, o.params);
    arr.push_back(r.to_json());
    all_ok = all_ok && r.ok();
    out << name << ": " << r.passed << "/" << r.count << " pass" << (r.ok() ? "" : " FAIL") << "\n";
    for (const auto &f : r.failures) {
      out << "  " << f << "\n";
    }
  }
  res.findings["count"] = o.count;
  res.findings["seed"] = o.seed;
  res.findings["suites"] = arr;
  res.code = all_ok ? kOk : kNotCertified;
  return res;
}

void add_params(CLI::App &app, Options &o) {
  auto &p = o.params;
  app.add_option("--json", o.json_path, "Write the JSON report to this path");
  app.add_option("--workers", o.workers, "Worker threads (default: SURPLAB_WORKERS or all cores)");
  app.add_option("--seed", o.seed, "Seed for every randomised step")->capture_default_str();
  app.add_option("--exact-limit", p.exact_limit, "Largest n for exact MaxCut")->capture_default_str();
  app.add_option("--eps", p.eps, "eps")->capture_default_str();
  app.add_option("--alpha", p.alpha, "alpha")->capture_default_str();
  app.add_option("--delta", p.delta, "delta")->capture_default_str();
  app.add_option("--C", p.balance_c, "Balance parameter C (0: 4 log2 n)")->capture_default_str();
  app.add_option("--eps0", p.eps0, "Auxiliary eps0 (0: 1.1 eps)")->capture_default_str();
  app.add_option("--alpha0", p.alpha0, "Auxiliary alpha0 (0: 1.1 alpha)")->capture_default_str();
  app.add_option("--theta-lo", p.theta_lo, "Sparse block threshold")->capture_default_str();
  app.add_option("--theta-hi", p.theta_hi, "Dense block threshold")->capture_default_str();
  app.add_option("--clique-target", p.clique_target, "Minimum pulled clique size")->capture_default_str();
  app.add_option("--clique-exact-limit", p.clique_exact_limit, "Largest n for exact clique search")
      ->capture_default_str();
  app.add_option("--dense-finder", p.dense_finder, "Dense subgraph strategy")->capture_default_str();
  app.add_option("--max-residual-fraction", p.max_residual_edge_fraction,
                 "Stability: allowed fraction of edges outside the cliques")
      ->capture_default_str();
  app.add_option("--min-degree", o.min_degree, "Degree floor before clique pulling (default n^(1-2eps))");
  app.add_flag("--relaxed", o.relaxed, "Only require alpha > 0 instead of the strict range");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Surplus certificates, spectral checks and clique-structure extraction for graphs", "surplab"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  add_params(app, o);

  auto *maxcut = app.add_subcommand("maxcut", "Maximum cut: exact up to --exact-limit, local search beyond");
  maxcut->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();
  maxcut->add_flag("--heuristic", o.heuristic, "Force local search");
  maxcut->add_option("--restarts", o.restarts, "Local-search restarts")->capture_default_str();

  auto *certify = app.add_subcommand("certify", "Surplus certificates with independent feasibility checks");
  certify->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();
  certify->add_option("--rank", o.rank, "Low-rank factor width")->capture_default_str();
  certify->add_option("--trials", o.trials, "Hyperplane rounding trials")->capture_default_str();

  auto *spectrum = app.add_subcommand("spectrum", "Eigenvalues and spectral identities");
  spectrum->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();

  auto *extract = app.add_subcommand("extract", "Density increment, balanced peeling, clique search");
  extract->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();
  extract->add_option("--mode", o.mode, "step | increment | balanced | cliques | clique | chain")
      ->check(CLI::IsMember({"step", "increment", "balanced", "cliques", "clique", "chain"}))
      ->capture_default_str();

  auto *stability = app.add_subcommand("stability", "Distance to a disjoint union of cliques");
  stability->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();

  auto *gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", o.family, "Graph family")->check(CLI::IsMember(family_names()))->capture_default_str();
  gen->add_option("--spec", o.spec_json, "Full JSON spec (overrides the other generator flags)");
  gen->add_option("--n", o.spec.n, "Vertices");
  gen->add_option("--p", o.spec.p, "Edge probability");
  gen->add_option("--sizes", o.spec.sizes, "Clique sizes")->delimiter(',');
  gen->add_option("--flips", o.spec.flips, "Pairs to flip");
  gen->add_option("--a", o.spec.a, "Size a");
  gen->add_option("--b", o.spec.b, "Size b");
  gen->add_option("--c", o.spec.c, "Size c");
  gen->add_option("--r", o.spec.r, "Parts");
  gen->add_option("--q", o.spec.q, "Paley modulus");
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto *verify = app.add_subcommand("verify", "Seeded property suites");
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("all");
  verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--count", o.count, "Instances per suite")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::size_t workers = o.workers;
  if (workers == 0) {
    if (const char *env = std::getenv("SURPLAB_WORKERS")) {
      try {
        workers = static_cast<std::size_t>(std::stoul(env));
      } catch (const std::exception &) {
        err << "error: SURPLAB_WORKERS must be a positive integer\n";
        return kUsage;
      }
    }
  }
  set_workers(workers);
  if (o.min_degree >= 0.0) {
    o.params.min_degree = o.min_degree;
  }
  o.params.seed = o.seed;
  o.params.strict_ranges = !o.relaxed;

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  Outcome res;
  try {
    o.params.validate();
    if (maxcut->parsed()) {
      command = "maxcut";
      res = cmd_maxcut(o, out);
    } else if (certify->parsed()) {
      command = "certify";
      res = cmd_certify(o, out);
    } else if (spectrum->parsed()) {
      command = "spectrum";
      res = cmd_spectrum(o, out);
    } else if (extract->parsed()) {
      command = "extract";
      res = cmd_extract(o, out);
    } else if (stability->parsed()) {
      command = "stability";
      res = cmd_stability(o, out);
    } else if (gen->parsed()) {
      command = "gen";
      res = cmd_gen(o, out);
    } else {
      command = "verify";
      res = cmd_verify(o, out);
    }
  } catch (const GraphFormatError &e) {
    err << "error: " << (e.line() ? o.graph_path + ": " : "") << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!o.json_path.empty()) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["tool"] = Json{{"name", "surplab"}, {"version", kToolVersion}};
    report["command"] = command;
    report["exit_code"] = res.code;
    if (res.input) {
      report["input"] = Json{{"digest", graph_digest(*res.input)}, {"n", res.input->n()}, {"m", res.input->m()}};
    } else {
      report["input"] = nullptr;
    }
    report["params"] = to_json(o.params);
    report["findings"] = res.findings;
    report["timing"] = Json{{"wall_seconds", seconds}, {"workers", effective_workers()}};
    std::ofstream f(o.json_path);
    if (!f) {
      err << "error: cannot write report to '" << o.json_path << "'\n";
      return kUsage;
    }
    f << dump_json(report);
  }
  return res.code;
}

} // namespace surplab::cli
