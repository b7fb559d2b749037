#include "surplab/report.hpp"

#include <cmath>
#include <cstdio>

#include "surplab/graph_io.hpp"

namespace surplab {

namespace {

void dump_string(std::string &out, const std::string &s) {
  // nlohmann's escaping is fine for strings; only floats need custom output.
  out += Json(s).dump();
}

void dump_value(std::string &out, const Json &j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (const auto &[key, val] : j.items()) {
      if (!first) {
        out += ',';
      }
      first = false;
      newline(depth + 1);
      dump_string(out, key);
      out += indent >= 0 ? ": " : ":";
      dump_value(out, val, indent, depth + 1);
    }
    newline(depth);
    out += '}';
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += '[';
    bool first = true;
    for (const auto &val : j) {
      if (!first) {
        out += ',';
      }
      first = false;
      newline(depth + 1);
      dump_value(out, val, indent, depth + 1);
    }
    newline(depth);
    out += ']';
    return;
  }
  case Json::value_t::number_float: {
    const double d = j.get<double>();
    if (!std::isfinite(d)) {
      out += "null";
      return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    out += buf;
    return;
  }
  default:
    out += j.dump();
  }
}

} // namespace

std::string dump_json(const Json &j, int indent) {
  std::string out;
  dump_value(out, j, indent, 0);
  out += '\n';
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string graph_digest(const Graph &g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_text(g))));
  return buf;
}

Json to_json(const VertexSet &s) { return Json(s.members()); }

Json to_json(const Cut &c) {
  Json a = Json::array();
  for (auto s : c.side) {
    a.push_back(static_cast<int>(s));
  }
  return a;
}

Json to_json(const MaxCutResult &r) {
  return Json{{"value", r.value}, {"surplus", r.surplus}, {"method", to_string(r.method)},
              {"exact", r.exact},  {"cut", to_json(r.cut)}};
}

Json to_json(const PipelineParams &p) {
  Json j{{"eps", p.eps},
         {"alpha", p.alpha},
         {"delta", p.delta},
         {"C", p.balance_c},
         {"eps0", p.eps0_value()},
         {"alpha0", p.alpha0_value()},
         {"exact_limit", p.exact_limit},
         {"clique_exact_limit", p.clique_exact_limit},
         {"clique_target", p.clique_target},
         {"dense_finder", p.dense_finder},
         {"theta_lo", p.theta_lo},
         {"theta_hi", p.theta_hi},
         {"max_residual_edge_fraction", p.max_residual_edge_fraction},
         {"strict_ranges", p.strict_ranges},
         {"seed", p.seed}};
  j["min_degree"] = p.min_degree ? Json(*p.min_degree) : Json(nullptr);
  return j;
}

Json spectrum_summary(const SpectralDecomposition &dec) {
  return Json{{"n", dec.n},
              {"eigenvalues", dec.eigenvalues},
              {"lambda_max", dec.lambda_max()},
              {"lambda_min", dec.lambda_min()},
              {"sweeps", dec.sweeps},
              {"max_residual", dec.max_residual},
              {"max_orthogonality_error", dec.max_orthogonality_error},
              {"tol", dec.residual_tol}};
}

Json to_json(const PowerSums &p) {
  return Json{{"lambda1", p.lambda1},
              {"P1", p.p1},
              {"P2", p.p2},
              {"P3", p.p3},
              {"N1", p.n1},
              {"N2", p.n2},
              {"N3", p.n3},
              {"T", p.t},
              {"triangles", p.triangles},
              {"trace_residual", p.trace_residual},
              {"frobenius_residual", p.frobenius_residual},
              {"triangle_residual", p.triangle_residual},
              {"tol", p.tol}};
}

Json to_json(const WeylReport &w) {
  return Json{{"ok", w.ok},
              {"max_slack", w.max_slack},
              {"equality_cases", w.equality_cases},
              {"slacks", w.slacks},
              {"tol", w.tol}};
}

Json to_json(const PrincipalVectorReport &r) {
  return Json{{"applicable", r.applicable},
              {"complement_density", r.complement_density},
              {"complement_max_degree", r.complement_max_degree},
              {"lower", r.lower},
              {"upper", r.upper},
              {"violations", r.violations},
              {"tol", r.tol}};
}

Json to_json(const PsdVerdict &v) {
  return Json{{"psd", v.psd}, {"min_eigenvalue", v.min_eigenvalue}, {"scale", v.scale}, {"threshold", v.threshold}};
}

Json to_json(const SurplusCertificate &c) {
  Json j{{"kind", to_string(c.kind)},
         {"target", to_string(c.target)},
         {"bound", c.bound},
         {"witness", c.witness},
         {"feasibility_checked", c.feasibility_checked}};
  j["check"] = Json{{"passed", c.check.passed},
                    {"min_eigenvalue", c.check.min_eigenvalue},
                    {"psd_threshold", c.check.psd_threshold},
                    {"max_diag", c.check.max_diag},
                    {"witness_value", c.check.witness_value},
                    {"tol", c.check.tol}};
  if (c.rank) {
    j["rank"] = c.rank;
  }
  if (c.cut) {
    j["cut"] = to_json(*c.cut);
  }
  return j;
}

Json to_json(const DensityStepResult &r) {
  const auto &d = r.diagnostics;
  return Json{{"selected", to_json(r.selected)},
              {"new_density", r.new_density},
              {"diagnostics",
               Json{{"complement_density", d.complement_density},
                    {"small_p_regime", d.small_p_regime},
                    {"lambda1", d.lambda1},
                    {"trace_E", d.trace_e},
                    {"theta_E", d.theta_e},
                    {"theta_E_tol", d.theta_e_tol},
                    {"v1_threshold", d.v1_threshold},
                    {"v1_tol", d.v1_tol},
                    {"size_guarantee_applicable", d.size_guarantee_applicable},
                    {"size_guarantee_holds", d.size_guarantee_holds},
                    {"term_BBB", d.term_bbb},
                    {"term_BBE", d.term_bbe},
                    {"term_BEE", d.term_bee},
                    {"term_EEE", d.term_eee},
                    {"quadratic_form", d.quadratic_form},
                    {"D_psd", to_json(d.d_psd)},
                    {"complement_edges_in_I", d.complement_edges_in_i}}}};
}

Json to_json(const ExtractionTrace &t) {
  Json steps = Json::array();
  for (const auto &s : t.steps) {
    steps.push_back(Json{{"vertices", to_json(s.vertices)},
                         {"n", s.n},
                         {"density", s.density},
                         {"complement_density", s.complement_density},
                         {"note", s.note}});
  }
  return Json{{"steps", steps}, {"halt_reason", t.halt_reason}, {"stalled", t.stalled}};
}

Json to_json(const BalancedResult &b) {
  const auto st = densities_and_degrees(b.h);
  return Json{{"kept", to_json(b.kept)},
              {"n", b.h.n()},
              {"m", b.h.m()},
              {"rounds", b.rounds},
              {"C", b.balance_c},
              {"size_bound_applies", b.size_bound_applies},
              {"size_bound", b.size_bound},
              {"max_degree", st.max_degree},
              {"avg_degree", st.avg_degree},
              {"density", st.edge_density}};
}

Json to_json(const MasterChainReport &r) {
  Json stages = Json::array();
  for (const auto &s : r.stages) {
    stages.push_back(Json{{"name", s.name},
                          {"vertices", to_json(s.vertices)},
                          {"n", s.n},
                          {"density", s.density},
                          {"met", s.met},
                          {"note", s.note}});
  }
  return Json{{"stages", stages},
              {"increment_trace", to_json(r.increment_trace)},
              {"clique", to_json(r.clique)},
              {"clique_size", r.clique.size()},
              {"clique_exact", r.clique_exact},
              {"target_size", r.target_size}};
}

Json to_json(const CliqueCover &c) {
  Json cliques = Json::array();
  for (const auto &k : c.cliques) {
    cliques.push_back(to_json(k));
  }
  return Json{{"cliques", cliques},
              {"residual", to_json(c.residual)},
              {"low_degree_removed", to_json(c.low_degree_removed)},
              {"degree_floor", c.degree_floor},
              {"target", c.target},
              {"exact", c.exact}};
}

Json to_json(const StabilityReport &r) {
  Json j{{"status", to_string(r.status)}, {"failure", r.failure}};
  j["cover"] = to_json(r.cover);
  j["residual_edges"] = r.residual_edges;
  j["residual_edge_fraction"] = r.residual_edge_fraction;
  Json blocks = Json::array();
  for (const auto &b : r.blocks.blocks) {
    blocks.push_back(
        Json{{"i", b.i}, {"j", b.j}, {"edges", b.edges}, {"density", b.density}, {"label", to_string(b.label)}});
  }
  j["blocks"] = Json{{"theta_lo", r.blocks.theta_lo},
                     {"theta_hi", r.blocks.theta_hi},
                     {"pairs", blocks},
                     {"ambiguous", r.blocks.ambiguous}};
  j["gamma"] = Json{{"n", r.gamma.n()}, {"edges", r.gamma.edges()}};
  Json audit{{"cherry_free", r.audit.cherry_free}};
  audit["witness"] = r.audit.witness ? Json(*r.audit.witness) : Json(nullptr);
  if (r.audit.clusters) {
    Json cl = Json::array();
    for (const auto &c : *r.audit.clusters) {
      cl.push_back(to_json(c));
    }
    audit["clusters"] = cl;
  } else {
    audit["clusters"] = nullptr;
  }
  j["cherry_audit"] = audit;
  Json parts = Json::array();
  for (const auto &p : r.parts) {
    parts.push_back(to_json(p));
  }
  j["parts"] = parts;
  j["cluster_parts"] = r.cluster_parts;
  j["model_edges"] = r.model.m();
  j["edit_distance"] = r.edit_distance ? Json(*r.edit_distance) : Json(nullptr);
  j["closeness"] = r.closeness ? Json(*r.closeness) : Json(nullptr);
  j["closeness_normalization"] = "n^2 over all vertices; residual vertices are singleton parts";
  j["eigenvalue_gate"] = Json{{"lambda_min", r.lambda_min}, {"surplus_upper_bound", r.gate_surplus_bound}};
  return j;
}

} // namespace surplab
