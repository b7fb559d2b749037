#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surplab/graph.hpp"
#include "surplab/spectral.hpp"

namespace surplab {

/// Invalid pipeline parameter; field() names the offending knob.
class ParamError : public std::invalid_argument {
public:
  ParamError(std::string field, const std::string &what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// Every knob of the extraction and stability pipelines.
///
/// Defaults are desk-scale choices: with n around 60 the degree floor
/// n^(1-2 eps) and the clique target n^(1-delta) must stay well below the
/// clique sizes one wants to detect.
struct PipelineParams {
  double eps = 0.2;
  double alpha = 0.03;
  double delta = 0.5;
  /// Balance parameter; 0 selects 4 log2 n at the point of use.
  double balance_c = 0.0;
  /// Auxiliary exponents for the iteration's size floor; 0 selects 1.1 * eps / alpha.
  double eps0 = 0.0;
  double alpha0 = 0.0;
  std::size_t exact_limit = 24;
  std::size_t clique_exact_limit = 64;
  std::size_t clique_target = 0;
  std::string dense_finder = "peel";
  double theta_lo = 0.25;
  double theta_hi = 0.75;
  /// Stability gives up when more than this fraction of edges touches
  /// vertices outside the pulled cliques.
  double max_residual_edge_fraction = 0.25;
  /// Overrides the n^(1-2 eps) degree floor used before clique pulling.
  std::optional<double> min_degree;
  /// When true alpha must lie below min{1/12 - eps/6, 1/6 - 2 eps/3};
  /// relaxed mode only requires positivity.
  bool strict_ranges = true;
  std::uint64_t seed = 1;

  /// Throws ParamError naming the first invalid field.
  void validate() const;
  double eps0_value() const { return eps0 > 0.0 ? eps0 : 1.1 * eps; }
  double alpha0_value() const { return alpha0 > 0.0 ? alpha0 : 1.1 * alpha; }
  double balance_for(std::size_t n) const;
};

struct TraceStep {
  VertexSet vertices;  // labels of the input graph
  std::size_t n = 0;
  double density = 0.0;
  double complement_density = 0.0;
  std::string note;
};

struct ExtractionTrace {
  std::vector<TraceStep> steps;
  std::string halt_reason;
  bool stalled = false;
};

struct DensityStepDiagnostics {
  double complement_density = 0.0;  // p
  bool small_p_regime = false;        // p < 1e-5
  double lambda1 = 0.0;
  double trace_e = 0.0;
  double theta_e = 0.0;          // 4 trace(E) / n
  double theta_e_tol = 0.0;
  double v1_threshold = 0.0;     // (1 - 8p) / sqrt(n)
  double v1_tol = 0.0;
  bool size_guarantee_applicable = false;  // p <= 1/10
  bool size_guarantee_holds = false;       // |I| >= n/4
  double term_bbb = 0.0;  // 1_I^T (B o B o B) 1_I
  double term_bbe = 0.0;  // 3 * 1_I^T (B o B o E) 1_I
  double term_bee = 0.0;  // 3 * 1_I^T (B o E o E) 1_I
  double term_eee = 0.0;  // 1_I^T (E o E o E) 1_I
  double quadratic_form = 0.0;  // 1_I^T D 1_I
  PsdVerdict d_psd;
  std::size_t complement_edges_in_i = 0;
};

struct DensityStepResult {
  VertexSet selected;  // labels of the input graph
  double new_density = 0.0;
  DensityStepDiagnostics diagnostics;
  /// Per-vertex membership data, kept so callers can re-verify I.
  std::vector<double> v1;
  std::vector<double> e_diag;
};

/// One density-increment step driven by D = (B + E)^{o3}, with
/// B = A - lambda1 v1 v1^T and E = sum_{lambda<0} |lambda| v v^T. Selects
/// I = {i : E_ii <= 4 trace(E)/n and v1(i) >= (1 - 8p)/sqrt(n)}. Throws
/// GraphError for n < 4.
DensityStepResult density_increment_step(const Graph &g, const PipelineParams &params);

/// Repeats density_increment_step until the complement density drops below
/// n^-alpha, the size floor is reached, a step stalls, or the step cap
/// 3*ceil(log2 log2 n) + 3 is hit. The first trace entry is the input.
ExtractionTrace density_increment_iterate(const Graph &g, const PipelineParams &params);

std::size_t density_increment_step_cap(std::size_t n);
double density_increment_size_floor(std::size_t n, const PipelineParams &params);

struct BalancedResult {
  Graph h;
  VertexSet kept;
  std::size_t rounds = 0;
  double balance_c = 0.0;
  bool size_bound_applies = false;  // C >= 4 log2 n
  double size_bound = 0.0;           // (1 - 2 log2 n / C) n
};

/// Repeatedly deletes every vertex of degree >= C d_i / 2; stops when none
/// remain or the average degree no longer halves.
BalancedResult extract_balanced(const Graph &g, double balance_c);

struct CliqueResult {
  VertexSet clique;
  bool exact = false;
};

/// Exact branch-and-bound with greedy-colouring bounds when n <= limit_exact,
/// greedy multi-start otherwise.
CliqueResult find_max_clique(const Graph &g, std::size_t limit_exact = 64);

bool is_clique(const Graph &g, const VertexSet &s);

struct CliqueCover {
  std::vector<VertexSet> cliques;  // pairwise disjoint, input labels
  VertexSet residual;              // survived the degree floor but in no clique
  VertexSet low_degree_removed;
  double degree_floor = 0.0;
  std::size_t target = 0;
  bool exact = true;  // every clique search was exact
};

/// Drops vertices of degree below the floor, then repeatedly removes a
/// maximum clique while it has at least `target` vertices.
CliqueCover pull_cliques(const Graph &g, const PipelineParams &params);

std::size_t clique_pull_target(std::size_t n, const PipelineParams &params);
double clique_pull_degree_floor(std::size_t n, const PipelineParams &params);

/// Dense-subgraph plug-in: (graph, min_density, min_size) -> vertex set with
/// at least that density and size, or nullopt.
using DenseFinder =
    std::function<std::optional<VertexSet>(const Graph &, double min_density, std::size_t min_size)>;

void register_dense_finder(const std::string &name, DenseFinder finder);
/// Throws ParamError("dense_finder") for unknown names.
DenseFinder dense_finder(const std::string &name);
std::vector<std::string> dense_finder_names();

/// Built-in "peel" finder: strips minimum-degree vertices one at a time and
/// keeps the densest remaining set of admissible size (larger on ties).
std::optional<VertexSet> peel_dense_subgraph(const Graph &g, double min_density, std::size_t min_size);

struct ChainStage {
  std::string name;
  VertexSet vertices;  // input labels
  std::size_t n = 0;
  double density = 0.0;
  bool met = true;
  std::string note;
};

struct MasterChainReport {
  std::vector<ChainStage> stages;
  ExtractionTrace increment_trace;
  VertexSet clique;
  bool clique_exact = false;
  double target_size = 0.0;  // m^(1/2 - 30 eps), informational
};

inline constexpr double kDenseStageDensity = 1.0 - 1e-5;

/// Dense finder, then density increment, then balanced peeling of the
/// complement, then a maximum-clique search on what is left.
MasterChainReport master_chain(const Graph &g, const PipelineParams &params);

} // namespace surplab
