#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "surplab/extraction.hpp"
#include "surplab/graph.hpp"
#include "surplab/report.hpp"

namespace surplab {

struct SuiteResult {
  std::string suite;
  std::size_t count = 0;
  std::size_t passed = 0;
  double tol = 0.0;
  std::vector<std::string> failures;  // first few, for the report
  Json stats = Json::object();

  bool ok() const { return passed == count; }
  Json to_json() const;
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string> &suite_names();

/// Runs one property suite on `count` seeded instances. Suites whose
/// instance family is fixed (two_cliques) ignore count. Throws
/// std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string &name, std::size_t count, std::uint64_t seed, const PipelineParams &params);

/// Seeded G(n, p) with n and p drawn from the given ranges; instance `index`
/// of stream `stream`.
Graph sample_graph(std::uint64_t seed, std::uint64_t stream, std::size_t index, std::size_t n_min, std::size_t n_max,
                   double p_min, double p_max);

} // namespace surplab
