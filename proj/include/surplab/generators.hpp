#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "surplab/graph.hpp"

namespace surplab {

enum class Family {
  gnp,
  complete,
  empty,
  disjoint_cliques,
  perturbed_clique_union,
  two_overlapping_cliques,
  complete_bipartite,
  turan,
  paley,
  clique_minus_matching,
};

const char *to_string(Family f);
/// Throws GeneratorError("family") on unknown names.
Family family_from_string(const std::string &name);
std::vector<std::string> family_names();

class GeneratorError : public std::invalid_argument {
public:
  GeneratorError(std::string field, const std::string &what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// Parameters used per family:
///   gnp                      n, p
///   complete, empty          n
///   clique_minus_matching    n (removes 01, 23, ...)
///   disjoint_cliques         sizes
///   perturbed_clique_union   sizes, flips
///   two_overlapping_cliques  a, b, c  (layout A, B, C; cliques A+C and B+C)
///   complete_bipartite       a, b
///   turan                    n, r  (complete r-partite, consecutive near-equal blocks)
///   paley                    q  (prime, q = 1 mod 4)
struct GraphSpec {
  Family family = Family::gnp;
  std::size_t n = 0;
  double p = 0.0;
  std::vector<std::size_t> sizes;
  std::size_t flips = 0;
  std::size_t a = 0, b = 0, c = 0;
  std::size_t r = 1;
  std::size_t q = 5;
  std::uint64_t seed = 1;

  /// Throws GeneratorError naming the offending field.
  void validate() const;
  /// Only the fields the family reads, plus seed for random families.
  std::string to_json() const;
  static GraphSpec from_json(const std::string &text);
};

Graph generate(const GraphSpec &spec);

/// Partition whose clique union the family is built from (disjoint and
/// perturbed clique unions, complement of turan); empty otherwise.
std::vector<VertexSet> planted_partition(const GraphSpec &spec);

// Convenience wrappers.
Graph gnp(std::size_t n, double p, std::uint64_t seed);
Graph complete_graph(std::size_t n);
Graph disjoint_cliques(const std::vector<std::size_t> &sizes);
Graph perturbed_clique_union(const std::vector<std::size_t> &sizes, std::size_t flips, std::uint64_t seed);
Graph turan_graph(std::size_t n, std::size_t r);
Graph paley_graph(std::size_t q);
Graph clique_minus_matching(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// k distinct indices from [0, total), Floyd's algorithm on counters; sorted.
std::vector<std::uint64_t> sample_distinct(std::uint64_t total, std::size_t k, std::uint64_t seed,
                                           std::uint64_t stream);

} // namespace surplab
