#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "surplab/graph.hpp"

namespace surplab {

enum class MaxCutMethod { exact, local_search };

const char *to_string(MaxCutMethod m);

struct MaxCutResult {
  std::size_t value = 0;
  double surplus = 0.0;  // value - m/2
  Cut cut;
  MaxCutMethod method = MaxCutMethod::exact;
  bool exact = false;
};

/// Graph too large for exhaustive search.
class OracleLimitError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultExactLimit = 24;
/// Cut masks are 64-bit; vertex 0 is pinned, so n - 1 bits must fit.
inline constexpr std::size_t kHardExactLimit = 40;

/// Exhaustive MaxCut over all 2^(n-1) cuts with vertex 0 on side 0. Ties go to
/// the lexicographically smallest side sequence. Gray-code enumeration split
/// into chunks across OpenMP threads; the result is independent of the
/// worker count.
MaxCutResult maxcut_exact(const Graph &g, std::size_t limit = kDefaultExactLimit);

/// Serial reference for maxcut_exact: plain binary enumeration with a full
/// re-count per cut. Same contract, same tie-break.
MaxCutResult maxcut_exact_reference(const Graph &g, std::size_t limit = kDefaultExactLimit);

struct LocalSearchOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 16;
  std::size_t max_passes = 100;
};

/// Best 1-flip local optimum over seeded random starts, never below m/2.
MaxCutResult maxcut_local_search(const Graph &g, const LocalSearchOptions &opts = {});

/// Sequential greedy: each vertex joins the side holding fewer of its
/// already-placed neighbours. Cuts at least m/2 edges.
Cut greedy_balanced_cut(const Graph &g);

/// Flips single vertices while that strictly increases the cut, for at most
/// `max_passes` full passes. Returns the final cut size.
std::size_t polish_one_flip(const Graph &g, Cut &cut, std::size_t max_passes);

/// Flips every side so that vertex 0 is on side 0.
void normalize_cut(Cut &cut);

/// Lexicographic order on side sequences.
bool cut_lex_less(const Cut &a, const Cut &b);

} // namespace surplab
