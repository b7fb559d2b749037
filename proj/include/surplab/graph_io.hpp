#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "surplab/graph.hpp"

namespace surplab {

/// Malformed graph text; carries the 1-based offending line (0 if none).
class GraphFormatError : public GraphError {
public:
  GraphFormatError(std::size_t line, const std::string &what)
      : GraphError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Text format: optional header `n <N>`, then one `u v` edge per line.
// Lines starting with '#' and blank lines are ignored. Without a header,
// n = 1 + max index.
Graph read_graph(std::istream &in);
Graph read_graph_file(const std::string &path);

/// Writes `n <N>` followed by every edge u < v in lexicographic order.
void write_graph(std::ostream &out, const Graph &g);
void write_graph_file(const std::string &path, const Graph &g);
std::string to_text(const Graph &g);

} // namespace surplab
