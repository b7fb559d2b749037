#include "surplab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace surplab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::uint64_t parse_index(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw GraphFormatError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  if (value > 0xffffffffULL) {
    throw GraphFormatError(line, "index too large: " + std::string(token));
  }
  return value;
}

} // namespace

Graph read_graph(std::istream &in) {
  std::optional<std::size_t> n_header;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (seen_content) {
        throw GraphFormatError(line_no, "header 'n <N>' must precede all edges");
      }
      n_header = parse_index(tokens[1], line_no);
      seen_content = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw GraphFormatError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    }
    const auto u = static_cast<vertex_t>(parse_index(tokens[0], line_no));
    const auto v = static_cast<vertex_t>(parse_index(tokens[1], line_no));
    if (u == v) {
      throw GraphFormatError(line_no, "self-loop at vertex " + std::to_string(u));
    }
    if (n_header && (u >= *n_header || v >= *n_header)) {
      throw GraphFormatError(line_no, "vertex index out of range for n=" + std::to_string(*n_header));
    }
    edges.emplace_back(u, v);
    seen_content = true;
  }
  return build_graph(edges, n_header);
}

Graph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw GraphFormatError(0, "cannot open graph file '" + path + "'");
  }
  return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
  out << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_graph_file(const std::string &path, const Graph &g) {
  std::ofstream out(path);
  if (!out) {
    throw GraphFormatError(0, "cannot write graph file '" + path + "'");
  }
  write_graph(out, g);
}

std::string to_text(const Graph &g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

} // namespace surplab
