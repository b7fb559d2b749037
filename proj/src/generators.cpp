#include "surplab/generators.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "surplab/random.hpp"

namespace surplab {

namespace {

struct FamilyName {
  Family family;
  const char *name;
};

constexpr FamilyName kFamilies[] = {
    {Family::gnp, "gnp"},
    {Family::complete, "complete"},
    {Family::empty, "empty"},
    {Family::disjoint_cliques, "disjoint_cliques"},
    {Family::perturbed_clique_union, "perturbed_clique_union"},
    {Family::two_overlapping_cliques, "two_overlapping_cliques"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::turan, "turan"},
    {Family::paley, "paley"},
    {Family::clique_minus_matching, "clique_minus_matching"},
};

// Random streams, one per family that draws.
constexpr std::uint64_t kGnpStream = 1;
constexpr std::uint64_t kFlipStream = 2;

bool is_prime(std::size_t q) {
  if (q < 2) {
    return false;
  }
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      return false;
    }
  }
  return true;
}

std::pair<vertex_t, vertex_t> pair_from_index(std::size_t n, std::uint64_t idx) {
  // Row u holds n-1-u pairs (u, v>u).
  std::uint64_t u = 0;
  while (idx >= n - 1 - u) {
    idx -= n - 1 - u;
    ++u;
  }
  return {static_cast<vertex_t>(u), static_cast<vertex_t>(u + 1 + idx)};
}

std::vector<VertexSet> consecutive_parts(const std::vector<std::size_t> &sizes) {
  std::vector<VertexSet> parts;
  vertex_t next = 0;
  for (std::size_t s : sizes) {
    std::vector<vertex_t> m(s);
    for (auto &v : m) {
      v = next++;
    }
    parts.emplace_back(std::move(m));
  }
  return parts;
}

std::vector<std::size_t> turan_sizes(std::size_t n, std::size_t r) {
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) {
    ++sizes[i];
  }
  return sizes;
}

std::size_t total(const std::vector<std::size_t> &sizes) {
  std::size_t t = 0;
  for (auto s : sizes) {
    t += s;
  }
  return t;
}

} // namespace

const char *to_string(Family f) {
  for (const auto &e : kFamilies) {
    if (e.family == f) {
      return e.name;
    }
  }
  return "?";
}

Family family_from_string(const std::string &name) {
  for (const auto &e : kFamilies) {
    if (name == e.name) {
      return e.family;
    }
  }
  throw GeneratorError("family", "unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto &e : kFamilies) {
    out.emplace_back(e.name);
  }
  return out;
}

void GraphSpec::validate() const {
  switch (family) {
  case Family::gnp:
    if (!(p >= 0.0 && p <= 1.0)) {
      throw GeneratorError("p", "must lie in [0, 1]");
    }
    break;
  case Family::complete:
  case Family::empty:
  case Family::clique_minus_matching:
    break;
  case Family::disjoint_cliques:
  case Family::perturbed_clique_union:
    if (sizes.empty()) {
      throw GeneratorError("sizes", "need at least one clique");
    }
    if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
      throw GeneratorError("sizes", "clique sizes must be positive");
    }
    if (family == Family::perturbed_clique_union) {
      const std::size_t nn = total(sizes);
      if (flips > nn * (nn - 1) / 2) {
        throw GeneratorError("flips", "exceeds the number of vertex pairs");
      }
    }
    break;
  case Family::two_overlapping_cliques:
    break;
  case Family::complete_bipartite:
    break;
  case Family::turan:
    if (r == 0) {
      throw GeneratorError("r", "must be positive");
    }
    if (r > n && n > 0) {
      throw GeneratorError("r", "must not exceed n");
    }
    break;
  case Family::paley:
    if (!is_prime(q) || q % 4 != 1) {
      throw GeneratorError("q", "must be a prime congruent to 1 mod 4");
    }
    break;
  }
}

std::string GraphSpec::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = to_string(family);
  switch (family) {
  case Family::gnp:
    j["n"] = n;
    j["p"] = p;
    j["seed"] = seed;
    break;
  case Family::complete:
  case Family::empty:
  case Family::clique_minus_matching:
    j["n"] = n;
    break;
  case Family::disjoint_cliques:
    j["sizes"] = sizes;
    break;
  case Family::perturbed_clique_union:
    j["sizes"] = sizes;
    j["flips"] = flips;
    j["seed"] = seed;
    break;
  case Family::two_overlapping_cliques:
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    break;
  case Family::complete_bipartite:
    j["a"] = a;
    j["b"] = b;
    break;
  case Family::turan:
    j["n"] = n;
    j["r"] = r;
    break;
  case Family::paley:
    j["q"] = q;
    break;
  }
  return j.dump();
}

GraphSpec GraphSpec::from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw GeneratorError("spec", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw GeneratorError("family", "spec must be an object with a string 'family'");
  }
  GraphSpec s;
  s.family = family_from_string(j["family"].get<std::string>());
  auto count = [&](const char *key, std::size_t &dst) {
    if (!j.contains(key)) {
      return;
    }
    if (!j[key].is_number_unsigned() && !(j[key].is_number_integer() && j[key].get<long long>() >= 0)) {
      throw GeneratorError(key, "must be a non-negative integer");
    }
    dst = j[key].get<std::size_t>();
  };
  count("n", s.n);
  count("flips", s.flips);
  count("a", s.a);
  count("b", s.b);
  count("c", s.c);
  count("r", s.r);
  count("q", s.q);
  if (j.contains("p")) {
    if (!j["p"].is_number()) {
      throw GeneratorError("p", "must be a number");
    }
    s.p = j["p"].get<double>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0)) {
      throw GeneratorError("seed", "must be a non-negative integer");
    }
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("sizes")) {
    if (!j["sizes"].is_array()) {
      throw GeneratorError("sizes", "must be an array of counts");
    }
    for (const auto &e : j["sizes"]) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw GeneratorError("sizes", "entries must be non-negative integers");
      }
      s.sizes.push_back(e.get<std::size_t>());
    }
  }
  s.validate();
  return s;
}

std::vector<std::uint64_t> sample_distinct(std::uint64_t total_count, std::size_t k, std::uint64_t seed,
                                           std::uint64_t stream) {
  const CounterRng rng(seed, stream);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total_count - k; j < total_count; ++j) {
    const std::uint64_t t = rng.below(j, j + 1);
    if (!chosen.insert(t).second) {
      chosen.insert(j);
    }
  }
  return {chosen.begin(), chosen.end()};
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return generate(s);
}

Graph complete_graph(std::size_t n) {
  GraphSpec s;
  s.family = Family::complete;
  s.n = n;
  return generate(s);
}

Graph disjoint_cliques(const std::vector<std::size_t> &sizes) {
  GraphSpec s;
  s.family = Family::disjoint_cliques;
  s.sizes = sizes;
  return generate(s);
}

Graph perturbed_clique_union(const std::vector<std::size_t> &sizes, std::size_t flips, std::uint64_t seed) {
  GraphSpec s;
  s.family = Family::perturbed_clique_union;
  s.sizes = sizes;
  s.flips = flips;
  s.seed = seed;
  return generate(s);
}

Graph turan_graph(std::size_t n, std::size_t r) {
  GraphSpec s;
  s.family = Family::turan;
  s.n = n;
  s.r = r;
  return generate(s);
}

Graph paley_graph(std::size_t q) {
  GraphSpec s;
  s.family = Family::paley;
  s.q = q;
  return generate(s);
}

Graph clique_minus_matching(std::size_t n) {
  GraphSpec s;
  s.family = Family::clique_minus_matching;
  s.n = n;
  return generate(s);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphSpec s;
  s.family = Family::complete_bipartite;
  s.a = a;
  s.b = b;
  return generate(s);
}

std::vector<VertexSet> planted_partition(const GraphSpec &spec) {
  spec.validate();
  switch (spec.family) {
  case Family::disjoint_cliques:
  case Family::perturbed_clique_union:
    return consecutive_parts(spec.sizes);
  case Family::turan:
    return consecutive_parts(turan_sizes(spec.n, spec.r));
  default:
    return {};
  }
}

Graph generate(const GraphSpec &spec) {
  spec.validate();
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  auto all_pairs = [&](std::size_t n, auto keep) {
    for (vertex_t u = 0; u < n; ++u) {
      for (vertex_t v = u + 1; v < n; ++v) {
        if (keep(u, v)) {
          edges.emplace_back(u, v);
        }
      }
    }
  };

  switch (spec.family) {
  case Family::gnp: {
    const CounterRng rng(spec.seed, kGnpStream);
    const std::uint64_t n = spec.n;
    all_pairs(spec.n, [&](vertex_t u, vertex_t v) { return rng.uniform(std::uint64_t{u} * n + v) < spec.p; });
    return build_graph(edges, spec.n);
  }
  case Family::complete:
    all_pairs(spec.n, [](vertex_t, vertex_t) { return true; });
    return build_graph(edges, spec.n);
  case Family::empty:
    return Graph(spec.n);
  case Family::clique_minus_matching:
    all_pairs(spec.n, [](vertex_t u, vertex_t v) { return !(u % 2 == 0 && v == u + 1); });
    return build_graph(edges, spec.n);
  case Family::disjoint_cliques:
  case Family::perturbed_clique_union: {
    const std::size_t n = total(spec.sizes);
    const auto parts = consecutive_parts(spec.sizes);
    Graph base = clique_union(n, parts);
    if (spec.family == Family::disjoint_cliques || spec.flips == 0) {
      return base;
    }
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::set<std::pair<vertex_t, vertex_t>> flipped;
    for (auto idx : sample_distinct(pairs, spec.flips, spec.seed, kFlipStream)) {
      flipped.insert(pair_from_index(n, idx));
    }
    all_pairs(n, [&](vertex_t u, vertex_t v) { return base.adjacent(u, v) != (flipped.count({u, v}) > 0); });
    return build_graph(edges, n);
  }
  case Family::two_overlapping_cliques: {
    const std::size_t n = spec.a + spec.b + spec.c;
    const auto a_end = static_cast<vertex_t>(spec.a);
    const auto b_end = static_cast<vertex_t>(spec.a + spec.b);
    auto in_c1 = [&](vertex_t v) { return v < a_end || v >= b_end; };
    auto in_c2 = [&](vertex_t v) { return v >= a_end; };
    all_pairs(n, [&](vertex_t u, vertex_t v) { return (in_c1(u) && in_c1(v)) || (in_c2(u) && in_c2(v)); });
    return build_graph(edges, n);
  }
  case Family::complete_bipartite: {
    const auto a = static_cast<vertex_t>(spec.a);
    all_pairs(spec.a + spec.b, [&](vertex_t u, vertex_t v) { return u < a && v >= a; });
    return build_graph(edges, spec.a + spec.b);
  }
  case Family::turan: {
    const auto parts = consecutive_parts(turan_sizes(spec.n, spec.r));
    return complement(clique_union(spec.n, parts));
  }
  case Family::paley: {
    const std::size_t q = spec.q;
    std::vector<std::uint8_t> residue(q, 0);
    for (std::size_t x = 1; x < q; ++x) {
      residue[(x * x) % q] = 1;
    }
    all_pairs(q, [&](vertex_t u, vertex_t v) { return residue[(v - u) % q] != 0; });
    return build_graph(edges, q);
  }
  }
  throw GeneratorError("family", "unhandled family");
}

} // namespace surplab
