#pragma once

// Shared fixtures for the unit and acceptance suites: the graph corpus,
// brute-force oracles, and a tiny deterministic random source for
// property tests.

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "graph_energy/graph.hpp"

namespace genergy::testing {

/// Every deterministic family at a few sizes.
inline std::vector<Graph> family_corpus() {
  const char* specs[] = {
      "complete:1",  "complete:2",     "complete:3",    "complete:4",  "complete:5",
      "complete:8",  "cycle:3",        "cycle:4",       "cycle:5",     "cycle:6",
      "cycle:9",     "path:1",         "path:2",        "path:5",      "star:1",
      "star:4",      "star:7",         "bipartite:1:1", "bipartite:2:3", "bipartite:3:3",
      "bipartite:3:5", "petersen",     "heawood",       "rook:2",      "rook:3",
      "rook:4",      "pg:2",           "pg:3",          "union:complete:2,complete:2",
      "union:cycle:4,petersen",        "union:complete:3,path:3,star:2"};
  std::vector<Graph> out;
  for (const char* s : specs) out.push_back(generate(parse_family_spec(s)));
  return out;
}

/// The 200 seeded G(n,p) graphs: n cycles through 4..24, p through
/// {0.2, 0.5, 0.8}.
inline std::vector<Graph> random_corpus(std::size_t count = 200) {
  constexpr double ps[] = {0.2, 0.5, 0.8};
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 4 + i % 21;
    out.push_back(generate(family::RandomGnp{n, ps[i % 3], 1000 + i}));
  }
  return out;
}

inline std::vector<Graph> full_corpus() {
  auto out = family_corpus();
  for (auto& g : random_corpus()) out.push_back(std::move(g));
  return out;
}

/// 4-cycles counted by looking at every 4-subset and each of its three
/// possible cyclic orders.
inline std::int64_t brute_force_quadrilaterals(const Graph& g) {
  const std::size_t n = g.order();
  std::int64_t count = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<std::array<Vertex, 4>, 3> orders{
              {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders)
            if (g.has_edge(o[0], o[1]) && g.has_edge(o[1], o[2]) && g.has_edge(o[2], o[3]) &&
                g.has_edge(o[3], o[0]))
              ++count;
        }
  return count;
}

/// Closed walks of length k by depth-first enumeration.
inline std::int64_t enumerate_closed_walks(const Graph& g, std::size_t k) {
  std::int64_t total = 0;
  auto walk = [&](auto&& self, Vertex start, Vertex at, std::size_t left) -> void {
    if (left == 0) {
      if (at == start) ++total;
      return;
    }
    for (Vertex next : g.neighbors(at)) self(self, start, next, left - 1);
  };
  for (Vertex v = 0; v < g.order(); ++v) walk(walk, v, v, k);
  return total;
}

/// Heawood graph from its LCF notation [5,-5]^7, independent of the
/// projective-plane construction.
inline Graph heawood_lcf() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 14; ++i) {
    edges.emplace_back(i, (i + 1) % 14);
    const Vertex chord = i % 2 == 0 ? (i + 5) % 14 : (i + 14 - 5) % 14;
    edges.emplace_back(i, chord);
  }
  return Graph(14, edges, "heawood-lcf");
}

/// Random simple graph for property tests.
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(0, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size(rng);
  const double p = unit(rng);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (unit(rng) < p) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// A file in the temp directory, removed on destruction.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content = {})
      : path(std::filesystem::temp_directory_path() / ("genergy_test_" + name)) {
    std::ofstream(path, std::ios::binary) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace genergy::testing
