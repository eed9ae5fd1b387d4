#include "graph_energy/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "graph_energy/error.hpp"

namespace genergy {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::string label)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), adj_(n),
      label_(std::move(label)) {
  for (auto [i, j] : edges) {
    if (i >= n || j >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside vertex range of order " + std::to_string(n));
    if (i == j) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(i));
    if (has_edge(i, j)) continue;
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    adj_[i].push_back(j);
    adj_[j].push_back(i);
    ++m_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::common_neighbors(Vertex u, Vertex v) const noexcept {
  const std::uint64_t* a = bits_.data() + u * words_;
  const std::uint64_t* b = bits_.data() + v * words_;
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += std::popcount(a[w] & b[w]);
  return count;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j : adj_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

Graph Graph::with_edge(Vertex i, Vertex j) const {
  auto list = edges();
  list.emplace_back(i, j);
  return Graph(n_, list, label_);
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

EdgeList to_edge_list(const Graph& g) { return EdgeList{g.order(), g.edges()}; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          frontier.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::optional<std::size_t> girth(const Graph& g) {
  // BFS from every vertex; the shortest cycle through the root closes on the
  // first non-tree edge seen at minimal depth.
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  std::vector<std::size_t> depth(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), SIZE_MAX);
    depth[root] = 0;
    parent[root] = root;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      if (best && 2 * depth[v] + 1 >= *best) break;
      for (Vertex w : g.neighbors(v)) {
        if (depth[w] == SIZE_MAX) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          frontier.push(w);
        } else if (parent[v] != w) {
          std::size_t len = depth[v] + depth[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace genergy
