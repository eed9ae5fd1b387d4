#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace genergy {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held twice: as packed bit rows (constant-time lookup and
/// popcount intersections) and as sorted neighbour lists. A Graph is
/// immutable once built; `with_edge` returns a modified copy.
class Graph {
 public:
  Graph() = default;
  /// Duplicate pairs (in either orientation) collapse to one edge.
  /// Throws IndexOutOfRange or SelfLoop.
  Graph(std::size_t n, std::span<const Edge> edges, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  const std::string& label() const noexcept { return label_; }

  bool has_edge(Vertex i, Vertex j) const noexcept {
    return i < n_ && j < n_ && ((bits_[i * words_ + j / 64] >> (j % 64)) & 1u);
  }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  /// Number of vertices adjacent to both u and v.
  std::size_t common_neighbors(Vertex u, Vertex v) const noexcept;

  /// Edges as pairs (i, j) with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;
  Graph with_edge(Vertex i, Vertex j) const;
  Graph with_label(std::string label) const;

  /// Dense 0/1 adjacency matrix.
  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n_, n_);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : adj_[v]) a(v, w) = Scalar(1);
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
  std::string label_;
};

struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;  // normalized i < j, no duplicates
};

EdgeList to_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// Interchange formats

/// Largest order handled by the graph6 codec (4-byte size field).
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// "n <count>" followed by one "i j" pair per line, 0-based. Blank lines and
/// lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// Generators

namespace family {
struct Complete { std::size_t n; };
struct Cycle { std::size_t n; };
struct Path { std::size_t n; };
struct Star { std::size_t k; };
struct CompleteBipartite { std::size_t p, q; };
struct Petersen {};
struct Heawood {};
/// Line graph of K_{s,s}: cells of an s x s board, adjacent iff they share a
/// row or a column.
struct Rook { std::size_t s; };
/// Point/line incidence graph of PG(2,q) for prime q.
struct ProjectivePlaneIncidence { std::size_t q; };
/// G(n,p). Pairs (i,j), i < j, are visited in lexicographic order; each pair
/// consumes one draw u = (x >> 11) * 2^-53 from std::mt19937_64(seed) and is
/// kept when u < p.
struct RandomGnp { std::size_t n; double p; std::uint64_t seed; };
struct DisjointUnion;
}  // namespace family

using FamilySpec = std::variant<family::Complete, family::Cycle, family::Path, family::Star,
                                family::CompleteBipartite, family::Petersen, family::Heawood,
                                family::Rook, family::ProjectivePlaneIncidence,
                                family::RandomGnp, family::DisjointUnion>;

namespace family {
struct DisjointUnion { std::vector<FamilySpec> parts; };
}  // namespace family

Graph generate(const FamilySpec& spec);

/// Parses the textual generator grammar used by the CLI:
///   complete:N  cycle:N  path:N  star:K  bipartite:P:Q  petersen  heawood
///   rook:S  pg:Q  gnp:N:P:SEED  union:SPEC,SPEC,...
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

bool is_prime(std::size_t q) noexcept;

// ---------------------------------------------------------------------------
// Structure queries

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Common degree when the graph is regular (n >= 1), otherwise empty.
std::optional<std::size_t> is_regular(const Graph& g);
/// Two-colouring (0/1) of a bipartite graph, BFS from the lowest vertex of
/// every component; empty when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
/// Length of the shortest cycle, empty for forests.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace genergy
