#include <array>
#include <charconv>
#include <random>
#include <sstream>

#include "graph_energy/error.hpp"
#include "graph_energy/graph.hpp"

namespace genergy {

bool is_prime(std::size_t q) noexcept {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::UnsupportedParameter, what);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph(n, edges, "complete:" + std::to_string(n));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges, "cycle:" + std::to_string(n));
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "path:" + std::to_string(n));
}

Graph star(std::size_t k) {
  require(k >= 1, "star needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(k + 1, edges, "star:" + std::to_string(k));
}

Graph complete_bipartite(std::size_t p, std::size_t q) {
  require(p >= 1 && q >= 1, "complete bipartite needs p, q >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  return Graph(p + q, edges, "bipartite:" + std::to_string(p) + ":" + std::to_string(q));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges, "petersen");
}

Graph rook(std::size_t s) {
  require(s >= 2, "rook graph needs s >= 2");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < s * s; ++a)
    for (Vertex b = a + 1; b < s * s; ++b)
      if (a / s == b / s || a % s == b % s) edges.emplace_back(a, b);
  return Graph(s * s, edges, "rook:" + std::to_string(s));
}

// Normalized representatives of the projective points of GF(q)^3: the first
// nonzero coordinate is 1. Lines use the same representatives (duality).
std::vector<std::array<std::size_t, 3>> projective_points(std::size_t q) {
  std::vector<std::array<std::size_t, 3>> pts;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (std::size_t a = 0; a < q; ++a) pts.push_back({0, 1, a});
  pts.push_back({0, 0, 1});
  return pts;
}

Graph projective_plane_incidence(std::size_t q) {
  require(is_prime(q), "projective plane order " + std::to_string(q) + " is not prime");
  const auto pts = projective_points(q);
  const std::size_t v = pts.size();
  std::vector<Edge> edges;
  for (Vertex p = 0; p < v; ++p) {
    for (Vertex l = 0; l < v; ++l) {
      std::size_t dot = 0;
      for (int c = 0; c < 3; ++c) dot += pts[p][c] * pts[l][c];
      if (dot % q == 0) edges.emplace_back(p, v + l);
    }
  }
  return Graph(2 * v, edges, "pg:" + std::to_string(q));
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "gnp probability must lie in [0,1]");
  std::mt19937_64 engine(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  std::ostringstream label;
  label << "gnp:" << n << ':' << p << ':' << seed;
  return Graph(n, edges, label.str());
}

Graph disjoint_union(const std::vector<FamilySpec>& parts) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::string label = "union:";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Graph part = generate(parts[k]);
    for (auto [i, j] : part.edges()) edges.emplace_back(n + i, n + j);
    n += part.order();
    label += (k ? "," : "") + part.label();
  }
  return Graph(n, edges, label);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const family::Complete& f) const { return complete(f.n); }
    Graph operator()(const family::Cycle& f) const { return cycle(f.n); }
    Graph operator()(const family::Path& f) const { return path(f.n); }
    Graph operator()(const family::Star& f) const { return star(f.k); }
    Graph operator()(const family::CompleteBipartite& f) const {
      return complete_bipartite(f.p, f.q);
    }
    Graph operator()(const family::Petersen&) const { return petersen(); }
    Graph operator()(const family::Heawood&) const {
      return projective_plane_incidence(2).with_label("heawood");
    }
    Graph operator()(const family::Rook& f) const { return rook(f.s); }
    Graph operator()(const family::ProjectivePlaneIncidence& f) const {
      return projective_plane_incidence(f.q);
    }
    Graph operator()(const family::RandomGnp& f) const { return random_gnp(f.n, f.p, f.seed); }
    Graph operator()(const family::DisjointUnion& f) const { return disjoint_union(f.parts); }
  };
  return std::visit(Visitor{}, spec);
}

// ---------------------------------------------------------------------------
// Spec grammar

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::Malformed, "generator spec \"" + std::string(text) + "\": " + why);
}

template <typename T>
T number(std::string_view spec, std::string_view token) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    bad_spec(spec, "bad number \"" + std::string(token) + "\"");
  return value;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  if (text.starts_with("union:")) {
    family::DisjointUnion u;
    for (auto part : split(text.substr(6), ',')) {
      if (part.starts_with("union:")) bad_spec(text, "nested unions are not supported");
      u.parts.push_back(parse_family_spec(part));
    }
    return u;
  }
  const auto tok = split(text, ':');
  const std::string_view name = tok[0];
  auto arity = [&](std::size_t k) {
    if (tok.size() != k + 1)
      bad_spec(text, std::string(name) + " takes " + std::to_string(k) + " argument(s)");
  };
  if (name == "complete") { arity(1); return family::Complete{number<std::size_t>(text, tok[1])}; }
  if (name == "cycle") { arity(1); return family::Cycle{number<std::size_t>(text, tok[1])}; }
  if (name == "path") { arity(1); return family::Path{number<std::size_t>(text, tok[1])}; }
  if (name == "star") { arity(1); return family::Star{number<std::size_t>(text, tok[1])}; }
  if (name == "bipartite") {
    arity(2);
    return family::CompleteBipartite{number<std::size_t>(text, tok[1]),
                                     number<std::size_t>(text, tok[2])};
  }
  if (name == "petersen") { arity(0); return family::Petersen{}; }
  if (name == "heawood") { arity(0); return family::Heawood{}; }
  if (name == "rook") { arity(1); return family::Rook{number<std::size_t>(text, tok[1])}; }
  if (name == "pg") {
    arity(1);
    return family::ProjectivePlaneIncidence{number<std::size_t>(text, tok[1])};
  }
  if (name == "gnp") {
    arity(3);
    return family::RandomGnp{number<std::size_t>(text, tok[1]), number<double>(text, tok[2]),
                             number<std::uint64_t>(text, tok[3])};
  }
  bad_spec(text, "unknown family \"" + std::string(name) + "\"");
}

std::string to_string(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const family::Complete& f) const { return "complete:" + std::to_string(f.n); }
    std::string operator()(const family::Cycle& f) const { return "cycle:" + std::to_string(f.n); }
    std::string operator()(const family::Path& f) const { return "path:" + std::to_string(f.n); }
    std::string operator()(const family::Star& f) const { return "star:" + std::to_string(f.k); }
    std::string operator()(const family::CompleteBipartite& f) const {
      return "bipartite:" + std::to_string(f.p) + ":" + std::to_string(f.q);
    }
    std::string operator()(const family::Petersen&) const { return "petersen"; }
    std::string operator()(const family::Heawood&) const { return "heawood"; }
    std::string operator()(const family::Rook& f) const { return "rook:" + std::to_string(f.s); }
    std::string operator()(const family::ProjectivePlaneIncidence& f) const {
      return "pg:" + std::to_string(f.q);
    }
    std::string operator()(const family::RandomGnp& f) const {
      std::ostringstream s;
      s << "gnp:" << f.n << ':' << f.p << ':' << f.seed;
      return s.str();
    }
    std::string operator()(const family::DisjointUnion& f) const {
      std::string s = "union:";
      for (std::size_t k = 0; k < f.parts.size(); ++k)
        s += (k ? "," : "") + to_string(f.parts[k]);
      return s;
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace genergy
