#include "graph_energy/moments.hpp"

#include <algorithm>
#include <numeric>

#include "graph_energy/spectral.hpp"

namespace genergy {

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.degrees.push_back(static_cast<std::int64_t>(g.degree(v)));
  if (!s.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
  }
  s.m = static_cast<std::int64_t>(g.size());
  for (auto d : s.degrees) s.zagreb += d * d;
  return s;
}

std::int64_t count_quadrilaterals_by_pairs(const Graph& g) {
  std::int64_t twice = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto c = static_cast<std::int64_t>(g.common_neighbors(u, v));
      twice += c * (c - 1) / 2;
    }
  }
  // Each 4-cycle is seen once from each of its two diagonals.
  return twice / 2;
}

std::int64_t count_quadrilaterals_by_trace(const Graph& g) {
  const auto stats = degree_stats(g);
  const WalkCount m4 = trace_moment(g, 4);
  const WalkCount rest = m4 - 2 * WalkCount{stats.zagreb} + 2 * WalkCount{stats.m};
  if (rest % 8 != 0)
    throw Error(ErrorCode::InternalMismatch, "Tr(A^4) - 2Z + 2m not divisible by 8");
  return static_cast<std::int64_t>(rest / 8);
}

std::int64_t count_quadrilaterals(const Graph& g) {
  const std::int64_t by_pairs = count_quadrilaterals_by_pairs(g);
  if (g.order() > kTraceMaxOrder) return by_pairs;
  const std::int64_t by_trace = count_quadrilaterals_by_trace(g);
  if (by_pairs != by_trace)
    throw Error(ErrorCode::InternalMismatch, "4-cycle counts disagree: pairs " +
                                                 std::to_string(by_pairs) + ", trace " +
                                                 std::to_string(by_trace));
  return by_pairs;
}

MomentSummary moment_summary(const Graph& g) {
  auto stats = degree_stats(g);
  MomentSummary s;
  s.n = static_cast<std::int64_t>(g.order());
  s.m = stats.m;
  s.degrees = std::move(stats.degrees);
  s.max_degree = stats.max_degree;
  s.min_degree = stats.min_degree;
  s.zagreb = stats.zagreb;
  s.quad_count = count_quadrilaterals_by_pairs(g);
  s.m2 = 2 * s.m;
  s.m4 = 2 * s.zagreb - 2 * s.m + 8 * s.quad_count;
  if (g.order() <= kTraceMaxOrder) {
    // The same comparison as count_quadrilaterals, sharing one oracle pass.
    const auto oracle = trace_moments(g, 4);
    if (oracle[2] != s.m2 || oracle[4] != s.m4)
      throw Error(ErrorCode::InternalMismatch,
                  "combinatorial moments disagree with Tr(A^k): M4 " + std::to_string(s.m4) +
                      " vs " + to_string(oracle[4]));
  }
  return s;
}

}  // namespace genergy
