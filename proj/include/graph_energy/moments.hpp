#pragma once

#include <cstdint>
#include <vector>

#include "graph_energy/error.hpp"
#include "graph_energy/graph.hpp"

namespace genergy {

struct DegreeStats {
  std::vector<std::int64_t> degrees;
  std::int64_t m = 0;
  std::int64_t max_degree = 0;
  std::int64_t min_degree = 0;
  std::int64_t zagreb = 0;  // sum of squared degrees
};

DegreeStats degree_stats(const Graph& g);

/// Combinatorial moment data. Everything here is an exact integer.
struct MomentSummary {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> degrees;
  std::int64_t max_degree = 0;
  std::int64_t min_degree = 0;
  std::int64_t zagreb = 0;
  std::int64_t quad_count = 0;  // 4-cycles as subgraphs, each once
  std::int64_t m2 = 0;          // 2m
  std::int64_t m4 = 0;          // 2Z - 2m + 8Q
};

/// Number of 4-cycles via sum over vertex pairs of C(common, 2), halved.
std::int64_t count_quadrilaterals_by_pairs(const Graph& g);

/// Number of 4-cycles from the exact closed-walk count:
/// Q = (Tr(A^4) - 2Z + 2m) / 8.
std::int64_t count_quadrilaterals_by_trace(const Graph& g);

/// Both counters above; throws InternalMismatch if they disagree. Above the
/// trace oracle's order cap only the pair count is available.
std::int64_t count_quadrilaterals(const Graph& g);

/// Throws InternalMismatch if M2 or M4 disagree with the trace oracle
/// (checked whenever the graph is within the oracle's cap).
MomentSummary moment_summary(const Graph& g);

/// Normalized moment quantities A = M4/D^3, B = M2/D, C = D*n for max degree
/// D >= 1. Satisfies 0 <= A <= B <= C.
template <typename Scalar>
struct AbcTripleT {
  Scalar a{0};
  Scalar b{0};
  Scalar c{0};
  Scalar max_degree{1};
};

using AbcTriple = AbcTripleT<double>;

/// Throws NoEdges when the max degree is 0, InternalMismatch if the ordering
/// fails in exact arithmetic (M4 <= 2m D^2, 2m <= n D^2).
template <typename Scalar = double>
AbcTripleT<Scalar> abc_triple(const MomentSummary& s) {
  if (s.max_degree < 1) throw Error(ErrorCode::NoEdges, "graph has no edges");
  const std::int64_t d = s.max_degree;
  if (s.m4 > s.m2 * d * d || s.m2 > s.n * d * d)
    throw Error(ErrorCode::InternalMismatch, "moment triple violates A <= B <= C");
  const Scalar delta = static_cast<Scalar>(d);
  return {static_cast<Scalar>(s.m4) / (delta * delta * delta),
          static_cast<Scalar>(s.m2) / delta,
          delta * static_cast<Scalar>(s.n), delta};
}

}  // namespace genergy
