#pragma once

#include <cstddef>
#include <vector>

#include "graph_energy/graph.hpp"
#include "graph_energy/quartic_bound.hpp"

namespace genergy {

inline constexpr std::size_t kLpMaxDegree = 16;

/// Search over even polynomials of degree <= `degree` that majorize (Above)
/// or minorize (Below) |x| on [-delta, delta] at the grid points, optimizing
/// the moment contraction sum_j c_{2j} M_{2j}.
struct LpProblem {
  std::size_t degree = 4;            // even
  std::vector<long double> moments;  // M0, M2, ..., M_degree
  double delta = 1.0;
  std::vector<double> grid;          // strictly increasing in [0, delta], endpoints included
  Direction direction = Direction::Above;
  /// Bound on |c_{2j}| * delta^{2j} / delta, the dimensionless coefficients.
  double coefficient_cap = 1e6;
};

enum class LpStatus { Optimal, Infeasible, Capped };

struct LpSolution {
  EvenPolynomial coefficients;  // dilated to [-delta, delta]
  double objective = 0.0;
  LpStatus status = LpStatus::Optimal;
  bool certified = false;
  std::size_t cutting_rounds = 0;
};

/// 128 * max(k, 1) Chebyshev-distributed points on [0, delta], endpoints exact.
std::vector<double> chebyshev_grid(double delta, std::size_t points);

/// Problem for graph `g` with moments from the exact trace oracle.
LpProblem make_lp_problem(const Graph& g, std::size_t degree, Direction direction);

/// Solves the LP through its dual (a moment-matching LP over the grid with
/// k+1 equality rows) by a dense simplex, with the polynomial expressed in
/// even Chebyshev polynomials for conditioning. The result is certified on
/// the continuous interval; local violators are added to the grid and the LP
/// re-solved (at most 50 rounds). The final polynomial is shifted by any
/// residual violation so the reported bound is sound.
/// Throws DomainError on malformed problems, Infeasible, NoConvergence.
LpSolution solve_bound_lp(const LpProblem& problem);

struct SweepRow {
  std::size_t degree = 0;
  double upper = 0.0;
  double lower = 0.0;
  bool certified = false;
  LpStatus upper_status = LpStatus::Optimal;
  LpStatus lower_status = LpStatus::Optimal;
};

/// Degrees 2, 4, ..., max_degree. A degree-d polynomial family contains all
/// lower degrees, so each row reports the best certified bound found at any
/// degree <= d; rows are monotone by construction.
std::vector<SweepRow> bound_sweep(const Graph& g, std::size_t max_degree);

}  // namespace genergy
