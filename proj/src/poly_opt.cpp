#include "graph_energy/poly_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "graph_energy/spectral.hpp"

namespace genergy {

namespace {

using Real = long double;
using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

constexpr std::size_t kMaxCuttingRounds = 50;
constexpr Real kCuttingTarget = 1e-10L;
constexpr std::size_t kMaxPivots = 200000;
constexpr Real kReducedCostTol = 1e-16L;
constexpr Real kPivotTol = 1e-13L;
constexpr Real kTieBreak = 1e-9L;
constexpr Real kExhaustedSlack = 1e-6L;
constexpr std::size_t kStallPivots = 50;
constexpr std::size_t kGiveUpPivots = 1000;

struct DualResult {
  VectorR u;  // primal coefficients (multipliers of the equality rows)
  bool capped = false;
};

/// Primal:  min c^T u  s.t.  G u >= h,  |(L^T u)_j| <= cap.
/// Dual:    max h^T w - cap * sum(s+ + s-)  s.t.  G^T w + L (s+ - s-) = c,  w, s+-, >= 0.
/// The dual has only k+1 rows and an obvious feasible basis (the cap columns
/// alone, L being invertible), so it is solved directly; u is read off the
/// optimal basis.
///
/// Column layout: [0, K) are s+, [K, 2K) are s-, then one column per row of G.
DualResult solve_dual(const MatrixR& g, const VectorR& h, const VectorR& c, const MatrixR& l,
                      Real cap) {
  const Eigen::Index rows = c.size();
  const Eigen::Index cols = 2 * rows + g.rows();

  auto column = [&](Eigen::Index j) -> VectorR {
    if (j < rows) return l.col(j);
    if (j < 2 * rows) return -l.col(j - rows);
    return g.row(j - 2 * rows).transpose();
  };
  auto cost = [&](Eigen::Index j) -> Real { return j < 2 * rows ? -cap : h[j - 2 * rows]; };

  std::vector<Eigen::Index> basis(rows);
  std::vector<bool> in_basis(cols, false);
  const VectorR start = l.fullPivLu().solve(c);
  for (Eigen::Index i = 0; i < rows; ++i) {
    basis[i] = start[i] >= 0 ? i : rows + i;
    in_basis[basis[i]] = true;
  }

  MatrixR b(rows, rows);
  MatrixR b_inv(rows, rows);
  VectorR x_b(rows), cost_b(rows), u(rows);
  Real last_objective = -std::numeric_limits<Real>::infinity();
  std::size_t stalled_pivots = 0;
  for (std::size_t pivot = 0;; ++pivot) {
    if (pivot == kMaxPivots) throw Error(ErrorCode::NoConvergence, "simplex pivot cap reached");
    for (Eigen::Index i = 0; i < rows; ++i) {
      b.col(i) = column(basis[i]);
      cost_b[i] = cost(basis[i]);
    }
    b_inv = b.fullPivLu().inverse();
    x_b = b_inv * c;
    u = b_inv.transpose() * cost_b;

    // Dantzig pricing on column-normalized reduced costs; after a run of
    // pivots without progress, switch to Bland's rule until progress resumes.
    const Real objective = cost_b.dot(x_b);
    if (objective > last_objective + 1e-14L * (1 + std::abs(objective))) stalled_pivots = 0;
    else ++stalled_pivots;
    last_objective = std::max(last_objective, objective);
    const bool bland = stalled_pivots > kStallPivots;
    Eigen::Index entering = -1;
    Real best_score = 0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (in_basis[j]) continue;
      const VectorR a = column(j);
      const Real noise = 1 + std::abs(cost(j)) + a.cwiseProduct(u).cwiseAbs().sum();
      const Real reduced = cost(j) - a.dot(u);
      if (reduced <= kReducedCostTol * noise) continue;
      if (bland) {
        entering = j;
        break;
      }
      const Real score = reduced / (1 + (b_inv * a).norm());
      if (score > best_score) {
        best_score = score;
        entering = j;
      }
    }
    // Floating-point degeneracy can still produce a zero-step cycle; the
    // current multipliers are then optimal up to rounding, and the caller's
    // certification absorbs whatever violation is left.
    if (entering < 0 || stalled_pivots > kGiveUpPivots) break;

    const VectorR dir = b_inv * column(entering);
    Eigen::Index leave_row = -1;
    Real best = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (dir[i] <= kPivotTol) continue;
      const Real ratio = std::max<Real>(x_b[i], 0) / dir[i];
      if (leave_row < 0 || ratio < best - 1e-15L * (1 + best) ||
          (ratio <= best + 1e-15L * (1 + best) && basis[i] < basis[leave_row])) {
        leave_row = i;
        best = ratio;
      }
    }
    if (leave_row < 0)
      throw Error(ErrorCode::Infeasible, "moment LP dual is unbounded, primal infeasible");
    in_basis[basis[leave_row]] = false;
    basis[leave_row] = entering;
    in_basis[entering] = true;
  }

  DualResult out{u, false};
  for (Eigen::Index i = 0; i < rows; ++i)
    if (basis[i] < 2 * rows && x_b[i] > 1e-12L) out.capped = true;
  if ((l.transpose() * u).cwiseAbs().maxCoeff() >= cap * (1 - 1e-9L)) out.capped = true;
  return out;
}

/// Row j holds the coefficients of T_{2j}(y) in powers of y^2.
MatrixR even_chebyshev(Eigen::Index vars) {
  // T_{2j}(y) = T_j(2y^2 - 1); expand T_j(z) by the three-term recurrence in z,
  // then substitute z = 2s - 1 with s = y^2.
  MatrixR tz = MatrixR::Zero(vars, vars);
  tz(0, 0) = 1;
  if (vars > 1) tz(1, 1) = 1;
  for (Eigen::Index j = 2; j < vars; ++j) {
    for (Eigen::Index i = 0; i < vars; ++i) {
      tz(j, i) = -tz(j - 2, i);
      if (i > 0) tz(j, i) += 2 * tz(j - 1, i - 1);
    }
  }
  MatrixR out = MatrixR::Zero(vars, vars);
  for (Eigen::Index j = 0; j < vars; ++j) {
    // (2s - 1)^i expanded by the binomial theorem.
    for (Eigen::Index i = 0; i <= j; ++i) {
      if (tz(j, i) == 0) continue;
      Real binom = 1;
      for (Eigen::Index l = 0; l <= i; ++l) {
        const Real term = binom * std::pow(Real(2), static_cast<Real>(l)) *
                          (((i - l) % 2) ? -1 : 1);
        out(j, l) += tz(j, i) * term;
        binom = binom * static_cast<Real>(i - l) / static_cast<Real>(l + 1);
      }
    }
  }
  return out;
}

/// Golden-section search for a local minimum of f bracketed by [lo, hi].
template <typename F>
Real refine_minimum(F&& f, Real lo, Real hi) {
  const Real ratio = (std::sqrt(Real(5)) - 1) / 2;
  Real a = hi - ratio * (hi - lo), b = lo + ratio * (hi - lo);
  Real fa = f(a), fb = f(b);
  for (int it = 0; it < 80 && hi - lo > 1e-16L; ++it) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = f(b);
    }
  }
  return fa <= fb ? a : b;
}

void validate(const LpProblem& p) {
  if (p.degree % 2 != 0 || p.degree > kLpMaxDegree)
    throw Error(ErrorCode::DomainError, "LP degree must be even and <= 16");
  const std::size_t k = p.degree / 2;
  if (p.moments.size() != k + 1)
    throw Error(ErrorCode::DomainError, "LP needs moments M0..M_degree (even only)");
  if (!(p.coefficient_cap > 0)) throw Error(ErrorCode::DomainError, "coefficient cap must be positive");
  if (!(p.delta >= 0)) throw Error(ErrorCode::DomainError, "scale must be non-negative");
  if (p.delta == 0) return;
  if (p.grid.size() < std::max<std::size_t>(64 * k, 2))
    throw Error(ErrorCode::DomainError, "LP grid needs at least 64 * k points");
  if (p.grid.front() != 0.0 || p.grid.back() != p.delta)
    throw Error(ErrorCode::DomainError, "LP grid must include 0 and delta");
  for (std::size_t i = 1; i < p.grid.size(); ++i)
    if (!(p.grid[i] > p.grid[i - 1]))
      throw Error(ErrorCode::DomainError, "LP grid must be strictly increasing");
}

}  // namespace

std::vector<double> chebyshev_grid(double delta, std::size_t points) {
  points = std::max<std::size_t>(points, 2);
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double angle = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = delta * (1.0 - std::cos(angle)) / 2.0;
  }
  grid.front() = 0.0;
  grid.back() = delta;
  return grid;
}

LpProblem make_lp_problem(const Graph& g, std::size_t degree, Direction direction) {
  if (degree % 2 != 0 || degree > kLpMaxDegree)
    throw Error(ErrorCode::DomainError, "LP degree must be even and <= 16");
  LpProblem p;
  p.degree = degree;
  p.direction = direction;
  const auto walks = trace_moments(g, degree);
  for (std::size_t j = 0; j <= degree; j += 2) p.moments.push_back(static_cast<long double>(walks[j]));
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  p.delta = static_cast<double>(max_degree);
  p.grid = chebyshev_grid(p.delta, 128 * std::max<std::size_t>(degree / 2, 1));
  return p;
}

LpSolution solve_bound_lp(const LpProblem& problem) {
  validate(problem);
  const std::size_t k = problem.degree / 2;
  const Eigen::Index vars = static_cast<Eigen::Index>(k + 1);
  const bool above = problem.direction == Direction::Above;

  LpSolution out;
  if (problem.delta == 0) {
    // Every eigenvalue is 0; the zero polynomial is optimal both ways.
    out.coefficients = EvenPolynomial(Eigen::VectorXd::Zero(vars), 0.0);
    out.certified = true;
    return out;
  }

  const Real delta = problem.delta;
  VectorR scaled_moments(vars);
  for (Eigen::Index j = 0; j < vars; ++j)
    scaled_moments[j] = problem.moments[j] / std::pow(delta, static_cast<Real>(2 * j));

  // The LP works in the even Chebyshev basis on [-1, 1]; the monomial basis
  // is too ill-conditioned for the simplex beyond degree 8.
  const MatrixR basis = even_chebyshev(vars);
  // Moment vectors of spectra with few distinct |eigenvalues| sit on the
  // boundary of the moment cone, where the optimal face is huge and the
  // simplex wanders to wildly oscillating vertices. Mixing in a sliver of the
  // arcsine measure (whose only nonzero Chebyshev moment is the zeroth) moves
  // the vector inside and breaks ties toward polynomials hugging |y|. The
  // objective below still uses the exact moments.
  VectorR chebyshev_moments = basis * scaled_moments;
  chebyshev_moments[0] += kTieBreak * scaled_moments[0];

  std::vector<Real> points;
  points.reserve(problem.grid.size() + 3 * kMaxCuttingRounds);
  for (double x : problem.grid) points.push_back(static_cast<Real>(x) / delta);
  points.front() = 0;
  points.back() = 1;

  const std::size_t check_points = std::max<std::size_t>(10 * problem.grid.size(), 1000);
  const Real sign = above ? 1 : -1;
  EvenPolynomialT<Real> unit;
  bool capped = false;
  for (std::size_t round = 0;; ++round) {
    if (round == kMaxCuttingRounds) {
      // Capped problems never settle (the polynomial keeps steepening toward
      // an unattainable optimum); a small leftover violation is still lifted.
      const auto last = verify_majorization_on(unit, problem.direction, Real(1), check_points);
      if (last.worst_gap < -kExhaustedSlack)
        throw Error(ErrorCode::NoConvergence,
                    fmt::format("cutting-plane rounds exhausted, violation {:.3g}",
                                static_cast<double>(-last.worst_gap)));
      break;
    }
    MatrixR g(static_cast<Eigen::Index>(points.size()), vars);
    VectorR h(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
      // T_{2j}(y) = cos(2j arccos y)
      const Real theta = std::acos(points[i]);
      for (Eigen::Index j = 0; j < vars; ++j)
        g(static_cast<Eigen::Index>(i), j) = sign * std::cos(static_cast<Real>(2 * j) * theta);
      h[static_cast<Eigen::Index>(i)] = sign * points[i];
    }
    const auto dual =
        solve_dual(g, h, sign * chebyshev_moments, basis, problem.coefficient_cap);
    unit = EvenPolynomialT<Real>(basis.transpose() * dual.u, 1);
    capped = dual.capped;
    out.cutting_rounds = round;

    // Cut down to a violation well under the certification tolerance. Every
    // local minimum of the gap on a fine scan becomes a cut, plus the refined
    // worst point. Once no new point can be added, settle for the
    // certification tolerance.
    const auto check = verify_majorization_on(unit, problem.direction, Real(1), check_points,
                                              kCuttingTarget);
    if (check.ok) break;
    const std::size_t before = points.size();
    // Near a tangency the contact point lies between the cut and its nearest
    // constraints; cutting the two midpoints as well quarters that bracket per
    // round instead of halving it.
    auto add_cut = [&](Real y) {
      Real left = 0, right = 1;
      for (Real x : points) {
        if (std::abs(x - y) <= 1e-15L) return;
        if (x < y) left = std::max(left, x);
        else right = std::min(right, x);
      }
      points.push_back(y);
      if (y - left > 1e-12L) points.push_back((left + y) / 2);
      if (right - y > 1e-12L) points.push_back((y + right) / 2);
    };
    add_cut(check.worst_x);
    const Real threshold = -kCuttingTarget;
    const Real step = Real(1) / static_cast<Real>(check_points - 1);
    auto gap = [&](Real y) { return sign * (unit(y) - y); };
    auto gap_at = [&](std::size_t i) { return gap(step * static_cast<Real>(i)); };
    Real prev = gap_at(0), cur = gap_at(1);
    for (std::size_t i = 1; i + 1 < check_points; ++i) {
      const Real next = gap_at(i + 1);
      if (cur < threshold && cur <= prev && cur <= next)
        add_cut(refine_minimum(gap, step * static_cast<Real>(i - 1), step * static_cast<Real>(i + 1)));
      prev = cur;
      cur = next;
    }
    // Nothing new to cut: the violation left is simplex rounding, which the
    // constant-term lift below absorbs.
    if (points.size() == before) break;
  }

  // Absorb the residual (within-tolerance) violation into the constant term.
  const auto residual = verify_majorization_on(unit, problem.direction, Real(1), check_points);
  if (residual.worst_gap < 0) unit.coeffs[0] += sign * (-residual.worst_gap);
  out.certified =
      verify_majorization_on(unit, problem.direction, Real(1), check_points, Real(1e-12)).ok;

  Real objective = 0;
  for (Eigen::Index j = 0; j < vars; ++j) objective += unit.coeffs[j] * scaled_moments[j];
  out.objective = static_cast<double>(delta * objective);

  Eigen::VectorXd coeffs(vars);
  Real factor = delta;
  for (Eigen::Index j = 0; j < vars; ++j) {
    coeffs[j] = static_cast<double>(unit.coeffs[j] * factor);
    factor /= delta * delta;
  }
  out.coefficients = EvenPolynomial(coeffs, problem.delta);
  out.status = capped ? LpStatus::Capped : LpStatus::Optimal;
  return out;
}

std::vector<SweepRow> bound_sweep(const Graph& g, std::size_t max_degree) {
  if (max_degree % 2 != 0 || max_degree > kLpMaxDegree || max_degree < 2)
    throw Error(ErrorCode::DomainError, "sweep degree must be even, in [2, 16]");
  std::vector<SweepRow> rows;
  for (std::size_t d = 2; d <= max_degree; d += 2) {
    const auto up = solve_bound_lp(make_lp_problem(g, d, Direction::Above));
    const auto lo = solve_bound_lp(make_lp_problem(g, d, Direction::Below));
    SweepRow row{d, up.objective, lo.objective, up.certified && lo.certified, up.status, lo.status};
    if (!rows.empty()) {
      row.upper = std::min(row.upper, rows.back().upper);
      row.lower = std::max(row.lower, rows.back().lower);
      row.certified = row.certified && rows.back().certified;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace genergy
