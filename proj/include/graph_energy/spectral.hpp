#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graph_energy/error.hpp"
#include "graph_energy/graph.hpp"

namespace genergy {

template <typename Scalar>
struct SpectrumT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;  // descending
  Scalar residual{0};   // off-diagonal Frobenius norm after the last sweep
  std::size_t sweeps{0};
};

using Spectrum = SpectrumT<double>;

struct JacobiOptions {
  std::size_t max_sweeps = 100;
  /// Convergence when the off-diagonal Frobenius norm drops below this.
  double tolerance = 1e-12;
};

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
///
/// Each rotation annihilates a(p,q) and updates rows/columns p and q only,
/// so the matrix stays exactly symmetric. Only the lower triangle of the
/// working copy is trusted. Throws NoConvergence after `max_sweeps`.
template <typename Derived>
SpectrumT<typename Derived::Scalar> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& input,
                                                          const JacobiOptions& options = {}) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();

  auto off_norm = [&] {
    Scalar s{0};
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = j + 1; i < n; ++i) s += a(i, j) * a(i, j);
    return sqrt(Scalar(2) * s);
  };

  SpectrumT<Scalar> out;
  out.residual = off_norm();
  while (out.residual >= Scalar(options.tolerance)) {
    if (out.sweeps == options.max_sweeps)
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi sweep cap reached, residual " + std::to_string(double(out.residual)));
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(q, p);
        if (apq == Scalar(0)) continue;
        const Scalar app = a(p, p);
        const Scalar aqq = a(q, q);
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        Scalar t = Scalar(1) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        if (theta < Scalar(0)) t = -t;
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
    ++out.sweeps;
    out.residual = off_norm();
  }

  out.eigenvalues = a.diagonal();
  std::sort(out.eigenvalues.data(), out.eigenvalues.data() + n,
            [](Scalar x, Scalar y) { return x > y; });
  return out;
}

/// Adjacency spectrum, converged to 1e-12 * n * max(1, max degree).
Spectrum eigenvalues(const Graph& g);

/// Sum of absolute adjacency eigenvalues.
double energy(const Spectrum& spectrum);
double energy(const Graph& g);

/// Closed-walk counts need more headroom than 64 bits once k reaches the
/// upper teens on graphs of moderate degree.
using WalkCount = __int128;

inline constexpr std::size_t kTraceMaxPower = 16;
inline constexpr std::size_t kTraceMaxOrder = 2048;

/// Exact Tr(A^k), i.e. the number of closed walks of length k. Integer only;
/// throws CapExceeded on k > 16, n > 2048 or arithmetic overflow.
WalkCount trace_moment(const Graph& g, std::size_t k);

/// Exact Tr(A^0), ..., Tr(A^max_power) in one pass.
std::vector<WalkCount> trace_moments(const Graph& g, std::size_t max_power);

std::string to_string(WalkCount value);

/// Distinct eigenvalues (clusters within `tol` of a neighbour) with their
/// multiplicities, descending. Presentation only.
struct EigenvalueCluster {
  double value;
  std::size_t multiplicity;
};
std::vector<EigenvalueCluster> group_eigenvalues(const Spectrum& spectrum, double tol);

}  // namespace genergy
