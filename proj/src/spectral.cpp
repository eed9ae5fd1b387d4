#include "graph_energy/spectral.hpp"

#include <algorithm>

namespace genergy {

namespace {

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

WalkCount checked_add(WalkCount a, WalkCount b) {
  WalkCount r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::CapExceeded, "closed-walk count overflows 128 bits");
  return r;
}

WalkCount checked_mul(WalkCount a, WalkCount b) {
  WalkCount r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::CapExceeded, "closed-walk count overflows 128 bits");
  return r;
}

}  // namespace

Spectrum eigenvalues(const Graph& g) {
  JacobiOptions options;
  options.tolerance = 1e-12 * static_cast<double>(std::max<std::size_t>(g.order(), 1)) *
                      static_cast<double>(std::max<std::size_t>(max_degree(g), 1));
  return symmetric_eigenvalues(g.adjacency_matrix<double>(), options);
}

double energy(const Spectrum& spectrum) { return spectrum.eigenvalues.cwiseAbs().sum(); }

double energy(const Graph& g) { return energy(eigenvalues(g)); }

std::vector<WalkCount> trace_moments(const Graph& g, std::size_t max_power) {
  const std::size_t n = g.order();
  if (max_power > kTraceMaxPower)
    throw Error(ErrorCode::CapExceeded, "power " + std::to_string(max_power) + " > " +
                                            std::to_string(kTraceMaxPower));
  if (n > kTraceMaxOrder)
    throw Error(ErrorCode::CapExceeded,
                "order " + std::to_string(n) + " > " + std::to_string(kTraceMaxOrder));

  // walks[t][w] = number of walks of length t from the current root to w.
  // Tr(A^k) = sum over roots of <walks[floor(k/2)], walks[ceil(k/2)]>.
  const std::size_t half = (max_power + 1) / 2;
  std::vector<WalkCount> moments(max_power + 1, 0);
  std::vector<std::vector<WalkCount>> walks(half + 1, std::vector<WalkCount>(n, 0));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(walks[0].begin(), walks[0].end(), 0);
    walks[0][root] = 1;
    for (std::size_t t = 1; t <= half; ++t) {
      for (Vertex w = 0; w < n; ++w) {
        WalkCount s = 0;
        for (Vertex u : g.neighbors(w)) s = checked_add(s, walks[t - 1][u]);
        walks[t][w] = s;
      }
    }
    for (std::size_t k = 0; k <= max_power; ++k) {
      const auto& lo = walks[k / 2];
      const auto& hi = walks[(k + 1) / 2];
      WalkCount s = 0;
      for (Vertex w = 0; w < n; ++w)
        if (lo[w] != 0 && hi[w] != 0) s = checked_add(s, checked_mul(lo[w], hi[w]));
      moments[k] = checked_add(moments[k], s);
    }
  }
  return moments;
}

WalkCount trace_moment(const Graph& g, std::size_t k) { return trace_moments(g, k)[k]; }

std::string to_string(WalkCount value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(value)
                                 : static_cast<unsigned __int128>(value);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

std::vector<EigenvalueCluster> group_eigenvalues(const Spectrum& spectrum, double tol) {
  std::vector<EigenvalueCluster> out;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const double x = spectrum.eigenvalues[i];
    if (!out.empty() && std::abs(spectrum.eigenvalues[i - 1] - x) <= tol) {
      sum += x;
      ++out.back().multiplicity;
      out.back().value = sum / static_cast<double>(out.back().multiplicity);
    } else {
      out.push_back({x, 1});
      sum = x;
    }
  }
  return out;
}

}  // namespace genergy
