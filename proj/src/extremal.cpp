#include "graph_energy/extremal.hpp"

#include <cmath>
#include <iostream>

#include "graph_energy/quartic_bound.hpp"

namespace genergy {

std::string to_string(const EqualityClass& c) {
  switch (c.tag) {
    case EqualityTag::Complete: return "Complete";
    case EqualityTag::SrgEqualParams:
      return "SrgEqualParams(" + std::to_string(c.srg->v) + "," + std::to_string(c.srg->k) + "," +
             std::to_string(c.srg->lambda) + "," + std::to_string(c.srg->mu) + ")";
    case EqualityTag::DesignIncidence:
      return "DesignIncidence(" + std::to_string(c.design->v) + "," +
             std::to_string(c.design->k) + "," + std::to_string(c.design->lambda) + ")";
    case EqualityTag::NotTight: return "NotTight";
    case EqualityTag::TightUnclassified: return "TightUnclassified";
  }
  return "Unknown";
}

bool spectrum_membership(const Spectrum& spectrum, const AbcTriple& t, double tol_factor) {
  const double delta = t.max_degree;
  const double inner = optimal_r(t).r * delta;
  const double tol = tol_factor * delta;
  for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const double x = std::abs(spectrum.eigenvalues[i]);
    if (std::abs(x - delta) > tol && std::abs(x - inner) > tol) return false;
  }
  return true;
}

bool spectrum_membership(const Graph& g, const AbcTriple& t, double tol_factor) {
  return spectrum_membership(eigenvalues(g), t, tol_factor);
}

bool detect_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n >= 1 && g.size() == n * (n - 1) / 2;
}

std::optional<SrgParams> detect_srg(const Graph& g) {
  const auto k = is_regular(g);
  if (!k) return std::nullopt;
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const std::size_t c = g.common_neighbors(u, v);
      auto& slot = g.has_edge(u, v) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  if (!lambda || !mu) return std::nullopt;
  return SrgParams{static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(*k),
                   static_cast<std::int64_t>(*lambda), static_cast<std::int64_t>(*mu)};
}

std::optional<DesignParams> detect_design_incidence(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const auto colour = bipartition(g);
  if (!colour) return std::nullopt;
  const auto k = is_regular(g);
  if (!k) return std::nullopt;
  std::vector<Vertex> side[2];
  for (Vertex v = 0; v < g.order(); ++v) side[(*colour)[v]].push_back(v);
  if (side[0].size() != side[1].size()) return std::nullopt;
  const auto v = static_cast<std::int64_t>(side[0].size());
  // Both the point side and the block side must be pairwise balanced.
  std::optional<std::size_t> lambda;
  for (const auto& part : side) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const std::size_t c = g.common_neighbors(part[a], part[b]);
        if (!lambda) lambda = c;
        else if (*lambda != c) return std::nullopt;
      }
    }
  }
  // A single point and a single block: the only pair count is vacuous.
  const auto lam = lambda ? static_cast<std::int64_t>(*lambda) : static_cast<std::int64_t>(*k);
  return DesignParams{v, static_cast<std::int64_t>(*k), lam};
}

EqualityClass classify_equality(const Graph& g, const Spectrum& spectrum, const AbcTriple& t,
                                double energy, double bound, const ClassifyOptions& options) {
  EqualityClass out;
  out.spectrum_ok = spectrum_membership(spectrum, t, options.membership_tol);
  if (std::abs(bound - energy) > options.tight_tol * std::max(1.0, energy)) {
    out.tag = EqualityTag::NotTight;
    return out;
  }
  if (g.order() < 2 || !is_connected(g)) {
    out.tag = EqualityTag::TightUnclassified;
    return out;
  }
  if (detect_complete(g)) {
    out.tag = EqualityTag::Complete;
  } else if (auto design = detect_design_incidence(g)) {
    out.tag = EqualityTag::DesignIncidence;
    out.design = design;
  } else if (auto srg = detect_srg(g); srg && srg->lambda == srg->mu) {
    out.tag = EqualityTag::SrgEqualParams;
    out.srg = srg;
  } else {
    out.tag = EqualityTag::TightUnclassified;
    out.diagnostic = "bound is tight on a connected graph outside the three equality families";
    std::cerr << "warning: " << (g.label().empty() ? std::string("graph") : g.label()) << ": "
              << out.diagnostic << '\n';
  }
  return out;
}

EqualityClass classify_equality(const Graph& g, const AbcTriple& t, double energy, double bound,
                                const ClassifyOptions& options) {
  return classify_equality(g, eigenvalues(g), t, energy, bound, options);
}

std::vector<EigenvalueCluster> srg_spectrum(const SrgParams& p) {
  const double n = static_cast<double>(p.v);
  const double k = static_cast<double>(p.k);
  const double diff = static_cast<double>(p.lambda - p.mu);
  const double root = std::sqrt(diff * diff + 4.0 * (k - static_cast<double>(p.mu)));
  const double skew = (2.0 * k + (n - 1.0) * diff) / root;
  auto mult = [](double x) { return static_cast<std::size_t>(std::llround(x)); };
  std::vector<EigenvalueCluster> out{{k, 1},
                                     {(diff + root) / 2.0, mult(((n - 1.0) - skew) / 2.0)},
                                     {(diff - root) / 2.0, mult(((n - 1.0) + skew) / 2.0)}};
  // Disconnected SRGs (mu = 0) repeat the degree as the positive root.
  if (std::abs(out[1].value - k) < 1e-12) {
    out[0].multiplicity += out[1].multiplicity;
    out.erase(out.begin() + 1);
  }
  return out;
}

std::vector<EigenvalueCluster> design_incidence_spectrum(const DesignParams& p) {
  const double k = static_cast<double>(p.k);
  const double s = std::sqrt(static_cast<double>(p.k - p.lambda));
  const auto inner = static_cast<std::size_t>(p.v - 1);
  if (inner == 0) return {{k, 1}, {-k, 1}};
  if (p.k == p.lambda) return {{k, 1}, {0.0, 2 * inner}, {-k, 1}};
  return {{k, 1}, {s, inner}, {-s, inner}, {-k, 1}};
}

}  // namespace genergy
