#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graph_energy/graph.hpp"
#include "graph_energy/moments.hpp"
#include "graph_energy/spectral.hpp"

namespace genergy {

struct SrgParams {
  std::int64_t v, k, lambda, mu;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct DesignParams {
  std::int64_t v, k, lambda;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

enum class EqualityTag { Complete, SrgEqualParams, DesignIncidence, NotTight, TightUnclassified };

struct EqualityClass {
  EqualityTag tag = EqualityTag::NotTight;
  std::optional<SrgParams> srg;        // set for SrgEqualParams
  std::optional<DesignParams> design;  // set for DesignIncidence
  bool spectrum_ok = false;            // spectrum inside {+-r* D, +-D}
  std::string diagnostic;              // non-empty for TightUnclassified on connected input
};

/// "Complete", "SrgEqualParams(16,6,2,2)", "DesignIncidence(7,3,1)", ...
std::string to_string(const EqualityClass& c);

/// Every eigenvalue within tol_factor * D of one of {-D, -r* D, r* D, D}.
bool spectrum_membership(const Spectrum& spectrum, const AbcTriple& t, double tol_factor = 1e-7);
bool spectrum_membership(const Graph& g, const AbcTriple& t, double tol_factor = 1e-7);

/// All pairs adjacent (n >= 1).
bool detect_complete(const Graph& g);

/// Regular, with a constant common-neighbour count over adjacent pairs and
/// another over non-adjacent pairs. Both kinds of pair must occur, so
/// complete and edgeless graphs are not reported. O(n^2 * n/64).
std::optional<SrgParams> detect_srg(const Graph& g);

/// Connected, bipartite with both parts of size v, k-regular, and any two
/// vertices on the same side share exactly lambda neighbours. For K2 this
/// reports the trivial design (1,1,1).
std::optional<DesignParams> detect_design_incidence(const Graph& g);

struct ClassifyOptions {
  double tight_tol = 1e-6;  // |bound - energy| <= tight_tol * max(1, energy)
  double membership_tol = 1e-7;
};

/// Detectors run in the order Complete, DesignIncidence, SrgEqualParams
/// (lambda = mu required). Named classes are only claimed for connected
/// graphs with n >= 2; other tight inputs are TightUnclassified.
EqualityClass classify_equality(const Graph& g, const Spectrum& spectrum, const AbcTriple& t,
                                double energy, double bound, const ClassifyOptions& options = {});
EqualityClass classify_equality(const Graph& g, const AbcTriple& t, double energy, double bound,
                                const ClassifyOptions& options = {});

/// Distinct eigenvalues and multiplicities a strongly regular graph must
/// have, from (n, k, lambda, mu), descending. Multiplicities are rounded
/// from the standard closed form; conference-graph cases yield non-integers
/// in the formula and are returned rounded as well.
std::vector<EigenvalueCluster> srg_spectrum(const SrgParams& p);

/// {k, sqrt(k - lambda), -sqrt(k - lambda), -k} with multiplicities
/// {1, v-1, v-1, 1}; for v = 1 only +-k.
std::vector<EigenvalueCluster> design_incidence_spectrum(const DesignParams& p);

}  // namespace genergy
