#include <doctest.h>

#include <cmath>
#include <random>

#include "graph_energy/extremal.hpp"
#include "graph_energy/quartic_bound.hpp"
#include "support.hpp"

using namespace genergy;

namespace {

struct Evaluated {
  Graph graph;
  AbcTriple triple;
  double energy;
  double bound;
};

Evaluated evaluate(const Graph& g) {
  const AbcTriple t = abc_triple(moment_summary(g));
  return {g, t, energy(g), theorem1_bound(t)};
}

EqualityClass classify(const Graph& g) {
  const Evaluated e = evaluate(g);
  return classify_equality(e.graph, e.triple, e.energy, e.bound);
}

bool same_clusters(const std::vector<EigenvalueCluster>& a,
                   const std::vector<EigenvalueCluster>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i].value - b[i].value) > 1e-8 || a[i].multiplicity != b[i].multiplicity)
      return false;
  return true;
}

}  // namespace

TEST_CASE("spectrum membership") {
  for (const char* spec : {"rook:4", "heawood", "complete:6"}) {
    const Evaluated e = evaluate(generate(parse_family_spec(spec)));
    CHECK(spectrum_membership(e.graph, e.triple));
  }
  const Evaluated pet = evaluate(generate(family::Petersen{}));
  CHECK(!spectrum_membership(pet.graph, pet.triple));
}

TEST_CASE("detectors") {
  CHECK(detect_complete(generate(family::Complete{1})));
  CHECK(detect_complete(generate(family::Complete{7})));
  CHECK(!detect_complete(generate(family::Cycle{4})));

  CHECK(detect_srg(generate(family::Rook{4})) == SrgParams{16, 6, 2, 2});
  CHECK(detect_srg(generate(family::Petersen{})) == SrgParams{10, 3, 0, 1});
  CHECK(detect_srg(generate(family::Cycle{5})) == SrgParams{5, 2, 0, 1});
  CHECK(!detect_srg(generate(family::Complete{5})));
  CHECK(!detect_srg(Graph(4, {})));
  CHECK(!detect_srg(generate(family::Heawood{})));

  CHECK(detect_design_incidence(generate(family::Heawood{})) == DesignParams{7, 3, 1});
  CHECK(detect_design_incidence(generate(family::ProjectivePlaneIncidence{3})) ==
        DesignParams{13, 4, 1});
  CHECK(detect_design_incidence(generate(family::Complete{2})) == DesignParams{1, 1, 1});
  CHECK(detect_design_incidence(generate(family::CompleteBipartite{3, 3})) ==
        DesignParams{3, 3, 3});
  CHECK(!detect_design_incidence(generate(family::Cycle{8})));
  CHECK(!detect_design_incidence(generate(family::Petersen{})));
}

TEST_CASE("classification of the equality families") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const EqualityClass c = classify(generate(family::Complete{n}));
    CHECK(c.tag == EqualityTag::Complete);
    CHECK(c.spectrum_ok);
  }
  const EqualityClass rook = classify(generate(family::Rook{4}));
  CHECK(rook.tag == EqualityTag::SrgEqualParams);
  CHECK(to_string(rook) == "SrgEqualParams(16,6,2,2)");
  CHECK(rook.spectrum_ok);

  const EqualityClass heawood = classify(generate(family::Heawood{}));
  CHECK(heawood.tag == EqualityTag::DesignIncidence);
  CHECK(to_string(heawood) == "DesignIncidence(7,3,1)");

  CHECK(classify(generate(family::ProjectivePlaneIncidence{3})).tag == EqualityTag::DesignIncidence);
  CHECK(classify(generate(family::Petersen{})).tag == EqualityTag::NotTight);
  CHECK(to_string(classify(generate(family::Petersen{}))) == "NotTight");
  CHECK(classify(generate(family::Complete{2})).tag == EqualityTag::Complete);
}

TEST_CASE("tight disconnected graphs are unclassified") {
  const EqualityClass c = classify(generate(parse_family_spec("union:complete:2,complete:2")));
  CHECK(c.tag == EqualityTag::TightUnclassified);
}

TEST_CASE("named classes imply spectrum membership") {
  for (const Graph& g : testing::full_corpus()) {
    if (g.size() == 0) continue;
    const EqualityClass c = classify(g);
    const bool named = c.tag == EqualityTag::Complete || c.tag == EqualityTag::SrgEqualParams ||
                       c.tag == EqualityTag::DesignIncidence;
    INFO(g.label());
    if (named) CHECK(c.spectrum_ok);
    if (c.tag == EqualityTag::TightUnclassified) CHECK((!is_connected(g) || g.order() < 2));
  }
}

TEST_CASE("detect_complete iff all pairs are edges") {
  std::mt19937_64 rng(8);
  for (const Graph& g : testing::full_corpus())
    CHECK(detect_complete(g) == (g.order() >= 1 && g.size() == g.order() * (g.order() - 1) / 2));
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 7);
    CHECK(detect_complete(g) == (g.order() >= 1 && g.size() == g.order() * (g.order() - 1) / 2));
  }
}

TEST_CASE("detected parameters predict the spectrum") {
  for (const Graph& g : testing::full_corpus()) {
    const Spectrum s = eigenvalues(g);
    const auto groups = group_eigenvalues(s, 1e-7);
    INFO(g.label());
    if (const auto p = detect_srg(g); p && p->mu > 0 && is_connected(g))
      CHECK(same_clusters(srg_spectrum(*p), groups));
    if (const auto p = detect_design_incidence(g)) CHECK(same_clusters(design_incidence_spectrum(*p), groups));
  }
}

TEST_CASE("parameter spectra") {
  const auto rook = srg_spectrum({16, 6, 2, 2});
  REQUIRE(rook.size() == 3);
  CHECK(rook[0].value == doctest::Approx(6));
  CHECK(rook[1].value == doctest::Approx(2));
  CHECK(rook[1].multiplicity == 6);
  CHECK(rook[2].value == doctest::Approx(-2));
  CHECK(rook[2].multiplicity == 9);

  const auto fano = design_incidence_spectrum({7, 3, 1});
  REQUIRE(fano.size() == 4);
  CHECK(fano[1].value == doctest::Approx(std::sqrt(2.0)));
  CHECK(fano[1].multiplicity == 6);
}
