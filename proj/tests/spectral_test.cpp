#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "graph_energy/error.hpp"
#include "graph_energy/spectral.hpp"
#include "support.hpp"

using namespace genergy;

namespace {

double tol_eig(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return 1e-10 * std::max<double>(1.0, static_cast<double>(d));
}

Eigen::VectorXd reference_spectrum(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency_matrix(),
                                                        Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues().reverse();
  return ev;
}

}  // namespace

TEST_CASE("spectrum examples") {
  const Spectrum k3 = eigenvalues(generate(family::Complete{3}));
  REQUIRE(k3.eigenvalues.size() == 3);
  CHECK(k3.eigenvalues[0] == doctest::Approx(2).epsilon(1e-12));
  CHECK(k3.eigenvalues[1] == doctest::Approx(-1).epsilon(1e-12));
  CHECK(k3.eigenvalues[2] == doctest::Approx(-1).epsilon(1e-12));

  const Spectrum heawood = eigenvalues(generate(family::Heawood{}));
  const auto groups = group_eigenvalues(heawood, 1e-8 * 3);
  REQUIRE(groups.size() == 4);
  CHECK(groups[0].value == doctest::Approx(3).epsilon(1e-10));
  CHECK(groups[0].multiplicity == 1);
  CHECK(groups[1].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(groups[1].multiplicity == 6);
  CHECK(groups[2].value == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
  CHECK(groups[2].multiplicity == 6);
  CHECK(groups[3].multiplicity == 1);

  const Spectrum c4 = eigenvalues(generate(family::Cycle{4}));
  const double expect[] = {2, 0, 0, -2};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(c4.eigenvalues[i] - expect[i]) < 1e-10);

  CHECK(eigenvalues(Graph{}).eigenvalues.size() == 0);
}

TEST_CASE("energy examples") {
  for (std::size_t n = 1; n <= 10; ++n)
    CHECK(energy(generate(family::Complete{n})) ==
          doctest::Approx(2.0 * static_cast<double>(n - 1)).epsilon(1e-10));
  CHECK(energy(generate(family::Heawood{})) ==
        doctest::Approx(6 + 12 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(energy(generate(family::Petersen{})) == doctest::Approx(16).epsilon(1e-12));
  CHECK(energy(Graph(5, {})) == 0.0);
}

TEST_CASE("trace moment examples") {
  const Graph c4 = generate(family::Cycle{4});
  CHECK(trace_moment(c4, 0) == 4);
  CHECK(trace_moment(c4, 1) == 0);
  CHECK(trace_moment(c4, 4) == 32);
  CHECK(testing::enumerate_closed_walks(c4, 4) == 32);
  CHECK(to_string(trace_moment(c4, 4)) == "32");

  // Tr(A^16) for K_40 is 39^16 + 39, beyond 64 bits.
  const Graph k40 = generate(family::Complete{40});
  WalkCount expect = 1;
  for (int i = 0; i < 16; ++i) expect *= 39;
  expect += 39;
  CHECK(trace_moment(k40, 16) == expect);
  CHECK(to_string(trace_moment(k40, 16)) == "28644003124274380508351400");
}

TEST_CASE("trace moment caps") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalMismatch;
  };
  const Graph k3 = generate(family::Complete{3});
  CHECK(code([&] { trace_moment(k3, 17); }) == ErrorCode::CapExceeded);
  CHECK(code([&] { trace_moment(Graph(kTraceMaxOrder + 1, {}), 2); }) == ErrorCode::CapExceeded);
}

TEST_CASE("power sums of eigenvalues match exact traces") {
  for (const Graph& g : testing::full_corpus()) {
    const Spectrum s = eigenvalues(g);
    const auto traces = trace_moments(g, 6);
    for (std::size_t k = 0; k <= 6; ++k) {
      const double sum = s.eigenvalues.array().pow(static_cast<double>(k)).sum();
      const double exact = static_cast<double>(traces[k]);
      INFO(g.label(), " k=", k);
      CHECK(std::abs(sum - exact) <= 1e-7 * std::max(1.0, exact));
    }
  }
}

TEST_CASE("closed walk enumeration agrees with the trace oracle") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 9);
    const auto traces = trace_moments(g, 6);
    for (std::size_t k = 0; k <= 6; ++k)
      CHECK(static_cast<std::int64_t>(traces[k]) == testing::enumerate_closed_walks(g, k));
  }
}

TEST_CASE("Jacobi agrees with an independent eigensolver") {
  for (const Graph& g : testing::full_corpus()) {
    if (g.order() == 0) continue;
    const Spectrum s = eigenvalues(g);
    CHECK(s.eigenvalues.size() == static_cast<Eigen::Index>(g.order()));
    CHECK((s.eigenvalues - reference_spectrum(g)).cwiseAbs().maxCoeff() <= tol_eig(g));
    CHECK(std::is_sorted(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size(),
                         [](double a, double b) { return a > b; }));
  }
}

TEST_CASE("trace and second moment invariants of the spectrum") {
  for (const Graph& g : testing::full_corpus()) {
    const Spectrum s = eigenvalues(g);
    CHECK(std::abs(s.eigenvalues.sum()) < 1e-9 * std::max<double>(1.0, g.order()));
    CHECK(s.eigenvalues.squaredNorm() ==
          doctest::Approx(2.0 * static_cast<double>(g.size())).epsilon(1e-10));
    if (g.size() > 0) {
      const double e = energy(s);
      CHECK(e >= s.eigenvalues[0] + std::abs(s.eigenvalues[s.eigenvalues.size() - 1]) - 1e-9);
    }
  }
}

TEST_CASE("bipartite spectra are symmetric") {
  for (const Graph& g : testing::full_corpus()) {
    if (!is_bipartite(g)) continue;
    const Spectrum s = eigenvalues(g);
    const Eigen::VectorXd mirrored = -s.eigenvalues.reverse();
    CHECK((s.eigenvalues - mirrored).cwiseAbs().maxCoeff() <= tol_eig(g));
  }
}

TEST_CASE("union spectrum is the multiset union") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph a = testing::random_graph(rng, 10);
    const Graph b = testing::random_graph(rng, 10);
    std::vector<Edge> edges = a.edges();
    for (auto [i, j] : b.edges()) edges.emplace_back(i + a.order(), j + a.order());
    const Graph u(a.order() + b.order(), edges);
    std::vector<double> expect;
    for (const Graph* g : {&a, &b}) {
      const Spectrum s = eigenvalues(*g);
      expect.insert(expect.end(), s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
    }
    std::sort(expect.begin(), expect.end(), std::greater<>());
    const Spectrum s = eigenvalues(u);
    for (std::size_t i = 0; i < expect.size(); ++i)
      CHECK(std::abs(s.eigenvalues[static_cast<Eigen::Index>(i)] - expect[i]) <= tol_eig(u));
  }
}

TEST_CASE("Jacobi is scalar-generic") {
  Eigen::Matrix<long double, 3, 3> m;
  m << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  const auto s = symmetric_eigenvalues(m);
  CHECK(std::abs(static_cast<double>(s.eigenvalues[0]) - (2 + std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(static_cast<double>(s.eigenvalues[1]) - 2) < 1e-15);
  CHECK(std::abs(static_cast<double>(s.eigenvalues[2]) - (2 - std::sqrt(2.0))) < 1e-15);

  JacobiOptions tight;
  tight.max_sweeps = 0;
  CHECK_THROWS_AS(symmetric_eigenvalues(m, tight), Error);
}
