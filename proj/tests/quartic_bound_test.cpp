#include <doctest.h>

#include <cmath>
#include <limits>

#include "graph_energy/error.hpp"
#include "graph_energy/quartic_bound.hpp"
#include "graph_energy/spectral.hpp"
#include "support.hpp"

using namespace genergy;

namespace {

EvenPolynomial poly(std::initializer_list<double> c, double scale = 1.0) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double x : c) v[i++] = x;
  return {v, scale};
}

AbcTriple triple_of(const char* spec) {
  return abc_triple(moment_summary(generate(parse_family_spec(spec))));
}

}  // namespace

TEST_CASE("tangent quartic coefficients") {
  const EvenPolynomial p = pr_coefficients(1.0 / 3);
  CHECK(p.coeffs[0] == doctest::Approx(5.0 / 32).epsilon(1e-14));
  CHECK(p.coeffs[1] == doctest::Approx(27.0 / 16).epsilon(1e-14));
  CHECK(p.coeffs[2] == doctest::Approx(-27.0 / 32).epsilon(1e-14));

  for (double r : {0.1, 0.5, 0.9}) {
    const EvenPolynomial q = pr_coefficients(r);
    CHECK(std::abs(q(r) - r) < 1e-14);
    CHECK(std::abs(q.derivative(r) - 1) < 1e-13);
    CHECK(std::abs(q(1.0) - 1) < 1e-14);
    CHECK(verify_majorization(q, Direction::Above).ok);
  }
  CHECK_THROWS_AS(pr_coefficients(0.0), Error);
  CHECK_THROWS_AS(pr_coefficients(1.0), Error);
}

TEST_CASE("dilation") {
  const EvenPolynomial d = dilate(pr_coefficients(1.0 / 3), 6.0);
  CHECK(d.scale == 6.0);
  CHECK(d.coeffs[0] == doctest::Approx(6 * 5.0 / 32));
  CHECK(d.coeffs[1] == doctest::Approx(27.0 / 16 / 6));
  CHECK(d.coeffs[2] == doctest::Approx(-27.0 / 32 / 216));
  CHECK(std::abs(d(2.0) - 2.0) < 1e-12);
  CHECK(std::abs(d(6.0) - 6.0) < 1e-12);
  CHECK_THROWS_AS(dilate(pr_coefficients(0.5), 0.0), Error);
  CHECK_THROWS_AS(dilate(d, 2.0), Error);
}

TEST_CASE("majorization check") {
  const auto square = verify_majorization(poly({0, 1}), Direction::Above);
  CHECK(!square.ok);
  CHECK(square.worst_gap == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(square.worst_x == doctest::Approx(0.5).epsilon(1e-9));

  CHECK(verify_majorization(poly({0, 1}), Direction::Below).ok);
  CHECK(verify_majorization(poly({0.5, 0.5}), Direction::Above).ok);
  CHECK_THROWS_AS(verify_majorization(poly({1}), Direction::Above, 10), Error);

  const auto sextic = verify_majorization(poly({0, 1, 0, 0}), Direction::Above);
  CHECK(!sextic.ok);
  CHECK(sextic.worst_gap == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(verify_majorization(poly({0.5, 0.5, 0, 0}), Direction::Above).ok);
}

TEST_CASE("bound from an explicit polynomial") {
  const MomentSummary rook = moment_summary(generate(family::Rook{4}));
  const double via_poly = bound_from_polynomial(dilate(pr_coefficients(1.0 / 3), 6.0), rook,
                                                Direction::Above);
  CHECK(via_poly == doctest::Approx(36).epsilon(1e-12));

  const MomentSummary pet = moment_summary(generate(family::Petersen{}));
  CHECK(bound_from_polynomial(poly({3.0}, 3.0), pet, Direction::Above) == doctest::Approx(30));

  try {
    bound_from_polynomial(poly({0, 1.0 / 3}, 3.0), pet, Direction::Above);
    FAIL("x^2/3 accepted as a majorant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MajorizationFailed);
  }
  CHECK(bound_from_polynomial(poly({0, 1.0 / 3}, 3.0), pet, Direction::Below) ==
        doctest::Approx(10));
}

TEST_CASE("frozen values") {
  const AbcTriple pet = triple_of("petersen");
  CHECK(theorem1_bound(pet) == doctest::Approx(16.407544820340817).epsilon(1e-12));
  CHECK(optimal_r(pet).r == doctest::Approx(0.4714045207910317).epsilon(1e-12));
  CHECK(!optimal_r(pet).clamped);
  CHECK(bound_at_r(pet, 0.3) == doctest::Approx(17.22331799254876).epsilon(1e-12));
  CHECK(bound_at_r(pet, 0.7) == doctest::Approx(16.91162739605646).epsilon(1e-12));

  const AbcTriple k5 = triple_of("complete:5");
  CHECK(k5.a == doctest::Approx(4.0625));
  CHECK(theorem1_bound(k5) == doctest::Approx(8).epsilon(1e-12));

  const AbcTriple heawood = triple_of("heawood");
  CHECK(theorem1_bound(heawood) == doctest::Approx(6 + 12 * std::sqrt(2.0)).epsilon(1e-12));

  const AbcTriple rook = triple_of("rook:4");
  CHECK(optimal_r(rook).r == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(theorem1_bound(rook) == doctest::Approx(36).epsilon(1e-12));
}

TEST_CASE("Van Dam examples") {
  CHECK(van_dam_bound(14, 3) == doctest::Approx(6 + 12 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(van_dam_bound(2, 1) == doctest::Approx(2));
  CHECK(van_dam_bound(10, 3) == doctest::Approx(theorem1_bound(triple_of("petersen"))).epsilon(1e-12));
  CHECK_THROWS_AS(van_dam_bound(1, 1), Error);
  CHECK_THROWS_AS(van_dam_bound(4, 0), Error);
}

TEST_CASE("clamped triples") {
  // A union of disjoint edges has A = B = C.
  const AbcTriple matching = triple_of("union:complete:2,complete:2");
  CHECK(optimal_r(matching).clamped);
  CHECK(optimal_r(matching).r == 1.0);
  CHECK(theorem1_bound(matching) == doctest::Approx(4));

  // Complete bipartite: spectrum inside {0, +-D} when the sides are equal.
  const AbcTriple k33 = triple_of("bipartite:3:3");
  CHECK(optimal_r(k33).r == 0.0);
  CHECK(theorem1_bound(k33) == doctest::Approx(6));

  const AbcTriple wide{0.0, 1.0, 1.5, 1.0};
  CHECK(optimal_r(wide).r == kRatioClamp);
  CHECK(theorem1_bound(wide) == doctest::Approx(bound_at_r(wide, kRatioClamp)));
}

TEST_CASE("soundness and tangency over the corpus") {
  for (const Graph& g : testing::full_corpus()) {
    if (g.size() == 0) continue;
    const AbcTriple t = abc_triple(moment_summary(g));
    const double e = energy(g);
    const double bound = theorem1_bound(t);
    INFO(g.label());
    CHECK(bound >= e - 1e-7 * std::max(1.0, e));
    const auto r = optimal_r(t);
    if (r.r <= 0.0 || r.r >= 1.0) continue;
    const EvenPolynomial p = optimal_quartic(t);
    const double d = t.max_degree;
    CHECK(std::abs(p(r.r * d) - r.r * d) <= 1e-9 * d);
    CHECK(std::abs(p(d) - d) <= 1e-9 * d);
  }
}

TEST_CASE("closed form is the minimum over r") {
  for (const Graph& g : testing::full_corpus()) {
    if (g.size() == 0) continue;
    const AbcTriple t = abc_triple(moment_summary(g));
    const auto r = optimal_r(t);
    if (r.clamped) continue;
    const double best = bound_at_r(t, r.r);
    CHECK(testing::close_rel(theorem1_bound(t), best, 1e-9));
    for (int i = 1; i <= 99; ++i) CHECK(best <= bound_at_r(t, i / 100.0) + 1e-12 * best);
  }
}

TEST_CASE("bound does not increase with A") {
  for (const Graph& g : testing::full_corpus()) {
    if (g.size() == 0) continue;
    const AbcTriple t = abc_triple(moment_summary(g));
    double previous = std::numeric_limits<double>::infinity();
    for (double a : {t.a * 0.5, t.a * 0.9, t.a, std::min(t.a * 1.1, t.b)}) {
      const double b = theorem1_bound(AbcTriple{a, t.b, t.c, t.max_degree});
      CHECK(b <= previous + 1e-9 * std::max(1.0, b));
      previous = b;
    }
  }
}

TEST_CASE("regular graphs against Van Dam") {
  for (const Graph& g : testing::full_corpus()) {
    const auto d = is_regular(g);
    if (!d || *d < 1 || g.order() < 2) continue;
    const MomentSummary s = moment_summary(g);
    const double bound = theorem1_bound(abc_triple(s));
    const double vd = van_dam_bound(s.n, static_cast<std::int64_t>(*d));
    INFO(g.label());
    if (s.quad_count == 0)
      CHECK(std::abs(vd - bound) <= 1e-9 * bound);
    else
      CHECK(bound <= vd + 1e-9);
  }
}

TEST_CASE("formula and polynomial paths agree") {
  for (const Graph& g : testing::full_corpus()) {
    if (g.size() == 0) continue;
    const MomentSummary s = moment_summary(g);
    const AbcTriple t = abc_triple(s);
    const std::int64_t moments[3] = {s.n, s.m2, s.m4};
    for (double r : {0.2, 0.5, 0.8}) {
      const EvenPolynomial p = dilate(pr_coefficients(r), t.max_degree);
      CHECK(testing::close_rel(contract<double, std::int64_t>(p, moments), bound_at_r(t, r), 1e-12));
    }
  }
}

TEST_CASE("long double instantiation") {
  const auto s = moment_summary(generate(family::Heawood{}));
  const auto t = abc_triple<long double>(s);
  const long double exact = 6 + 12 * std::sqrt(2.0L);
  CHECK(std::abs(static_cast<double>(theorem1_bound(t) - exact)) < 1e-15);
  const auto p = dilate(pr_coefficients<long double>(optimal_r(t).r), t.max_degree);
  CHECK(verify_majorization(p, Direction::Above).ok);
}
