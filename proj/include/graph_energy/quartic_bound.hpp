#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graph_energy/error.hpp"
#include "graph_energy/moments.hpp"

namespace genergy {

enum class Direction { Above, Below };

/// Even polynomial c0 + c2 x^2 + c4 x^4 + ... Odd terms are not
/// representable. `scale` is the half-width of the interval the polynomial is
/// meant for: 1 for the unit family, the max degree after dilation.
template <typename Scalar>
struct EvenPolynomialT {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Vector coeffs;  // coeffs[j] multiplies x^(2j)
  Scalar scale{1};

  EvenPolynomialT() = default;
  EvenPolynomialT(Vector c, Scalar s = Scalar(1)) : coeffs(std::move(c)), scale(s) {
    if (!coeffs.allFinite()) throw Error(ErrorCode::DomainError, "non-finite coefficient");
  }

  Eigen::Index degree() const { return coeffs.size() == 0 ? 0 : 2 * (coeffs.size() - 1); }

  Scalar operator()(Scalar x) const {
    const Scalar x2 = x * x;
    Scalar acc{0};
    for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * x2 + coeffs[j];
    return acc;
  }

  Scalar derivative(Scalar x) const {
    const Scalar x2 = x * x;
    Scalar acc{0};
    for (Eigen::Index j = coeffs.size() - 1; j >= 1; --j)
      acc = acc * x2 + Scalar(2 * j) * coeffs[j];
    return acc * x;
  }
};

using EvenPolynomial = EvenPolynomialT<double>;

/// The even quartic touching y = x at x = r (tangentially) and at x = 1, and
/// lying above y = x on [0, 1]. Coefficients in the order (c0, c2, c4).
template <typename Scalar>
EvenPolynomialT<Scalar> pr_coefficients(Scalar r) {
  if (!(r > Scalar(0) && r < Scalar(1)))
    throw Error(ErrorCode::DomainError, "tangency point must lie in (0,1)");
  const Scalar den = Scalar(2) * r * (r + 1) * (r + 1);
  typename EvenPolynomialT<Scalar>::Vector c(3);
  c << r * r * (Scalar(2) * r + 1) / den, (Scalar(3) * r * r + Scalar(2) * r + 1) / den,
      Scalar(-1) / den;
  return {c, Scalar(1)};
}

/// x -> delta * p(x / delta): c_{2j} -> delta * c_{2j} / delta^{2j}.
template <typename Scalar>
EvenPolynomialT<Scalar> dilate(const EvenPolynomialT<Scalar>& p, Scalar delta) {
  if (!(delta > Scalar(0))) throw Error(ErrorCode::DomainError, "dilation factor must be positive");
  if (p.scale != Scalar(1)) throw Error(ErrorCode::DomainError, "only unit-scale polynomials dilate");
  typename EvenPolynomialT<Scalar>::Vector c = p.coeffs;
  Scalar factor = delta;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    c[j] *= factor;
    factor /= delta * delta;
  }
  return {c, delta};
}

template <typename Scalar>
struct MajorizationCheck {
  bool ok = false;
  Scalar worst_gap{0};  // min of P(x) - x (Above) or x - P(x) (Below)
  Scalar worst_x{0};
};

namespace detail {

/// Real roots of 4 c4 x^3 + 2 c2 x - 1 (the derivative of c0 + c2 x^2 + c4 x^4 - x).
template <typename Scalar>
std::vector<Scalar> quartic_gap_critical_points(Scalar c2, Scalar c4) {
  using std::abs;
  using std::acos;
  using std::cbrt;
  using std::cos;
  using std::sqrt;
  std::vector<Scalar> roots;
  if (c4 == Scalar(0)) {
    if (c2 != Scalar(0)) roots.push_back(Scalar(1) / (Scalar(2) * c2));
    return roots;
  }
  // Depressed cubic x^3 + p x + q = 0.
  const Scalar p = c2 / (Scalar(2) * c4);
  const Scalar q = Scalar(-1) / (Scalar(4) * c4);
  const Scalar disc = q * q / 4 + p * p * p / 27;
  if (disc > Scalar(0)) {
    const Scalar s = sqrt(disc);
    roots.push_back(cbrt(-q / 2 + s) + cbrt(-q / 2 - s));
  } else if (p == Scalar(0)) {
    roots.push_back(cbrt(-q));
  } else {
    const Scalar m = Scalar(2) * sqrt(-p / 3);
    Scalar arg = Scalar(3) * q / (p * m);
    arg = std::clamp(arg, Scalar(-1), Scalar(1));
    const Scalar phi = acos(arg) / 3;
    for (int k = 0; k < 3; ++k)
      roots.push_back(m * cos(phi - Scalar(2) * std::numbers::pi_v<Scalar> * k / 3));
  }
  // Newton polish against the unreduced cubic.
  for (auto& x : roots) {
    for (int it = 0; it < 3; ++it) {
      const Scalar f = Scalar(4) * c4 * x * x * x + Scalar(2) * c2 * x - 1;
      const Scalar df = Scalar(12) * c4 * x * x + Scalar(2) * c2;
      if (df == Scalar(0)) break;
      x -= f / df;
    }
  }
  return roots;
}

}  // namespace detail

/// Checks P(x) >= |x| (Above) or P(x) <= |x| (Below) on [-half_width,
/// half_width]. Evenness reduces this to [0, half_width]: a uniform grid of
/// `grid_points` samples, plus every critical point of P(x) - x inside the
/// interval (closed form up to degree 4, bracketing + bisection beyond).
/// A point passes when its gap is >= -tol_factor * half_width.
template <typename Scalar>
MajorizationCheck<Scalar> verify_majorization_on(const EvenPolynomialT<Scalar>& p, Direction dir,
                                                 Scalar half_width, std::size_t grid_points,
                                                 Scalar tol_factor = Scalar(1e-9)) {
  if (grid_points < 1000) throw Error(ErrorCode::DomainError, "majorization grid needs >= 1000 points");
  const Scalar sign = dir == Direction::Above ? Scalar(1) : Scalar(-1);
  auto gap = [&](Scalar x) { return sign * (p(x) - x); };
  auto slope = [&](Scalar x) { return p.derivative(x) - Scalar(1); };

  MajorizationCheck<Scalar> out;
  out.worst_gap = gap(Scalar(0));
  out.worst_x = Scalar(0);
  auto consider = [&](Scalar x) {
    if (!(x >= Scalar(0) && x <= half_width)) return;
    const Scalar g = gap(x);
    if (g < out.worst_gap) {
      out.worst_gap = g;
      out.worst_x = x;
    }
  };

  const Scalar step = half_width / Scalar(grid_points - 1);
  Scalar prev_x{0};
  Scalar prev_slope = slope(Scalar(0));
  for (std::size_t i = 1; i < grid_points; ++i) {
    const Scalar x = i + 1 == grid_points ? half_width : step * Scalar(i);
    consider(x);
    const Scalar s = slope(x);
    if (p.degree() > 4 && (prev_slope < Scalar(0)) != (s < Scalar(0))) {
      Scalar lo = prev_x, hi = x;
      for (int it = 0; it < 200 && hi - lo > Scalar(0); ++it) {
        const Scalar mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) break;
        if ((slope(mid) < Scalar(0)) == (prev_slope < Scalar(0))) lo = mid; else hi = mid;
      }
      consider(lo);
      consider(hi);
    }
    prev_x = x;
    prev_slope = s;
  }
  if (p.degree() <= 4 && half_width > Scalar(0)) {
    const Scalar c2 = p.coeffs.size() > 1 ? p.coeffs[1] : Scalar(0);
    const Scalar c4 = p.coeffs.size() > 2 ? p.coeffs[2] : Scalar(0);
    for (Scalar x : detail::quartic_gap_critical_points(c2, c4)) consider(x);
  }
  out.ok = out.worst_gap >= -tol_factor * half_width;
  return out;
}

template <typename Scalar>
MajorizationCheck<Scalar> verify_majorization(const EvenPolynomialT<Scalar>& p, Direction dir,
                                              std::size_t grid_points = 4001) {
  return verify_majorization_on(p, dir, p.scale, grid_points);
}

/// sum_j c_{2j} M_{2j}; `even_moments[j]` holds M_{2j}.
template <typename Scalar, typename MomentScalar>
Scalar contract(const EvenPolynomialT<Scalar>& p, std::span<const MomentScalar> even_moments) {
  if (static_cast<std::size_t>(p.coeffs.size()) > even_moments.size())
    throw Error(ErrorCode::DomainError, "not enough moments for polynomial degree");
  Scalar acc{0};
  for (Eigen::Index j = 0; j < p.coeffs.size(); ++j)
    acc += p.coeffs[j] * static_cast<Scalar>(even_moments[j]);
  return acc;
}

/// Energy bound from a polynomial of degree <= 4 that majorizes (Above) or
/// minorizes (Below) |x| on [-D, D]. Throws MajorizationFailed otherwise.
template <typename Scalar = double>
Scalar bound_from_polynomial(const EvenPolynomialT<Scalar>& p, const MomentSummary& s,
                             Direction dir) {
  if (p.degree() > 4)
    throw Error(ErrorCode::DomainError, "closed moments stop at M4; use the LP path for higher degree");
  const auto check = verify_majorization_on(p, dir, static_cast<Scalar>(s.max_degree), 4001);
  if (!check.ok)
    throw Error(ErrorCode::MajorizationFailed,
                "gap " + std::to_string(double(check.worst_gap)) + " at x = " +
                    std::to_string(double(check.worst_x)));
  const std::int64_t moments[3] = {s.n, s.m2, s.m4};
  return contract<Scalar, std::int64_t>(p, moments);
}

template <typename Scalar>
struct OptimalR {
  Scalar r{0};
  bool clamped = false;
};

/// Relative guard on differences of the triple, scaled by C.
inline constexpr double kTripleGuard = 1e-13;
/// Clamp used when (B - A) / (C - B) >= 1.
inline constexpr double kRatioClamp = 1.0 - 1e-9;

/// Minimizer of bound_at_r over (0,1): sqrt((B-A)/(C-B)).
///
/// Degenerate triples are clamped: C = B (hence A = B = C, a union of
/// disjoint edges) returns r = 1; A = B (spectrum inside {0, +-D}) returns
/// r = 0, the limit where the bound tends to B; a ratio >= 1 returns
/// 1 - 1e-9.
template <typename Scalar>
OptimalR<Scalar> optimal_r(const AbcTripleT<Scalar>& t) {
  using std::sqrt;
  const Scalar guard = Scalar(kTripleGuard) * t.c;
  const Scalar cb = t.c - t.b;
  const Scalar ba = t.b - t.a;
  if (cb <= guard) return {Scalar(1), true};
  if (ba <= guard) return {Scalar(0), true};
  const Scalar ratio = ba / cb;
  if (ratio >= Scalar(1)) return {Scalar(kRatioClamp), true};
  return {sqrt(ratio), false};
}

/// Upper bound from the dilated tangent quartic at r:
/// (-A + B (3r^2 + 2r + 1) + C r^2 (2r + 1)) / (2 r (r+1)^2).
template <typename Scalar>
Scalar bound_at_r(const AbcTripleT<Scalar>& t, Scalar r) {
  if (!(r > Scalar(0) && r < Scalar(1)))
    throw Error(ErrorCode::DomainError, "r must lie in (0,1)");
  const Scalar den = Scalar(2) * r * (r + 1) * (r + 1);
  return (-t.a + t.b * (Scalar(3) * r * r + Scalar(2) * r + 1) +
          t.c * r * r * (Scalar(2) * r + 1)) /
         den;
}

/// min over r in (0,1) of bound_at_r, in closed form.
template <typename Scalar>
Scalar theorem1_bound(const AbcTripleT<Scalar>& t) {
  using std::abs;
  using std::sqrt;
  const auto [r, clamped] = optimal_r(t);
  if (clamped) {
    if (r == Scalar(0) || r == Scalar(1)) return t.b;
    return bound_at_r(t, r);
  }
  const Scalar den = t.a - Scalar(2) * t.b + t.c;
  if (abs(den) <= Scalar(kTripleGuard) * t.c) return bound_at_r(t, r);
  const Scalar root = sqrt(t.b - t.a) * sqrt(t.c - t.b);
  return -(t.b * t.b + t.b * root - t.c * (t.a + root)) / den;
}

/// The optimal quartic dilated to [-D, D]. Not defined for triples clamped to
/// r = 0 or r = 1; those have spectrum inside {0, +-D} and the bound B is
/// exact.
template <typename Scalar>
EvenPolynomialT<Scalar> optimal_quartic(const AbcTripleT<Scalar>& t) {
  const auto [r, clamped] = optimal_r(t);
  (void)clamped;
  return dilate(pr_coefficients(r), t.max_degree);
}

/// n (d + (d^2 - d) sqrt(d - 1)) / (d^2 - d + 1), the regular-graph bound.
template <typename Scalar = double>
Scalar van_dam_bound(std::int64_t n, std::int64_t d) {
  using std::sqrt;
  if (d < 1 || n < 2) throw Error(ErrorCode::DomainError, "needs d >= 1 and n >= 2");
  const Scalar dd = static_cast<Scalar>(d);
  return static_cast<Scalar>(n) * (dd + (dd * dd - dd) * sqrt(dd - 1)) / (dd * dd - dd + 1);
}

}  // namespace genergy
