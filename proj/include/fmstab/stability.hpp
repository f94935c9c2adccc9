#pragma once

// Central charges Z^{(k)}_{B+i w}(E) = -i^{g-k} int e^{-B-i w} ch_{<=k}(E) with
// B = b l and w = t l, together with the slope/phase data they induce.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "angle.hpp"
#include "cohlattice.hpp"
#include "field.hpp"
#include "fmtransform.hpp"
#include "poly2.hpp"

namespace fmstab {

/// One member Z^{(k)}_{B+iw} of the central-charge tower.
struct ChargeSpec {
  AbelianContext ctx;
  int k;
  Rational b;
  QSqrt3 t;

  ChargeSpec(AbelianContext c, int level, Rational b_, QSqrt3 t_)
      : ctx(std::move(c)), k(level), b(std::move(b_)), t(std::move(t_)) {
    if (k < 1 || k > ctx.g()) {
      throw DomainError("charge level k=" + std::to_string(k) + " outside [1, " + std::to_string(ctx.g()) + "]");
    }
    if (t.sign() <= 0) throw DomainError("omega scale t must be positive (ample), got " + to_string(t));
  }
};

/// Z^{(k)} at B = b l, w = t l over any ring F containing the rationals.
template <class F>
Complex<F> charge_value(const CohClass& e, int k, const F& b, const F& t) {
  const int g = e.g();
  if (k < 1 || k > g) throw DomainError("charge level k=" + std::to_string(k) + " outside [1, " + std::to_string(g) + "]");
  // e^{-(b + i t) l} term by term
  const Complex<F> x{-b, -t};
  std::vector<Complex<F>> series;
  series.reserve(g + 1);
  series.push_back({lift<F>(1), lift<F>(0)});
  for (int j = 1; j <= g; ++j) series.push_back(series.back() * x * lift<F>(Rational(1, j)));
  Complex<F> acc{lift<F>(0), lift<F>(0)};
  for (int i = 0; i <= k; ++i) {
    if (e[i] == 0) continue;
    acc += series[g - i] * lift<F>(e[i]);
  }
  acc *= lift<F>(-e.context().degree());
  return rotate_quarter(acc, g - k);
}

inline ExactComplex charge(const ChargeSpec& spec, const CohClass& e) {
  require_same_context(spec.ctx, e.context(), "charge");
  return charge_value<QSqrt3>(e, spec.k, QSqrt3(spec.b), spec.t);
}

/// Real and imaginary parts of Z^{(k)} as polynomials in (b, t).
inline Complex<Poly2> charge_symbolic(const CohClass& e, int k) {
  return charge_value<Poly2>(e, k, Poly2::var_b(), Poly2::var_t());
}

/// mu = -Re Z / Im Z, or +infinity on the real axis.
struct Slope {
  bool infinite = false;
  QSqrt3 value;

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

inline Slope slope_of(const ExactComplex& z) {
  if (z.im.is_zero()) return {true, 0};
  return {false, -z.re / z.im};
}

inline Slope slope(const ChargeSpec& spec, const CohClass& e) { return slope_of(charge(spec, e)); }

inline std::string to_string(const Slope& s) { return s.infinite ? "+inf" : to_string(s.value); }

/// Exact outcome of comparing a phase with a rational; `exact` is false when the
/// comparison fell back to floating point.
struct PhaseComparison {
  int sign;
  bool exact;
};

/// phi = arg(Z)/pi + shift, with arg taken in (0, pi].
class Phase {
 public:
  Phase(ExactComplex z, int shift) : z_(std::move(z)), shift_(shift) {}

  const ExactComplex& value() const { return z_; }
  int shift() const { return shift_; }

  double to_double() const {
    return std::atan2(z_.im.to_double(), z_.re.to_double()) / std::numbers::pi + shift_;
  }

  /// Sign of (phi - x).
  PhaseComparison compare(const Rational& x) const {
    const Rational y = x - shift_;  // compare the base phase in (0, 1] against y
    if (y <= 0) return {1, true};
    if (y >= 1) {
      bool at_one = y == 1 && z_.im.is_zero();
      return {at_one ? 0 : -1, true};
    }
    if (auto d = PiAngle(y).exact_direction()) {
      // arg z vs y*pi, both in the upper half plane: sign of cross(d, z)
      QSqrt3 cross = d->re * z_.im - d->im * z_.re;
      return {cross.sign(), true};
    }
    double diff = (to_double() - shift_) - fmstab::to_double(y);
    return {diff > 0 ? 1 : (diff < 0 ? -1 : 0), false};
  }

 private:
  ExactComplex z_;
  int shift_;
};

/// Phase of a heart-compatible value. Empty for Z = 0 (kernel class); throws for
/// values in the open lower half plane or on the positive real axis.
inline std::optional<Phase> phase_of(const ExactComplex& z, int shift = 0) {
  if (is_zero(z)) return std::nullopt;
  int si = z.im.sign();
  if (si < 0 || (si == 0 && z.re.sign() > 0)) {
    throw DomainError("central charge " + to_string(z) + " is not in H u R_{<0}; not a heart value");
  }
  return Phase(z, shift);
}

inline std::optional<Phase> phase(const ChargeSpec& spec, const CohClass& e) { return phase_of(charge(spec, e)); }

inline std::optional<Phase> phase(const ChargeSpec& spec, const ShiftedClass& e) {
  return phase_of(charge(spec, e.cls), e.shift);
}

/// Is the phase inside the half-open interval (lo, hi]?
inline bool in_slice(const std::optional<Phase>& p, const Rational& lo, const Rational& hi) {
  if (!p) throw DomainError("in_slice: phase undefined (class has Z = 0)");
  return p->compare(lo).sign > 0 && p->compare(hi).sign <= 0;
}

inline bool in_slice(const ChargeSpec& spec, const CohClass& e, const Rational& lo, const Rational& hi) {
  return in_slice(phase(spec, e), lo, hi);
}

inline bool in_slice(const ChargeSpec& spec, const ShiftedClass& e, const Rational& lo, const Rational& hi) {
  return in_slice(phase(spec, e), lo, hi);
}

/// Descriptor of one level sigma_k = (Z^{(k)}, A^{(k)}) of the tilting tower.
struct TowerLevel {
  int k;
  ChargeSpec charge;
  Rational window_lo;  // A^{(k+1)} = P_{sigma_k}((window_lo, window_hi])
  Rational window_hi;
  std::string heart;
  bool bridgeland_candidate;
};

inline std::vector<TowerLevel> heart_tower(const AbelianContext& ctx, const Rational& b, const QSqrt3& t) {
  std::vector<TowerLevel> levels;
  for (int k = 1; k <= ctx.g(); ++k) {
    std::string heart =
        k == 1 ? "Coh(" + ctx.label() + ")" : "P_sigma" + std::to_string(k - 1) + "((1/2, 3/2])";
    levels.push_back({k, ChargeSpec(ctx, k, b, t), Rational(1, 2), Rational(3, 2), heart, k == ctx.g()});
  }
  return levels;
}

/// Harder-Narasimhan polygon of a factor sequence, drawn through the points
/// (Im Z, -Re Z) so that edge slopes are the factor slopes.
struct HNPolygon {
  std::vector<std::pair<QSqrt3, QSqrt3>> vertices;
  bool valid = true;                // slopes strictly decrease after merging collinear edges
  bool strictly_decreasing = true;  // the factor list itself is strictly decreasing
  std::vector<std::size_t> order;   // factor order used (input order unless sorted)
};

namespace detail {

// Sign of mu(a) - mu(b) for nonzero heart values.
inline int compare_slopes(const ExactComplex& a, const ExactComplex& b) {
  bool ia = a.im.is_zero(), ib = b.im.is_zero();
  if (ia || ib) return ia == ib ? 0 : (ia ? 1 : -1);
  // -Re a/Im a vs -Re b/Im b with Im > 0
  return (b.re * a.im - a.re * b.im).sign();
}

}  // namespace detail

inline HNPolygon hn_polygon(const std::vector<ExactComplex>& z, bool sort_by_slope = false) {
  for (const auto& v : z) {
    if (v.im.sign() < 0) throw DomainError("hn_polygon: factor value " + to_string(v) + " lies in the lower half plane");
    if (v.im.is_zero() && v.re.sign() > 0)
      throw DomainError("hn_polygon: factor value " + to_string(v) + " lies on the positive real axis");
  }
  HNPolygon poly;
  poly.order.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) poly.order[i] = i;
  if (sort_by_slope) {
    std::stable_sort(poly.order.begin(), poly.order.end(),
                     [&](std::size_t a, std::size_t b) { return detail::compare_slopes(z[a], z[b]) > 0; });
  }
  poly.vertices.push_back({0, 0});
  std::vector<ExactComplex> edges;  // merged
  std::optional<ExactComplex> previous;
  for (std::size_t idx : poly.order) {
    const ExactComplex& v = z[idx];
    auto [x, y] = poly.vertices.back();
    poly.vertices.push_back({x + v.im, y - v.re});
    if (is_zero(v)) continue;  // kernel classes add no edge
    if (previous && detail::compare_slopes(*previous, v) <= 0) poly.strictly_decreasing = false;
    previous = v;
    if (!edges.empty() && detail::compare_slopes(edges.back(), v) == 0) edges.back() += v;
    else edges.push_back(v);
  }
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (detail::compare_slopes(edges[i - 1], edges[i]) <= 0) poly.valid = false;
  return poly;
}

inline HNPolygon hn_polygon(const std::vector<CohClass>& factors, const ChargeSpec& spec, bool sort_by_slope = false) {
  std::vector<ExactComplex> z;
  z.reserve(factors.size());
  for (const auto& f : factors) z.push_back(charge(spec, f));
  return hn_polygon(z, sort_by_slope);
}

/// Bogomolov-Gieseker type check ch^B_3 <= (w^2/18) ch^B_1 on a 3-fold, together
/// with its precondition Re Z^{(2)} = 0.
struct BGVerdict {
  bool precondition;  // Re Z^{(2)}_{B+iw}(E) == 0
  bool inequality;    // int ch^B_3 <= (t^2/18) int l^2 ch^B_1
  QSqrt3 lhs;
  QSqrt3 rhs;
  QSqrt3 re_z2;
};

inline BGVerdict bg_check(const AbelianContext& ctx, const Rational& b, const QSqrt3& t, const CohClass& e) {
  if (ctx.g() != 3) throw DomainError("bg_check is defined on abelian 3-folds, got g=" + std::to_string(ctx.g()));
  require_same_context(ctx, e.context(), "bg_check");
  const CohClass tw = twist(e, b);
  const QSqrt3 lhs = QSqrt3(tw[3] * ctx.degree());
  const QSqrt3 rhs = t * t * QSqrt3(tw[1] * ctx.degree() / 18);
  const QSqrt3 re_z2 = charge_value<QSqrt3>(e, 2, QSqrt3(b), t).re;
  return {re_z2.is_zero(), lhs <= rhs, lhs, rhs, re_z2};
}

}  // namespace fmstab
