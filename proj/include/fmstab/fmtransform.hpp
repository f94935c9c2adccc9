#pragma once

// Cohomological Fourier-Mukai transform Phi_E : X -> Y for the universal
// semihomogeneous kernel E. Fibers of E have ch = r e^{D_Y} over points of X
// and ch = r e^{D_X} over points of Y, with D_X = d_X l_X and D_Y = d_Y l_Y.
//
// In v-coordinates the transform is anti-diagonal:
//   v^{D_Y}(Phi(E)) = g!/(r n_X) * Adiag(1, -1, ..., (-1)^g) * v^{-D_X}(E).

#include <string>
#include <utility>
#include <vector>

#include "cohlattice.hpp"

namespace fmstab {

class FMTransformSpec {
 public:
  /// Throws DomainError unless g agrees and (n_X/g!)(n_Y/g!) = 1/r^2.
  FMTransformSpec(AbelianContext src, AbelianContext dst, int r, Rational d_x, Rational d_y)
      : src_(std::move(src)), dst_(std::move(dst)), r_(r), d_x_(std::move(d_x)), d_y_(std::move(d_y)) {
    if (src_.g() != dst_.g()) {
      throw DomainError("transform spec: source and target dimensions differ (" + std::to_string(src_.g()) + " vs " +
                        std::to_string(dst_.g()) + ")");
    }
    if (r_ <= 0) throw DomainError("transform spec: rank r must be a positive integer, got " + std::to_string(r_));
    const Rational gf = factorial(src_.g());
    const Rational lhs = (src_.degree() / gf) * (dst_.degree() / gf);
    const Rational rhs = Rational(1) / (Rational(r_) * r_);
    if (lhs != rhs) {
      throw DomainError("transform spec violates degree reciprocity (n_X/g!)(n_Y/g!) = 1/r^2: got " + to_string(lhs) +
                        ", expected " + to_string(rhs));
    }
  }

  /// Poincare-type spec (r = 1, no twists) with the reciprocal target degree.
  static FMTransformSpec poincare(int g, const Rational& n_x) {
    const Rational gf = factorial(g);
    return {AbelianContext(g, n_x, "X"), AbelianContext(g, gf * gf / n_x, "Y"), 1, 0, 0};
  }

  /// Spec with the target degree forced by reciprocity.
  static FMTransformSpec with_reciprocal_target(int g, const Rational& n_x, int r, const Rational& d_x,
                                                const Rational& d_y) {
    const Rational gf = factorial(g);
    return {AbelianContext(g, n_x, "X"), AbelianContext(g, gf * gf / (n_x * r * r), "Y"), r, d_x, d_y};
  }

  const AbelianContext& src() const { return src_; }
  const AbelianContext& dst() const { return dst_; }
  int g() const { return src_.g(); }
  int rank() const { return r_; }
  const Rational& d_x() const { return d_x_; }
  const Rational& d_y() const { return d_y_; }

  /// g!/(r n_X).
  Rational prefactor() const { return factorial(g()) / (Rational(r_) * src_.degree()); }

 private:
  AbelianContext src_;
  AbelianContext dst_;
  int r_;
  Rational d_x_;
  Rational d_y_;
};

/// A class together with a homological shift [k]; flattening multiplies by (-1)^k.
struct ShiftedClass {
  CohClass cls;
  int shift = 0;

  CohClass flatten() const { return (shift % 2 == 0) ? cls : -cls; }
  ShiftedClass shifted(int k) const { return {cls, shift + k}; }
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// M[i][g-i] = (g!/(r n_X)) (-1)^i, zero elsewhere.
inline RationalMatrix antidiag_matrix(const FMTransformSpec& spec) {
  const int g = spec.g();
  const Rational p = spec.prefactor();
  RationalMatrix m(g + 1, std::vector<Rational>(g + 1, Rational(0)));
  for (int i = 0; i <= g; ++i) m[i][g - i] = (i % 2 == 0) ? p : Rational(-p);
  return m;
}

inline CohClass apply(const FMTransformSpec& spec, const CohClass& e) {
  require_same_context(spec.src(), e.context(), "apply");
  const VVector in = v_vector(e, -spec.d_x());
  const RationalMatrix m = antidiag_matrix(spec);
  const int g = spec.g();
  VVector out{spec.dst(), spec.d_y(), std::vector<Rational>(g + 1, Rational(0))};
  for (int i = 0; i <= g; ++i)
    for (int j = 0; j <= g; ++j)
      if (m[i][j] != 0) out.entries[i] += m[i][j] * in.entries[j];
  return from_v_vector(out);
}

inline ShiftedClass apply(const FMTransformSpec& spec, const ShiftedClass& e) {
  return {apply(spec, e.cls), e.shift};
}

struct QuasiInverse {
  FMTransformSpec reverse;  // kernel Sigma^* E^dual, Y -> X
  int shift;                // the quasi-inverse is reverse[shift]
};

/// The kernel Sigma^* E^dual has fibers r e^{-D_Y} and r e^{-D_X}, so the reverse
/// spec carries twists (-d_Y, -d_X). Without its shift, reverse o spec = (-1)^g.
inline QuasiInverse quasi_inverse(const FMTransformSpec& spec) {
  return {FMTransformSpec(spec.dst(), spec.src(), spec.rank(), -spec.d_y(), -spec.d_x()), spec.g()};
}

/// Phi^{-1}(e) as a shifted class on X.
inline ShiftedClass apply_inverse(const FMTransformSpec& spec, const CohClass& e) {
  QuasiInverse q = quasi_inverse(spec);
  return {apply(q.reverse, e), q.shift};
}

/// Both sides of <Phi_{E_L}(u), v>_X = <u, Phi_E(v)>_Y, where E_L = Sigma^* E^dual [g]
/// because omega_Y is trivial.
struct AdjointSides {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

inline AdjointSides adjoint_pairing_sides(const FMTransformSpec& spec, const CohClass& u, const CohClass& v) {
  require_same_context(spec.dst(), u.context(), "adjoint_pairing_check (u)");
  require_same_context(spec.src(), v.context(), "adjoint_pairing_check (v)");
  const CohClass left = apply_inverse(spec, u).flatten();
  return {mukai_pairing(left, v), mukai_pairing(u, apply(spec, v))};
}

inline bool adjoint_pairing_check(const FMTransformSpec& spec, const CohClass& u, const CohClass& v) {
  return adjoint_pairing_sides(spec, u, v).equal();
}

/// Scalars realizing Gamma^H(l_X^i) = r l^i and hat-Gamma^H(l^i) = r^3 l_X^i on the
/// auxiliary variety hat-Y, whose degree is r^2 n_X.
struct GammaAction {
  int degree;
  Rational forward;   // r
  Rational backward;  // r^3
  AbelianContext target;
};

inline GammaAction gamma_action(const FMTransformSpec& spec, int i) {
  if (i < 0 || i > spec.g()) {
    throw DomainError("gamma_action: degree " + std::to_string(i) + " outside [0, " + std::to_string(spec.g()) + "]");
  }
  const Rational r = spec.rank();
  return {i, r, r * r * r, AbelianContext(spec.g(), r * r * spec.src().degree(), "Yhat")};
}

/// Xi^H = (tensor r e^{-D_Y}) o Phi^H o (tensor r e^{-D_X}).
inline CohClass xi_image(const FMTransformSpec& spec, const CohClass& e) {
  const Rational r = spec.rank();
  CohClass pre = r * mul(exp_div(-spec.d_x(), spec.src()), e);
  return r * mul(exp_div(-spec.d_y(), spec.dst()), apply(spec, pre));
}

/// For L numerically e^{m l_X} with m > 0: is -c_1(Xi(L)) ample on Y?
inline bool polarization_image_check(const FMTransformSpec& spec, const Rational& m) {
  if (m <= 0) throw DomainError("polarization_image_check: m must be positive (ample), got " + to_string(m));
  return xi_image(spec, exp_div(m, spec.src()))[1] < 0;
}

}  // namespace fmstab
