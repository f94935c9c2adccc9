#pragma once

// Induced action of Phi_E on central charges:
//   Z^X_{-D_X + u l_X}(E) = zeta * Z^Y_{D_Y - l_Y/u}(Phi_E(E)),  zeta = r n_X u^g / g!.
// Every identity is recomputed from both sides; angles that are multiples of
// pi/6 are handled exactly over Q(sqrt3), anything else in double precision.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "angle.hpp"
#include "fmtransform.hpp"
#include "stability.hpp"

namespace fmstab {

/// Relative tolerance for the floating-point fallback paths.
inline constexpr double kFloatTolerance = 1e-12;

/// u = lambda e^{i alpha} with lambda > 0 rational and alpha a rational multiple of pi.
class PolarScalar {
 public:
  PolarScalar(Rational lambda, const Rational& angle_over_pi) : lambda_(std::move(lambda)), angle_(angle_over_pi) {
    if (lambda_ <= 0) throw DomainError("polar scalar modulus must be positive, got " + to_string(lambda_));
  }

  const Rational& modulus() const { return lambda_; }
  const PiAngle& angle() const { return angle_; }

  /// (lambda^m, normalize(m alpha)).
  PolarScalar pow(int m) const { return {fmstab::pow(lambda_, m), angle_.fraction() * m}; }

  bool is_real() const { return angle_.is_real(); }

  std::optional<ExactComplex> exact() const {
    auto unit = angle_.exact_unit();
    if (!unit) return std::nullopt;
    return *unit * QSqrt3(lambda_);
  }

  std::complex<double> approx() const { return std::polar(to_double(lambda_), angle_.radians()); }

 private:
  Rational lambda_;
  PiAngle angle_;
};

/// Parses "lambda@x", meaning lambda * e^{i x pi}.
inline PolarScalar parse_polar(std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos) throw ParseError("polar scalar '" + std::string(text) + "' must look like lambda@angle");
  return {parse_rational(text.substr(0, at)), parse_rational(text.substr(at + 1))};
}

inline std::string to_string(const PolarScalar& u) { return to_string(u.modulus()) + "*exp(i*" + to_string(u.angle()) + ")"; }

struct Zeta {
  Rational modulus;         // r n_X lambda^g / g!
  PiAngle angle;            // normalize(g alpha)
  Rational lifted_angle;    // g alpha / pi before normalization
  bool is_real;
  std::optional<ExactComplex> exact;
  std::complex<double> approx;
};

inline Zeta zeta(const FMTransformSpec& spec, const PolarScalar& u) {
  const int g = spec.g();
  PolarScalar ug = u.pow(g);
  Rational modulus = Rational(spec.rank()) * spec.src().degree() * ug.modulus() / factorial(g);
  PolarScalar z(modulus, ug.angle().fraction());
  return {modulus, ug.angle(), u.angle().fraction() * g, ug.is_real(), z.exact(), z.approx()};
}

/// Real-valued scalar that is exact whenever the inputs allow it.
struct MaybeExact {
  std::optional<QSqrt3> exact;
  double approx = 0;
};

inline std::string to_string(const MaybeExact& x) {
  if (x.exact) return to_string(*x.exact);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x.approx);
  return buf;
}

/// Parameters of the two charges related by the induced law.
struct InducedChargeLaw {
  Zeta z;
  MaybeExact source_b;  // -d_X + Re u
  MaybeExact source_t;  // Im u
  MaybeExact target_b;  // d_Y - Re(1/u)
  MaybeExact target_t;  // Im(-1/u), positive when Im u > 0
};

inline InducedChargeLaw induced_charge_law(const FMTransformSpec& spec, const PolarScalar& u) {
  InducedChargeLaw law{zeta(spec, u), {}, {}, {}, {}};
  const std::complex<double> ua = u.approx();
  const std::complex<double> inv = -1.0 / ua;
  law.source_b.approx = -to_double(spec.d_x()) + ua.real();
  law.source_t.approx = ua.imag();
  law.target_b.approx = to_double(spec.d_y()) + inv.real();
  law.target_t.approx = inv.imag();
  if (auto unit = u.angle().exact_unit()) {
    const QSqrt3 lam(u.modulus());
    const QSqrt3 inv_lam(Rational(1) / u.modulus());
    law.source_b.exact = QSqrt3(-spec.d_x()) + lam * unit->re;
    law.source_t.exact = lam * unit->im;
    law.target_b.exact = QSqrt3(spec.d_y()) - inv_lam * unit->re;
    law.target_t.exact = inv_lam * unit->im;
  }
  return law;
}

/// One checked instance of the induced law.
struct LawRecord {
  CohClass cls;
  std::string lhs;
  std::string rhs;
  bool equal;
  bool exact;
};

namespace detail {

inline bool close(std::complex<double> a, std::complex<double> b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kFloatTolerance * scale;
}

inline std::string format_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g + (%.15g)*i", z.real(), z.imag());
  return buf;
}

}  // namespace detail

/// Checks Z^X_{-D_X+u l}(e) = zeta Z^Y_{D_Y - l/u}(Phi e) for each class. The left
/// side is evaluated on X directly, the right side after the transform pipeline.
inline std::vector<LawRecord> verify_induced_law(const FMTransformSpec& spec, const PolarScalar& u,
                                                 const std::vector<CohClass>& basis) {
  const int g = spec.g();
  const InducedChargeLaw law = induced_charge_law(spec, u);
  std::vector<LawRecord> out;
  out.reserve(basis.size());
  for (const auto& e : basis) {
    require_same_context(spec.src(), e.context(), "verify_induced_law");
    const CohClass image = apply(spec, e);
    if (law.source_b.exact && law.z.exact) {
      ExactComplex lhs = charge_value<QSqrt3>(e, g, *law.source_b.exact, *law.source_t.exact);
      ExactComplex rhs = *law.z.exact * charge_value<QSqrt3>(image, g, *law.target_b.exact, *law.target_t.exact);
      out.push_back({e, to_string(lhs), to_string(rhs), lhs == rhs, true});
    } else {
      Complex<double> l = charge_value<double>(e, g, law.source_b.approx, law.source_t.approx);
      Complex<double> r = charge_value<double>(image, g, law.target_b.approx, law.target_t.approx);
      std::complex<double> lhs(l.re, l.im);
      std::complex<double> rhs = law.z.approx * std::complex<double>(r.re, r.im);
      out.push_back({e, detail::format_complex(lhs), detail::format_complex(rhs), detail::close(lhs, rhs), false});
    }
  }
  return out;
}

/// Angles alpha = k pi/g, 1 <= k <= g-1, for which zeta is real and Im u > 0.
inline std::vector<PiAngle> real_zeta_angles(int g) {
  if (g < 1) throw DomainError("real_zeta_angles: g must be positive");
  std::vector<PiAngle> out;
  for (int k = 1; k < g; ++k) out.emplace_back(Rational(k, g));
  return out;
}

/// A complexified class (re + i im) l on the given variety.
struct ComplexifiedClass {
  AbelianContext ctx;
  std::optional<ExactComplex> exact;
  std::complex<double> approx;

  bool imaginary_part_positive() const { return exact ? exact->im.sign() > 0 : approx.imag() > 0; }
};

inline std::string to_string(const ComplexifiedClass& c) {
  std::string coeff = c.exact ? to_string(*c.exact) : detail::format_complex(c.approx);
  return "(" + coeff + ")*l_" + c.ctx.label();
}

struct ConjectureParams {
  int k;
  Rational lambda;
  ComplexifiedClass omega;        // -D_X + lambda e^{i k pi/g} l_X
  ComplexifiedClass omega_prime;  // D_Y - e^{-i k pi/g} l_Y / lambda
};

inline ConjectureParams conjecture_params(const FMTransformSpec& spec, int k, const Rational& lambda) {
  const int g = spec.g();
  if (k < 1 || k > g - 1) {
    throw DomainError("conjecture_params: k=" + std::to_string(k) + " outside [1, g-1] for g=" + std::to_string(g));
  }
  if (lambda <= 0) throw DomainError("conjecture_params: lambda must be positive, got " + to_string(lambda));
  const PiAngle angle(Rational(k, g));
  const double lam = to_double(lambda);
  const std::complex<double> unit = std::polar(1.0, angle.radians());
  ConjectureParams p{k,
                     lambda,
                     {spec.src(), std::nullopt, -to_double(spec.d_x()) + lam * unit},
                     {spec.dst(), std::nullopt, to_double(spec.d_y()) - std::conj(unit) / lam}};
  if (auto e = angle.exact_unit()) {
    p.omega.exact = ExactComplex{QSqrt3(-spec.d_x()), 0} + *e * QSqrt3(lambda);
    p.omega_prime.exact = ExactComplex{QSqrt3(spec.d_y()), 0} - e->conj() * QSqrt3(Rational(1) / lambda);
  }
  return p;
}

struct PhaseShiftVerdict {
  bool identity_holds;  // arg Z^Y(Phi e) = arg Z^X(e) - arg zeta (mod 2 pi)
  bool exact;
  int heart_shift;      // round(g alpha / pi)
  std::string z_source;
  std::string z_target;
  double arg_source;    // radians, display only
  double arg_target;
};

/// Value-level shadow of Phi(P^X(phi)) = P^Y(phi - arg(zeta)/pi). The heart shift uses
/// the lift g*alpha of arg zeta, which equals k at alpha = k pi/g.
inline PhaseShiftVerdict phase_shift_check(const FMTransformSpec& spec, const PolarScalar& u, const CohClass& e) {
  require_same_context(spec.src(), e.context(), "phase_shift_check");
  const int g = spec.g();
  const InducedChargeLaw law = induced_charge_law(spec, u);
  const CohClass image = apply(spec, e);
  const int shift = static_cast<int>(floor(law.z.lifted_angle + Rational(1, 2)));
  if (law.source_b.exact && law.z.exact) {
    ExactComplex zx = charge_value<QSqrt3>(e, g, *law.source_b.exact, *law.source_t.exact);
    if (is_zero(zx)) throw DomainError("phase_shift_check: Z^X(e) = 0, phase undefined");
    ExactComplex zy = charge_value<QSqrt3>(image, g, *law.target_b.exact, *law.target_t.exact);
    ExactComplex expected = zx * law.z.angle.exact_unit()->conj();  // rotate by -arg zeta
    QSqrt3 cross = expected.re * zy.im - expected.im * zy.re;
    QSqrt3 dot = expected.re * zy.re + expected.im * zy.im;
    bool holds = cross.is_zero() && dot.sign() > 0;
    return {holds,
            true,
            shift,
            to_string(zx),
            to_string(zy),
            std::atan2(zx.im.to_double(), zx.re.to_double()),
            std::atan2(zy.im.to_double(), zy.re.to_double())};
  }
  Complex<double> zx = charge_value<double>(e, g, law.source_b.approx, law.source_t.approx);
  Complex<double> zy = charge_value<double>(image, g, law.target_b.approx, law.target_t.approx);
  std::complex<double> cx(zx.re, zx.im), cy(zy.re, zy.im);
  if (std::abs(cx) == 0) throw DomainError("phase_shift_check: Z^X(e) = 0, phase undefined");
  std::complex<double> expected = cx * std::polar(1.0, -law.z.angle.radians());
  double scale = std::max({1.0, std::abs(expected), std::abs(cy)});
  double cross = expected.real() * cy.imag() - expected.imag() * cy.real();
  double dot = expected.real() * cy.real() + expected.imag() * cy.imag();
  bool holds = std::abs(cross) <= kFloatTolerance * scale * scale && dot > 0;
  return {holds, false, shift, detail::format_complex(cx), detail::format_complex(cy), std::arg(cx), std::arg(cy)};
}

}  // namespace fmstab
