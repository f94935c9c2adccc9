#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "field.hpp"

namespace fmstab {

/// The angle x*pi, with x an exact rational normalized into (-1, 1].
class PiAngle {
 public:
  PiAngle() = default;
  explicit PiAngle(const Rational& x) : x_(normalize(x)) {}

  /// Reduces x into (-1, 1] modulo 2.
  static Rational normalize(const Rational& x) { return x - 2 * Rational(ceil((x - 1) / 2)); }

  const Rational& fraction() const { return x_; }
  double radians() const { return to_double(x_) * std::numbers::pi; }

  /// Angle is 0 or pi.
  bool is_real() const { return x_ == 0 || x_ == 1; }

  PiAngle times(int m) const { return PiAngle(x_ * m); }

  /// (cos, sin) in Q(sqrt3); available for multiples of pi/6.
  std::optional<ExactComplex> exact_unit() const {
    Rational six = x_ * 6;
    if (!is_integer(six)) return std::nullopt;
    static const Rational h(1, 2);
    static const QSqrt3 s(Rational(0), h);  // sqrt3/2
    int m = static_cast<int>(numerator_of(six));  // in (-6, 6]
    m = ((m % 12) + 12) % 12;
    switch (m) {
      case 0: return ExactComplex{1, 0};
      case 1: return ExactComplex{s, h};
      case 2: return ExactComplex{h, s};
      case 3: return ExactComplex{0, 1};
      case 4: return ExactComplex{Rational(-h), s};
      case 5: return ExactComplex{-s, h};
      case 6: return ExactComplex{-1, 0};
      case 7: return ExactComplex{-s, Rational(-h)};
      case 8: return ExactComplex{Rational(-h), -s};
      case 9: return ExactComplex{0, -1};
      case 10: return ExactComplex{h, -s};
      default: return ExactComplex{s, Rational(-h)};
    }
  }

  /// A positive multiple of (cos, sin) in Q(sqrt3); available for multiples of pi/12,
  /// since tan(pi/12) = 2 - sqrt3.
  std::optional<ExactComplex> exact_direction() const {
    Rational twelve = x_ * 12;
    if (!is_integer(twelve)) return std::nullopt;
    int m = static_cast<int>(numerator_of(twelve));
    ExactComplex step{1, QSqrt3(Rational(2), Rational(-1))};
    if (m < 0) {
      step = step.conj();
      m = -m;
    }
    ExactComplex out{1, 0};
    for (int i = 0; i < m; ++i) out *= step;
    return out;
  }

  friend bool operator==(const PiAngle& a, const PiAngle& b) { return a.x_ == b.x_; }

 private:
  Rational x_ = 0;
};

inline std::string to_string(const PiAngle& a) {
  const Rational& x = a.fraction();
  if (x == 0) return "0";
  if (x == 1) return "pi";
  if (x == -1) return "-pi";
  std::string num = numerator_of(x) == 1 ? "" : (numerator_of(x) == -1 ? "-" : numerator_of(x).str() + "*");
  return num + "pi/" + denominator_of(x).str();
}

}  // namespace fmstab
