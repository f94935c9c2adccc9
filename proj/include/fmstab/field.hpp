#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <string_view>

#include "rational.hpp"

namespace fmstab {

// Exact elements a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign, decided by comparing a^2 with 3 b^2 when the parts disagree.
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // a^2 == 3 b^2 has no rational solution besides zero
    return a_ * a_ > 3 * b_ * b_ ? sa : sb;
  }

  QSqrt3 conjugate() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }

  QSqrt3 inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(sqrt3)");
    Rational n = norm();
    return {a_ / n, -b_ / n};
  }

  QSqrt3& operator+=(const QSqrt3& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt3& operator-=(const QSqrt3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt3& operator*=(const QSqrt3& o) {
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QSqrt3& operator/=(const QSqrt3& o) { return *this *= o.inverse(); }

  friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
  friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
  friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
  friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
  friend QSqrt3 operator-(const QSqrt3& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt3& x, const QSqrt3& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const {
    return static_cast<double>(a_.convert_to<long double>() +
                               b_.convert_to<long double>() * std::sqrt(3.0L));
  }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

/// "a", "b*sqrt3" or "a+b*sqrt3", with the rational parts in short form.
inline std::string to_string(const QSqrt3& x) {
  const Rational& a = x.rational_part();
  const Rational& b = x.surd_part();
  if (b == 0) return to_string(a);
  std::string surd = to_string(b < 0 ? Rational(-b) : b) + "*sqrt3";
  if (a == 0) return (b < 0 ? "-" : "") + surd;
  return to_string(a) + (b < 0 ? "-" : "+") + surd;
}

/// Parses "p/q", "p/q*sqrt3", "sqrt3", or "a+b*sqrt3" / "a-b*sqrt3".
inline QSqrt3 parse_qsqrt3(std::string_view text) {
  std::string_view s = detail::trim(text);
  constexpr std::string_view kSurd = "sqrt3";
  if (s.size() < kSurd.size() || s.substr(s.size() - kSurd.size()) != kSurd) return QSqrt3(parse_rational(s));
  std::string_view head = s.substr(0, s.size() - kSurd.size());
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  // split "a+b" / "a-b" at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') { split = i; break; }
  }
  auto coefficient = [&](std::string_view c) -> Rational {
    c = detail::trim(c);
    if (c.empty() || c == "+") return 1;
    if (c == "-") return -1;
    return parse_rational(c);
  };
  if (split == std::string_view::npos) return {Rational(0), coefficient(head)};
  return {parse_rational(head.substr(0, split)), coefficient(head.substr(split))};
}

/// Cartesian complex numbers over an arbitrary commutative ring of scalars.
template <class F>
struct Complex {
  F re{};
  F im{};

  Complex() = default;
  Complex(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    F r = re * o.re - im * o.im;
    F i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator*=(const F& s) { re *= s; im *= s; return *this; }

  friend Complex operator+(Complex x, const Complex& y) { return x += y; }
  friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
  friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
  friend Complex operator*(Complex x, const F& s) { return x *= s; }
  friend Complex operator*(const F& s, Complex x) { return x *= s; }
  friend Complex operator-(const Complex& x) { return {-x.re, -x.im}; }
  friend bool operator==(const Complex& x, const Complex& y) { return x.re == y.re && x.im == y.im; }

  Complex conj() const { return {re, -im}; }
};

/// Multiplication by i^m as an exact quarter-turn.
template <class F>
Complex<F> rotate_quarter(const Complex<F>& z, int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.im, z.re};
    case 2: return {-z.re, -z.im};
    default: return {z.im, -z.re};
  }
}

/// Lifts rationals into the scalar types the engine is instantiated over.
template <class F>
struct ScalarTraits {
  static F from(const Rational& q) { return F(q); }
};

template <>
struct ScalarTraits<double> {
  static double from(const Rational& q) { return to_double(q); }
};

template <>
struct ScalarTraits<long double> {
  static long double from(const Rational& q) { return q.convert_to<long double>(); }
};

template <class F>
F lift(const Rational& q) { return ScalarTraits<F>::from(q); }

using ExactComplex = Complex<QSqrt3>;

inline bool is_zero(const ExactComplex& z) { return z.re.is_zero() && z.im.is_zero(); }

inline std::string to_string(const ExactComplex& z) {
  if (z.im.is_zero()) return to_string(z.re);
  std::string im = to_string(z.im);
  if (z.re.is_zero()) return "(" + im + ")*i";
  return to_string(z.re) + " + (" + im + ")*i";
}

}  // namespace fmstab
