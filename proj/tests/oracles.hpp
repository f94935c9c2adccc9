#pragma once

// Independent re-derivations used to check the library. Nothing here calls the
// library's arithmetic beyond the number types themselves.

#include <random>
#include <vector>

#include "fmstab/field.hpp"
#include "fmstab/rational.hpp"

namespace oracle {

using fmstab::ExactComplex;
using fmstab::QSqrt3;
using fmstab::Rational;
using Coeffs = std::vector<Rational>;  // coefficient of l^i, i = 0..g

inline Rational fact(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Rational binom(int m, int j) { return fact(m) / (fact(j) * fact(m - j)); }

inline Rational rpow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Schoolbook product in Q[l]/(l^{g+1}).
inline Coeffs times(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = a.size();
  Coeffs out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Coeffs exp_l(const Rational& d, int g) {
  Coeffs out(g + 1);
  for (int i = 0; i <= g; ++i) out[i] = rpow(d, i) / fact(i);
  return out;
}

// -n * sum_i (-1)^i a_i b_{g-i}
inline Rational pairing(const Coeffs& a, const Coeffs& b, const Rational& n) {
  const int g = static_cast<int>(a.size()) - 1;
  Rational s = 0;
  for (int i = 0; i <= g; ++i) s += (i % 2 ? Rational(-1) : Rational(1)) * a[i] * b[g - i];
  return -n * s;
}

// Closed form of the untwisted transform on monomials,
//   l^i  ->  i! (-1)^{g-i} (r n_X / g!) l^{g-i} / (g-i)!,
// conjugated by the twists: y -> e^{d_Y l} A(e^{d_X l} y).
inline Coeffs fm_image(const Coeffs& y, int r, const Rational& n_x, const Rational& d_x, const Rational& d_y) {
  const int g = static_cast<int>(y.size()) - 1;
  const Coeffs pre = times(exp_l(d_x, g), y);
  Coeffs mid(g + 1, Rational(0));
  for (int i = 0; i <= g; ++i) {
    const Rational sign = (g - i) % 2 ? -1 : 1;
    mid[g - i] += pre[i] * fact(i) * sign * Rational(r) * n_x / fact(g) / fact(g - i);
  }
  return times(exp_l(d_y, g), mid);
}

// (i)^j for j >= 0 applied to a real scalar
inline ExactComplex i_pow(int j, const QSqrt3& x) {
  switch (((j % 4) + 4) % 4) {
    case 0: return {x, 0};
    case 1: return {0, x};
    case 2: return {-x, 0};
    default: return {0, -x};
  }
}

// Z^{(k)} = -i^{g-k} * n * sum_{i<=k} c_i (-(b+it))^{g-i}/(g-i)!, expanded binomially.
inline ExactComplex charge(const Coeffs& c, const Rational& n, int k, const QSqrt3& b, const QSqrt3& t) {
  const int g = static_cast<int>(c.size()) - 1;
  ExactComplex sum{0, 0};
  for (int i = 0; i <= k; ++i) {
    const int m = g - i;
    const QSqrt3 scale = QSqrt3(c[i] * (m % 2 ? Rational(-1) : Rational(1)) / fact(m));
    for (int j = 0; j <= m; ++j) {
      QSqrt3 bt = QSqrt3(binom(m, j));
      for (int p = 0; p < m - j; ++p) bt = bt * b;
      for (int p = 0; p < j; ++p) bt = bt * t;
      sum += i_pow(j, bt * scale);
    }
  }
  ExactComplex out = ExactComplex{QSqrt3(-n), 0} * sum;
  // multiply by i^{g-k}
  for (int q = 0; q < g - k; ++q) out = ExactComplex{-out.im, out.re};
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational(int num = 7, int den = 5) { return Rational(integer(-num, num), integer(1, den)); }
  Rational positive(int num = 7, int den = 5) { return Rational(integer(1, num), integer(1, den)); }
  Coeffs coeffs(int g) {
    Coeffs c(g + 1);
    for (auto& x : c) x = rational();
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
