#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>
#include <algorithm>

#include "field.hpp"
#include "rational.hpp"

namespace fmstab {

/// Sparse polynomial in the two real variables (b, t) with rational coefficients.
class Poly2 {
 public:
  using Monomial = std::pair<int, int>;  // (power of b, power of t)

  Poly2() = default;
  Poly2(const Rational& c) { add_term({0, 0}, c); }  // NOLINT(google-explicit-constructor)
  Poly2(int c) : Poly2(Rational(c)) {}                // NOLINT(google-explicit-constructor)

  static Poly2 var_b() { Poly2 p; p.add_term({1, 0}, 1); return p; }
  static Poly2 var_t() { Poly2 p; p.add_term({0, 1}, 1); return p; }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(int pb, int pt) const {
    auto it = terms_.find({pb, pt});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly2& operator*=(const Poly2& o) {
    Poly2 out;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) out.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    *this = std::move(out);
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
  friend Poly2 operator-(const Poly2& a) { return Poly2() - a; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Evaluates at (b, t) in any ring that rationals lift into.
  template <class F>
  F eval(const F& b, const F& t) const {
    int max_b = 0, max_t = 0;
    for (const auto& [m, c] : terms_) {
      max_b = std::max(max_b, m.first);
      max_t = std::max(max_t, m.second);
    }
    std::vector<F> pb(max_b + 1, lift<F>(1)), pt(max_t + 1, lift<F>(1));
    for (int i = 1; i <= max_b; ++i) pb[i] = pb[i - 1] * b;
    for (int j = 1; j <= max_t; ++j) pt[j] = pt[j - 1] * t;
    F acc = lift<F>(0);
    for (const auto& [m, c] : terms_) acc += lift<F>(c) * pb[m.first] * pt[m.second];
    return acc;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

inline std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::vector<std::string> factors;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || (m.first == 0 && m.second == 0)) factors.push_back(to_string(mag));
    if (m.first) factors.push_back(m.first == 1 ? "b" : "b^" + std::to_string(m.first));
    if (m.second) factors.push_back(m.second == 1 ? "t" : "t^" + std::to_string(m.second));
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

}  // namespace fmstab
