#pragma once

// Exact arithmetic on the rank-one numerical cohomology Q[l]/(l^{g+1}) of a
// polarized abelian variety. A class sum_i c_i l^i is stored by its
// coefficient vector; integration multiplies the top coefficient by l^g.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fmstab {

/// Dimension g and polarization degree n = l^g of a polarized abelian variety.
class AbelianContext {
 public:
  AbelianContext(int g, Rational n, std::string label = "X")
      : g_(g), n_(std::move(n)), label_(std::move(label)) {
    if (g_ < 1) throw DomainError("abelian context requires g >= 1, got " + std::to_string(g_));
    if (n_ <= 0) throw DomainError("abelian context requires degree n > 0, got " + to_string(n_));
  }

  int g() const { return g_; }
  const Rational& degree() const { return n_; }
  const std::string& label() const { return label_; }

  /// chi(l) = l^g / g!.
  Rational euler_characteristic() const { return n_ / factorial(g_); }

  /// Advisory only: a genuine ample line bundle has integral chi.
  bool has_integral_euler_characteristic() const { return is_integer(euler_characteristic()); }

  /// Labels are cosmetic; lattices agree when (g, n) agree.
  friend bool operator==(const AbelianContext& a, const AbelianContext& b) {
    return a.g_ == b.g_ && a.n_ == b.n_;
  }

 private:
  int g_;
  Rational n_;
  std::string label_;
};

inline void require_same_context(const AbelianContext& a, const AbelianContext& b, std::string_view op) {
  if (!(a == b)) {
    throw ContextMismatch(std::string(op) + ": context mismatch (" + a.label() + ": g=" + std::to_string(a.g()) +
                          ", n=" + to_string(a.degree()) + " vs " + b.label() + ": g=" + std::to_string(b.g()) +
                          ", n=" + to_string(b.degree()) + ")");
  }
}

class CohClass {
 public:
  explicit CohClass(AbelianContext ctx) : ctx_(std::move(ctx)), c_(ctx_.g() + 1, Rational(0)) {}

  CohClass(AbelianContext ctx, std::vector<Rational> coefficients)
      : ctx_(std::move(ctx)), c_(std::move(coefficients)) {
    if (static_cast<int>(c_.size()) != ctx_.g() + 1) {
      throw DomainError("class needs exactly g+1 = " + std::to_string(ctx_.g() + 1) + " coefficients, got " +
                        std::to_string(c_.size()));
    }
  }

  /// The basis class l^i / i!.
  static CohClass basis(const AbelianContext& ctx, int i) {
    if (i < 0 || i > ctx.g()) throw DomainError("basis degree out of range");
    CohClass out(ctx);
    out.c_[i] = Rational(1) / factorial(i);
    return out;
  }

  const AbelianContext& context() const { return ctx_; }
  int g() const { return ctx_.g(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  /// Same coefficients on another lattice of the same dimension.
  CohClass relabel(const AbelianContext& ctx) const {
    if (ctx.g() != g()) throw DomainError("relabel across dimensions");
    return CohClass(ctx, c_);
  }

  CohClass& operator+=(const CohClass& o) {
    require_same_context(ctx_, o.ctx_, "add");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CohClass& operator-=(const CohClass& o) {
    require_same_context(ctx_, o.ctx_, "subtract");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CohClass& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }
  friend CohClass operator*(CohClass a, const Rational& s) { return a *= s; }
  friend CohClass operator-(CohClass a) { return a *= Rational(-1); }

  /// Equal lattice and equal coefficients.
  friend bool operator==(const CohClass& a, const CohClass& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

 private:
  AbelianContext ctx_;
  std::vector<Rational> c_;
};

/// Cup product, truncated above degree g.
inline CohClass mul(const CohClass& a, const CohClass& b) {
  require_same_context(a.context(), b.context(), "mul");
  const int g = a.g();
  CohClass out(a.context());
  for (int i = 0; i <= g; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= g; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Rational integrate(const CohClass& a) { return a[a.g()] * a.context().degree(); }

/// e^{b l}.
inline CohClass exp_div(const Rational& b, const AbelianContext& ctx) {
  CohClass out(ctx);
  Rational term = 1;
  for (int i = 0; i <= ctx.g(); ++i) {
    out[i] = term;
    term = term * b / (i + 1);
  }
  return out;
}

/// ch^B = e^{-B} ch with B = b l.
inline CohClass twist(const CohClass& a, const Rational& b) { return mul(exp_div(-b, a.context()), a); }

inline CohClass mukai_dual(const CohClass& a) {
  CohClass out = a;
  for (int i = 1; i <= a.g(); i += 2) out[i] = -out[i];
  return out;
}

/// <a, b> = -int a^* b. Satisfies <a, b> = (-1)^g <b, a> on this sublattice.
inline Rational mukai_pairing(const CohClass& a, const CohClass& b) {
  require_same_context(a.context(), b.context(), "mukai_pairing");
  return -integrate(mul(mukai_dual(a), b));
}

/// Coordinates v_i = i! l^{g-i} ch^B_i of a class relative to the twist B = b l.
struct VVector {
  AbelianContext ctx;
  Rational twist;
  std::vector<Rational> entries;

  friend bool operator==(const VVector& a, const VVector& b) {
    return a.ctx == b.ctx && a.twist == b.twist && a.entries == b.entries;
  }
};

inline VVector v_vector(const CohClass& a, const Rational& b) {
  CohClass tw = twist(a, b);
  VVector v{a.context(), b, std::vector<Rational>(a.g() + 1)};
  for (int i = 0; i <= a.g(); ++i) v.entries[i] = factorial(i) * a.context().degree() * tw[i];
  return v;
}

inline CohClass from_v_vector(const VVector& v) {
  if (static_cast<int>(v.entries.size()) != v.ctx.g() + 1) throw DomainError("v-vector has wrong length");
  CohClass twisted(v.ctx);
  for (int i = 0; i <= v.ctx.g(); ++i) twisted[i] = v.entries[i] / (factorial(i) * v.ctx.degree());
  return twist(twisted, -v.twist);
}

// Builders.

inline CohClass structure_sheaf(const AbelianContext& ctx) {
  CohClass out(ctx);
  out[0] = 1;
  return out;
}

/// Point class, normalized so that it integrates to 1.
inline CohClass skyscraper(const AbelianContext& ctx) {
  CohClass out(ctx);
  out[ctx.g()] = Rational(1) / ctx.degree();
  return out;
}

inline CohClass line_bundle(const AbelianContext& ctx, const Rational& d) { return exp_div(d, ctx); }

/// ch = r e^{d l} of a simple semihomogeneous bundle.
inline CohClass semihomogeneous(const AbelianContext& ctx, int r, const Rational& d) {
  if (r <= 0) throw DomainError("semihomogeneous rank must be positive, got " + std::to_string(r));
  return Rational(r) * exp_div(d, ctx);
}

// Text forms "c0,c1,...,cg".

inline CohClass parse_class(std::string_view text, const AbelianContext& ctx) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(c.size()) != ctx.g() + 1) {
    throw ParseError("class literal '" + std::string(text) + "' has " + std::to_string(c.size()) +
                     " entries, expected g+1 = " + std::to_string(ctx.g() + 1));
  }
  return CohClass(ctx, std::move(c));
}

inline std::string to_string(const CohClass& a) {
  std::string out;
  for (int i = 0; i <= a.g(); ++i) {
    if (i) out += ',';
    out += to_string(a[i]);
  }
  return out;
}

}  // namespace fmstab
