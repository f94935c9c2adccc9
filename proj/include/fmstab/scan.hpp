#pragma once

// Wall-and-chamber scan over the (b, t) upper half plane. For a fixed class v and
// candidate destabilizers w, the wall of w is the zero set of
//   W(b, t) = Re Z(w) Im Z(v) - Re Z(v) Im Z(w),
// i.e. mu(w) = mu(v). The polynomial is built once symbolically and evaluated
// exactly at the rational grid nodes.

#include <cstdint>
#include <string>
#include <vector>

#include "cohlattice.hpp"
#include "poly2.hpp"
#include "stability.hpp"

namespace fmstab {

struct ScanRequest {
  AbelianContext ctx;
  int k;
  CohClass v;
  std::vector<CohClass> walls;
  Rational b_lo, b_hi;
  Rational t_lo, t_hi;
  int b_cells;
  int t_cells;

  void validate() const {
    if (k < 1 || k > ctx.g()) throw DomainError("scan: k=" + std::to_string(k) + " outside [1, g]");
    if (t_lo <= 0) throw DomainError("scan: t-range must be strictly positive, got lower end " + to_string(t_lo));
    if (t_hi <= t_lo) throw DomainError("scan: empty t-range");
    if (b_hi <= b_lo) throw DomainError("scan: empty b-range");
    if (b_cells < 2 || t_cells < 2) throw DomainError("scan: resolution must be at least 2 per axis");
    require_same_context(ctx, v.context(), "scan (v)");
    for (const auto& w : walls) require_same_context(ctx, w.context(), "scan (w)");
  }

  Rational b_step() const { return (b_hi - b_lo) / b_cells; }
  Rational t_step() const { return (t_hi - t_lo) / t_cells; }
  Rational b_node(int i) const { return b_lo + b_step() * i; }
  Rational t_node(int j) const { return t_lo + t_step() * j; }
};

/// A grid cell [b, b + db] x [t, t + dt], identified by its lower-left node, on
/// whose corners the wall polynomial of wall `w` takes both signs (or vanishes).
struct WallSample {
  std::size_t w;
  int i;
  int j;
  Rational b;
  Rational t;
};

struct WallInfo {
  std::size_t index;
  Poly2 polynomial;
  bool trivial;  // polynomial vanishes identically
  std::size_t sample_count = 0;
};

struct WallDataset {
  ScanRequest request;
  std::vector<WallInfo> walls;
  std::vector<WallSample> samples;  // ordered by (w, b, t)
  bool degenerate_v = false;        // Z^{(k)}(v) vanishes identically
};

inline Poly2 wall_polynomial(const CohClass& v, const CohClass& w, int k) {
  Complex<Poly2> zv = charge_symbolic(v, k);
  Complex<Poly2> zw = charge_symbolic(w, k);
  return zw.re * zv.im - zv.re * zw.im;
}

namespace detail {

// Signs of p on the node grid, indexed [i * (t_cells + 1) + j].
inline std::vector<std::int8_t> node_signs(const Poly2& p, const ScanRequest& req) {
  int max_b = 0, max_t = 0;
  for (const auto& [m, c] : p.terms()) {
    max_b = std::max(max_b, m.first);
    max_t = std::max(max_t, m.second);
  }
  const int nb = req.b_cells + 1, nt = req.t_cells + 1;
  std::vector<Rational> t_nodes(nt);
  for (int j = 0; j < nt; ++j) t_nodes[j] = req.t_node(j);
  std::vector<std::int8_t> out(static_cast<std::size_t>(nb) * nt);
  std::vector<Rational> coeff_t(max_t + 1);
  for (int i = 0; i < nb; ++i) {
    // collapse to a polynomial in t at this b
    const Rational b = req.b_node(i);
    std::vector<Rational> b_pow(max_b + 1, Rational(1));
    for (int e = 1; e <= max_b; ++e) b_pow[e] = b_pow[e - 1] * b;
    for (auto& c : coeff_t) c = 0;
    for (const auto& [m, c] : p.terms()) coeff_t[m.second] += c * b_pow[m.first];
    for (int j = 0; j < nt; ++j) {
      Rational acc = 0;
      for (int e = max_t; e >= 0; --e) acc = acc * t_nodes[j] + coeff_t[e];
      out[static_cast<std::size_t>(i) * nt + j] = static_cast<std::int8_t>(acc.sign());
    }
  }
  return out;
}

}  // namespace detail

inline WallDataset scan_walls(const ScanRequest& req) {
  req.validate();
  WallDataset ds{req, {}, {}, false};
  Complex<Poly2> zv = charge_symbolic(req.v, req.k);
  ds.degenerate_v = zv.re.is_zero() && zv.im.is_zero();
  const int nt = req.t_cells + 1;
  for (std::size_t w = 0; w < req.walls.size(); ++w) {
    WallInfo info{w, wall_polynomial(req.v, req.walls[w], req.k), false, 0};
    info.trivial = info.polynomial.is_zero();
    if (!info.trivial) {
      const std::vector<std::int8_t> s = detail::node_signs(info.polynomial, req);
      for (int i = 0; i < req.b_cells; ++i) {
        for (int j = 0; j < req.t_cells; ++j) {
          const std::size_t a = static_cast<std::size_t>(i) * nt + j, c = a + nt;
          int lo = std::min({s[a], s[a + 1], s[c], s[c + 1]});
          int hi = std::max({s[a], s[a + 1], s[c], s[c + 1]});
          if (lo <= 0 && hi >= 0) ds.samples.push_back({w, i, j, req.b_node(i), req.t_node(j)});
        }
      }
      info.sample_count = ds.samples.size();
      for (const auto& prev : ds.walls) info.sample_count -= prev.sample_count;
    }
    ds.walls.push_back(std::move(info));
  }
  return ds;
}

/// Re-evaluates each emitted cell from the charges themselves, without the
/// symbolic wall polynomial. Returns the indices of samples that fail.
inline std::vector<std::size_t> recheck_samples(const WallDataset& ds) {
  const ScanRequest& req = ds.request;
  std::vector<std::size_t> bad;
  auto wall_value = [&](const CohClass& w, const Rational& b, const Rational& t) {
    Complex<Rational> zv = charge_value<Rational>(req.v, req.k, b, t);
    Complex<Rational> zw = charge_value<Rational>(w, req.k, b, t);
    Rational value = zw.re * zv.im - zv.re * zw.im;
    return value.sign();
  };
  for (std::size_t n = 0; n < ds.samples.size(); ++n) {
    const WallSample& s = ds.samples[n];
    const CohClass& w = req.walls.at(s.w);
    const Rational b1 = s.b + req.b_step(), t1 = s.t + req.t_step();
    int signs[4] = {wall_value(w, s.b, s.t), wall_value(w, s.b, t1), wall_value(w, b1, s.t), wall_value(w, b1, t1)};
    int lo = *std::min_element(signs, signs + 4), hi = *std::max_element(signs, signs + 4);
    if (!(lo <= 0 && hi >= 0)) bad.push_back(n);
  }
  return bad;
}

}  // namespace fmstab
