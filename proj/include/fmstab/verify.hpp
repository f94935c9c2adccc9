#pragma once

// Property-check harness behind `fmstab verify`. Each check runs a fixed-seed batch
// and keeps the first counterexample.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cohlattice.hpp"
#include "config.hpp"
#include "fmtransform.hpp"
#include "random.hpp"
#include "stability.hpp"
#include "transformlaw.hpp"

namespace fmstab {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { pass, fail, note };

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status;
  int cases = 0;
  std::string detail;  // counterexample on failure, measurement for notes
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

inline void print(const VerifyReport& report, std::ostream& os) {
  int passed = 0, failed = 0;
  for (const auto& c : report.checks) {
    const char* tag = c.status == CheckStatus::pass ? "PASS" : (c.status == CheckStatus::fail ? "FAIL" : "NOTE");
    os << tag << "  [" << c.suite << "] " << c.name;
    if (c.cases) os << " (" << c.cases << " cases)";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    if (c.status == CheckStatus::pass) ++passed;
    if (c.status == CheckStatus::fail) ++failed;
  }
  os << passed << " passed, " << failed << " failed\n";
}

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int trials = 40;
  std::optional<SpecFields> spec;  // user spec, exercised in addition to random ones
};

namespace detail {

// Runs `body` for each case; body returns an empty string on success or a description.
class CheckRunner {
 public:
  CheckRunner(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void run(const std::string& name, int cases, const std::function<std::string(int)>& body) {
    CheckResult res{suite_, name, CheckStatus::pass, cases, {}};
    for (int i = 0; i < cases; ++i) {
      std::string why;
      try {
        why = body(i);
      } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
      }
      if (!why.empty()) {
        res.status = CheckStatus::fail;
        res.detail = "case " + std::to_string(i) + ": " + why;
        break;
      }
    }
    report_.checks.push_back(std::move(res));
  }

  void note(const std::string& name, const std::string& detail) {
    report_.checks.push_back({suite_, name, CheckStatus::note, 0, detail});
  }

  void fail(const std::string& name, const std::string& detail) {
    report_.checks.push_back({suite_, name, CheckStatus::fail, 0, detail});
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

inline std::string mismatch(const CohClass& got, const CohClass& want) {
  return "got (" + to_string(got) + "), expected (" + to_string(want) + ")";
}

inline void lattice_suite(const VerifyOptions& opt, VerifyReport& report) {
  CheckRunner run(report, "lattice");
  RandomSource rnd(opt.seed);
  const int n = opt.trials;
  auto ctx_for = [&](int) { return AbelianContext(rnd.uniform_int(1, 5), rnd.positive_rational(), "X"); };

  run.run("mul commutative and associative", n, [&](int i) -> std::string {
    AbelianContext c = ctx_for(i);
    CohClass a = rnd.cls(c), b = rnd.cls(c), d = rnd.cls(c);
    if (mul(a, b) != mul(b, a)) return "a*b != b*a for a=(" + to_string(a) + "), b=(" + to_string(b) + ")";
    if (mul(mul(a, b), d) != mul(a, mul(b, d))) return "associativity fails for a=(" + to_string(a) + ")";
    return {};
  });
  run.run("mul distributes over addition", n, [&](int i) -> std::string {
    AbelianContext c = ctx_for(i);
    CohClass a = rnd.cls(c), b = rnd.cls(c), d = rnd.cls(c);
    return mul(a, b + d) == mul(a, b) + mul(a, d) ? "" : mismatch(mul(a, b + d), mul(a, b) + mul(a, d));
  });
  run.run("twist is a group action", n, [&](int i) -> std::string {
    AbelianContext c = ctx_for(i);
    CohClass a = rnd.cls(c);
    Rational b1 = rnd.rational(), b2 = rnd.rational();
    CohClass lhs = twist(twist(a, b1), b2), rhs = twist(a, b1 + b2);
    return lhs == rhs ? "" : mismatch(lhs, rhs);
  });
  run.run("mukai pairing bilinear", n, [&](int i) -> std::string {
    AbelianContext c = ctx_for(i);
    CohClass a = rnd.cls(c), a2 = rnd.cls(c), b = rnd.cls(c), b2 = rnd.cls(c);
    Rational p = rnd.rational(), q = rnd.rational();
    if (mukai_pairing(p * a + q * a2, b) != p * mukai_pairing(a, b) + q * mukai_pairing(a2, b)) return "left slot";
    if (mukai_pairing(a, p * b + q * b2) != p * mukai_pairing(a, b) + q * mukai_pairing(a, b2)) return "right slot";
    return {};
  });
  run.run("v-vector round trip", n, [&](int i) -> std::string {
    AbelianContext c = ctx_for(i);
    CohClass a = rnd.cls(c);
    Rational b = rnd.rational();
    if (from_v_vector(v_vector(a, b)) != a) return mismatch(from_v_vector(v_vector(a, b)), a);
    VVector v = v_vector(rnd.cls(c), b);
    for (auto& x : v.entries) x = rnd.rational();
    if (v_vector(from_v_vector(v), b).entries != v.entries) return "from_v_vector then v_vector is not the identity";
    return {};
  });
  run.run("points are invisible to twisting", n, [&](int i) -> std::string {
    AbelianContext c = ctx_for(i);
    Rational b = rnd.rational();
    Rational v = integrate(mul(exp_div(b, c), skyscraper(c)));
    return v == 1 ? "" : "integral is " + to_string(v) + " at b=" + to_string(b);
  });

  // <a,b> = (-1)^g <b,a>: reported, since the pairing is not symmetric in odd g.
  std::string measured;
  for (int g = 1; g <= 5; ++g) {
    AbelianContext c(g, 1, "X");
    CohClass a = rnd.cls(c), b = rnd.cls(c);
    Rational ab = mukai_pairing(a, b), ba = mukai_pairing(b, a);
    const char* kind = ab == ba ? "symmetric" : (ab == -ba ? "antisymmetric" : "neither");
    measured += (g > 1 ? ", " : "") + std::string("g=") + std::to_string(g) + " " + kind;
  }
  run.note("mukai pairing symmetry", measured);
}

inline std::vector<FMTransformSpec> specs_under_test(const VerifyOptions& opt, RandomSource& rnd, int max_g,
                                                     CheckRunner& run, int per_g) {
  std::vector<FMTransformSpec> specs;
  if (opt.spec) {
    try {
      specs.push_back(opt.spec->build());
    } catch (const DomainError& e) {
      run.fail("configured spec", std::string("rejected by constructor: ") + e.what());
    }
  }
  for (int g = 1; g <= max_g; ++g) {
    specs.push_back(FMTransformSpec::poincare(g, rnd.positive_rational()));
    for (int i = 0; i < per_g; ++i) specs.push_back(rnd.spec(g));
  }
  return specs;
}

inline void transform_suite(const VerifyOptions& opt, VerifyReport& report) {
  CheckRunner run(report, "transform");
  RandomSource rnd(opt.seed + 1);
  const std::vector<FMTransformSpec> specs = specs_under_test(opt, rnd, 5, run, 6);
  const int ns = static_cast<int>(specs.size());

  run.run("constructor enforces degree reciprocity", 100, [&](int) -> std::string {
    const int g = rnd.uniform_int(1, 5), r = rnd.uniform_int(1, 4);
    const Rational nx = rnd.positive_rational();
    const Rational gf = factorial(g);
    Rational ny = gf * gf / (nx * r * r);
    const bool perturb = rnd.uniform_int(0, 1) == 1;
    if (perturb) ny = ny * rnd.positive_rational(5, 5) + Rational(1, rnd.uniform_int(2, 7));
    const Rational gf2 = gf * gf;
    const bool valid = nx * ny * r * r == gf2;
    bool accepted = true;
    try {
      FMTransformSpec(AbelianContext(g, nx, "X"), AbelianContext(g, ny, "Y"), r, 0, 0);
    } catch (const DomainError&) {
      accepted = false;
    }
    if (accepted != valid)
      return "g=" + std::to_string(g) + " r=" + std::to_string(r) + " nX=" + to_string(nx) + " nY=" + to_string(ny) +
             (accepted ? " accepted" : " rejected");
    return {};
  });
  run.run("apply is linear", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    CohClass a = rnd.cls(s.src()), b = rnd.cls(s.src());
    Rational p = rnd.rational(), q = rnd.rational();
    CohClass lhs = apply(s, p * a + q * b), rhs = p * apply(s, a) + q * apply(s, b);
    return lhs == rhs ? "" : mismatch(lhs, rhs);
  });
  run.run("quasi-inverse composes to (-1)^g", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    const QuasiInverse q = quasi_inverse(s);
    for (int k = 0; k <= s.g(); ++k) {
      CohClass e = CohClass::basis(s.src(), k);
      CohClass back = apply(q.reverse, apply(s, e));
      CohClass want = s.g() % 2 == 0 ? e : -e;
      if (back != want) return "basis " + std::to_string(k) + ": " + mismatch(back, want);
    }
    return {};
  });
  run.run("Poincare closed form on basis", 5, [&](int i) -> std::string {
    const int g = i + 1;
    const auto s = FMTransformSpec::poincare(g, rnd.positive_rational());
    for (int k = 0; k <= g; ++k) {
      std::vector<Rational> c(g + 1, Rational(0));
      const Rational sign = ((g - k) % 2 == 0) ? 1 : -1;
      c[g - k] = sign * s.src().degree() / factorial(g) / factorial(g - k);
      const CohClass want(s.dst(), c);
      CohClass got = apply(s, CohClass::basis(s.src(), k));
      if (got != want) return "g=" + std::to_string(g) + " basis " + std::to_string(k) + ": " + mismatch(got, want);
    }
    return {};
  });
  run.run("twisted exponential maps to scaled exponential", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    const Rational m = rnd.positive_rational();
    CohClass lhs = mul(exp_div(-s.d_y(), s.dst()),
                       apply(s, mul(exp_div(-s.d_x(), s.src()), exp_div(m, s.src()))));
    const Rational c = Rational(s.rank()) * s.src().degree() * pow(m, s.g()) / factorial(s.g());
    CohClass rhs = c * exp_div(-1 / m, s.dst());
    return lhs == rhs ? "" : "m=" + to_string(m) + ": " + mismatch(lhs, rhs);
  });
  run.run("adjoint pairing isometry", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    CohClass u = rnd.cls(s.dst()), v = rnd.cls(s.src());
    AdjointSides sides = adjoint_pairing_sides(s, u, v);
    return sides.equal() ? "" : "lhs " + to_string(sides.lhs) + " != rhs " + to_string(sides.rhs);
  });
  run.run("image of an ample class is anti-ample", ns, [&](int i) -> std::string {
    const Rational m = rnd.positive_rational();
    return polarization_image_check(specs[i], m) ? "" : "m=" + to_string(m);
  });
}

inline void bg_suite(const VerifyOptions& opt, VerifyReport& report) {
  CheckRunner run(report, "bg");
  RandomSource rnd(opt.seed + 2);
  const int n = opt.trials;

  run.run("charge is additive", n, [&](int) -> std::string {
    AbelianContext c(rnd.uniform_int(1, 5), rnd.positive_rational(), "X");
    ChargeSpec cs(c, rnd.uniform_int(1, c.g()), rnd.rational(), QSqrt3(rnd.positive_rational()));
    CohClass a = rnd.cls(c), b = rnd.cls(c);
    return charge(cs, a + b) == charge(cs, a) + charge(cs, b) ? "" : "Z(a+b) != Z(a)+Z(b)";
  });
  run.run("full-level charge matches untruncated integral", n, [&](int) -> std::string {
    AbelianContext c(rnd.uniform_int(1, 5), rnd.positive_rational(), "X");
    CohClass e = rnd.cls(c);
    Complex<Poly2> z = charge_symbolic(e, c.g());
    // -int e^{-(b+it)l} ch, expanded independently through mul over Q[b,t]-valued coefficients
    Complex<Poly2> want{0, 0};
    for (int i = 0; i <= c.g(); ++i) {
      const int j = c.g() - i;
      Complex<Poly2> term{1, 0};
      for (int m = 0; m < j; ++m) term = term * Complex<Poly2>{-Poly2::var_b(), -Poly2::var_t()};
      want += term * Poly2(-e[i] * c.degree() / factorial(j));
    }
    return z.re == want.re && z.im == want.im ? "" : "mismatch for (" + to_string(e) + ")";
  });
  run.run("skyscraper has Z = -1 and phase 1 at full level", n, [&](int) -> std::string {
    AbelianContext c(rnd.uniform_int(1, 5), rnd.positive_rational(), "X");
    ChargeSpec cs(c, c.g(), rnd.rational(), QSqrt3(rnd.positive_rational()));
    ExactComplex z = charge(cs, skyscraper(c));
    if (!(z == ExactComplex{-1, 0})) return "Z = " + to_string(z);
    auto p = phase(cs, skyscraper(c));
    return p && p->compare(1).sign == 0 ? "" : "phase != 1";
  });
  run.run("skyscraper is a kernel class below full level", n, [&](int) -> std::string {
    AbelianContext c(rnd.uniform_int(2, 5), rnd.positive_rational(), "X");
    ChargeSpec cs(c, rnd.uniform_int(1, c.g() - 1), rnd.rational(), QSqrt3(rnd.positive_rational()));
    return !phase(cs, skyscraper(c)) ? "" : "Z^(k) = " + to_string(charge(cs, skyscraper(c)));
  });
  run.run("slope invariant under positive scaling", n, [&](int) -> std::string {
    AbelianContext c(rnd.uniform_int(1, 5), rnd.positive_rational(), "X");
    ChargeSpec cs(c, rnd.uniform_int(1, c.g()), rnd.rational(), QSqrt3(rnd.positive_rational()));
    CohClass e = rnd.cls(c);
    Rational q = rnd.positive_rational();
    return slope(cs, q * e) == slope(cs, e) ? "" : "q=" + to_string(q) + " e=(" + to_string(e) + ")";
  });
  run.run("HN validity invariant under merging", n, [&](int) -> std::string {
    // factors from the upper half plane, with a random duplicate direction spliced in
    std::vector<ExactComplex> z;
    const int len = rnd.uniform_int(2, 6);
    for (int i = 0; i < len; ++i) z.push_back({QSqrt3(rnd.rational()), QSqrt3(rnd.positive_rational())});
    const int at = rnd.uniform_int(0, len - 1);
    std::vector<ExactComplex> split = z;
    const Rational part = rnd.positive_rational(3, 4);
    ExactComplex piece = z[at] * QSqrt3(part / (part + 1));
    split[at] = z[at] - piece;
    split.insert(split.begin() + at, piece);
    return hn_polygon(z).valid == hn_polygon(split).valid ? "" : "validity changed after splitting factor " +
                                                                     std::to_string(at);
  });

  AbelianContext c3(3, 6, "X");
  run.run("structure sheaf satisfies the BG inequality at b = 0", n, [&](int) -> std::string {
    BGVerdict v = bg_check(c3, 0, QSqrt3(rnd.positive_rational()), structure_sheaf(c3));
    return v.inequality ? "" : to_string(v.lhs) + " > " + to_string(v.rhs);
  });
  run.run("BG verdict monotone in t when c1^B >= 0", 50, [&](int) -> std::string {
    CohClass e = rnd.cls(c3);
    const Rational b = rnd.rational();
    if (twist(e, b)[1] < 0) e = CohClass(c3, {e[0], e[1] + (-twist(e, b)[1]) + rnd.positive_rational(), e[2], e[3]});
    const QSqrt3 t1(rnd.positive_rational()), t2 = t1 + QSqrt3(rnd.positive_rational());
    BGVerdict a = bg_check(c3, b, t1, e), z = bg_check(c3, b, t2, e);
    return (!a.inequality || z.inequality) ? "" : "flips at e=(" + to_string(e) + ") b=" + to_string(b);
  });
  run.note("Z^(1) sign convention",
           "general formula -i^(g-k) int e^(-B-iw) ch_<=k is used; the g=3 display without the -i factor differs by "
           "a quarter turn and is not adopted");
}

inline void law_suite(const VerifyOptions& opt, VerifyReport& report) {
  CheckRunner run(report, "law");
  RandomSource rnd(opt.seed + 3);
  const std::vector<FMTransformSpec> specs = specs_under_test(opt, rnd, 3, run, 5);
  const int ns = static_cast<int>(specs.size());

  run.run("zeta real exactly at multiples of pi/g", 6, [&](int i) -> std::string {
    const int g = i + 1;
    const auto s = FMTransformSpec::poincare(g, 1);
    for (int q = 1; q <= 12; ++q) {
      for (int p = -q; p <= q; ++p) {
        const Rational x(p, q);
        const bool expected = is_integer(x * g);
        if (zeta(s, PolarScalar(1, x)).is_real != expected)
          return "g=" + std::to_string(g) + " angle " + to_string(PiAngle(x));
      }
    }
    return {};
  });
  run.run("induced charge law on the basis, exact angles", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    std::vector<CohClass> basis;
    for (int k = 0; k <= s.g(); ++k) basis.push_back(CohClass::basis(s.src(), k));
    for (int j = 1; j <= 5; ++j) {
      const PolarScalar u(rnd.positive_rational(), Rational(j, 6));
      for (const auto& rec : verify_induced_law(s, u, basis))
        if (!rec.equal || !rec.exact) return "u=" + to_string(u) + " class (" + to_string(rec.cls) + "): " + rec.lhs + " vs " + rec.rhs;
    }
    return {};
  });
  run.run("induced charge law, float angles", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    const PolarScalar u(rnd.positive_rational(), Rational(rnd.uniform_int(1, 6), 7));
    for (const auto& rec : verify_induced_law(s, u, {rnd.cls(s.src())}))
      if (!rec.equal) return "u=" + to_string(u) + ": " + rec.lhs + " vs " + rec.rhs;
    return {};
  });
  run.run("conjecture parameters are complexified ample", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    for (int k = 1; k < s.g(); ++k) {
      ConjectureParams p = conjecture_params(s, k, rnd.positive_rational());
      if (!p.omega.imaginary_part_positive() || !p.omega_prime.imaginary_part_positive())
        return "k=" + std::to_string(k) + " " + to_string(p.omega) + ", " + to_string(p.omega_prime);
    }
    return {};
  });
  run.run("parameters swap under the quasi-inverse", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    const FMTransformSpec rev = quasi_inverse(s).reverse;
    for (int k = 1; k < s.g(); ++k) {
      const Rational lambda = rnd.positive_rational();
      ConjectureParams p = conjecture_params(s, k, lambda), q = conjecture_params(rev, s.g() - k, 1 / lambda);
      const bool exact = p.omega.exact && q.omega.exact;
      const bool swapped = exact ? (*p.omega.exact == *q.omega_prime.exact && *p.omega_prime.exact == *q.omega.exact)
                                 : (detail::close(p.omega.approx, q.omega_prime.approx) &&
                                    detail::close(p.omega_prime.approx, q.omega.approx));
      if (!swapped) return "k=" + std::to_string(k) + " lambda=" + to_string(lambda);
    }
    return {};
  });
  run.run("phase shifts by arg zeta at real-zeta angles", ns, [&](int i) -> std::string {
    const auto& s = specs[i];
    for (const PiAngle& a : real_zeta_angles(s.g())) {
      const PolarScalar u(rnd.positive_rational(), a.fraction());
      const int k = static_cast<int>(numerator_of(a.fraction() * s.g()));
      for (const CohClass& e : {skyscraper(s.src()), structure_sheaf(s.src()), rnd.cls(s.src())}) {
        const InducedChargeLaw law = induced_charge_law(s, u);
        if (is_zero(charge_value<QSqrt3>(e, s.g(), *law.source_b.exact, *law.source_t.exact))) continue;
        PhaseShiftVerdict v = phase_shift_check(s, u, e);
        if (!v.identity_holds || v.heart_shift != k)
          return "u=" + to_string(u) + " e=(" + to_string(e) + ") shift " + std::to_string(v.heart_shift);
      }
    }
    return {};
  });
}

}  // namespace detail

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"lattice", "transform", "law", "bg", "all"};
  return names;
}

/// Throws UsageError for an unknown suite.
inline VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt = {}) {
  bool known = false;
  for (const auto& s : verify_suites()) known = known || s == suite;
  if (!known) throw UsageError("unknown verify suite '" + suite + "' (expected lattice, transform, law, bg or all)");
  VerifyReport report;
  const bool all = suite == "all";
  if (all || suite == "lattice") detail::lattice_suite(opt, report);
  if (all || suite == "transform") detail::transform_suite(opt, report);
  if (all || suite == "law") detail::law_suite(opt, report);
  if (all || suite == "bg") detail::bg_suite(opt, report);
  return report;
}

}  // namespace fmstab
