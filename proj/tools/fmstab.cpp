// fmstab: command-line front end.
//
//   fmstab transform --config c.json --class "1,0,0" [--inverse]
//   fmstab charge    --config c.json --class "0,0,1/2" [--k 1]
//   fmstab zeta      --config c.json --u "2@1/3"
//   fmstab params    --config c.json --k 1 --lambda 2
//   fmstab walls     --config c.json --out walls.csv [--format csv|json|svg]
//   fmstab verify    [lattice|transform|law|bg|all] [--config c.json] [--seed N]
//
// Exit status: 0 ok, 1 verification failure, 2 usage/config error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fmstab/fmstab.hpp"

namespace {

using namespace fmstab;

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3;

std::string phase_display(const std::optional<Phase>& p) {
  if (!p) return "undefined (Z = 0)";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f (float)", p->to_double());
  return buf;
}

int cmd_transform(const Config& cfg, const std::string& cls_text, bool inverse) {
  const FMTransformSpec spec = cfg.require_spec().build();
  if (inverse) {
    const CohClass e = parse_class(cls_text, spec.dst());
    const ShiftedClass pre = apply_inverse(spec, e);
    std::cout << "inverse image on " << spec.src().label() << ": (" << to_string(pre.cls) << ")[" << pre.shift << "]\n";
    std::cout << "flattened: " << to_string(pre.flatten()) << '\n';
    return kOk;
  }
  const CohClass e = parse_class(cls_text, spec.src());
  std::cout << "image on " << spec.dst().label() << ": " << to_string(apply(spec, e)) << '\n';
  const VVector v = v_vector(e, -spec.d_x());
  std::cout << "v-vector (twist " << to_string(v.twist) << "):";
  for (const auto& x : v.entries) std::cout << ' ' << to_string(x);
  std::cout << '\n';
  return kOk;
}

int cmd_charge(const Config& cfg, const std::string& cls_text, std::optional<int> k) {
  ChargeSpec cs = cfg.charge_spec();
  if (k) cs = ChargeSpec(cs.ctx, *k, cs.b, cs.t);
  const CohClass e = parse_class(cls_text, cs.ctx);
  const ExactComplex z = charge(cs, e);
  std::cout << "Z^(" << cs.k << ") at b=" << to_string(cs.b) << ", t=" << to_string(cs.t) << ": " << to_string(z) << '\n';
  std::cout << "slope: " << to_string(slope_of(z)) << '\n';
  std::optional<Phase> p;
  try {
    p = phase_of(z);
    std::cout << "phase: " << phase_display(p) << '\n';
  } catch (const DomainError& err) {
    std::cout << "phase: " << err.what() << '\n';
  }
  if (is_zero(z)) std::cout << "kernel class at this level\n";
  return kOk;
}

int cmd_zeta(const Config& cfg, const std::string& u_text) {
  const FMTransformSpec spec = cfg.require_spec().build();
  const PolarScalar u = parse_polar(u_text);
  const InducedChargeLaw law = induced_charge_law(spec, u);
  std::cout << "u = " << to_string(u) << '\n';
  std::cout << "zeta = " << to_string(law.z.modulus) << "*exp(i*" << to_string(law.z.angle) << ")"
            << (law.z.is_real ? "  (real)" : "") << '\n';
  if (law.z.exact) std::cout << "zeta exact: " << to_string(*law.z.exact) << '\n';
  std::cout << "source: b = " << to_string(law.source_b) << ", t = " << to_string(law.source_t) << '\n';
  std::cout << "target: b = " << to_string(law.target_b) << ", t = " << to_string(law.target_t) << '\n';
  std::vector<CohClass> basis;
  for (int i = 0; i <= spec.g(); ++i) basis.push_back(CohClass::basis(spec.src(), i));
  bool ok = true;
  for (const auto& rec : verify_induced_law(spec, u, basis)) {
    std::cout << (rec.equal ? "PASS" : "FAIL") << (rec.exact ? " exact " : " float ") << '(' << to_string(rec.cls)
              << "): " << rec.lhs << " | " << rec.rhs << '\n';
    ok = ok && rec.equal;
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_params(const Config& cfg, int k, const std::string& lambda_text) {
  const FMTransformSpec spec = cfg.require_spec().build();
  const Rational lambda = parse_rational(lambda_text);
  const ConjectureParams p = conjecture_params(spec, k, lambda);
  std::cout << "Omega  = " << to_string(p.omega) << '\n';
  std::cout << "Omega' = " << to_string(p.omega_prime) << '\n';
  const PolarScalar u(lambda, Rational(k, spec.g()));
  bool ok = true;
  for (const CohClass& e : {skyscraper(spec.src()), structure_sheaf(spec.src())}) {
    try {
      const PhaseShiftVerdict v = phase_shift_check(spec, u, e);
      std::cout << (v.identity_holds ? "PASS" : "FAIL") << " phase shift for (" << to_string(e)
                << "): heart shift " << v.heart_shift << (v.exact ? " exact" : " float") << '\n';
      ok = ok && v.identity_holds;
    } catch (const DomainError& err) {
      std::cout << "SKIP phase shift for (" << to_string(e) << "): " << err.what() << '\n';
    }
  }
  return ok ? kOk : kVerifyFailed;
}

std::string resolve_output(const std::string& out) {
  const char* dir = std::getenv("FMSTAB_OUTPUT_DIR");
  std::filesystem::path p(out);
  if (dir && *dir && p.is_relative()) return (std::filesystem::path(dir) / p).string();
  return out;
}

int cmd_walls(const Config& cfg, const std::string& out, const std::string& format_text) {
  const ScanRequest req = cfg.scan_request();
  const Format fmt = parse_format(format_text);
  const WallDataset ds = scan_walls(req);
  for (const auto& w : ds.walls) {
    std::cerr << "wall " << w.index << " (" << to_string(req.walls[w.index]) << "): "
              << (w.trivial ? "trivial (identically zero)" : std::to_string(w.sample_count) + " cells") << '\n';
  }
  if (ds.degenerate_v) std::cerr << "warning: Z(v) vanishes identically; every slope comparison is degenerate\n";
  const auto bad = recheck_samples(ds);
  if (!bad.empty()) {
    std::cerr << "FAIL: " << bad.size() << " emitted cells have no sign change on re-evaluation\n";
    return kVerifyFailed;
  }
  if (out.empty() || out == "-") {
    std::cout << render(ds, fmt);
  } else {
    emit(ds, fmt, resolve_output(out));
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const std::string& config_path, std::uint64_t seed) {
  VerifyOptions opt;
  opt.seed = seed;
  if (!config_path.empty()) opt.spec = load_config(config_path).spec;
  const VerifyReport report = run_verify(suite, opt);
  print(report, std::cout);
  return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Fourier-Mukai and stability-condition calculator on abelian varieties"};
  app.require_subcommand(1);

  std::string config_path, cls, u, lambda, out, format = "csv", suite = "all";
  int k = 0;
  bool inverse = false;
  std::uint64_t seed = VerifyOptions{}.seed;

  auto* transform = app.add_subcommand("transform", "cohomological FM image of a class");
  transform->add_option("--config", config_path)->required();
  transform->add_option("--class", cls, "coefficients c0,...,cg of l^0,...,l^g")->required();
  transform->add_flag("--inverse", inverse, "apply the quasi-inverse to a class on the target");

  auto* charge_cmd = app.add_subcommand("charge", "central charge, slope and phase of a class");
  charge_cmd->add_option("--config", config_path)->required();
  charge_cmd->add_option("--class", cls)->required();
  auto* k_charge = charge_cmd->add_option("--k", k, "truncation level (defaults to the config)");

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta scalar and induced charge law for u");
  zeta_cmd->add_option("--config", config_path)->required();
  zeta_cmd->add_option("--u", u, "lambda@x meaning lambda*exp(i*x*pi)")->required();

  auto* params = app.add_subcommand("params", "Omega_k and Omega'_k for the real-zeta angle k*pi/g");
  params->add_option("--config", config_path)->required();
  params->add_option("--k", k)->required();
  params->add_option("--lambda", lambda)->required();

  auto* walls = app.add_subcommand("walls", "scan walls in the (b, t) half plane");
  walls->add_option("--config", config_path)->required();
  walls->add_option("--out", out, "output file, '-' for stdout");
  walls->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));

  auto* verify = app.add_subcommand("verify", "run property checks");
  verify->add_option("suite", suite, "lattice, transform, law, bg or all");
  verify->add_option("--config", config_path, "config whose spec block is checked too");
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, config_path, seed);
    const Config cfg = load_config(config_path);
    if (*transform) return cmd_transform(cfg, cls, inverse);
    if (*charge_cmd) return cmd_charge(cfg, cls, *k_charge ? std::optional<int>(k) : std::nullopt);
    if (*zeta_cmd) return cmd_zeta(cfg, u);
    if (*params) return cmd_params(cfg, k, lambda);
    if (*walls) return cmd_walls(cfg, out, format);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {  // DomainError, ParseError, UsageError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
