#pragma once

// JSON run configuration. Every block is optional; verbs check for the blocks they
// need. Rationals are written as "p/q" strings (integers may be bare numbers).
//
//   {
//     "context": {"g": 2, "n": "2", "label": "X"},
//     "spec":    {"g": 2, "nX": "2", "nY": "2", "r": 1, "dX": "0", "dY": "0"},
//     "charge":  {"k": 2, "b": "0", "t": "1"},          // t may be "p/q*sqrt3"
//     "scan":    {"k": 2, "v": "1,0,0", "walls": ["0,0,1/2"],
//                 "b_range": ["-2", "2"], "t_range": ["1/10", "2"], "resolution": [200, 200]}
//   }

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohlattice.hpp"
#include "fmtransform.hpp"
#include "scan.hpp"
#include "stability.hpp"

namespace fmstab {

/// Raw transform data; construction (and the reciprocity check) is deferred to build().
struct SpecFields {
  int g = 0;
  Rational n_x, n_y;
  int r = 1;
  Rational d_x, d_y;

  FMTransformSpec build() const {
    return FMTransformSpec(AbelianContext(g, n_x, "X"), AbelianContext(g, n_y, "Y"), r, d_x, d_y);
  }
};

struct ChargeFields {
  int k = 0;
  Rational b;
  QSqrt3 t;
};

struct ScanFields {
  int k = 0;
  std::string v;
  std::vector<std::string> walls;
  Rational b_lo, b_hi, t_lo, t_hi;
  int b_cells = 0, t_cells = 0;
};

struct Config {
  std::optional<AbelianContext> context;
  std::optional<SpecFields> spec;
  std::optional<ChargeFields> charge;
  std::optional<ScanFields> scan;

  const AbelianContext& require_context() const {
    if (!context) throw ParseError("config: missing 'context' block");
    return *context;
  }
  const SpecFields& require_spec() const {
    if (!spec) throw ParseError("config: missing 'spec' block");
    return *spec;
  }

  ChargeSpec charge_spec() const {
    if (!charge) throw ParseError("config: missing 'charge' block");
    return ChargeSpec(require_context(), charge->k, charge->b, charge->t);
  }

  ScanRequest scan_request() const {
    if (!scan) throw ParseError("config: missing 'scan' block");
    const AbelianContext& ctx = require_context();
    ScanRequest req{ctx,         scan->k,     parse_class(scan->v, ctx), {}, scan->b_lo, scan->b_hi, scan->t_lo,
                    scan->t_hi,  scan->b_cells, scan->t_cells};
    for (const auto& w : scan->walls) req.walls.push_back(parse_class(w, ctx));
    req.validate();
    return req;
  }
};

namespace detail {

using nlohmann::json;

inline const json& field(const json& obj, const char* block, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("config: '") + block + "' is missing '" + key + "'");
  return *it;
}

inline Rational as_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("config: " + where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError("config: " + where + " must be a rational string \"p/q\" or an integer");
}

inline int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError("config: " + where + " must be an integer");
  return v.get<int>();
}

inline std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("config: " + where + " must be a string");
  return v.get<std::string>();
}

inline std::pair<Rational, Rational> as_range(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError("config: " + where + " must be a two-element array");
  return {as_rational(v[0], where + "[0]"), as_rational(v[1], where + "[1]")};
}

}  // namespace detail

inline Config parse_config(std::string_view text) {
  using detail::as_int;
  using detail::as_rational;
  using detail::as_string;
  using detail::field;
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("config: top level must be an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "context" && key != "spec" && key != "charge" && key != "scan")
      throw ParseError("config: unknown block '" + key + "'");
    if (!value.is_object()) throw ParseError("config: block '" + key + "' must be an object");
  }

  Config cfg;
  try {
    if (root.contains("context")) {
      const auto& c = root["context"];
      std::string label = c.contains("label") ? as_string(c["label"], "context.label") : "X";
      cfg.context.emplace(as_int(field(c, "context", "g"), "context.g"), as_rational(field(c, "context", "n"), "context.n"),
                          label);
    }
    if (root.contains("spec")) {
      const auto& s = root["spec"];
      SpecFields f;
      f.g = as_int(field(s, "spec", "g"), "spec.g");
      f.n_x = as_rational(field(s, "spec", "nX"), "spec.nX");
      f.n_y = as_rational(field(s, "spec", "nY"), "spec.nY");
      f.r = s.contains("r") ? as_int(s["r"], "spec.r") : 1;
      f.d_x = s.contains("dX") ? as_rational(s["dX"], "spec.dX") : Rational(0);
      f.d_y = s.contains("dY") ? as_rational(s["dY"], "spec.dY") : Rational(0);
      cfg.spec = f;
    }
    if (root.contains("charge")) {
      const auto& c = root["charge"];
      ChargeFields f;
      f.k = as_int(field(c, "charge", "k"), "charge.k");
      f.b = as_rational(field(c, "charge", "b"), "charge.b");
      const auto& t = field(c, "charge", "t");
      f.t = t.is_string() ? parse_qsqrt3(t.get<std::string>()) : QSqrt3(as_rational(t, "charge.t"));
      cfg.charge = f;
    }
    if (root.contains("scan")) {
      const auto& s = root["scan"];
      ScanFields f;
      f.k = as_int(field(s, "scan", "k"), "scan.k");
      f.v = as_string(field(s, "scan", "v"), "scan.v");
      const auto& walls = field(s, "scan", "walls");
      if (!walls.is_array()) throw ParseError("config: scan.walls must be an array of class strings");
      for (std::size_t i = 0; i < walls.size(); ++i) f.walls.push_back(as_string(walls[i], "scan.walls"));
      std::tie(f.b_lo, f.b_hi) = detail::as_range(field(s, "scan", "b_range"), "scan.b_range");
      std::tie(f.t_lo, f.t_hi) = detail::as_range(field(s, "scan", "t_range"), "scan.t_range");
      const auto& res = field(s, "scan", "resolution");
      if (res.is_array() && res.size() == 2) {
        f.b_cells = as_int(res[0], "scan.resolution[0]");
        f.t_cells = as_int(res[1], "scan.resolution[1]");
      } else {
        f.b_cells = f.t_cells = as_int(res, "scan.resolution");
      }
      cfg.scan = f;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return cfg;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("config: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace fmstab
