#pragma once

// CSV / JSON / SVG writers for wall datasets. Output is a pure function of the
// dataset: fixed ordering, fixed float formatting, '\n' line endings.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "scan.hpp"

namespace fmstab {

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(what + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Format { csv, json, svg };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "svg") return Format::svg;
  throw ParseError("unknown format '" + std::string(s) + "' (expected csv, json or svg)");
}

inline void write_csv(const WallDataset& ds, std::ostream& os) {
  os << "w,b,t\n";
  for (const auto& s : ds.samples) os << s.w << ',' << to_fraction_string(s.b) << ',' << to_fraction_string(s.t) << '\n';
}

inline nlohmann::ordered_json to_json(const WallDataset& ds) {
  using nlohmann::ordered_json;
  const ScanRequest& req = ds.request;
  ordered_json j;
  j["context"] = {{"label", req.ctx.label()}, {"g", req.ctx.g()}, {"n", to_fraction_string(req.ctx.degree())}};
  j["k"] = req.k;
  j["v"] = to_string(req.v);
  j["degenerate_v"] = ds.degenerate_v;
  j["b_range"] = {to_fraction_string(req.b_lo), to_fraction_string(req.b_hi)};
  j["t_range"] = {to_fraction_string(req.t_lo), to_fraction_string(req.t_hi)};
  j["resolution"] = {req.b_cells, req.t_cells};
  ordered_json walls = ordered_json::array();
  for (const auto& w : ds.walls) {
    walls.push_back({{"index", w.index},
                     {"class", to_string(req.walls[w.index])},
                     {"polynomial", to_string(w.polynomial)},
                     {"trivial", w.trivial},
                     {"samples", w.sample_count}});
  }
  j["walls"] = std::move(walls);
  ordered_json rows = ordered_json::array();
  for (const auto& s : ds.samples) rows.push_back({{"w", s.w}, {"b", to_fraction_string(s.b)}, {"t", to_fraction_string(s.t)}});
  j["samples"] = std::move(rows);
  return j;
}

inline void write_json(const WallDataset& ds, std::ostream& os) { os << to_json(ds).dump(2) << '\n'; }

namespace detail {

inline std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return std::string(buf) == "-0.00" ? "0.00" : buf;
}

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return colors[i % 8];
}

}  // namespace detail

inline void write_svg(const WallDataset& ds, std::ostream& os) {
  const ScanRequest& req = ds.request;
  constexpr double width = 720, height = 540, margin = 60;
  const double pw = width - 2 * margin, ph = height - 2 * margin;
  const double b0 = to_double(req.b_lo), b1 = to_double(req.b_hi);
  const double t0 = to_double(req.t_lo), t1 = to_double(req.t_hi);
  auto x = [&](double b) { return margin + (b - b0) / (b1 - b0) * pw; };
  auto y = [&](double t) { return margin + ph - (t - t0) / (t1 - t0) * ph; };
  const double cw = pw / req.b_cells, ch = ph / req.t_cells;
  using detail::fixed;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
     << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width) << "\" height=\"" << fixed(height) << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << fixed(width / 2) << "\" y=\"30.00\" text-anchor=\"middle\" font-size=\"16\">walls of v = ("
     << to_string(req.v) << ") for Z^(" << req.k << ") on " << req.ctx.label() << "</text>\n";
  os << "<g id=\"axes\" stroke=\"black\" fill=\"none\">\n";
  os << "<rect x=\"" << fixed(margin) << "\" y=\"" << fixed(margin) << "\" width=\"" << fixed(pw) << "\" height=\""
     << fixed(ph) << "\"/>\n";
  os << "</g>\n";
  os << "<g id=\"labels\" font-size=\"12\">\n";
  os << "<text x=\"" << fixed(width / 2) << "\" y=\"" << fixed(height - 15) << "\" text-anchor=\"middle\">b</text>\n";
  os << "<text x=\"20.00\" y=\"" << fixed(height / 2) << "\" text-anchor=\"middle\">t</text>\n";
  os << "<text x=\"" << fixed(margin) << "\" y=\"" << fixed(height - margin + 18) << "\" text-anchor=\"middle\">"
     << to_string(req.b_lo) << "</text>\n";
  os << "<text x=\"" << fixed(width - margin) << "\" y=\"" << fixed(height - margin + 18) << "\" text-anchor=\"middle\">"
     << to_string(req.b_hi) << "</text>\n";
  os << "<text x=\"" << fixed(margin - 8) << "\" y=\"" << fixed(height - margin) << "\" text-anchor=\"end\">"
     << to_string(req.t_lo) << "</text>\n";
  os << "<text x=\"" << fixed(margin - 8) << "\" y=\"" << fixed(margin + 4) << "\" text-anchor=\"end\">"
     << to_string(req.t_hi) << "</text>\n";
  os << "</g>\n";
  std::size_t n = 0;
  for (const auto& w : ds.walls) {
    os << "<g id=\"wall-" << w.index << "\" fill=\"" << detail::palette(w.index) << "\" fill-opacity=\"0.6\">\n";
    for (; n < ds.samples.size() && ds.samples[n].w == w.index; ++n) {
      const WallSample& s = ds.samples[n];
      os << "<rect x=\"" << fixed(x(to_double(s.b))) << "\" y=\"" << fixed(y(to_double(s.t)) - ch) << "\" width=\""
         << fixed(cw) << "\" height=\"" << fixed(ch) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

inline std::string render(const WallDataset& ds, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::csv: write_csv(ds, os); break;
    case Format::json: write_json(ds, os); break;
    case Format::svg: write_svg(ds, os); break;
  }
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open output file");
  out << content;
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

inline void emit(const WallDataset& ds, Format f, const std::string& path) { write_file(path, render(ds, f)); }

}  // namespace fmstab
