#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fmstab/config.hpp"
#include "fmstab/emit.hpp"
#include "fmstab/scan.hpp"
#include "oracles.hpp"

using namespace fmstab;

namespace {

Rational q(long long p, long long d = 1) { return Rational(p, d); }

const AbelianContext kSurface(2, 2, "X");

ScanRequest request(std::vector<CohClass> walls, int res = 8) {
  return {kSurface, 2, structure_sheaf(kSurface), std::move(walls), q(-2), q(2), q(1, 10), q(2), res, res};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(ScanRequest, Validation) {
  auto r = request({});
  r.t_lo = 0;
  EXPECT_THROW(r.validate(), DomainError);
  r = request({});
  r.b_cells = 1;
  EXPECT_THROW(r.validate(), DomainError);
  r = request({});
  r.k = 3;
  EXPECT_THROW(r.validate(), DomainError);
  r = request({structure_sheaf(AbelianContext(2, 3, "Z"))});
  EXPECT_THROW(r.validate(), ContextMismatch);
}

TEST(Scan, EmptyWallListGivesEmptyDataset) {
  const WallDataset ds = scan_walls(request({}));
  EXPECT_TRUE(ds.walls.empty());
  EXPECT_TRUE(ds.samples.empty());
  EXPECT_EQ(render(ds, Format::csv), "w,b,t\n");
}

TEST(Scan, SelfWallIsTrivial) {
  const WallDataset ds = scan_walls(request({structure_sheaf(kSurface)}));
  ASSERT_EQ(ds.walls.size(), 1u);
  EXPECT_TRUE(ds.walls[0].trivial);
  EXPECT_TRUE(ds.samples.empty());
}

TEST(Scan, DegenerateVIsFlagged) {
  auto r = request({structure_sheaf(kSurface)});
  r.v = CohClass(kSurface);
  EXPECT_TRUE(scan_walls(r).degenerate_v);
  r.k = 1;
  r.v = skyscraper(kSurface);  // Z^{(1)} kills points
  EXPECT_TRUE(scan_walls(r).degenerate_v);
}

TEST(Scan, StructureSheafAgainstPointIsTheLineBZero) {
  // Im Z(O) = -2bt, so the wall is b = 0; b = 0 is the middle node for an even resolution
  const WallDataset ds = scan_walls(request({skyscraper(kSurface)}));
  EXPECT_EQ(wall_polynomial(structure_sheaf(kSurface), skyscraper(kSurface), 2),
            Poly2(2) * Poly2::var_b() * Poly2::var_t());
  ASSERT_EQ(ds.samples.size(), 16u);
  for (const auto& s : ds.samples) {
    EXPECT_TRUE(s.b == q(-1, 2) || s.b == 0) << s.b;
  }
  EXPECT_TRUE(recheck_samples(ds).empty());
}

TEST(Scan, ScalingAWallClassKeepsItsCells) {
  const WallDataset a = scan_walls(request({line_bundle(kSurface, -1)}, 20));
  const WallDataset b = scan_walls(request({Rational(2) * line_bundle(kSurface, -1)}, 20));
  ASSERT_EQ(a.samples.size(), b.samples.size());
  ASSERT_FALSE(a.samples.empty());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].b, b.samples[i].b);
    EXPECT_EQ(a.samples[i].t, b.samples[i].t);
  }
}

TEST(Scan, RowsAreOrderedAndSound) {
  oracle::Gen gen(501);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CohClass> walls;
    for (int i = 0; i < 3; ++i) walls.push_back(CohClass(kSurface, gen.coeffs(2)));
    auto r = request(walls, 24);
    r.k = gen.integer(1, 2);
    const WallDataset ds = scan_walls(r);
    for (std::size_t i = 1; i < ds.samples.size(); ++i) {
      const auto& p = ds.samples[i - 1];
      const auto& c = ds.samples[i];
      ASSERT_TRUE(std::tie(p.w, p.b, p.t) < std::tie(c.w, c.b, c.t));
    }
    ASSERT_TRUE(recheck_samples(ds).empty());
    std::size_t total = 0;
    for (const auto& w : ds.walls) total += w.sample_count;
    ASSERT_EQ(total, ds.samples.size());
  }
}

TEST(Scan, RecheckCatchesAForgedCell) {
  WallDataset ds = scan_walls(request({skyscraper(kSurface)}));
  ds.samples.push_back({0, 7, 7, q(3, 2), q(61, 40)});  // far from b = 0
  const auto bad = recheck_samples(ds);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0], ds.samples.size() - 1);
}

TEST(Scan, FullResolutionIsFast) {
  const auto start = std::chrono::steady_clock::now();
  auto r = request({skyscraper(kSurface), line_bundle(kSurface, -1), Rational(2) * skyscraper(kSurface)}, 200);
  const WallDataset ds = scan_walls(r);
  EXPECT_TRUE(recheck_samples(ds).empty());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 10.0);
}

TEST(Emit, CsvEncodesExactRationals) {
  WallDataset ds{request({skyscraper(kSurface)}), {}, {}, false};
  ds.samples.push_back({0, 0, 0, q(0), q(1)});
  EXPECT_EQ(render(ds, Format::csv), "w,b,t\n0,0/1,1/1\n");
}

TEST(Emit, JsonCarriesTheSameRecords) {
  const WallDataset ds = scan_walls(request({skyscraper(kSurface)}));
  const auto j = nlohmann::json::parse(render(ds, Format::json));
  ASSERT_EQ(j["samples"].size(), ds.samples.size());
  EXPECT_EQ(j["samples"][0]["b"], to_fraction_string(ds.samples[0].b));
  EXPECT_EQ(j["walls"][0]["polynomial"], "2*b*t");
  EXPECT_EQ(j["b_range"][0], "-2/1");
  EXPECT_FALSE(j["degenerate_v"].get<bool>());
}

TEST(Emit, SvgHasAxesAndOneLayerPerWall) {
  const WallDataset ds = scan_walls(request({skyscraper(kSurface), line_bundle(kSurface, -1)}));
  const std::string svg = render(ds, Format::svg);
  EXPECT_NE(svg.find("<g id=\"wall-0\""), std::string::npos);
  EXPECT_NE(svg.find("<g id=\"wall-1\""), std::string::npos);
  EXPECT_NE(svg.find(">b</text>"), std::string::npos);
  EXPECT_NE(svg.find(">t</text>"), std::string::npos);
}

TEST(Emit, DeterministicFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "fmstab_emit_test";
  std::filesystem::create_directories(dir);
  for (Format f : {Format::csv, Format::json, Format::svg}) {
    const std::string a = (dir / "a.out").string(), b = (dir / "b.out").string();
    emit(scan_walls(request({skyscraper(kSurface), line_bundle(kSurface, -1)}, 30)), f, a);
    emit(scan_walls(request({skyscraper(kSurface), line_bundle(kSurface, -1)}, 30)), f, b);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
  }
  std::filesystem::remove_all(dir);
}

TEST(Emit, UnwritablePathNamesThePath) {
  const WallDataset ds = scan_walls(request({}));
  try {
    emit(ds, Format::csv, "/nonexistent-dir/walls.csv");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), "/nonexistent-dir/walls.csv");
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/walls.csv"), std::string::npos);
  }
  EXPECT_THROW(parse_format("png"), ParseError);
}

TEST(Golden, ShippedExampleMatchesByteForByte) {
  const std::string root = FMSTAB_SOURCE_DIR;
  const Config cfg = load_config(root + "/configs/example_scan.json");
  const WallDataset ds = scan_walls(cfg.scan_request());
  EXPECT_TRUE(recheck_samples(ds).empty());
  EXPECT_EQ(render(ds, Format::csv), slurp(root + "/tests/golden/example_scan.csv"));
  EXPECT_EQ(render(ds, Format::json), slurp(root + "/tests/golden/example_scan.json"));
  EXPECT_EQ(render(ds, Format::svg), slurp(root + "/tests/golden/example_scan.svg"));
}
