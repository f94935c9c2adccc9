#include <gtest/gtest.h>

#include <sstream>

#include "fmstab/config.hpp"
#include "fmstab/verify.hpp"

using namespace fmstab;

TEST(Config, ParsesAllBlocks) {
  const Config cfg = parse_config(R"({
    "context": {"g": 3, "n": "6", "label": "A"},
    "spec": {"g": 3, "nX": 6, "nY": "6", "r": 1, "dX": "1/2", "dY": "-1/3"},
    "charge": {"k": 2, "b": "1/2", "t": "1/2*sqrt3"},
    "scan": {"k": 3, "v": "1,0,0,0", "walls": ["0,0,0,1/6"], "b_range": ["-1", 1],
             "t_range": ["1/4", "2"], "resolution": 10}
  })");
  EXPECT_EQ(cfg.context->label(), "A");
  EXPECT_EQ(cfg.spec->d_x, Rational(1, 2));
  EXPECT_NO_THROW(cfg.spec->build());
  const ChargeSpec cs = cfg.charge_spec();
  EXPECT_EQ(cs.t, QSqrt3(0, Rational(1, 2)));
  const ScanRequest r = cfg.scan_request();
  EXPECT_EQ(r.b_cells, 10);
  EXPECT_EQ(r.t_cells, 10);
  EXPECT_EQ(r.walls.size(), 1u);
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(parse_config("{"), ParseError);
  EXPECT_THROW(parse_config("[]"), ParseError);
  EXPECT_THROW(parse_config(R"({"extra": {}})"), ParseError);
  EXPECT_THROW(parse_config(R"({"context": {"g": 2}})"), ParseError);
  EXPECT_THROW(parse_config(R"({"context": {"g": 2, "n": "4/2"}})"), ParseError);
  EXPECT_THROW(parse_config(R"({"context": {"g": 2, "n": 1.5}})"), ParseError);
  EXPECT_THROW(parse_config(R"({"context": {"g": 2, "n": "0"}})"), DomainError);
  const Config cfg = parse_config(R"({"context": {"g": 2, "n": "2"}})");
  EXPECT_THROW(cfg.charge_spec(), ParseError);
  EXPECT_THROW(cfg.scan_request(), ParseError);
  EXPECT_THROW(cfg.require_spec(), ParseError);
}

TEST(Config, CorruptedSpecFailsOnlyWhenBuilt) {
  const Config cfg = parse_config(R"({"spec": {"g": 2, "nX": "2", "nY": "3"}})");
  ASSERT_TRUE(cfg.spec);
  EXPECT_THROW(cfg.spec->build(), DomainError);
}

TEST(Config, LoadMissingFile) { EXPECT_THROW(load_config("/nonexistent/config.json"), ParseError); }

TEST(Config, ShippedConfigsLoad) {
  const std::string root = FMSTAB_SOURCE_DIR;
  for (const char* name : {"surface", "threefold", "twisted", "example_scan"}) {
    const Config cfg = load_config(root + "/configs/" + name + ".json");
    if (cfg.spec) EXPECT_NO_THROW(cfg.spec->build()) << name;
    if (cfg.charge) EXPECT_NO_THROW(cfg.charge_spec()) << name;
  }
}

TEST(Verify, AllSuitesPassOnDefaults) {
  const VerifyReport report = run_verify("all");
  std::ostringstream os;
  print(report, os);
  EXPECT_TRUE(report.ok()) << os.str();
  EXPECT_NE(os.str().find("PASS  [law]"), std::string::npos);
  EXPECT_EQ(os.str().find("FAIL"), std::string::npos);
}

TEST(Verify, EachSuiteRunsAlone) {
  for (const char* s : {"lattice", "transform", "law", "bg"}) {
    const VerifyReport r = run_verify(s);
    ASSERT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) EXPECT_EQ(c.suite, s);
    EXPECT_TRUE(r.ok());
  }
}

TEST(Verify, DeterministicForAFixedSeed) {
  std::ostringstream a, b;
  print(run_verify("all"), a);
  print(run_verify("all"), b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Verify, CorruptedSpecIsReported) {
  VerifyOptions opt;
  opt.spec = parse_config(R"({"spec": {"g": 2, "nX": "2", "nY": "3"}})").spec;
  const VerifyReport report = run_verify("law", opt);
  EXPECT_FALSE(report.ok());
  std::ostringstream os;
  print(report, os);
  EXPECT_NE(os.str().find("FAIL  [law] configured spec: rejected by constructor"), std::string::npos);
}

TEST(Verify, ValidUserSpecIsExercised) {
  VerifyOptions opt;
  opt.spec = parse_config(R"({"spec": {"g": 2, "nX": "3", "nY": "1/3", "r": 2, "dX": "1/2", "dY": "-1/3"}})").spec;
  EXPECT_TRUE(run_verify("transform", opt).ok());
}

TEST(Verify, UnknownSuiteIsAUsageError) { EXPECT_THROW(run_verify("bogus"), UsageError); }
