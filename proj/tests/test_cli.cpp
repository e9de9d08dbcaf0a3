#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mcdm/cli.hpp"
#include "mcdm/io.hpp"

namespace fs = std::filesystem;
using mcdm::cli::run;

namespace {

const fs::path kData = MCDM_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mcdm");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string path(const char* rel) { return (kData / rel).string(); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mcdm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"weights", "--method", "entropy", "--matrix", "m", "--criteria", "c", "--bogus"},
           {"weights", "--method", "ahp", "--matrix", "m", "--criteria", "c"},
           {"rank", "--method", "topsis", "--matrix", "m", "--criteria", "c"},
           {"rank", "--method", "topsis", "--matrix", "m", "--criteria", "c", "--weights", "entropy", "--weights",
            "stddev"},
           {"report", "--matrix", "m", "--criteria", "c", "--out-dir", "d", "--rank-methods", "topsis,vikor"},
       }) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, mcdm::cli::kUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
  }
}

TEST_F(CliTest, HelpGoesToStdout) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check-fixture"), std::string::npos);
}

TEST_F(CliTest, CheckFixture) {
  const auto shipped = invoke({"check-fixture", "--fixture", path("table3.csv")});
  const auto doc = nlohmann::json::parse(shipped.out);
  EXPECT_EQ(doc["rows_total"], 30);
  EXPECT_LE(doc["max_ci_deviation"].get<double>(), 1e-4);
  EXPECT_TRUE(shipped.err.empty());

  for (const char* bad : {"table3_corrupt_ci.csv", "table3_swapped_scores.csv"}) {
    const auto r = invoke({"check-fixture", "--fixture", path(bad)});
    EXPECT_EQ(r.code, mcdm::cli::kValidation) << bad;
    EXPECT_FALSE(nlohmann::json::parse(r.out)["pass"].get<bool>());
  }
  EXPECT_EQ(invoke({"check-fixture", "--fixture", (dir_ / "missing.csv").string()}).code, mcdm::cli::kInput);
}

TEST_F(CliTest, WeightsToStdoutAndFile) {
  const auto r = invoke({"weights", "--method", "entropy", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("small_3x2/criteria.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["kind"], "weights");
  EXPECT_EQ(doc["criteria"].size(), 2u);

  const auto out = (dir_ / "w.json").string();
  const auto f = invoke({"weights", "--method", "manual", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("small_3x2/criteria.json"), "--out", out});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_TRUE(f.out.empty());
  EXPECT_EQ(nlohmann::json::parse(mcdm::read_text_file(out))["method"], "manual");
}

TEST_F(CliTest, RankMinimalProblemWithManualWeight) {
  const auto r = invoke({"rank", "--method", "topsis", "--matrix", path("minimal/matrix.csv"), "--criteria",
                         path("minimal/criteria.json"), "--weights", "manual"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["alternatives"][0]["rank"], 2);
  EXPECT_EQ(doc["alternatives"][1]["rank"], 1);
}

TEST_F(CliTest, RankWithWeightsFileThenCompare) {
  const auto wfile = (dir_ / "w.json").string();
  ASSERT_EQ(invoke({"weights", "--method", "manual", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                    path("small_3x2/criteria.json"), "--out", wfile})
                .code,
            0);
  const auto t = invoke({"rank", "--method", "topsis", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("small_3x2/criteria.json"), "--weights", wfile});
  const auto m = invoke({"rank", "--method", "moora", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("small_3x2/criteria.json"), "--weights", wfile});
  ASSERT_EQ(t.code, 0) << t.err;
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(nlohmann::json::parse(t.out)["weights_source"], wfile);
  mcdm::write_text_file(dir_ / "t.json", t.out);
  mcdm::write_text_file(dir_ / "m.json", m.out);

  const auto c = invoke({"compare", "--a", (dir_ / "t.json").string(), "--b", (dir_ / "m.json").string()});
  ASSERT_EQ(c.code, 0) << c.err;
  const auto doc = nlohmann::json::parse(c.out);
  EXPECT_EQ(doc["spearman_rho"].get<double>(), 1.0);
  EXPECT_TRUE(doc["agreed_top1"].get<bool>());
  EXPECT_EQ(doc["top1_a"], "X2");
}

TEST_F(CliTest, ExistingFileNamedLikeAMethodWins) {
  // A weights document literally named "entropy" in the working directory.
  const auto cwd = fs::current_path();
  fs::current_path(dir_);
  mcdm::write_text_file("entropy", R"({"criteria": [{"name": "c1", "weight": 0.0}, {"name": "c2", "weight": 1.0}]})");
  const auto r = invoke({"rank", "--method", "moora", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("small_3x2/criteria.json"), "--weights", "entropy"});
  fs::current_path(cwd);
  ASSERT_EQ(r.code, 0) << r.err;
  // Only the cost criterion counts: X2 has the lowest cost.
  EXPECT_EQ(nlohmann::json::parse(r.out)["alternatives"][1]["rank"], 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["weights_source"], "entropy");
}

TEST_F(CliTest, InputErrorsNameTheFile) {
  const auto r = invoke({"rank", "--method", "moora", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("minimal/criteria.json"), "--weights", "entropy"});
  EXPECT_EQ(r.code, mcdm::cli::kInput);
  EXPECT_NE(r.err.find("matrix.csv"), std::string::npos) << r.err;

  const auto missing = invoke({"rank", "--method", "moora", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                               path("small_3x2/criteria.json"), "--weights", "no_such_weights.json"});
  EXPECT_EQ(missing.code, mcdm::cli::kInput);
  EXPECT_NE(missing.err.find("no_such_weights.json"), std::string::npos);

  const auto no_fixed = invoke({"weights", "--method", "manual", "--matrix", path("pv_example/matrix.csv"),
                                "--criteria", path("pv_example/criteria.json")});
  EXPECT_EQ(no_fixed.code, mcdm::cli::kInput);
  EXPECT_NE(no_fixed.err.find("MissingFixedWeight"), std::string::npos);
}

TEST_F(CliTest, ReportOnSmallProblemAgreesOnTop) {
  const auto out_dir = dir_ / "bundle";
  const auto r = invoke({"report", "--matrix", path("small_3x2/matrix.csv"), "--criteria",
                         path("small_3x2/criteria.json"), "--weights-methods", "entropy,stddev", "--rank-methods",
                         "topsis,moora", "--out-dir", out_dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  for (const char* f : {"results.json", "ranks.csv", "weights.svg", "rank_scatter.svg", "rank_pairs.svg"}) {
    EXPECT_TRUE(fs::exists(out_dir / f)) << f;
  }
  const auto doc = nlohmann::json::parse(mcdm::read_text_file(out_dir / "results.json"));
  ASSERT_EQ(doc["comparisons"].size(), 2u);
  for (const auto& c : doc["comparisons"]) EXPECT_TRUE(c["agreed_top1"].get<bool>());
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"rank", "--method", "topsis", "--matrix", path("pv_example/matrix.csv"),
                                      "--criteria", path("pv_example/criteria.json"), "--weights", "entropy"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}
