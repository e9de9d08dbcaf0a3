#include <filesystem>
#include <regex>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mcdm/json_writer.hpp"
#include "mcdm/ranking.hpp"
#include "mcdm/report.hpp"
#include "table3.hpp"

using namespace mcdm;

namespace {

const std::filesystem::path kData = MCDM_DATA_DIR;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

DecisionProblem three_by_two() {
  return build_problem({{"c1", Direction::Benefit, 0.5}, {"c2", Direction::Cost, 0.5}}, {"X1", "X2", "X3"},
                       {{1, 2}, {2, 1}, {3, 3}});
}

}  // namespace

TEST(JsonWriter, SixDecimalsAndStructure) {
  JsonWriter w;
  w.begin_object();
  w.field("a", 1.0);
  w.field("b", -0.0000001);
  w.field("s", "q\"x");
  w.key("list").begin_array().value(1).value(0.123456789).end_array();
  w.key("empty").begin_array().end_array();
  w.end_object();
  const std::string out = w.str();
  EXPECT_EQ(out,
            "{\n  \"a\": 1.000000,\n  \"b\": 0.000000,\n  \"s\": \"q\\\"x\",\n  \"list\": [\n    1,\n    0.123457\n  ],\n"
            "  \"empty\": []\n}\n");
  EXPECT_TRUE(nlohmann::json::accept(out));
}

TEST(WeightChart, PublishedVectorsGiveSixGroupsOfTwoBars) {
  const std::vector<std::string> names{"pv_efficiency", "pv_lifetime", "power_generation",
                                       "panel_cost", "battery_cost", "self_discharge_rate"};
  const std::vector<WeightSeries> series{
      {"stddev", {0.040540, 0.0767126, 0.023082, 0.009138, 0.0758723, 0.774653}},
      {"entropy", {0.077422, 0.011123, 0.027539, 0.487074, 0.384587, 0.012256}}};
  const auto svg = weight_bar_chart_svg(names, series);
  EXPECT_EQ(count(svg, "<g class=\"group\""), 6u);
  EXPECT_EQ(count(svg, "<rect class=\"bar\""), 12u);
  EXPECT_EQ(count(svg, "data-series=\"stddev\""), 6u);
  EXPECT_NE(svg.find("data-value=\"0.774653\""), std::string::npos);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(RankScatter, IdenticalRankingsLieOnDiagonal) {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  const std::vector<int> r{3, 1, 4, 2};
  const auto svg = rank_scatter_svg(labels, r, r, "topsis", "moora");
  EXPECT_EQ(count(svg, "<circle class=\"point"), 4u);
  EXPECT_EQ(count(svg, "<circle class=\"point on-diagonal\""), 4u);
  // On the diagonal, cx - left equals (top + size) - cy.
  const std::regex point(R"re(cx="([0-9.]+)" cy="([0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), point); it != std::sregex_iterator(); ++it) {
    const double cx = std::stod((*it)[1]);
    const double cy = std::stod((*it)[2]);
    EXPECT_NEAR(cx - 60.0, 430.0 - cy, 0.011);
  }
}

TEST(RankScatter, PublishedRankPairs) {
  std::vector<std::string> labels;
  std::vector<int> a, b;
  for (std::size_t i = 0; i < table3::kRows.size(); ++i) {
    labels.push_back("A" + std::to_string(i + 1));
    a.push_back(table3::kRows[i].topsis_rank);
    b.push_back(table3::kRows[i].moora_rank);
  }
  const auto svg = rank_scatter_svg(labels, a, b, "topsis", "moora");
  EXPECT_EQ(count(svg, "<circle class=\"point"), 30u);
  // Rows with equal published ranks: A6 A12 A13 A15 A16 A17 A18 A20 A21 A23 A26 A29.
  EXPECT_EQ(count(svg, "<circle class=\"point on-diagonal\""), 12u);

  const auto pairs = rank_pairs_svg(labels, a, b, "topsis", "moora");
  EXPECT_EQ(count(pairs, "<g class=\"pair\""), 30u);
  EXPECT_EQ(count(pairs, "class=\"rank-a\""), 30u);
}

TEST(EmitReport, BundleContentsForSmallProblem) {
  const auto bundle = run_report(three_by_two(), {WeightMethod::Entropy, WeightMethod::StdDev},
                                 {RankMethod::Topsis, RankMethod::Moora});
  std::vector<std::string> names;
  for (const auto& [name, _] : bundle.files) names.push_back(name);
  EXPECT_EQ(names, (std::vector<std::string>{"results.json", "ranks.csv", "weights.svg", "rank_scatter.svg",
                                             "rank_pairs.svg"}));

  const auto doc = nlohmann::json::parse(*bundle.find("results.json"));
  EXPECT_EQ(doc["format_version"], "1");
  EXPECT_EQ(doc["weights"].size(), 2u);
  EXPECT_EQ(doc["rankings"].size(), 4u);
  ASSERT_EQ(doc["comparisons"].size(), 2u);
  for (const auto& c : doc["comparisons"]) EXPECT_TRUE(c["agreed_top1"].get<bool>());

  // Every real in the results document carries exactly six decimals.
  const std::string& text = *bundle.find("results.json");
  const std::regex real(R"(-?[0-9]+\.[0-9]+)");
  const std::regex six(R"(-?[0-9]+\.[0-9]{6})");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), real); it != std::sregex_iterator(); ++it) {
    EXPECT_TRUE(std::regex_match(it->str(), six)) << it->str();
  }

  const std::string& csv = *bundle.find("ranks.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "alternative,entropy_topsis_score,entropy_topsis_rank,entropy_moora_score,entropy_moora_rank,"
            "stddev_topsis_score,stddev_topsis_rank,stddev_moora_score,stddev_moora_rank");
  EXPECT_EQ(count(csv, "\n"), 4u);
}

TEST(EmitReport, SingleRankMethodOmitsRankCharts) {
  const auto bundle = run_report(three_by_two(), {WeightMethod::Manual}, {RankMethod::Moora});
  EXPECT_EQ(bundle.files.size(), 3u);
  EXPECT_EQ(bundle.find("rank_scatter.svg"), nullptr);
}

TEST(EmitReport, ByteDeterministic) {
  const auto p = load_problem(kData / "pv_example/matrix.csv", kData / "pv_example/criteria.json");
  const auto a = run_report(p, {WeightMethod::Entropy, WeightMethod::StdDev}, {RankMethod::Topsis, RankMethod::Moora});
  const auto b = run_report(p, {WeightMethod::Entropy, WeightMethod::StdDev}, {RankMethod::Topsis, RankMethod::Moora});
  EXPECT_EQ(a.files, b.files);
}

TEST(Documents, RankingRoundTripsThroughReader) {
  const auto p = three_by_two();
  const auto r = topsis(p, WeightVector({0.5, 0.5}));
  const auto doc = parse_ranking_document(ranking_document(p.alternatives(), r, "manual"), "r.json");
  EXPECT_EQ(doc.alternatives, p.alternatives());
  EXPECT_EQ(doc.ranking.ranks, r.ranks);
  ASSERT_EQ(doc.ranking.separations.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(doc.ranking.scores[i], r.scores[i], 5e-7);
}

TEST(Documents, WeightsRoundTripThroughReader) {
  const auto p = three_by_two();
  const auto w = stddev_weights(p);
  const auto doc = parse_weights_document(weights_document(p, w), "w.json");
  EXPECT_EQ(doc.method, "stddev");
  EXPECT_EQ(doc.criteria, (std::vector<std::string>{"c1", "c2"}));
  EXPECT_NEAR(doc.weights[0], w.weights[0], 5e-7);
}

TEST(WriteBundle, ReportsUnwritableDirectory) {
  ReportBundle bundle;
  bundle.files.emplace_back("x.txt", "x");
  const auto blocker = std::filesystem::temp_directory_path() / "mcdm_blocker_file";
  write_text_file(blocker, "not a directory");
  try {
    write_bundle(bundle, blocker / "sub");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WriteError);
  }
  std::filesystem::remove(blocker);
}
