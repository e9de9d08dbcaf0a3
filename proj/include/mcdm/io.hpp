#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/core.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

struct CsvRow {
  std::size_t line = 0;  // 1-based line in the source
  std::vector<std::string> fields;
};

// Comma-separated, optional double-quoted fields ("" escapes a quote), LF or CRLF.
// Blank lines are skipped. Throws ParseError naming `source` and the line.
std::vector<CsvRow> parse_csv(std::string_view text, std::string_view source);

// Quotes a field when it contains a comma, quote or line break.
std::string csv_field(std::string_view s);

// Strict decimal: [+-]digits[.digits][(e|E)[+-]digits], '.' separator, finite only.
// Returns false instead of throwing so callers can attach a location.
bool parse_decimal(std::string_view text, double& out);

/// Criteria configuration (JSON):
///   {"format_version": "1",                      (optional)
///    "criteria": [{"name": "...", "direction": "benefit"|"cost",
///                  "weight": <number >= 0>,      (optional)
///                  "group": "...", "description": "..."}]}  (optional)
std::vector<Criterion> parse_criteria_config(std::string_view text, std::string_view source);

// Header must be "alternative" followed by the criteria names in order.
DecisionProblem parse_problem(std::string_view matrix_csv, std::string_view matrix_source,
                              std::string_view criteria_json, std::string_view criteria_source);
DecisionProblem load_problem(const std::filesystem::path& matrix_path,
                             const std::filesystem::path& criteria_path);

// Values are written in shortest round-trip form, so save/load is lossless.
std::string matrix_to_csv(const DecisionProblem& problem);
std::string criteria_to_json(const std::vector<Criterion>& criteria);
void save_problem(const DecisionProblem& problem, const std::filesystem::path& matrix_path,
                  const std::filesystem::path& criteria_path);

struct FixtureRow {
  std::string label;
  double s_plus = 0.0;
  double s_minus = 0.0;
  double ci = 0.0;
  int topsis_rank = 0;
  double moora_score = 0.0;
  int moora_rank = 0;
};

struct PublishedFixture {
  std::vector<FixtureRow> rows;
};

inline constexpr double kFixtureCiTolerance = 1e-4;

// CSV with header label,s_plus,s_minus,ci,topsis_rank,moora_score,moora_rank.
PublishedFixture parse_fixture(std::string_view text, std::string_view source);
PublishedFixture load_fixture(const std::filesystem::path& path);
std::string fixture_to_csv(const PublishedFixture& fixture);

struct FixtureIssue {
  std::string label;
  std::string field;  // "label", "ci", "topsis_rank" or "moora_rank"
  std::string message;
};

struct FixtureCheck {
  std::size_t rows_total = 0;
  std::size_t rows_consistent = 0;
  double max_ci_deviation = 0.0;
  std::string max_ci_deviation_label;
  std::vector<FixtureIssue> issues;
  bool pass = false;
};

// Re-derives Ci from the separations and both rank columns from the scores.
// Never throws on inconsistent data; every problem is listed in `issues`.
FixtureCheck check_fixture(const PublishedFixture& fixture);

struct WeightsDocument {
  std::string method;
  std::vector<std::string> criteria;
  std::vector<double> weights;
};

struct RankingDocument {
  std::vector<std::string> alternatives;
  Ranking ranking;
};

// Readers for the documents written by the report module.
WeightsDocument parse_weights_document(std::string_view text, std::string_view source);
RankingDocument parse_ranking_document(std::string_view text, std::string_view source);

}  // namespace mcdm
