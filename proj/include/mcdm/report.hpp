#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mcdm/analysis.hpp"
#include "mcdm/core.hpp"
#include "mcdm/io.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

// Single-purpose documents (format_version "1"). Every real has six decimals.
std::string weights_document(const DecisionProblem& problem, const WeightReport& report);
std::string ranking_document(const std::vector<std::string>& alternatives, const Ranking& ranking,
                             std::string_view weights_source);
std::string comparison_document(const std::vector<std::string>& alternatives, const Ranking& a,
                                const Ranking& b, const RankComparison& stats);
std::string fixture_check_document(const FixtureCheck& check);

struct WeightSeries {
  std::string name;
  std::vector<double> weights;
};

// Grouped bars: one group per criterion, one bar per series.
std::string weight_bar_chart_svg(const std::vector<std::string>& criteria,
                                 const std::vector<WeightSeries>& series);

// One point per alternative at (rank under a, rank under b) with the identity diagonal.
std::string rank_scatter_svg(const std::vector<std::string>& alternatives, const std::vector<int>& ranks_a,
                             const std::vector<int>& ranks_b, std::string_view name_a,
                             std::string_view name_b);

// Per-alternative pair of rank markers joined by a segment.
std::string rank_pairs_svg(const std::vector<std::string>& alternatives, const std::vector<int>& ranks_a,
                           const std::vector<int>& ranks_b, std::string_view name_a, std::string_view name_b);

struct RankedResult {
  WeightMethod weight_method;
  Ranking ranking;
};

struct MethodComparison {
  WeightMethod weight_method;
  RankMethod a;
  RankMethod b;
  RankComparison stats;
};

// File name -> contents, in emission order.
struct ReportBundle {
  std::vector<std::pair<std::string, std::string>> files;

  [[nodiscard]] const std::string* find(std::string_view name) const;
};

/// Builds results.json, ranks.csv and weights.svg; rank_scatter.svg and
/// rank_pairs.svg are added when at least one comparison is present (the
/// first comparison is drawn). Pure: identical inputs give identical bytes.
ReportBundle emit_report(const DecisionProblem& problem, const std::vector<WeightReport>& weights,
                         const std::vector<RankedResult>& rankings,
                         const std::vector<MethodComparison>& comparisons);

// Runs every weight method, ranks with every rank method under each, and compares
// the first two rank methods per weight method.
ReportBundle run_report(const DecisionProblem& problem, const std::vector<WeightMethod>& weight_methods,
                        const std::vector<RankMethod>& rank_methods);

// Creates `dir` if needed. Throws WriteError.
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir);

}  // namespace mcdm
