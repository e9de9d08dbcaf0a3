#include "mcdm/cli.hpp"

#include <filesystem>
#include <map>

#include "CLI11.hpp"
#include <fmt/format.h>

#include "mcdm/analysis.hpp"
#include "mcdm/io.hpp"
#include "mcdm/ranking.hpp"
#include "mcdm/report.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm::cli {

namespace {

const std::map<std::string, WeightMethod> kWeightMethods{{"entropy", WeightMethod::Entropy},
                                                         {"stddev", WeightMethod::StdDev},
                                                         {"manual", WeightMethod::Manual},
                                                         {"equal", WeightMethod::Equal}};

const std::map<std::string, RankMethod> kRankMethods{{"topsis", RankMethod::Topsis}, {"moora", RankMethod::Moora}};

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

WeightVector resolve_weights(const DecisionProblem& problem, const std::string& spec, std::string& source) {
  if (std::filesystem::is_regular_file(spec)) {
    const WeightsDocument doc = parse_weights_document(read_text_file(spec), spec);
    if (doc.criteria.size() != problem.num_criteria()) {
      throw Error(ErrorCode::WeightDimensionMismatch,
                  fmt::format("{}: {} weights for {} criteria", spec, doc.criteria.size(), problem.num_criteria()));
    }
    for (std::size_t j = 0; j < doc.criteria.size(); ++j) {
      if (doc.criteria[j] != problem.criteria()[j].name) {
        throw Error(ErrorCode::HeaderMismatch, fmt::format("{}: criteria[{}] is \"{}\", problem has \"{}\"", spec, j,
                                                           doc.criteria[j], problem.criteria()[j].name));
      }
    }
    source = spec;
    return WeightVector(doc.weights);
  }
  const auto it = kWeightMethods.find(spec);
  if (it == kWeightMethods.end()) {
    throw Error(ErrorCode::IoError, fmt::format("{}: no such weights file and not a weighting method "
                                                "(entropy, stddev, manual, equal)",
                                                spec));
  }
  source = spec;
  return compute_weights(it->second, problem).weights;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-criteria decision toolkit: objective weighting, TOPSIS/MOORA ranking, agreement reports"};
  app.name(args.empty() ? "mcdm" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);

  std::string matrix;
  std::string criteria;
  std::string out_path;

  std::string weight_method;
  auto* weights_cmd = app.add_subcommand("weights", "Compute criterion weights");
  weights_cmd->add_option("--method", weight_method, "entropy|stddev|manual|equal")
      ->required()
      ->check(CLI::IsMember({"entropy", "stddev", "manual", "equal"}));
  weights_cmd->add_option("--matrix", matrix, "Decision matrix CSV")->required();
  weights_cmd->add_option("--criteria", criteria, "Criteria configuration JSON")->required();
  weights_cmd->add_option("--out", out_path, "Output file (default: standard output)");

  std::string rank_method;
  std::string weights_spec;
  auto* rank_cmd = app.add_subcommand("rank", "Rank alternatives");
  rank_cmd->add_option("--method", rank_method, "topsis|moora")->required()->check(CLI::IsMember({"topsis", "moora"}));
  rank_cmd->add_option("--matrix", matrix, "Decision matrix CSV")->required();
  rank_cmd->add_option("--criteria", criteria, "Criteria configuration JSON")->required();
  rank_cmd->add_option("--weights", weights_spec,
                       "Weights document path, or a weighting method name (an existing file takes precedence)")
      ->required();

  std::string ranking_a;
  std::string ranking_b;
  auto* compare_cmd = app.add_subcommand("compare", "Rank agreement between two ranking documents");
  compare_cmd->add_option("--a", ranking_a, "First ranking document")->required();
  compare_cmd->add_option("--b", ranking_b, "Second ranking document")->required();

  std::vector<std::string> report_weights{"entropy", "stddev"};
  std::vector<std::string> report_ranks{"topsis", "moora"};
  std::string out_dir;
  auto* report_cmd = app.add_subcommand("report", "Write the full results bundle");
  report_cmd->add_option("--matrix", matrix, "Decision matrix CSV")->required();
  report_cmd->add_option("--criteria", criteria, "Criteria configuration JSON")->required();
  report_cmd->add_option("--weights-methods", report_weights, "Comma-separated weighting methods")
      ->delimiter(',')
      ->check(CLI::IsMember({"entropy", "stddev", "manual", "equal"}))
      ->capture_default_str();
  report_cmd->add_option("--rank-methods", report_ranks, "Comma-separated ranking methods")
      ->delimiter(',')
      ->check(CLI::IsMember({"topsis", "moora"}))
      ->capture_default_str();
  report_cmd->add_option("--out-dir", out_dir, "Output directory")->required();

  std::string fixture_path;
  auto* fixture_cmd = app.add_subcommand("check-fixture", "Validate a published-results fixture");
  fixture_cmd->add_option("--fixture", fixture_path, "Fixture CSV")->required();

  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "mcdm" : args[0].c_str());
  for (std::size_t k = 1; k < args.size(); ++k) argv.push_back(args[k].c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*weights_cmd) {
      const DecisionProblem problem = load_problem(matrix, criteria);
      const WeightReport report = compute_weights(kWeightMethods.at(weight_method), problem);
      emit(out, weights_document(problem, report), out_path);
    } else if (*rank_cmd) {
      const DecisionProblem problem = load_problem(matrix, criteria);
      std::string source;
      const WeightVector w = resolve_weights(problem, weights_spec, source);
      const Ranking ranking = rank(kRankMethods.at(rank_method), problem, w);
      out << ranking_document(problem.alternatives(), ranking, source);
    } else if (*compare_cmd) {
      const RankingDocument a = parse_ranking_document(read_text_file(ranking_a), ranking_a);
      const RankingDocument b = parse_ranking_document(read_text_file(ranking_b), ranking_b);
      if (a.alternatives.size() != b.alternatives.size()) {
        throw Error(ErrorCode::LengthMismatch, fmt::format("{} has {} alternatives, {} has {}", ranking_a,
                                                           a.alternatives.size(), ranking_b, b.alternatives.size()));
      }
      for (std::size_t i = 0; i < a.alternatives.size(); ++i) {
        if (a.alternatives[i] != b.alternatives[i]) {
          throw Error(ErrorCode::LengthMismatch,
                      fmt::format("alternative {} is \"{}\" in {} but \"{}\" in {}", i + 1, a.alternatives[i],
                                  ranking_a, b.alternatives[i], ranking_b));
        }
      }
      const RankComparison stats = compare_rankings(a.ranking, b.ranking);
      out << comparison_document(a.alternatives, a.ranking, b.ranking, stats);
    } else if (*report_cmd) {
      const DecisionProblem problem = load_problem(matrix, criteria);
      std::vector<WeightMethod> wms;
      for (const auto& name : report_weights) wms.push_back(kWeightMethods.at(name));
      std::vector<RankMethod> rms;
      for (const auto& name : report_ranks) rms.push_back(kRankMethods.at(name));
      const ReportBundle bundle = run_report(problem, wms, rms);
      write_bundle(bundle, out_dir);
      for (const auto& [name, _] : bundle.files) out << (std::filesystem::path(out_dir) / name).string() << "\n";
    } else if (*fixture_cmd) {
      const FixtureCheck check = check_fixture(load_fixture(fixture_path));
      out << fixture_check_document(check);
      if (!check.pass) return kValidation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kSuccess;
}

}  // namespace mcdm::cli
