#include "mcdm/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mcdm/json_writer.hpp"
#include "mcdm/ranking.hpp"

namespace mcdm {

namespace {

void write_weight_criteria(JsonWriter& w, const DecisionProblem& problem, const WeightReport& report) {
  w.key("criteria").begin_array();
  for (std::size_t j = 0; j < problem.num_criteria(); ++j) {
    const Criterion& c = problem.criteria()[j];
    w.begin_object();
    w.field("name", std::string_view(c.name));
    w.field("direction", to_string(c.direction));
    w.field("weight", report.weights[j]);
    if (!report.entropy_detail.empty()) {
      w.field("entropy", report.entropy_detail[j].entropy);
      w.field("divergence", report.entropy_detail[j].divergence);
    }
    if (!report.sigma.empty()) w.field("sigma", report.sigma[j]);
    w.end_object();
  }
  w.end_array();
}

void write_ranking_alternatives(JsonWriter& w, const std::vector<std::string>& alternatives,
                                const Ranking& ranking) {
  w.key("alternatives").begin_array();
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    w.begin_object();
    w.field("label", std::string_view(alternatives[i]));
    w.field("score", ranking.scores[i]);
    w.field("rank", ranking.ranks[i]);
    if (!ranking.separations.empty()) {
      w.field("s_plus", ranking.separations[i].s_plus);
      w.field("s_minus", ranking.separations[i].s_minus);
    }
    w.end_object();
  }
  w.end_array();
}

void write_comparison_stats(JsonWriter& w, const RankComparison& stats) {
  w.field("spearman_rho", stats.spearman_rho);
  w.field("kendall_tau", stats.kendall_tau);
  w.field("agreed_top1", stats.agreed_top1);
  w.key("rank_diffs").begin_array();
  for (int d : stats.rank_diffs) w.value(d);
  w.end_array();
}

std::string label_of_rank(const std::vector<std::string>& alternatives, const std::vector<int>& ranks, int r) {
  const auto it = std::find(ranks.begin(), ranks.end(), r);
  return it == ranks.end() ? std::string() : alternatives[static_cast<std::size_t>(it - ranks.begin())];
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double x) {
  std::string s = fmt::format("{:.2f}", x);
  if (s == "-0.00") s = "0.00";
  return s;
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948"};

std::string svg_open(double width, double height, std::string_view title) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"11\">\n"
      "<title>{2}</title>\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"#ffffff\"/>\n",
      num(width), num(height), xml_escape(title));
}

// Plot frame shared by the rank charts: ranks 1..m along both axes, rank 1 at the origin.
struct RankAxes {
  double left = 60.0;
  double top = 30.0;
  double size = 400.0;
  int m = 1;

  [[nodiscard]] double step() const { return m > 1 ? size / (m - 1) : 0.0; }
  [[nodiscard]] double x(int rank) const { return left + (rank - 1) * step(); }
  [[nodiscard]] double y(int rank) const { return top + size - (rank - 1) * step(); }
};

}  // namespace

std::string weights_document(const DecisionProblem& problem, const WeightReport& report) {
  JsonWriter w;
  w.begin_object();
  w.field("format_version", "1");
  w.field("kind", "weights");
  w.field("method", to_string(report.method));
  w.field("fallback", report.fallback);
  write_weight_criteria(w, problem, report);
  w.end_object();
  return w.str();
}

std::string ranking_document(const std::vector<std::string>& alternatives, const Ranking& ranking,
                             std::string_view weights_source) {
  JsonWriter w;
  w.begin_object();
  w.field("format_version", "1");
  w.field("kind", "ranking");
  w.field("method", to_string(ranking.method));
  w.field("weights_source", weights_source);
  w.field("degenerate", ranking.degenerate);
  write_ranking_alternatives(w, alternatives, ranking);
  w.end_object();
  return w.str();
}

std::string comparison_document(const std::vector<std::string>& alternatives, const Ranking& a,
                                const Ranking& b, const RankComparison& stats) {
  JsonWriter w;
  w.begin_object();
  w.field("format_version", "1");
  w.field("kind", "comparison");
  w.field("a_method", to_string(a.method));
  w.field("b_method", to_string(b.method));
  w.field("top1_a", std::string_view(label_of_rank(alternatives, a.ranks, 1)));
  w.field("top1_b", std::string_view(label_of_rank(alternatives, b.ranks, 1)));
  write_comparison_stats(w, stats);
  w.key("alternatives").begin_array();
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    w.begin_object();
    w.field("label", std::string_view(alternatives[i]));
    w.field("rank_a", a.ranks[i]);
    w.field("rank_b", b.ranks[i]);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string fixture_check_document(const FixtureCheck& check) {
  JsonWriter w;
  w.begin_object();
  w.field("format_version", "1");
  w.field("kind", "fixture_check");
  w.field("pass", check.pass);
  w.field("rows_total", check.rows_total);
  w.field("rows_consistent", check.rows_consistent);
  w.field("ci_tolerance", kFixtureCiTolerance);
  w.field("max_ci_deviation", check.max_ci_deviation);
  w.field("max_ci_deviation_label", std::string_view(check.max_ci_deviation_label));
  w.key("issues").begin_array();
  for (const auto& issue : check.issues) {
    w.begin_object();
    w.field("label", std::string_view(issue.label));
    w.field("field", std::string_view(issue.field));
    w.field("message", std::string_view(issue.message));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string weight_bar_chart_svg(const std::vector<std::string>& criteria,
                                 const std::vector<WeightSeries>& series) {
  const double left = 60.0;
  const double top = 30.0;
  const double plot_h = 260.0;
  const double group_w = 90.0;
  const double width = left + group_w * static_cast<double>(criteria.size()) + 40.0;
  const double height = top + plot_h + 90.0;

  double y_max = 0.0;
  for (const auto& s : series) {
    for (double v : s.weights) y_max = std::max(y_max, v);
  }
  y_max = y_max > 0.0 ? std::ceil(y_max * 10.0) / 10.0 : 1.0;
  auto y_of = [&](double v) { return top + plot_h - plot_h * v / y_max; };

  std::string out = svg_open(width, height, "Criterion weights");
  out += fmt::format("<line class=\"axis\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#000000\"/>\n",
                     num(left), num(top), num(top + plot_h));
  out += fmt::format("<line class=\"axis\" x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#000000\"/>\n",
                     num(left), num(top + plot_h), num(width - 20.0));
  for (int t = 0; t <= 5; ++t) {
    const double v = y_max * t / 5.0;
    out += fmt::format("<text class=\"tick\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", num(left - 6.0),
                       num(y_of(v) + 4.0), num(v));
  }

  const std::size_t k = std::max<std::size_t>(series.size(), 1);
  const double bar_w = (group_w - 20.0) / static_cast<double>(k);
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const double gx = left + group_w * static_cast<double>(j) + 10.0;
    out += fmt::format("<g class=\"group\" data-criterion=\"{}\">\n", xml_escape(criteria[j]));
    for (std::size_t s = 0; s < series.size(); ++s) {
      const double v = j < series[s].weights.size() ? series[s].weights[j] : 0.0;
      const double y = y_of(v);
      out += fmt::format(
          "<rect class=\"bar\" data-series=\"{}\" data-value=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" "
          "height=\"{}\" fill=\"{}\"/>\n",
          xml_escape(series[s].name), format_real(v), num(gx + bar_w * static_cast<double>(s)), num(y),
          num(bar_w), num(top + plot_h - y), kPalette[s % std::size(kPalette)]);
    }
    out += fmt::format("<text class=\"label\" x=\"{}\" y=\"{}\" text-anchor=\"end\" transform=\"rotate(-30 {} {})\">{}</text>\n",
                       num(gx + (group_w - 20.0) / 2.0), num(top + plot_h + 14.0),
                       num(gx + (group_w - 20.0) / 2.0), num(top + plot_h + 14.0), xml_escape(criteria[j]));
    out += "</g>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double lx = left + 10.0 + 110.0 * static_cast<double>(s);
    out += fmt::format("<rect class=\"legend\" x=\"{}\" y=\"8\" width=\"10\" height=\"10\" fill=\"{}\"/>\n", num(lx),
                       kPalette[s % std::size(kPalette)]);
    out += fmt::format("<text x=\"{}\" y=\"17\">{}</text>\n", num(lx + 14.0), xml_escape(series[s].name));
  }
  out += "</svg>\n";
  return out;
}

std::string rank_scatter_svg(const std::vector<std::string>& alternatives, const std::vector<int>& ranks_a,
                             const std::vector<int>& ranks_b, std::string_view name_a,
                             std::string_view name_b) {
  RankAxes ax;
  ax.m = static_cast<int>(alternatives.size());
  std::string out = svg_open(ax.left + ax.size + 40.0, ax.top + ax.size + 60.0,
                             fmt::format("Rank under {} vs rank under {}", name_a, name_b));
  out += fmt::format(
      "<line class=\"diagonal\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n",
      num(ax.x(1)), num(ax.y(1)), num(ax.x(ax.m)), num(ax.y(ax.m)));
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">rank ({})</text>\n", num(ax.left + ax.size / 2.0),
                     num(ax.top + ax.size + 35.0), xml_escape(name_a));
  out += fmt::format("<text x=\"15\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 15 {0})\">rank ({1})</text>\n",
                     num(ax.top + ax.size / 2.0), xml_escape(name_b));
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    const bool diag = ranks_a[i] == ranks_b[i];
    out += fmt::format(
        "<circle class=\"point{}\" data-label=\"{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n",
        diag ? " on-diagonal" : "", xml_escape(alternatives[i]), num(ax.x(ranks_a[i])), num(ax.y(ranks_b[i])),
        diag ? kPalette[2] : kPalette[0]);
  }
  out += "</svg>\n";
  return out;
}

std::string rank_pairs_svg(const std::vector<std::string>& alternatives, const std::vector<int>& ranks_a,
                           const std::vector<int>& ranks_b, std::string_view name_a, std::string_view name_b) {
  const int m = static_cast<int>(alternatives.size());
  const double left = 50.0;
  const double top = 30.0;
  const double col_w = 20.0;
  const double plot_h = 300.0;
  const double width = left + col_w * m + 30.0;
  const double height = top + plot_h + 60.0;
  auto y_of = [&](int r) { return top + (m > 1 ? plot_h * (r - 1) / (m - 1) : 0.0); };

  std::string out = svg_open(width, height, fmt::format("Rank per alternative: {} and {}", name_a, name_b));
  out += fmt::format("<circle cx=\"{}\" cy=\"12\" r=\"4\" fill=\"{}\"/><text x=\"{}\" y=\"16\">{}</text>\n",
                     num(left), kPalette[0], num(left + 8.0), xml_escape(name_a));
  out += fmt::format("<circle cx=\"{}\" cy=\"12\" r=\"4\" fill=\"{}\"/><text x=\"{}\" y=\"16\">{}</text>\n",
                     num(left + 110.0), kPalette[1], num(left + 118.0), xml_escape(name_b));
  for (int i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double x = left + col_w * (i + 0.5);
    out += fmt::format("<g class=\"pair\" data-label=\"{}\">\n", xml_escape(alternatives[k]));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#bbbbbb\"/>\n", num(x),
                       num(y_of(ranks_a[k])), num(y_of(ranks_b[k])));
    out += fmt::format("<circle class=\"rank-a\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n", num(x),
                       num(y_of(ranks_a[k])), kPalette[0]);
    out += fmt::format("<circle class=\"rank-b\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n", num(x),
                       num(y_of(ranks_b[k])), kPalette[1]);
    out += fmt::format("<text x=\"{0}\" y=\"{1}\" text-anchor=\"end\" transform=\"rotate(-90 {0} {1})\">{2}</text>\n",
                       num(x + 4.0), num(top + plot_h + 10.0), xml_escape(alternatives[k]));
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

const std::string* ReportBundle::find(std::string_view name) const {
  for (const auto& [file, content] : files) {
    if (file == name) return &content;
  }
  return nullptr;
}

ReportBundle emit_report(const DecisionProblem& problem, const std::vector<WeightReport>& weights,
                         const std::vector<RankedResult>& rankings,
                         const std::vector<MethodComparison>& comparisons) {
  const auto& labels = problem.alternatives();
  ReportBundle bundle;

  JsonWriter w;
  w.begin_object();
  w.field("format_version", "1");
  w.field("kind", "report");
  w.key("problem").begin_object();
  w.key("alternatives").begin_array();
  for (const auto& a : labels) w.value(std::string_view(a));
  w.end_array();
  w.key("criteria").begin_array();
  for (const auto& c : problem.criteria()) {
    w.begin_object().field("name", std::string_view(c.name)).field("direction", to_string(c.direction)).end_object();
  }
  w.end_array();
  w.end_object();

  w.key("weights").begin_array();
  for (const auto& report : weights) {
    w.begin_object();
    w.field("method", to_string(report.method));
    w.field("fallback", report.fallback);
    write_weight_criteria(w, problem, report);
    w.end_object();
  }
  w.end_array();

  w.key("rankings").begin_array();
  for (const auto& r : rankings) {
    w.begin_object();
    w.field("weight_method", to_string(r.weight_method));
    w.field("method", to_string(r.ranking.method));
    w.field("degenerate", r.ranking.degenerate);
    write_ranking_alternatives(w, labels, r.ranking);
    w.end_object();
  }
  w.end_array();

  w.key("comparisons").begin_array();
  for (const auto& c : comparisons) {
    w.begin_object();
    w.field("weight_method", to_string(c.weight_method));
    w.field("a", to_string(c.a));
    w.field("b", to_string(c.b));
    write_comparison_stats(w, c.stats);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  bundle.files.emplace_back("results.json", w.str());

  std::string csv = "alternative";
  for (const auto& r : rankings) {
    const auto tag = fmt::format("{}_{}", to_string(r.weight_method), to_string(r.ranking.method));
    csv += fmt::format(",{0}_score,{0}_rank", tag);
  }
  csv += "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    csv += csv_field(labels[i]);
    for (const auto& r : rankings) csv += fmt::format(",{},{}", format_real(r.ranking.scores[i]), r.ranking.ranks[i]);
    csv += "\n";
  }
  bundle.files.emplace_back("ranks.csv", std::move(csv));

  std::vector<std::string> names;
  for (const auto& c : problem.criteria()) names.push_back(c.name);
  std::vector<WeightSeries> series;
  for (const auto& report : weights) series.push_back({std::string(to_string(report.method)), report.weights.values()});
  bundle.files.emplace_back("weights.svg", weight_bar_chart_svg(names, series));

  if (!comparisons.empty()) {
    const MethodComparison& c = comparisons.front();
    const Ranking* ra = nullptr;
    const Ranking* rb = nullptr;
    for (const auto& r : rankings) {
      if (r.weight_method != c.weight_method) continue;
      if (r.ranking.method == c.a && !ra) ra = &r.ranking;
      if (r.ranking.method == c.b && !rb) rb = &r.ranking;
    }
    if (ra && rb) {
      const std::string na(to_string(c.a));
      const std::string nb(to_string(c.b));
      bundle.files.emplace_back("rank_scatter.svg", rank_scatter_svg(labels, ra->ranks, rb->ranks, na, nb));
      bundle.files.emplace_back("rank_pairs.svg", rank_pairs_svg(labels, ra->ranks, rb->ranks, na, nb));
    }
  }
  return bundle;
}

ReportBundle run_report(const DecisionProblem& problem, const std::vector<WeightMethod>& weight_methods,
                        const std::vector<RankMethod>& rank_methods) {
  std::vector<WeightReport> weights;
  std::vector<RankedResult> rankings;
  std::vector<MethodComparison> comparisons;
  for (WeightMethod wm : weight_methods) {
    weights.push_back(compute_weights(wm, problem));
    const std::size_t first = rankings.size();
    for (RankMethod rm : rank_methods) rankings.push_back({wm, rank(rm, problem, weights.back().weights)});
    if (rank_methods.size() >= 2) {
      const Ranking& a = rankings[first].ranking;
      const Ranking& b = rankings[first + 1].ranking;
      comparisons.push_back({wm, a.method, b.method, compare_rankings(a, b)});
    }
  }
  return emit_report(problem, weights, rankings, comparisons);
}

void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::WriteError, fmt::format("{}: {}", dir.string(), ec.message()));
  for (const auto& [name, content] : bundle.files) write_text_file(dir / name, content);
}

}  // namespace mcdm
