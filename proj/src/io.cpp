#include "mcdm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

namespace mcdm {

using json = nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("{}: cannot open for reading", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::WriteError, fmt::format("{}: cannot open for writing", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::WriteError, fmt::format("{}: write failed", path.string()));
}

std::vector<CsvRow> parse_csv(std::string_view text, std::string_view source) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    bool end_of_row = false;
    while (pos < text.size() && !end_of_row) {
      const char c = text[pos++];
      if (quoted) {
        if (c == '"') {
          if (pos < text.size() && text[pos] == '"') {
            field.push_back('"');
            ++pos;
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
        }
      } else if (c == '"') {
        if (!field.empty() || field_was_quoted) {
          throw Error(ErrorCode::ParseError, fmt::format("{}:{}: stray quote inside field", source, line));
        }
        quoted = true;
        field_was_quoted = true;
      } else if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && pos < text.size() && text[pos] == '\n') ++pos;
        end_of_row = true;
        ++line;
      } else {
        if (field_was_quoted) {
          throw Error(ErrorCode::ParseError, fmt::format("{}:{}: text after closing quote", source, line));
        }
        field.push_back(c);
      }
    }
    if (quoted) throw Error(ErrorCode::ParseError, fmt::format("{}:{}: unterminated quote", source, row.line));
    row.fields.push_back(std::move(field));
    const bool blank = row.fields.size() == 1 && row.fields[0].empty() && !field_was_quoted;
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

bool parse_decimal(std::string_view text, double& out) {
  std::size_t i = 0;
  auto digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i > start;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  const std::size_t number_start = i;
  bool any = digits();
  if (i < text.size() && text[i] == '.') {
    ++i;
    any = digits() || any;
  }
  if (!any) return false;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (!digits()) return false;
  }
  if (i != text.size()) return false;

  // from_chars rejects a leading '+', so parse from the sign-stripped start for that case.
  const bool negative = number_start > 0 && text[0] == '-';
  double value = 0.0;
  const char* first = text.data() + number_start;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return false;
  out = negative ? -value : value;
  return true;
}

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::ParseError, fmt::format("{}:{}:{}: invalid JSON", source, line, col));
  }
}

[[noreturn]] void bad_field(std::string_view source, std::string_view where, std::string_view what) {
  throw Error(ErrorCode::ParseError, fmt::format("{}: {}: {}", source, where, what));
}

const json& require(const json& obj, const char* key, std::string_view source, std::string_view where) {
  if (!obj.is_object() || !obj.contains(key)) bad_field(source, where, fmt::format("missing \"{}\"", key));
  return obj.at(key);
}

double require_number(const json& obj, const char* key, std::string_view source, std::string_view where) {
  const json& v = require(obj, key, source, where);
  if (!v.is_number()) bad_field(source, where, fmt::format("\"{}\" must be a number", key));
  return v.get<double>();
}

std::string require_string(const json& obj, const char* key, std::string_view source, std::string_view where) {
  const json& v = require(obj, key, source, where);
  if (!v.is_string()) bad_field(source, where, fmt::format("\"{}\" must be a string", key));
  return v.get<std::string>();
}

void check_format_version(const json& doc, std::string_view source) {
  if (doc.contains("format_version") && doc["format_version"] != "1") {
    bad_field(source, "format_version", "unsupported version (expected \"1\")");
  }
}

std::string format_shortest(double x) { return fmt::format("{}", x); }

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<Criterion> parse_criteria_config(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) bad_field(source, "document", "expected an object");
  check_format_version(doc, source);
  const json& list = require(doc, "criteria", source, "document");
  if (!list.is_array() || list.empty()) bad_field(source, "criteria", "expected a non-empty array");

  std::vector<Criterion> out;
  for (std::size_t j = 0; j < list.size(); ++j) {
    const json& item = list[j];
    const std::string where = fmt::format("criteria[{}]", j);
    if (!item.is_object()) bad_field(source, where, "expected an object");
    for (const auto& [key, _] : item.items()) {
      if (key != "name" && key != "direction" && key != "weight" && key != "group" && key != "description") {
        bad_field(source, where, fmt::format("unknown key \"{}\"", key));
      }
    }
    Criterion c;
    c.name = require_string(item, "name", source, where);
    const std::string dir = require_string(item, "direction", source, where);
    if (dir == "benefit") {
      c.direction = Direction::Benefit;
    } else if (dir == "cost") {
      c.direction = Direction::Cost;
    } else {
      bad_field(source, where, fmt::format("direction \"{}\" is not \"benefit\" or \"cost\"", dir));
    }
    if (item.contains("weight")) {
      const double w = require_number(item, "weight", source, where);
      if (!std::isfinite(w) || w < 0.0) bad_field(source, where, "weight must be a finite number >= 0");
      c.fixed_weight = w;
    }
    out.push_back(std::move(c));
  }
  return out;
}

DecisionProblem parse_problem(std::string_view matrix_csv, std::string_view matrix_source,
                              std::string_view criteria_json, std::string_view criteria_source) {
  std::vector<Criterion> criteria = parse_criteria_config(criteria_json, criteria_source);
  const std::vector<CsvRow> rows = parse_csv(matrix_csv, matrix_source);
  if (rows.empty()) throw Error(ErrorCode::HeaderMismatch, fmt::format("{}: file is empty", matrix_source));

  const CsvRow& header = rows.front();
  if (header.fields.front() != "alternative") {
    throw Error(ErrorCode::HeaderMismatch,
                fmt::format("{}:{}:1: first header must be \"alternative\", found \"{}\"", matrix_source,
                            header.line, header.fields.front()));
  }
  if (header.fields.size() != criteria.size() + 1) {
    throw Error(ErrorCode::HeaderMismatch,
                fmt::format("{}:{}: {} criterion columns but {} lists {}", matrix_source, header.line,
                            header.fields.size() - 1, criteria_source, criteria.size()));
  }
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (header.fields[j + 1] != criteria[j].name) {
      throw Error(ErrorCode::HeaderMismatch,
                  fmt::format("{}:{}:{}: column \"{}\" does not match criterion \"{}\" in {}", matrix_source,
                              header.line, j + 2, header.fields[j + 1], criteria[j].name, criteria_source));
    }
  }

  std::vector<std::string> labels;
  Matrix matrix(rows.size() - 1, criteria.size());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.fields.size() != header.fields.size()) {
      throw Error(ErrorCode::ParseError, fmt::format("{}:{}: expected {} fields, found {}", matrix_source, row.line,
                                                     header.fields.size(), row.fields.size()));
    }
    labels.push_back(row.fields[0]);
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      const std::string& cell = row.fields[j + 1];
      double value = 0.0;
      if (!parse_decimal(cell, value)) {
        throw Error(ErrorCode::ParseError, fmt::format("{}:{}:{}: \"{}\" is not a finite decimal number",
                                                       matrix_source, row.line, j + 2, cell));
      }
      if (value < 0.0) {
        throw Error(ErrorCode::NegativeEntry,
                    fmt::format("{}:{}:{}: value {} is negative", matrix_source, row.line, j + 2, cell));
      }
      matrix(r - 1, j) = value;
    }
  }

  try {
    return build_problem(std::move(criteria), std::move(labels), std::move(matrix));
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{} / {}: {}", matrix_source, criteria_source, e.what()));
  }
}

DecisionProblem load_problem(const std::filesystem::path& matrix_path,
                             const std::filesystem::path& criteria_path) {
  return parse_problem(read_text_file(matrix_path), matrix_path.string(), read_text_file(criteria_path),
                       criteria_path.string());
}

std::string matrix_to_csv(const DecisionProblem& problem) {
  std::string out = "alternative";
  for (const auto& c : problem.criteria()) out += "," + csv_field(c.name);
  out += "\n";
  for (std::size_t i = 0; i < problem.num_alternatives(); ++i) {
    out += csv_field(problem.alternatives()[i]);
    for (std::size_t j = 0; j < problem.num_criteria(); ++j) out += "," + format_shortest(problem.value(i, j));
    out += "\n";
  }
  return out;
}

std::string criteria_to_json(const std::vector<Criterion>& criteria) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : criteria) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["direction"] = std::string(to_string(c.direction));
    if (c.fixed_weight) item["weight"] = *c.fixed_weight;
    list.push_back(item);
  }
  nlohmann::ordered_json doc;
  doc["format_version"] = "1";
  doc["criteria"] = list;
  return doc.dump(2) + "\n";
}

void save_problem(const DecisionProblem& problem, const std::filesystem::path& matrix_path,
                  const std::filesystem::path& criteria_path) {
  write_text_file(matrix_path, matrix_to_csv(problem));
  write_text_file(criteria_path, criteria_to_json(problem.criteria()));
}

namespace {

constexpr const char* kFixtureHeader[] = {"label", "s_plus", "s_minus", "ci", "topsis_rank", "moora_score", "moora_rank"};

double fixture_real(const CsvRow& row, std::size_t col, std::string_view source) {
  double v = 0.0;
  if (!parse_decimal(row.fields[col], v)) {
    throw Error(ErrorCode::ParseError,
                fmt::format("{}:{}:{}: \"{}\" is not a decimal number", source, row.line, col + 1, row.fields[col]));
  }
  return v;
}

int fixture_int(const CsvRow& row, std::size_t col, std::string_view source) {
  const std::string& s = row.fields[col];
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::ParseError, fmt::format("{}:{}:{}: \"{}\" is not an integer", source, row.line, col + 1, s));
  }
  return v;
}

}  // namespace

PublishedFixture parse_fixture(std::string_view text, std::string_view source) {
  const std::vector<CsvRow> rows = parse_csv(text, source);
  if (rows.empty()) throw Error(ErrorCode::HeaderMismatch, fmt::format("{}: file is empty", source));
  const auto& header = rows.front().fields;
  bool header_ok = header.size() == std::size(kFixtureHeader);
  for (std::size_t k = 0; header_ok && k < header.size(); ++k) header_ok = header[k] == kFixtureHeader[k];
  if (!header_ok) {
    throw Error(ErrorCode::HeaderMismatch,
                fmt::format("{}:{}: expected header label,s_plus,s_minus,ci,topsis_rank,moora_score,moora_rank",
                            source, rows.front().line));
  }
  PublishedFixture fixture;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.fields.size() != std::size(kFixtureHeader)) {
      throw Error(ErrorCode::ParseError,
                  fmt::format("{}:{}: expected 7 fields, found {}", source, row.line, row.fields.size()));
    }
    FixtureRow f;
    f.label = row.fields[0];
    f.s_plus = fixture_real(row, 1, source);
    f.s_minus = fixture_real(row, 2, source);
    f.ci = fixture_real(row, 3, source);
    f.topsis_rank = fixture_int(row, 4, source);
    f.moora_score = fixture_real(row, 5, source);
    f.moora_rank = fixture_int(row, 6, source);
    fixture.rows.push_back(std::move(f));
  }
  return fixture;
}

PublishedFixture load_fixture(const std::filesystem::path& path) {
  return parse_fixture(read_text_file(path), path.string());
}

std::string fixture_to_csv(const PublishedFixture& fixture) {
  std::string out = "label,s_plus,s_minus,ci,topsis_rank,moora_score,moora_rank\n";
  for (const auto& r : fixture.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", csv_field(r.label), r.s_plus, r.s_minus, r.ci, r.topsis_rank,
                       r.moora_score, r.moora_rank);
  }
  return out;
}

FixtureCheck check_fixture(const PublishedFixture& fixture) {
  FixtureCheck check;
  const auto& rows = fixture.rows;
  check.rows_total = rows.size();
  std::vector<bool> row_ok(rows.size(), true);

  std::vector<double> ci(rows.size());
  std::vector<double> moora(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FixtureRow& r = rows[i];
    const std::string expected_label = fmt::format("A{}", i + 1);
    if (r.label != expected_label) {
      check.issues.push_back({r.label, "label", fmt::format("row {} is labelled \"{}\", expected \"{}\"", i + 1,
                                                            r.label, expected_label)});
      row_ok[i] = false;
    }
    const double denom = r.s_plus + r.s_minus;
    const double derived = denom > 0.0 ? r.s_minus / denom : 0.5;
    const double dev = std::abs(r.ci - derived);
    if (!(dev <= check.max_ci_deviation)) {
      check.max_ci_deviation = dev;
      check.max_ci_deviation_label = r.label;
    }
    if (!(dev <= kFixtureCiTolerance)) {
      check.issues.push_back({r.label, "ci", fmt::format("published Ci {:.6f} but S-/(S+ + S-) = {:.6f} "
                                                         "(deviation {:.6f} > {})",
                                                         r.ci, derived, dev, kFixtureCiTolerance)});
      row_ok[i] = false;
    }
    ci[i] = r.ci;
    moora[i] = r.moora_score;
  }

  auto check_ranks = [&](const std::vector<double>& scores, int FixtureRow::*published, const char* field) {
    std::vector<int> derived;
    try {
      derived = assign_ranks(scores);
    } catch (const Error& e) {
      check.issues.push_back({"", field, e.what()});
      std::fill(row_ok.begin(), row_ok.end(), false);
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].*published == derived[i]) continue;
      std::string note;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k != i && scores[k] == scores[i]) note += fmt::format(" (score tied with {})", rows[k].label);
      }
      check.issues.push_back({rows[i].label, field, fmt::format("published rank {} but scores give rank {}{}",
                                                                rows[i].*published, derived[i], note)});
      row_ok[i] = false;
    }
  };
  check_ranks(ci, &FixtureRow::topsis_rank, "topsis_rank");
  check_ranks(moora, &FixtureRow::moora_rank, "moora_rank");

  check.rows_consistent = static_cast<std::size_t>(std::count(row_ok.begin(), row_ok.end(), true));
  check.pass = !rows.empty() && check.issues.empty();
  return check;
}

WeightsDocument parse_weights_document(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) bad_field(source, "document", "expected an object");
  check_format_version(doc, source);
  WeightsDocument out;
  if (doc.contains("method") && doc["method"].is_string()) out.method = doc["method"].get<std::string>();
  const json& list = require(doc, "criteria", source, "document");
  if (!list.is_array() || list.empty()) bad_field(source, "criteria", "expected a non-empty array");
  for (std::size_t j = 0; j < list.size(); ++j) {
    const std::string where = fmt::format("criteria[{}]", j);
    out.criteria.push_back(require_string(list[j], "name", source, where));
    out.weights.push_back(require_number(list[j], "weight", source, where));
  }
  return out;
}

RankingDocument parse_ranking_document(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) bad_field(source, "document", "expected an object");
  check_format_version(doc, source);
  RankingDocument out;
  const std::string method = require_string(doc, "method", source, "document");
  if (method == "topsis") {
    out.ranking.method = RankMethod::Topsis;
  } else if (method == "moora") {
    out.ranking.method = RankMethod::Moora;
  } else {
    bad_field(source, "method", fmt::format("unknown ranking method \"{}\"", method));
  }
  if (doc.contains("degenerate") && doc["degenerate"].is_boolean()) out.ranking.degenerate = doc["degenerate"].get<bool>();
  const json& list = require(doc, "alternatives", source, "document");
  if (!list.is_array()) bad_field(source, "alternatives", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = fmt::format("alternatives[{}]", i);
    const json& item = list[i];
    out.alternatives.push_back(require_string(item, "label", source, where));
    out.ranking.scores.push_back(require_number(item, "score", source, where));
    const json& r = require(item, "rank", source, where);
    if (!r.is_number_integer()) bad_field(source, where, "\"rank\" must be an integer");
    out.ranking.ranks.push_back(r.get<int>());
    if (item.contains("s_plus") && item.contains("s_minus")) {
      out.ranking.separations.push_back({require_number(item, "s_plus", source, where),
                                         require_number(item, "s_minus", source, where)});
    }
  }
  return out;
}

}  // namespace mcdm
