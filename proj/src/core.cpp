#include "mcdm/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace mcdm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::AllZeroColumn: return "AllZeroColumn";
    case ErrorCode::DuplicateCriterionName: return "DuplicateCriterionName";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::TooFewAlternatives: return "TooFewAlternatives";
    case ErrorCode::NoCriteria: return "NoCriteria";
    case ErrorCode::NonFiniteScore: return "NonFiniteScore";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::WeightDimensionMismatch: return "WeightDimensionMismatch";
    case ErrorCode::MissingFixedWeight: return "MissingFixedWeight";
    case ErrorCode::AllZeroWeights: return "AllZeroWeights";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidRanking: return "InvalidRanking";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::WriteError: return "WriteError";
  }
  return "Unknown";
}

std::string_view to_string(Direction d) { return d == Direction::Benefit ? "benefit" : "cost"; }

std::string_view to_string(RankMethod m) { return m == RankMethod::Topsis ? "topsis" : "moora"; }

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("row {} has {} values, expected {}", i, rows[i].size(), cols));
    }
    std::copy(rows[i].begin(), rows[i].end(), out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return out;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

DecisionProblem build_problem(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                              Matrix matrix) {
  if (criteria.empty()) throw Error(ErrorCode::NoCriteria, "at least one criterion is required");
  if (alternatives.size() < 2) {
    throw Error(ErrorCode::TooFewAlternatives,
                fmt::format("{} alternative(s) given, at least 2 required", alternatives.size()));
  }
  if (matrix.rows() != alternatives.size() || matrix.cols() != criteria.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("matrix is {}x{}, expected {}x{}", matrix.rows(), matrix.cols(),
                            alternatives.size(), criteria.size()));
  }

  std::set<std::string> seen;
  for (const auto& c : criteria) {
    if (c.name.empty()) throw Error(ErrorCode::EmptyName, "criterion name is empty");
    if (!seen.insert(c.name).second) {
      throw Error(ErrorCode::DuplicateCriterionName, fmt::format("criterion '{}' repeated", c.name));
    }
    if (c.fixed_weight && !(std::isfinite(*c.fixed_weight) && *c.fixed_weight >= 0.0)) {
      throw Error(ErrorCode::InvalidWeights,
                  fmt::format("criterion '{}' has invalid fixed weight {}", c.name, *c.fixed_weight));
    }
  }
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    if (alternatives[i].empty()) {
      throw Error(ErrorCode::EmptyName, fmt::format("alternative {} has an empty label", i));
    }
  }

  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const double x = matrix(i, j);
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::NonFiniteEntry, fmt::format("entry ({}, {}) is not finite", i, j));
      }
      if (x < 0.0) {
        throw Error(ErrorCode::NegativeEntry, fmt::format("entry ({}, {}) = {} is negative", i, j, x));
      }
    }
  }
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    bool any_positive = false;
    for (std::size_t i = 0; i < matrix.rows() && !any_positive; ++i) any_positive = matrix(i, j) > 0.0;
    if (!any_positive) {
      throw Error(ErrorCode::AllZeroColumn,
                  fmt::format("column {} ('{}') has no positive entry", j, criteria[j].name));
    }
  }

  return DecisionProblem(std::move(criteria), std::move(alternatives), std::move(matrix));
}

DecisionProblem build_problem(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                              const std::vector<std::vector<double>>& rows) {
  if (rows.size() != alternatives.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} rows given for {} alternatives", rows.size(), alternatives.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != criteria.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("row {} has {} values for {} criteria", i, rows[i].size(), criteria.size()));
    }
  }
  return build_problem(std::move(criteria), std::move(alternatives), Matrix::from_rows(rows));
}

namespace {

void check_entries(const std::vector<double>& w) {
  if (w.empty()) throw Error(ErrorCode::InvalidWeights, "weight vector is empty");
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!std::isfinite(w[j]) || w[j] < 0.0) {
      throw Error(ErrorCode::InvalidWeights, fmt::format("weight {} = {} is not a finite non-negative value", j, w[j]));
    }
  }
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  check_entries(weights_);
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::InvalidWeights,
                fmt::format("weights sum to {}, outside 1 +/- {}", sum, kWeightSumTolerance));
  }
  if (sum != 1.0) {
    for (auto& w : weights_) w /= sum;
  }
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
  check_entries(raw);
  const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (sum <= 0.0) throw Error(ErrorCode::AllZeroWeights, "all weights are zero");
  for (auto& w : raw) w /= sum;
  return WeightVector(std::move(raw));
}

std::vector<int> assign_ranks(std::span<const double> scores) {
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw Error(ErrorCode::NonFiniteScore, fmt::format("score {} is not finite", i));
    }
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<int> ranks(scores.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = static_cast<int>(pos + 1);
  return ranks;
}

}  // namespace mcdm
