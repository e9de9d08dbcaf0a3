#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcdm/error.hpp"

namespace mcdm {

enum class Direction { Benefit, Cost };

std::string_view to_string(Direction d);

struct Criterion {
  std::string name;
  Direction direction = Direction::Benefit;
  std::optional<double> fixed_weight;
};

// Dense row-major matrix: rows are alternatives, columns are criteria.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::vector<double> column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Validated m x n decision problem. Immutable once built.
class DecisionProblem {
 public:
  [[nodiscard]] const std::vector<Criterion>& criteria() const noexcept { return criteria_; }
  [[nodiscard]] const std::vector<std::string>& alternatives() const noexcept {
    return alternatives_;
  }
  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }

  [[nodiscard]] std::size_t num_alternatives() const noexcept { return matrix_.rows(); }
  [[nodiscard]] std::size_t num_criteria() const noexcept { return matrix_.cols(); }
  [[nodiscard]] double value(std::size_t i, std::size_t j) const { return matrix_(i, j); }

 private:
  friend DecisionProblem build_problem(std::vector<Criterion>, std::vector<std::string>, Matrix);
  DecisionProblem(std::vector<Criterion> c, std::vector<std::string> a, Matrix x)
      : criteria_(std::move(c)), alternatives_(std::move(a)), matrix_(std::move(x)) {}

  std::vector<Criterion> criteria_;
  std::vector<std::string> alternatives_;
  Matrix matrix_;
};

// Validation gateway for DecisionProblem. Throws Error with one of
// DimensionMismatch, NegativeEntry, NonFiniteEntry, AllZeroColumn,
// DuplicateCriterionName, EmptyName, NoCriteria, TooFewAlternatives.
DecisionProblem build_problem(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                              Matrix matrix);

DecisionProblem build_problem(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                              const std::vector<std::vector<double>>& rows);

// Braced rows would otherwise be ambiguous with the Matrix overload.
inline DecisionProblem build_problem(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                                     std::initializer_list<std::vector<double>> rows) {
  return build_problem(std::move(criteria), std::move(alternatives), std::vector<std::vector<double>>(rows));
}

// Inputs whose sum is within this distance of 1 are renormalized; farther ones are rejected.
inline constexpr double kWeightSumTolerance = 1e-5;

class WeightVector {
 public:
  // Throws InvalidWeights on empty, negative, non-finite, or badly normalized input.
  explicit WeightVector(std::vector<double> weights);

  // Scales arbitrary non-negative weights to sum 1. Throws AllZeroWeights if they sum to 0.
  static WeightVector normalized(std::vector<double> raw);

  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] double operator[](std::size_t j) const { return weights_[j]; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

enum class RankMethod { Topsis, Moora };

std::string_view to_string(RankMethod m);

struct Separation {
  double s_plus = 0.0;
  double s_minus = 0.0;
};

struct Ranking {
  RankMethod method = RankMethod::Topsis;
  std::vector<double> scores;
  std::vector<Separation> separations;  // TOPSIS only
  std::vector<int> ranks;
  bool degenerate = false;  // TOPSIS: some alternative had S+ + S- = 0
};

// Ordinal ranks of `scores` in descending order, 1 = best. Equal scores go to the
// lower index first. Throws NonFiniteScore.
std::vector<int> assign_ranks(std::span<const double> scores);

}  // namespace mcdm
