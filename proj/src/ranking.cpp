#include "mcdm/ranking.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mcdm/normalize.hpp"

namespace mcdm {

namespace {

void check_dimension(const DecisionProblem& problem, const WeightVector& weights) {
  if (weights.size() != problem.num_criteria()) {
    throw Error(ErrorCode::WeightDimensionMismatch,
                fmt::format("{} weights for {} criteria", weights.size(), problem.num_criteria()));
  }
}

}  // namespace

Matrix weighted_normalized(const DecisionProblem& problem, const WeightVector& weights) {
  check_dimension(problem, weights);
  Matrix v = vector_normalize(problem).values;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) *= weights[j];
  }
  return v;
}

IdealPoints ideal_points(const Matrix& weighted, const std::vector<Criterion>& criteria) {
  const std::size_t n = weighted.cols();
  IdealPoints ideal{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    double lo = weighted(0, j);
    double hi = weighted(0, j);
    for (std::size_t i = 1; i < weighted.rows(); ++i) {
      lo = std::min(lo, weighted(i, j));
      hi = std::max(hi, weighted(i, j));
    }
    const bool benefit = criteria[j].direction == Direction::Benefit;
    ideal.positive[j] = benefit ? hi : lo;
    ideal.negative[j] = benefit ? lo : hi;
  }
  return ideal;
}

Ranking topsis(const DecisionProblem& problem, const WeightVector& weights) {
  const Matrix v = weighted_normalized(problem, weights);
  const IdealPoints ideal = ideal_points(v, problem.criteria());
  const std::size_t m = v.rows();

  Ranking out;
  out.method = RankMethod::Topsis;
  out.scores.resize(m);
  out.separations.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t j = 0; j < v.cols(); ++j) {
      const double dp = v(i, j) - ideal.positive[j];
      const double dm = v(i, j) - ideal.negative[j];
      plus += dp * dp;
      minus += dm * dm;
    }
    Separation s{std::sqrt(plus), std::sqrt(minus)};
    const double denom = s.s_plus + s.s_minus;
    if (denom == 0.0) {
      out.scores[i] = 0.5;
      out.degenerate = true;
    } else {
      out.scores[i] = s.s_minus / denom;
    }
    out.separations[i] = s;
  }
  out.ranks = assign_ranks(out.scores);
  return out;
}

Ranking moora(const DecisionProblem& problem, const WeightVector& weights) {
  const Matrix v = weighted_normalized(problem, weights);
  const auto& criteria = problem.criteria();

  Ranking out;
  out.method = RankMethod::Moora;
  out.scores.resize(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    double y = 0.0;
    for (std::size_t j = 0; j < v.cols(); ++j) {
      y += criteria[j].direction == Direction::Benefit ? v(i, j) : -v(i, j);
    }
    out.scores[i] = y;
  }
  out.ranks = assign_ranks(out.scores);
  return out;
}

Ranking rank(RankMethod method, const DecisionProblem& problem, const WeightVector& weights) {
  return method == RankMethod::Topsis ? topsis(problem, weights) : moora(problem, weights);
}

}  // namespace mcdm
