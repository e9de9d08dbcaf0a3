#include "mcdm/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace mcdm {

NormalizedMatrix vector_normalize(const DecisionProblem& problem) {
  const Matrix& x = problem.matrix();
  Matrix r(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) sq += x(i, j) * x(i, j);
    const double norm = std::sqrt(sq);
    for (std::size_t i = 0; i < x.rows(); ++i) r(i, j) = x(i, j) / norm;
  }
  return {std::move(r), NormScheme::VectorNorm};
}

NormalizedMatrix sum_proportion(const DecisionProblem& problem) {
  const Matrix& x = problem.matrix();
  Matrix p(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) total += x(i, j);
    for (std::size_t i = 0; i < x.rows(); ++i) p(i, j) = x(i, j) / total;
  }
  return {std::move(p), NormScheme::SumProportion};
}

NormalizedMatrix minmax_directed(const DecisionProblem& problem) {
  const Matrix& x = problem.matrix();
  Matrix z(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double lo = x(0, j);
    double hi = x(0, j);
    for (std::size_t i = 1; i < x.rows(); ++i) {
      lo = std::min(lo, x(i, j));
      hi = std::max(hi, x(i, j));
    }
    const double span = hi - lo;
    if (span == 0.0) continue;  // constant column stays at zero
    const bool benefit = problem.criteria()[j].direction == Direction::Benefit;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      z(i, j) = benefit ? (x(i, j) - lo) / span : (hi - x(i, j)) / span;
    }
  }
  return {std::move(z), NormScheme::MinMaxDirected};
}

}  // namespace mcdm
