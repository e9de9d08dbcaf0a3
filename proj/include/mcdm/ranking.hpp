#pragma once

#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

struct IdealPoints {
  std::vector<double> positive;
  std::vector<double> negative;
};

// Per-criterion extremes of a weighted normalized matrix, honoring direction.
IdealPoints ideal_points(const Matrix& weighted, const std::vector<Criterion>& criteria);

// v_ij = w_j * x_ij / ||x_.j||
Matrix weighted_normalized(const DecisionProblem& problem, const WeightVector& weights);

/// Closeness coefficient ranking. Ci = S- / (S+ + S-) with Euclidean separations from
/// the ideal points of the weighted vector-normalized matrix. If S+ + S- = 0 for an
/// alternative, its Ci is 0.5 and `degenerate` is set.
/// Throws WeightDimensionMismatch.
Ranking topsis(const DecisionProblem& problem, const WeightVector& weights);

/// Ratio-system score y_i = sum_benefit w_j r_ij - sum_cost w_j r_ij over the
/// vector-normalized matrix. Throws WeightDimensionMismatch.
Ranking moora(const DecisionProblem& problem, const WeightVector& weights);

Ranking rank(RankMethod method, const DecisionProblem& problem, const WeightVector& weights);

}  // namespace mcdm
