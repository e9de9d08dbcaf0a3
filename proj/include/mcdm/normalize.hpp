#pragma once

#include "mcdm/core.hpp"

namespace mcdm {

enum class NormScheme { VectorNorm, SumProportion, MinMaxDirected };

struct NormalizedMatrix {
  Matrix values;
  NormScheme scheme;
};

// r_ij = x_ij / sqrt(sum_i x_ij^2). Direction-agnostic.
NormalizedMatrix vector_normalize(const DecisionProblem& problem);

// p_ij = x_ij / sum_i x_ij. Direction-agnostic.
NormalizedMatrix sum_proportion(const DecisionProblem& problem);

// Benefit: (x - min) / (max - min); cost: (max - x) / (max - min).
// A constant column maps to zeros.
NormalizedMatrix minmax_directed(const DecisionProblem& problem);

}  // namespace mcdm
