#pragma once

#include <string_view>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

enum class WeightMethod { Entropy, StdDev, Manual, Equal };

std::string_view to_string(WeightMethod m);

struct EntropyDetail {
  double entropy = 0.0;     // e_j in [0, 1]
  double divergence = 0.0;  // d_j = 1 - e_j
};

struct WeightReport {
  WeightMethod method = WeightMethod::Equal;
  WeightVector weights{std::vector<double>{1.0}};
  std::vector<EntropyDetail> entropy_detail;  // Entropy only
  std::vector<double> sigma;                  // StdDev only
  bool fallback = false;  // every criterion was uninformative; equal weights returned
};

/// Shannon-entropy weights over column proportions, k = 1 / ln m, 0 ln 0 = 0.
/// A constant column has e_j = 1 exactly. If every column is constant the
/// result is 1/n per criterion with `fallback` set.
WeightReport entropy_weights(const DecisionProblem& problem);

/// Weights proportional to the population standard deviation of each
/// direction-aware min-max normalized column.
WeightReport stddev_weights(const DecisionProblem& problem);

/// Normalized `fixed_weight` of each criterion. Throws MissingFixedWeight or AllZeroWeights.
WeightReport manual_weights(const DecisionProblem& problem);

WeightReport equal_weights(const DecisionProblem& problem);

WeightReport compute_weights(WeightMethod method, const DecisionProblem& problem);

}  // namespace mcdm
