#include "mcdm/weighting.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mcdm/normalize.hpp"

namespace mcdm {

std::string_view to_string(WeightMethod m) {
  switch (m) {
    case WeightMethod::Entropy: return "entropy";
    case WeightMethod::StdDev: return "stddev";
    case WeightMethod::Manual: return "manual";
    case WeightMethod::Equal: return "equal";
  }
  return "unknown";
}

namespace {

std::vector<double> uniform(std::size_t n) { return std::vector<double>(n, 1.0 / static_cast<double>(n)); }

bool is_constant(const Matrix& x, std::size_t j) {
  for (std::size_t i = 1; i < x.rows(); ++i) {
    if (x(i, j) != x(0, j)) return false;
  }
  return true;
}

// Normalizes dispersion scores into weights, falling back to 1/n when all vanish.
WeightVector weights_from(const std::vector<double>& dispersion, bool& fallback) {
  double total = 0.0;
  for (double d : dispersion) total += d;
  fallback = total <= 0.0;
  if (fallback) return WeightVector(uniform(dispersion.size()));
  std::vector<double> w(dispersion.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = dispersion[j] / total;
  return WeightVector(std::move(w));
}

}  // namespace

WeightReport entropy_weights(const DecisionProblem& problem) {
  const Matrix& x = problem.matrix();
  const Matrix p = sum_proportion(problem).values;
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const double k = 1.0 / std::log(static_cast<double>(m));

  WeightReport report;
  report.method = WeightMethod::Entropy;
  report.entropy_detail.resize(n);
  std::vector<double> divergence(n);
  for (std::size_t j = 0; j < n; ++j) {
    double e = 1.0;
    if (!is_constant(x, j)) {
      double h = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (p(i, j) > 0.0) h -= p(i, j) * std::log(p(i, j));
      }
      e = std::clamp(k * h, 0.0, 1.0);
    }
    report.entropy_detail[j] = {e, 1.0 - e};
    divergence[j] = 1.0 - e;
  }
  report.weights = weights_from(divergence, report.fallback);
  return report;
}

WeightReport stddev_weights(const DecisionProblem& problem) {
  const Matrix z = minmax_directed(problem).values;
  const std::size_t m = z.rows();
  const std::size_t n = z.cols();

  WeightReport report;
  report.method = WeightMethod::StdDev;
  report.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += z(i, j);
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) ss += (z(i, j) - mean) * (z(i, j) - mean);
    report.sigma[j] = std::sqrt(ss / static_cast<double>(m));
  }
  report.weights = weights_from(report.sigma, report.fallback);
  return report;
}

WeightReport manual_weights(const DecisionProblem& problem) {
  const auto& criteria = problem.criteria();
  std::vector<double> raw(criteria.size());
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (!criteria[j].fixed_weight) {
      throw Error(ErrorCode::MissingFixedWeight,
                  fmt::format("criterion {} ('{}') has no weight", j, criteria[j].name));
    }
    raw[j] = *criteria[j].fixed_weight;
  }
  WeightReport report;
  report.method = WeightMethod::Manual;
  report.weights = WeightVector::normalized(std::move(raw));
  return report;
}

WeightReport equal_weights(const DecisionProblem& problem) {
  WeightReport report;
  report.method = WeightMethod::Equal;
  report.weights = WeightVector(uniform(problem.num_criteria()));
  return report;
}

WeightReport compute_weights(WeightMethod method, const DecisionProblem& problem) {
  switch (method) {
    case WeightMethod::Entropy: return entropy_weights(problem);
    case WeightMethod::StdDev: return stddev_weights(problem);
    case WeightMethod::Manual: return manual_weights(problem);
    case WeightMethod::Equal: return equal_weights(problem);
  }
  return equal_weights(problem);
}

}  // namespace mcdm
