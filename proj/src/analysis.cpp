#include "mcdm/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mcdm/ranking.hpp"

namespace mcdm {

namespace {

void check_permutation(std::span<const int> r, char which) {
  std::vector<bool> seen(r.size(), false);
  for (int v : r) {
    if (v < 1 || static_cast<std::size_t>(v) > r.size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::InvalidRanking,
                  fmt::format("ranking {} is not a permutation of 1..{}", which, r.size()));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace

RankComparison compare_ranks(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, fmt::format("rankings cover {} and {} alternatives", a.size(), b.size()));
  }
  if (a.size() < 2) throw Error(ErrorCode::InvalidRanking, "at least 2 alternatives are required");
  check_permutation(a, 'a');
  check_permutation(b, 'b');

  const std::size_t m = a.size();
  RankComparison out;
  out.rank_diffs.resize(m);
  long long d2 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    out.rank_diffs[i] = a[i] - b[i];
    d2 += static_cast<long long>(out.rank_diffs[i]) * out.rank_diffs[i];
  }
  const double md = static_cast<double>(m);
  out.spearman_rho = 1.0 - 6.0 * static_cast<double>(d2) / (md * (md * md - 1.0));

  long long concordant = 0;
  long long discordant = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) {
      const long long s = static_cast<long long>(a[i] - a[k]) * (b[i] - b[k]);
      if (s > 0) ++concordant;
      else if (s < 0) ++discordant;
    }
  }
  out.kendall_tau = static_cast<double>(concordant - discordant) / (md * (md - 1.0) / 2.0);

  const auto top_a = std::find(a.begin(), a.end(), 1) - a.begin();
  const auto top_b = std::find(b.begin(), b.end(), 1) - b.begin();
  out.agreed_top1 = top_a == top_b;
  return out;
}

RankComparison compare_rankings(const Ranking& a, const Ranking& b) { return compare_ranks(a.ranks, b.ranks); }

SensitivityReport weight_sensitivity(const DecisionProblem& problem, const WeightVector& weights,
                                     RankMethod method, double delta, std::size_t trials,
                                     std::uint64_t seed) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::InvalidDelta, fmt::format("delta {} outside [0, 1)", delta));
  }
  if (weights.size() != problem.num_criteria()) {
    throw Error(ErrorCode::WeightDimensionMismatch,
                fmt::format("{} weights for {} criteria", weights.size(), problem.num_criteria()));
  }

  SensitivityReport report;
  report.base_ranking = rank(method, problem, weights);
  report.perturbation_delta = delta;
  report.trials = trials;

  const auto& base = report.base_ranking.ranks;
  const std::size_t m = base.size();
  const std::size_t n = weights.size();
  const auto base_top = std::find(base.begin(), base.end(), 1) - base.begin();
  report.rank_range.resize(m);
  for (std::size_t i = 0; i < m; ++i) report.rank_range[i] = {base[i], base[i]};

  // delta = 0 reproduces the base weights exactly; skip renormalization round-off.
  std::size_t kept_top = delta == 0.0 ? trials : 0;
  const std::size_t perturbed_trials = delta == 0.0 ? 0 : trials;
  std::vector<double> w(n);
  for (std::size_t t = 0; t < perturbed_trials; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = SplitMix64::unit(seed, static_cast<std::uint64_t>(t * n + j));
      w[j] = weights[j] * (1.0 - delta + 2.0 * delta * u);
    }
    // A draw can only zero every weight if all base weights are zero, which WeightVector forbids.
    const Ranking trial = rank(method, problem, WeightVector::normalized(w));
    for (std::size_t i = 0; i < m; ++i) {
      report.rank_range[i].first = std::min(report.rank_range[i].first, trial.ranks[i]);
      report.rank_range[i].second = std::max(report.rank_range[i].second, trial.ranks[i]);
    }
    if (trial.ranks[static_cast<std::size_t>(base_top)] == 1) ++kept_top;
  }
  report.top1_stability =
      trials == 0 ? 1.0 : static_cast<double>(kept_top) / static_cast<double>(trials);
  return report;
}

}  // namespace mcdm
