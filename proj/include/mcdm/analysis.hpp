#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

struct RankComparison {
  double spearman_rho = 1.0;
  double kendall_tau = 1.0;
  std::vector<int> rank_diffs;  // rank_a - rank_b
  bool agreed_top1 = true;
};

// Both inputs must be tie-free permutations of 1..m with m >= 2.
// Throws LengthMismatch or InvalidRanking.
RankComparison compare_ranks(std::span<const int> a, std::span<const int> b);
RankComparison compare_rankings(const Ranking& a, const Ranking& b);

// SplitMix64 in counter mode: draw k of stream `seed` is mix(seed + (k + 1) * golden).
// Fixed here so sensitivity reports reproduce bit for bit on every platform.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = seed + (counter + 1) * kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) from the top 53 bits.
  static double unit(std::uint64_t seed, std::uint64_t counter) noexcept {
    return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
  }
};

struct SensitivityReport {
  Ranking base_ranking;
  double perturbation_delta = 0.0;
  std::size_t trials = 0;
  double top1_stability = 1.0;
  std::vector<std::pair<int, int>> rank_range;  // (min_rank, max_rank), base rank included
};

/// Re-ranks `trials` times with each weight scaled by an independent factor drawn
/// uniformly from [1 - delta, 1 + delta] and renormalized. Trial t, criterion j uses
/// draw t * n + j of the seeded stream. Throws InvalidDelta or WeightDimensionMismatch.
SensitivityReport weight_sensitivity(const DecisionProblem& problem, const WeightVector& weights,
                                     RankMethod method, double delta, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace mcdm
