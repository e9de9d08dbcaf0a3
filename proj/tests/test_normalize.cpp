#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mcdm/normalize.hpp"
#include "oracle.hpp"

using namespace mcdm;

namespace {

DecisionProblem column(std::vector<double> values, Direction d = Direction::Benefit) {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    labels.push_back("A" + std::to_string(i + 1));
    rows.push_back({values[i]});
  }
  return build_problem({{"c", d, {}}}, labels, rows);
}

}  // namespace

TEST(VectorNormalize, PythagoreanColumn) {
  const auto r = vector_normalize(column({3, 4})).values;
  EXPECT_DOUBLE_EQ(r(0, 0), 0.6);
  EXPECT_DOUBLE_EQ(r(1, 0), 0.8);
}

TEST(VectorNormalize, DividesBySqrt14) {
  // 1/sqrt(14), 2/sqrt(14), 3/sqrt(14)
  const auto r = vector_normalize(column({1, 2, 3})).values;
  EXPECT_NEAR(r(0, 0), 0.267261, 1e-6);
  EXPECT_NEAR(r(1, 0), 0.534522, 1e-6);
  EXPECT_NEAR(r(2, 0), 0.801784, 1e-6);
  const auto scaled = vector_normalize(column({7.5, 15, 22.5})).values;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(scaled(i, 0), r(i, 0), 1e-15);
}

TEST(SumProportion, Examples) {
  auto p = sum_proportion(column({1, 2, 3})).values;
  EXPECT_DOUBLE_EQ(p(0, 0), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(p(1, 0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(p(2, 0), 0.5);
  p = sum_proportion(column({4, 4, 4})).values;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(p(i, 0), 1.0 / 3.0);
  p = sum_proportion(column({0, 5})).values;
  EXPECT_EQ(p(0, 0), 0.0);
  EXPECT_EQ(p(1, 0), 1.0);
}

TEST(MinMaxDirected, Examples) {
  auto z = minmax_directed(column({1, 2, 3})).values;
  EXPECT_EQ(z(0, 0), 0.0);
  EXPECT_EQ(z(1, 0), 0.5);
  EXPECT_EQ(z(2, 0), 1.0);
  z = minmax_directed(column({1, 2, 3}, Direction::Cost)).values;
  EXPECT_EQ(z(0, 0), 1.0);
  EXPECT_EQ(z(1, 0), 0.5);
  EXPECT_EQ(z(2, 0), 0.0);
  for (Direction d : {Direction::Benefit, Direction::Cost}) {
    z = minmax_directed(column({4, 4, 4}, d)).values;
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(z(i, 0), 0.0);
  }
}

TEST(Normalize, SchemeInvariantsOnRandomProblems) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = oracle::random_case(rng, dim(rng), dim(rng));
    const auto p = c.problem();
    const auto r = vector_normalize(p).values;
    const auto s = sum_proportion(p).values;
    const auto z = minmax_directed(p).values;

    auto scaled_case = c;
    auto affine_case = c;
    for (std::size_t j = 0; j < c.criteria.size(); ++j) {
      const double a = scale(rng);
      const double b = scale(rng);
      for (std::size_t i = 0; i < c.x.size(); ++i) {
        scaled_case.x[i][j] *= a;
        affine_case.x[i][j] = a * c.x[i][j] + b;
      }
    }
    const auto r2 = vector_normalize(scaled_case.problem()).values;
    const auto s2 = sum_proportion(scaled_case.problem()).values;
    const auto z2 = minmax_directed(affine_case.problem()).values;

    for (std::size_t j = 0; j < p.num_criteria(); ++j) {
      double norm = 0, total = 0, zmax = 0;
      for (std::size_t i = 0; i < p.num_alternatives(); ++i) {
        norm += r(i, j) * r(i, j);
        total += s(i, j);
        zmax = std::max(zmax, z(i, j));
        EXPECT_GE(r(i, j), 0.0);
        EXPECT_LE(r(i, j), 1.0);
        EXPECT_GE(s(i, j), 0.0);
        EXPECT_LE(s(i, j), 1.0);
        EXPECT_GE(z(i, j), 0.0);
        EXPECT_LE(z(i, j), 1.0);
        EXPECT_NEAR(r2(i, j), r(i, j), 1e-12);
        EXPECT_NEAR(s2(i, j), s(i, j), 1e-12);
        EXPECT_NEAR(z2(i, j), z(i, j), 1e-9);
        for (std::size_t k = 0; k < p.num_alternatives(); ++k) {
          // Benefit columns keep order under min-max, cost columns reverse it.
          if (c.x[i][j] < c.x[k][j]) {
            EXPECT_LE(r(i, j), r(k, j));
            if (c.benefit[j]) EXPECT_LE(z(i, j), z(k, j));
            else EXPECT_GE(z(i, j), z(k, j));
          }
        }
      }
      EXPECT_NEAR(norm, 1.0, 1e-12);
      EXPECT_NEAR(total, 1.0, 1e-12);
      EXPECT_EQ(zmax, 1.0);
    }
  }
}
