#include <gtest/gtest.h>

#include "robustopt/closed_form.hpp"

using namespace robustopt;
using namespace robustopt::closed_form;

TEST(Alpha, OneOne) {
  const auto a = alpha_coefficients(1, 1);
  EXPECT_NEAR(a.alpha_plus, 9.0 / 31.0, 1e-15);
  EXPECT_NEAR(a.alpha_minus, -5.0 / 31.0, 1e-15);
  EXPECT_DOUBLE_EQ(a.denominator, 31.0);
}

TEST(Alpha, TwoOne) {
  const auto a = alpha_coefficients(2, 1);
  EXPECT_NEAR(a.alpha_plus, 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(a.alpha_minus, -1.0 / 6.0, 1e-15);
}

TEST(Alpha, SolvesKernelSystem) {
  for (std::size_t np = 1; np <= 12; ++np) {
    for (std::size_t nm = 1; nm <= 12; ++nm) {
      const auto prob = synthetic::generate(np, nm);
      const Vector alpha = alpha_vector(prob);
      EXPECT_LE((synthetic::kernel_matrix(prob) * alpha - prob.labels).norm(), 1e-10);
      EXPECT_LE((alpha - synthetic::kernel_matrix(prob).ldlt().solve(prob.labels)).norm(), 1e-10);
    }
  }
}

TEST(Alpha, RejectsZeroCounts) { EXPECT_THROW(alpha_coefficients(0, 3), std::invalid_argument); }

TEST(Adaptive, NormAndScores) {
  const auto prob = synthetic::generate(1, 1);
  const auto sol = adaptive_solution(prob);
  EXPECT_DOUBLE_EQ(sol.w.squaredNorm(), 9.0);
  EXPECT_DOUBLE_EQ(test_margin(sol, 1, 1, 1), 3.0);
  EXPECT_DOUBLE_EQ(test_margin(sol, -1, 1, 1), 1.0);
  EXPECT_EQ(prob.X * sol.w, 4.0 * prob.labels);
}

TEST(Adaptive, CountFormMatchesProblemForm) {
  const auto prob = synthetic::generate(3, 2);
  EXPECT_EQ(adaptive_solution(prob, 1.5).w, adaptive_solution(3, 2, 1.5).w);
  EXPECT_THROW(adaptive_solution(prob, 0.0), std::invalid_argument);
}

TEST(MinNorm, InterpolatesAndHasKernelNorm) {
  const auto prob = synthetic::generate(1, 1);
  const auto sol = min_norm_solution(prob);
  EXPECT_LE((prob.X * sol.w - prob.labels).norm(), 1e-12);
  EXPECT_NEAR(sol.w.squaredNorm(), 14.0 / 31.0, 1e-14);
  EXPECT_NEAR(sol.w.squaredNorm(), prob.labels.dot(alpha_vector(prob)), 1e-14);
  EXPECT_NEAR(sol.w.lpNorm<1>(), 56.0 / 31.0, 1e-14);
}

TEST(MinNorm, MatchesPseudoInverse) {
  const auto prob = synthetic::generate(4, 3);
  EXPECT_LE((min_norm_solution(prob).w - min_norm_least_squares(prob.X, prob.labels)).norm(), 1e-12);
  EXPECT_LE((min_norm_solution(4, 3).w - min_norm_solution(prob).w).norm(), 1e-14);
}

TEST(TestMargin, OneOne) {
  const auto sol = min_norm_solution(1, 1);
  EXPECT_NEAR(test_margin(sol, 1, 1, 1), 22.0 / 31.0, 1e-15);
  EXPECT_NEAR(test_margin(sol, -1, 1, 1), -6.0 / 31.0, 1e-15);
}

TEST(TestMargin, ClassifiesCorrectlyOnGrid) {
  for (std::size_t np = 1; np <= 50; ++np) {
    for (std::size_t nm = 1; nm <= 50; ++nm) {
      const auto sol = min_norm_solution(np, nm);
      EXPECT_GT(test_margin(sol, 1, np, nm), 0.0);
      EXPECT_LT(test_margin(sol, -1, np, nm), 0.0);
    }
  }
}

TEST(TestMargin, AgreesWithDotProduct) {
  const auto prob = synthetic::generate(3, 5);
  const auto sol = min_norm_solution(prob);
  for (int y : {1, -1}) {
    EXPECT_NEAR(test_margin(sol, y, 3, 5), sol.w.dot(synthetic::make_test_point(prob, y).x), 1e-14);
  }
}
