#include <gtest/gtest.h>

#include "robustopt/closed_form.hpp"
#include "robustopt/synthetic.hpp"

using namespace robustopt;
using namespace robustopt::synthetic;

TEST(Generate, EquationThreeMatrix) {
  const int labels[] = {1, -1, 1};
  const auto prob = generate_from_labels(labels);
  ASSERT_EQ(prob.X.rows(), 3);
  ASSERT_EQ(prob.X.cols(), 18);
  Matrix expected = Matrix::Zero(3, 18);
  expected.row(0).head(4) << 1, 1, 1, 1;
  expected.row(1).head(3) << -1, 1, 1;
  expected.row(1).segment(8, 5).setOnes();
  expected.row(2).head(3) << 1, 1, 1;
  expected(2, 13) = 1;
  EXPECT_EQ(prob.X, expected);
  EXPECT_EQ(prob.n_plus, 2u);
  EXPECT_EQ(prob.n_minus, 1u);
}

TEST(Generate, RowSumsAndShape) {
  const auto prob = generate(1, 1);
  EXPECT_EQ(prob.X.rows(), 2);
  EXPECT_EQ(prob.X.cols(), 13);
  EXPECT_DOUBLE_EQ(prob.X.row(0).sum(), 4.0);
  EXPECT_DOUBLE_EQ(prob.X.row(1).sum(), 6.0);  // -1 + 1 + 1 + five ones
  EXPECT_DOUBLE_EQ(prob.X.row(1).cwiseAbs().sum(), 8.0);
}

TEST(Generate, RowsIndependentAndDiagonal) {
  for (std::size_t np = 1; np <= 4; ++np) {
    for (std::size_t nm = 1; nm <= 4; ++nm) {
      const auto prob = generate(np, nm);
      EXPECT_EQ(numerical_rank(prob.X), prob.n());
      const Matrix G = prob.X * prob.X.transpose();
      for (std::size_t i = 0; i < prob.n(); ++i) {
        EXPECT_EQ(G(i, i), prob.label(i) > 0 ? 4.0 : 8.0);
      }
    }
  }
}

TEST(Generate, RejectsEmptyClass) {
  EXPECT_THROW(generate(0, 1), std::invalid_argument);
  EXPECT_THROW(generate(2, 0), std::invalid_argument);
  const int bad[] = {1, 1};
  EXPECT_THROW(generate_from_labels(bad), std::invalid_argument);
  const int weird[] = {1, 0, -1};
  EXPECT_THROW(generate_from_labels(weird), std::invalid_argument);
}

TEST(GenerateRandom, AllPositiveFailsAfterRetries) {
  EXPECT_THROW(generate_random(4, 1.0, 7), std::runtime_error);
}

TEST(GenerateRandom, Deterministic) {
  const auto a = generate_random(10, 0.7, 42);
  const auto b = generate_random(10, 0.7, 42);
  EXPECT_EQ(a.X, b.X);
  EXPECT_EQ(a.labels, b.labels);
}

TEST(GenerateRandom, LabelFrequency) {
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto prob = generate_random(200, 0.7, seed);
    total += static_cast<double>(prob.n_plus) / 200.0;
  }
  EXPECT_NEAR(total / 100.0, 0.7, 0.1);
}

TEST(KernelMatrix, EntryTable) {
  Matrix k11(2, 2);
  k11 << 4, 1, 1, 8;
  EXPECT_EQ(kernel_matrix(generate(1, 1)), k11);
  const int labels[] = {1, -1, 1};
  Matrix k21(3, 3);
  k21 << 4, 1, 3, 1, 8, 1, 3, 1, 4;
  EXPECT_EQ(kernel_matrix(generate_from_labels(labels)), k21);
}

TEST(KernelMatrix, MatchesDirectProduct) {
  const auto prob = generate_random(12, 0.6, 3);
  EXPECT_LE((kernel_matrix(prob) - prob.X * prob.X.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TestPoint, ScoresAgainstClosedForms) {
  const auto prob = generate(1, 1);
  const auto ada = closed_form::adaptive_solution(prob, 2.0);
  EXPECT_DOUBLE_EQ(ada.w.dot(make_test_point(prob, 1).x), 6.0);
  EXPECT_DOUBLE_EQ(ada.w.dot(make_test_point(prob, -1).x), 2.0);
  const auto sgd = closed_form::min_norm_solution(prob);
  EXPECT_NEAR(sgd.w.dot(make_test_point(prob, 1).x), 22.0 / 31.0, 1e-14);
  EXPECT_THROW(make_test_point(prob, 0), std::invalid_argument);
}

TEST(AccumulateRow, MatchesDenseRow) {
  const auto prob = generate(2, 3);
  for (std::size_t i = 0; i < prob.n(); ++i) {
    Vector acc = Vector::Zero(prob.X.cols());
    accumulate_row(acc, i, prob.label(i), 2.5);
    EXPECT_EQ(acc, 2.5 * prob.X.row(i).transpose());
  }
}
