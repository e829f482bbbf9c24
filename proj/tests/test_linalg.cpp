#include <gtest/gtest.h>

#include <random>

#include "robustopt/linalg.hpp"
#include "robustopt/synthetic.hpp"

using namespace robustopt;

namespace {

Matrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Matrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = g(rng);
  return A;
}

}  // namespace

TEST(Norms, ThreeFourExamples) {
  Vector v(2);
  v << 3, -4;
  EXPECT_DOUBLE_EQ(norm(v, Norm::L2), 5.0);
  EXPECT_DOUBLE_EQ(norm(v, Norm::L1), 7.0);
  EXPECT_DOUBLE_EQ(norm(v, Norm::Linf), 4.0);
}

TEST(Norms, DualPairs) {
  EXPECT_EQ(dual(Norm::L2), Norm::L2);
  EXPECT_EQ(dual(Norm::Linf), Norm::L1);
  EXPECT_EQ(dual(Norm::L1), Norm::Linf);
  EXPECT_EQ(parse_norm("LINF"), Norm::Linf);
  EXPECT_THROW(parse_norm("l3"), std::invalid_argument);
}

TEST(MinNormLeastSquares, IdentityCase) {
  Vector y(2);
  y << 1, -1;
  EXPECT_TRUE(min_norm_least_squares(Matrix::Identity(2, 2), y).isApprox(y, 1e-14));
}

TEST(MinNormLeastSquares, SymmetricUnderdetermined) {
  Matrix X(1, 2);
  X << 1, 1;
  Vector y(1);
  y << 2;
  const Vector w = min_norm_least_squares(X, y);
  EXPECT_NEAR(w(0), 1.0, 1e-14);
  EXPECT_NEAR(w(1), 1.0, 1e-14);
}

TEST(MinNormLeastSquares, SyntheticNormIs14Over31) {
  const auto prob = synthetic::generate(1, 1);
  const Vector w = min_norm_least_squares(prob.X, prob.labels);
  EXPECT_NEAR(w.squaredNorm(), 14.0 / 31.0, 1e-13);
  EXPECT_LE((prob.X * w - prob.labels).norm(), 1e-12);
}

TEST(MinNormLeastSquares, RankDeficientMatchesPseudoInverse) {
  Matrix X = random_matrix(4, 6, 3);
  X.row(3) = X.row(0) + X.row(1);
  const Vector y = random_matrix(4, 1, 4).col(0);
  const Vector expected = X.completeOrthogonalDecomposition().pseudoInverse() * y;
  EXPECT_LE((min_norm_least_squares(X, y) - expected).norm(), 1e-10);
  EXPECT_EQ(numerical_rank(X), 3u);
}

TEST(MinNormLeastSquares, ShapeMismatch) {
  EXPECT_THROW(min_norm_least_squares(Matrix::Identity(2, 2), Vector::Ones(3)), DimensionError);
}

TEST(ProjectRowspace, Examples) {
  Matrix X(1, 2);
  X << 1, 0;
  Vector w(2);
  w << 3, 4;
  const Vector p = project_rowspace(X, w);
  EXPECT_NEAR(p(0), 3.0, 1e-15);
  EXPECT_NEAR(p(1), 0.0, 1e-15);
  EXPECT_TRUE(project_rowspace(X, p).isApprox(p));
  EXPECT_THROW(project_rowspace(X, Vector::Ones(3)), DimensionError);
}

TEST(ProjectRowspace, ResidualOrthogonalToRows) {
  const Matrix X = random_matrix(3, 7, 11);
  const Vector w = random_matrix(7, 1, 12).col(0);
  const Vector r = w - project_rowspace(X, w);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(X.row(i).dot(r), 0.0, 1e-12);
}

TEST(NullspaceBasis, Examples) {
  EXPECT_TRUE(nullspace_basis(Matrix::Identity(2, 2)).empty());
  Matrix X(1, 2);
  X << 1, 0;
  const auto basis = nullspace_basis(X);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_NEAR(std::abs(basis[0](1)), 1.0, 1e-15);
  EXPECT_NEAR(basis[0](0), 0.0, 1e-15);
}

TEST(NullspaceBasis, SyntheticHasElevenOrthonormalVectors) {
  const auto prob = synthetic::generate(1, 1);
  const auto basis = nullspace_basis(prob.X);
  ASSERT_EQ(basis.size(), 11u);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_LE((prob.X * basis[i]).norm(), 1e-12);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      EXPECT_NEAR(basis[i].dot(basis[j]), i == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(NullspaceBasis, Deterministic) {
  const Matrix X = random_matrix(2, 5, 21);
  const auto a = nullspace_basis(X);
  const auto b = nullspace_basis(X);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(RequireFinite, RejectsNan) {
  Vector v = Vector::Ones(2);
  v(1) = std::nan("");
  EXPECT_THROW(require_finite(v, "v"), std::invalid_argument);
}
