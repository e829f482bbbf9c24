#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "robustopt/closed_form.hpp"
#include "robustopt/robust_loss.hpp"

using namespace robustopt;
using namespace robustopt::robust_loss;

namespace {

RobustLossSpec random_spec(int n, int d, double eps, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Matrix X(n, d);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) X(i, j) = g(rng);
    y(i) = g(rng) > 0 ? 1.0 : -1.0;
  }
  return make_spec(X, y, eps);
}

Vector random_vec(int d, std::mt19937& rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = scale * g(rng);
  return v;
}

Vector fd_gradient(const RobustLossSpec& spec, const Vector& w) {
  Vector out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    Vector a = w, b = w;
    a(i) += 1e-6;
    b(i) -= 1e-6;
    out(i) = (loss(spec, a) - loss(spec, b)) / 2e-6;
  }
  return out;
}

}  // namespace

TEST(Loss, OriginIsHalfN) {
  const auto spec = make_spec(synthetic::generate(3, 2), 0.7);
  EXPECT_DOUBLE_EQ(loss(spec, Vector::Zero(spec.dim())), 2.5);
}

TEST(Loss, PerSampleForm) {
  std::mt19937 rng(1);
  const auto spec = random_spec(5, 4, 0.6, 2);
  for (int k = 0; k < 20; ++k) {
    const Vector w = random_vec(4, rng);
    const Vector r = spec.X * w - spec.y;
    double alt = 0.0;
    for (int i = 0; i < 5; ++i) alt += 0.5 * std::pow(std::abs(r(i)) + spec.epsilon * w.norm(), 2);
    EXPECT_NEAR(loss(spec, w), alt, 1e-10 * std::max(1.0, alt));
    const auto t = loss_terms(spec, w);
    EXPECT_NEAR(t.total, t.squared + t.coupling + t.ridge, 1e-12 * std::max(1.0, t.total));
  }
}

TEST(Loss, SmallEpsilonApproachesLeastSquares) {
  std::mt19937 rng(3);
  const auto spec = random_spec(4, 3, 1e-9, 4);
  const Vector w = random_vec(3, rng);
  EXPECT_NEAR(loss(spec, w), 0.5 * (spec.X * w - spec.y).squaredNorm(), 1e-7);
  EXPECT_LE((gradient(spec, w) - spec.X.transpose() * (spec.X * w - spec.y)).norm(), 1e-6);
  EXPECT_LE((hessian(spec, w) - spec.X.transpose() * spec.X).norm(), 1e-6);
}

TEST(Loss, Errors) {
  const auto spec = random_spec(3, 2, 0.5, 5);
  EXPECT_THROW(loss(spec, Vector::Zero(3)), DimensionError);
  EXPECT_THROW(make_spec(spec.X, spec.y, 0.0), std::invalid_argument);
  EXPECT_THROW(make_spec(spec.X, Vector::Ones(2), 1.0), DimensionError);
}

TEST(Signature, OriginCellAndInterpolant) {
  const auto prob = synthetic::generate(2, 1);
  const auto spec = make_spec(prob, 0.5);
  EXPECT_EQ(signature(spec, Vector::Zero(spec.dim())).s, -prob.labels);
  const Vector w = closed_form::min_norm_solution(prob).w;
  EXPECT_EQ(signature(spec, w).s, Vector::Ones(3));
  EXPECT_FALSE(is_smooth_point(spec, w));
  EXPECT_EQ(tied_indices(spec, w).size(), 3u);
}

TEST(Signature, StableInsideCell) {
  std::mt19937 rng(8);
  const auto spec = random_spec(4, 3, 0.5, 9);
  for (int k = 0; k < 20; ++k) {
    const Vector w = random_vec(3, rng);
    const Vector r = spec.X * w - spec.y;
    double dist = 1e300;
    for (int i = 0; i < 4; ++i) dist = std::min(dist, std::abs(r(i)) / spec.X.row(i).norm());
    const Vector dir = random_vec(3, rng).normalized();
    EXPECT_EQ(signature(spec, w).s, signature(spec, w + 0.5 * dist * dir).s);
  }
}

TEST(Signature, Code) {
  Signature s{Vector(3)};
  s.s << 1, -1, 1;
  EXPECT_EQ(signature_code(s), 0b101u);
}

TEST(Gradient, FiniteDifferences) {
  std::mt19937 rng(10);
  for (int t = 0; t < 10; ++t) {
    const auto spec = random_spec(4, 6, 0.3 + 0.1 * t, 100 + t);
    const Vector w = random_vec(6, rng);
    const Vector g = gradient(spec, w);
    EXPECT_LE((g - fd_gradient(spec, w)).norm() / std::max(1.0, g.norm()), 1e-5);
  }
}

TEST(Gradient, NonSmoothPointsThrow) {
  const auto prob = synthetic::generate(1, 1);
  const auto spec = make_spec(prob, 0.5);
  EXPECT_THROW(gradient(spec, Vector::Zero(spec.dim())), NonSmoothPointError);
  EXPECT_THROW(gradient(spec, closed_form::min_norm_solution(prob).w), NonSmoothPointError);
  EXPECT_THROW(hessian(spec, Vector::Zero(spec.dim())), NonSmoothPointError);
}

TEST(Gradient, NonzeroAlongMinNormRay) {
  const auto prob = synthetic::generate(1, 1);
  const auto spec = make_spec(prob, 1.0);
  const Vector wls = min_norm_least_squares(prob.X, prob.labels);
  for (double t : {0.05, 0.2, 0.5}) EXPECT_GT(gradient(spec, t * wls).norm(), 1e-6);
}

TEST(AnySubgradient, AgreesWithGradientWhenSmooth) {
  std::mt19937 rng(12);
  const auto spec = random_spec(3, 5, 0.4, 13);
  const Vector w = random_vec(5, rng);
  EXPECT_LE((any_subgradient(spec, w) - gradient(spec, w)).norm(), 1e-12);
  EXPECT_LE((any_subgradient(spec, Vector::Zero(5)) + spec.X.transpose() * spec.y).norm(), 1e-12);
}

TEST(Hessian, FiniteDifferencesAndPsd) {
  std::mt19937 rng(14);
  const auto spec = random_spec(4, 5, 0.8, 15);
  for (int k = 0; k < 5; ++k) {
    const Vector w = random_vec(5, rng);
    const Matrix H = hessian(spec, w);
    Matrix fd(5, 5);
    for (int i = 0; i < 5; ++i) {
      Vector a = w, b = w;
      a(i) += 1e-5;
      b(i) -= 1e-5;
      fd.col(i) = (gradient(spec, a) - gradient(spec, b)) / 2e-5;
    }
    EXPECT_LE((H - fd).norm() / std::max(1.0, H.norm()), 1e-4);
    for (int p = 0; p < 100; ++p) {
      const Vector v = random_vec(5, rng).normalized();
      EXPECT_GE(v.dot(H * v), -1e-8);
    }
  }
}

TEST(Hessian, StrictlyConvexOutsideOriginCell) {
  const auto prob = synthetic::generate(1, 1);
  const auto spec = make_spec(prob, 1.0);
  // positive residual on both samples: s = (+1, +1) != -y
  Vector w = 2.0 * min_norm_least_squares(prob.X, prob.labels);
  w(0) += 0.1;
  const auto sig = signature(spec, w).s;
  ASSERT_NE(sig, -prob.labels);
  EXPECT_GT(min_symmetric_eigenvalue(hessian(spec, w)), 0.0);
}

TEST(CurvatureProbe, MatchesHessianAndSplits) {
  std::mt19937 rng(16);
  const auto spec = random_spec(3, 4, 0.5, 17);
  const Vector w = random_vec(4, rng);
  const Vector v = random_vec(4, rng).normalized();
  const auto p = curvature_probe(spec, w, v);
  EXPECT_NEAR(p.value, v.dot(hessian(spec, w) * v), 1e-10);
  EXPECT_NEAR(p.value, p.term1 + p.term2, 1e-10);
  EXPECT_GE(p.term2, 0.0);

  EXPECT_NEAR(curvature_probe(spec, w, w.normalized()).term2, 0.0, 1e-12);
  Vector orth = v - v.dot(w.normalized()) * w.normalized();
  EXPECT_GT(curvature_probe(spec, w, orth.normalized()).term2, 0.0);
  EXPECT_THROW(curvature_probe(spec, w, 2.0 * v), std::invalid_argument);
}

TEST(Feasibility, MinNormInterpolantBelowAndAboveThreshold) {
  const auto prob = synthetic::generate(1, 1);
  const Vector w = closed_form::min_norm_solution(prob).w;
  const double theta = std::sqrt(434.0) / 18.0;

  const auto below = subgradient_feasibility(make_spec(prob, 0.5), w, 1e-9);
  EXPECT_TRUE(below.is_stationary);
  const Vector witness = min_norm_gradzero_witness(prob, 0.5);
  EXPECT_LE(witness.cwiseAbs().maxCoeff(), 1.0);
  EXPECT_NEAR(witness(0), -9.0 / std::sqrt(434.0), 1e-12);
  EXPECT_NEAR(witness(1), 5.0 / std::sqrt(434.0), 1e-12);

  EXPECT_FALSE(subgradient_feasibility(make_spec(prob, 1.01 * theta), w, 1e-9).is_stationary);
  EXPECT_GT(min_norm_gradzero_witness(prob, 1.01 * theta).cwiseAbs().maxCoeff(), 1.0);
}

TEST(Feasibility, Origin) {
  const auto prob = synthetic::generate(1, 1);
  const Vector zero = Vector::Zero(13);
  const double pull = (prob.X.transpose() * prob.labels).norm();
  const double eps = 0.5 * pull / 2.0;
  const auto small = subgradient_feasibility(make_spec(prob, eps), zero, 1e-9);
  EXPECT_TRUE(small.at_origin);
  EXPECT_FALSE(small.is_stationary);
  EXPECT_NEAR(small.residual, pull - 2.0 * eps, 1e-9);
  EXPECT_TRUE(subgradient_feasibility(make_spec(prob, 1.01 * pull / 2.0), zero, 1e-9).is_stationary);
}

TEST(Feasibility, SmoothPointMatchesGradientNorm) {
  std::mt19937 rng(18);
  const auto spec = random_spec(3, 4, 0.5, 19);
  const Vector w = random_vec(4, rng);
  const auto f = subgradient_feasibility(spec, w, 1e-9);
  EXPECT_FALSE(f.is_stationary);
  EXPECT_NEAR(f.residual, gradient(spec, w).norm(), 1e-9);
}

TEST(Convexity, SyntheticCases) {
  const auto prob = synthetic::generate(1, 1);
  const double theta = std::sqrt(31.0 / 14.0);
  const auto c2 = classify_convexity(make_spec(prob, 1.0));
  EXPECT_EQ(c2.id, ConvexityCaseId::two_segments);
  ASSERT_TRUE(c2.threshold.has_value());
  EXPECT_NEAR(*c2.threshold, theta, 1e-12);
  ASSERT_EQ(c2.segments.size(), 2u);
  EXPECT_EQ(classify_convexity(make_spec(prob, theta)).id, ConvexityCaseId::one_segment);
  EXPECT_EQ(classify_convexity(make_spec(prob, 2.0)).id, ConvexityCaseId::strict_above_threshold);
}

TEST(Convexity, InconsistentSystem) {
  Matrix X(2, 2);
  X << 1, 2, 1, 2;
  Vector y(2);
  y << 1, -1;
  const auto c = classify_convexity(make_spec(X, y, 0.5));
  EXPECT_EQ(c.id, ConvexityCaseId::inconsistent_strict);
  EXPECT_FALSE(c.threshold.has_value());
  EXPECT_GT(c.least_squares_residual, 1.0);
}

TEST(ZeroCurvature, CaseTwoDirections) {
  const auto prob = synthetic::generate(1, 1);
  const auto spec = make_spec(prob, 1.0);
  const auto dirs = zero_curvature_directions(spec);
  ASSERT_EQ(dirs.size(), 2u);
  const Vector wls = min_norm_least_squares(prob.X, prob.labels);
  const Vector b0 = nullspace_basis(prob.X).front();
  for (const Vector& v : dirs) {
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    const Vector u = v - spec.epsilon * wls;
    EXPECT_NEAR(u.norm(), std::sqrt(17.0 / 31.0), 1e-12);
    EXPECT_NEAR(std::abs(u.dot(b0)), u.norm(), 1e-12);
    for (double t : {0.1, 0.5, 0.9}) {
      const Vector w = t * v;
      EXPECT_LE(std::abs(curvature_probe(spec, w, v).value), 1e-8);
      EXPECT_GE(gradient(spec, w).norm(), 1e-6);
    }
  }
}

TEST(ZeroCurvature, CaseThreeAndOutside) {
  const auto prob = synthetic::generate(1, 1);
  const auto spec = make_spec(prob, std::sqrt(31.0 / 14.0));
  const auto dirs = zero_curvature_directions(spec);
  ASSERT_EQ(dirs.size(), 1u);
  const Vector wls = min_norm_least_squares(prob.X, prob.labels);
  EXPECT_LE((dirs[0] - wls.normalized()).norm(), 1e-12);
  EXPECT_LE(std::abs(curvature_probe(spec, 0.3 * dirs[0], dirs[0]).value), 1e-8);
  EXPECT_THROW(zero_curvature_directions(make_spec(prob, 2.0)), std::logic_error);
}

TEST(ZeroCurvature, CaseFourProbesStrictlyPositiveInOriginCell) {
  const auto prob = synthetic::generate(1, 1);
  const auto spec = make_spec(prob, 2.0);
  std::mt19937 rng(20);
  double worst = 1e300;
  int probes = 0;
  while (probes < 10000) {
    const Vector w = random_vec(13, rng, 0.05);
    if (signature(spec, w).s != -prob.labels || !is_smooth_point(spec, w)) continue;
    const Vector v = random_vec(13, rng).normalized();
    worst = std::min(worst, curvature_probe(spec, w, v).value);
    ++probes;
  }
  EXPECT_GT(worst, 0.0);
}

TEST(Threshold, OneOneAndImbalance) {
  const auto t = theorem4_threshold(1, 1);
  EXPECT_NEAR(t.oracle, std::sqrt(434.0) / 18.0, 1e-13);
  EXPECT_NEAR(t.printed, std::sqrt(469.0) / 18.0, 1e-13);
  EXPECT_FALSE(t.printed_matches_oracle);
  EXPECT_DOUBLE_EQ(t.sufficient_bound, 1.0);
  EXPECT_NEAR(theorem4_threshold(60, 20).oracle, 0.5, 0.05);
  EXPECT_DOUBLE_EQ(imbalance_bound(3.0), 0.5);
  EXPECT_DOUBLE_EQ(imbalance_bound(1.0 / 3.0), 0.5);
  EXPECT_THROW(imbalance_bound(0.0), std::invalid_argument);
}
