#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "robustopt/attack.hpp"
#include "robustopt/closed_form.hpp"
#include "robustopt/radii.hpp"

using namespace robustopt;
using namespace robustopt::attack;

namespace {

std::vector<TestPoint> random_testset(int n, int d, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  std::vector<TestPoint> out;
  for (int i = 0; i < n; ++i) {
    TestPoint p;
    p.x.resize(d);
    for (int j = 0; j < d; ++j) p.x(j) = g(rng);
    p.y = g(rng) > 0 ? 1 : -1;
    out.push_back(p);
  }
  return out;
}

AttackConfig config(Norm norm, double eps) {
  AttackConfig cfg;
  cfg.norm = norm;
  cfg.epsilon = eps;
  return cfg;
}

}  // namespace

TEST(Nauc, Examples) {
  const std::vector<double> eps{0.0, 0.5, 1.0};
  const std::vector<double> ones{1.0, 1.0, 1.0};
  const std::vector<double> ramp{1.0, 0.5, 0.0};
  EXPECT_DOUBLE_EQ(nauc(eps, ones, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(nauc(eps, ramp, 1.0), 0.5);
  const std::vector<double> part{0.0, 0.5};
  const std::vector<double> flat{1.0, 1.0};
  EXPECT_DOUBLE_EQ(nauc(part, flat, 1.0), 1.0);
}

TEST(Nauc, Errors) {
  const std::vector<double> one{0.0};
  EXPECT_THROW(nauc(one, one, 1.0), std::invalid_argument);
  const std::vector<double> unsorted{0.5, 0.1};
  const std::vector<double> acc{1.0, 1.0};
  EXPECT_THROW(nauc(unsorted, acc, 1.0), std::invalid_argument);
  const std::vector<double> eps{0.0, 2.0};
  EXPECT_THROW(nauc(eps, acc, 1.0), std::invalid_argument);
}

TEST(ExactNauc, MinNormOneOne) {
  const auto sol = closed_form::min_norm_solution(1, 1);
  const double rp = radii::oracle_radius(sol, 1, Norm::L2);
  const double rm = radii::oracle_radius(sol, -1, Norm::L2);
  const std::vector<double> r{rp, rm};
  const double eps_max = 2.0 * std::max(rp, rm);
  EXPECT_NEAR(exact_nauc(r, eps_max), (rp + rm) / (2.0 * eps_max), 1e-15);
  const std::vector<double> capped{3.0, 0.0};
  EXPECT_DOUBLE_EQ(exact_nauc(capped, 1.0), 0.5);
}

TEST(Pgd, ZeroBudgetReportsCleanAccuracy) {
  const Vector w = Vector::Ones(4);
  const auto set = random_testset(40, 4, 1);
  const auto cfg = config(Norm::L2, 0.0);
  const std::vector<AttackConfig> suite{cfg};
  int correct = 0;
  for (const auto& p : set) correct += p.y * w.dot(p.x) > 0 ? 1 : 0;
  EXPECT_DOUBLE_EQ(robust_accuracy(LinearModel(w), set, suite), correct / 40.0);
}

TEST(Pgd, BreaksJustAboveRadiusAndNotBelow) {
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  for (Norm norm : {Norm::L2, Norm::Linf}) {
    for (int k = 0; k < 30; ++k) {
      Vector w(5), x(5);
      for (int i = 0; i < 5; ++i) {
        w(i) = g(rng);
        x(i) = g(rng);
      }
      const int y = w.dot(x) > 0 ? 1 : -1;
      const double r = radii::margin_radius(w, x, norm).radius;
      EXPECT_TRUE(pgd_attack(w, x, y, config(norm, 1.05 * r)).success);
      const auto safe = pgd_attack(w, x, y, config(norm, 0.95 * r));
      EXPECT_FALSE(safe.success);
      EXPECT_LE(norm == Norm::L2 ? (safe.adversarial_x - x).norm() : (safe.adversarial_x - x).cwiseAbs().maxCoeff(),
                0.95 * r * (1.0 + 1e-12));
    }
  }
}

TEST(Pgd, StaysInBudget) {
  const Vector w = Vector::Ones(3);
  Vector x(3);
  x << 5.0, 5.0, 5.0;
  for (Norm norm : {Norm::L2, Norm::Linf}) {
    auto cfg = config(norm, 0.7);
    cfg.restarts = 4;
    cfg.seed = 9;
    const auto r = pgd_attack(w, x, 1, cfg);
    EXPECT_FALSE(r.success);
    EXPECT_LE(robustopt::norm(r.adversarial_x - x, norm), 0.7 * (1.0 + 1e-12));
  }
}

TEST(Pgd, Errors) {
  const Vector w = Vector::Ones(3);
  EXPECT_THROW(pgd_attack(w, Vector::Ones(3), 1, config(Norm::L1, 0.1)), std::invalid_argument);
  EXPECT_THROW(pgd_attack(w, Vector::Ones(3), 1, config(Norm::L2, -0.1)), std::invalid_argument);
  EXPECT_THROW(pgd_attack(w, Vector::Ones(2), 1, config(Norm::L2, 0.1)), DimensionError);
  EXPECT_THROW(pgd_attack(w, Vector::Ones(3), 0, config(Norm::L2, 0.1)), std::invalid_argument);
  const std::vector<TestPoint> empty;
  const std::vector<AttackConfig> suite{config(Norm::L2, 0.1)};
  EXPECT_THROW(robust_accuracy(LinearModel(w), empty, suite), std::invalid_argument);
}

TEST(Pgd, DeterministicPerSeed) {
  const Vector w = Vector::Ones(6);
  const auto set = random_testset(30, 6, 4);
  auto cfg = config(Norm::Linf, 0.3);
  cfg.restarts = 3;
  cfg.seed = 42;
  const std::vector<AttackConfig> suite{cfg};
  EXPECT_DOUBLE_EQ(robust_accuracy(LinearModel(w), set, suite), robust_accuracy(LinearModel(w), set, suite));
}

TEST(Sweep, MonotoneAndCloseToExact) {
  std::mt19937 rng(6);
  std::normal_distribution<double> g;
  Vector w(5);
  for (int i = 0; i < 5; ++i) w(i) = g(rng);
  const auto set = random_testset(60, 5, 7);
  for (Norm norm : {Norm::L2, Norm::Linf}) {
    const double eps_max = default_eps_max(w, set, norm);
    const auto grid = uniform_grid(eps_max, 41);
    const std::vector<AttackTemplate> suite{{100, std::nullopt, 2, 1, AttackObjective::margin}};
    const auto c = sweep_curve(w, set, norm, grid, suite);
    ASSERT_EQ(c.acc_pgd.size(), grid.size());
    for (std::size_t i = 1; i < grid.size(); ++i) {
      EXPECT_LE(c.acc_pgd[i], c.acc_pgd[i - 1]);
      EXPECT_LE(c.acc_exact[i], c.acc_exact[i - 1]);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_GE(c.acc_pgd[i], c.acc_exact[i] - 1e-12);
    EXPECT_NEAR(c.nauc_pgd, c.nauc_exact, 0.05);
    EXPECT_GE(c.nauc_exact, 0.0);
    EXPECT_LE(c.nauc_exact, 1.0);
  }
}

TEST(Sweep, GridErrors) {
  const Vector w = Vector::Ones(2);
  const auto set = random_testset(3, 2, 8);
  const std::vector<AttackTemplate> suite{AttackTemplate{}};
  const std::vector<double> bad{0.0, 0.5, 0.5};
  EXPECT_THROW(sweep_curve(w, set, Norm::L2, bad, suite), std::invalid_argument);
  EXPECT_THROW(uniform_grid(0.0), std::invalid_argument);
}
