#include <gtest/gtest.h>

#include <set>

#include "robustopt/landscape.hpp"

using namespace robustopt;
using namespace robustopt::landscape;

TEST(Landscape, GridLayoutAndValues) {
  const auto spec = demo_2d(0.5);
  const auto land = export_grid(spec, {-2.0, 2.0, 21});
  ASSERT_EQ(land.points.size(), 21u * 21u);
  const auto& p = land.at(3, 17);
  EXPECT_DOUBLE_EQ(p.w1, -2.0 + 3 * 0.2);
  EXPECT_DOUBLE_EQ(p.w2, -2.0 + 17 * 0.2);
  Vector w(2);
  w << p.w1, p.w2;
  EXPECT_NEAR(p.full_loss, robust_loss::loss(spec, w), 1e-12);
  EXPECT_NEAR(p.l1_term, (spec.X * w - spec.y).lpNorm<1>(), 1e-12);
  EXPECT_NEAR(p.eps_term, 0.5 * w.norm() * p.l1_term, 1e-12);
  EXPECT_EQ(p.signature_code, robust_loss::signature_code(robust_loss::signature(spec, w)));
}

TEST(Landscape, ConvexSurfacesAndNonConvexCoupling) {
  const auto land = export_grid(demo_2d(0.5), {});
  EXPECT_GE(min_second_difference(land, Surface::l1_term), -1e-9);
  EXPECT_GE(min_second_difference(land, Surface::full_loss), -1e-9);
  EXPECT_LT(min_second_difference(land, Surface::eps_term), -1e-6);
}

TEST(Landscape, SeveralSignatureCells) {
  const auto land = export_grid(demo_2d(0.5), {});
  std::set<unsigned long long> codes;
  for (const auto& p : land.points) codes.insert(p.signature_code);
  EXPECT_GE(codes.size(), 4u);
}

TEST(Landscape, Errors) {
  Matrix X = Matrix::Identity(3, 3);
  const auto spec = robust_loss::make_spec(X, Vector::Ones(3), 0.5);
  EXPECT_THROW(export_grid(spec, {}), std::invalid_argument);
  EXPECT_THROW(export_grid(demo_2d(0.5), {1.0, -1.0, 5}), std::invalid_argument);
  EXPECT_THROW(export_grid(demo_2d(0.5), {-1.0, 1.0, 2}), std::invalid_argument);
}
