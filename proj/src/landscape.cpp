#include "robustopt/landscape.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace robustopt::landscape {

namespace {

double value(const GridPoint& p, Surface s) {
  switch (s) {
    case Surface::l1_term:
      return p.l1_term;
    case Surface::eps_term:
      return p.eps_term;
    case Surface::full_loss:
      return p.full_loss;
  }
  return 0.0;
}

}  // namespace

Landscape export_grid(const robust_loss::RobustLossSpec& spec, const GridSpec& grid) {
  if (spec.dim() != 2) {
    throw std::invalid_argument("landscape export is 2-D only; problem has d = " + std::to_string(spec.dim()));
  }
  if (grid.steps < 3) throw std::invalid_argument("landscape: need at least 3 grid steps");
  if (!(grid.min < grid.max)) throw std::invalid_argument("landscape: grid min must be below grid max");

  Landscape land;
  land.grid = grid;
  land.points.reserve(grid.steps * grid.steps);
  const double h = (grid.max - grid.min) / static_cast<double>(grid.steps - 1);
  for (std::size_t i = 0; i < grid.steps; ++i) {
    for (std::size_t j = 0; j < grid.steps; ++j) {
      Vector w(2);
      w << grid.min + h * static_cast<double>(i), grid.min + h * static_cast<double>(j);
      const auto terms = robust_loss::loss_terms(spec, w);
      GridPoint p;
      p.w1 = w(0);
      p.w2 = w(1);
      p.l1_term = terms.l1;
      p.eps_term = terms.coupling;
      p.full_loss = terms.total;
      p.signature_code = robust_loss::signature_code(robust_loss::signature(spec, w));
      land.points.push_back(p);
    }
  }
  return land;
}

robust_loss::RobustLossSpec demo_2d(double epsilon) {
  Matrix X(3, 2);
  X << 1.0, 0.5,
       -0.5, 1.0,
       1.0, 1.0;
  Vector y(3);
  y << 1.0, -1.0, 0.5;
  return robust_loss::make_spec(X, y, epsilon);
}

double min_second_difference(const Landscape& land, Surface surface) {
  const std::size_t n = land.grid.steps;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      worst = std::min(worst, value(land.at(i, j - 1), surface) - 2.0 * value(land.at(i, j), surface) +
                                  value(land.at(i, j + 1), surface));
      worst = std::min(worst, value(land.at(j - 1, i), surface) - 2.0 * value(land.at(j, i), surface) +
                                  value(land.at(j + 1, i), surface));
    }
  }
  return worst;
}

}  // namespace robustopt::landscape
