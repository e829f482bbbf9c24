// Grid export of the robust loss and its pieces over a 2-D weight space.
#pragma once

#include <cstddef>
#include <vector>

#include "robustopt/robust_loss.hpp"

namespace robustopt::landscape {

struct GridSpec {
  double min = -2.0;
  double max = 2.0;
  std::size_t steps = 81;  // points per axis
};

struct GridPoint {
  double w1 = 0.0;
  double w2 = 0.0;
  double l1_term = 0.0;    // ||Xw - y||_1
  double eps_term = 0.0;   // eps ||w|| ||Xw - y||_1
  double full_loss = 0.0;
  unsigned long long signature_code = 0;
};

/// Row-major over (w1, w2): index i * steps + j has w1 = t_i, w2 = t_j.
struct Landscape {
  GridSpec grid;
  std::vector<GridPoint> points;
  const GridPoint& at(std::size_t i, std::size_t j) const { return points[i * grid.steps + j]; }
};

/// Throws std::invalid_argument unless d == 2, steps >= 3 and min < max.
Landscape export_grid(const robust_loss::RobustLossSpec& spec, const GridSpec& grid);

/// Small 2-D problem whose hyperplanes cross inside [-2, 2]^2.
robust_loss::RobustLossSpec demo_2d(double epsilon);

enum class Surface { l1_term, eps_term, full_loss };

/// Most negative second difference f(a) - 2 f(m) + f(b) over all grid rows
/// and columns; >= -tol means discretely convex along the axes.
double min_second_difference(const Landscape& land, Surface surface);

}  // namespace robustopt::landscape
