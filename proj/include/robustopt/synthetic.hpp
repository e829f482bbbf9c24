// The synthetic linear-classification problem.
//
// Sample i (0-based) has feature vector
//
//   x_i = (y_i, 1, 1, 0, ..., 0, b_i, 0, ...)
//
// where b_i is a block of five coordinates starting at column 3 + 5i that
// equals (1, 0, 0, 0, 0) for a positive sample and (1, 1, 1, 1, 1) for a
// negative one. Only the first d = 3 + 5n coordinates are materialized.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "robustopt/linalg.hpp"

namespace robustopt::synthetic {

inline constexpr std::size_t kSharedFeatures = 3;
inline constexpr std::size_t kBlockWidth = 5;
inline constexpr int kMaxResampleAttempts = 1000;

constexpr std::size_t feature_dimension(std::size_t n) { return kSharedFeatures + kBlockWidth * n; }
constexpr std::size_t block_offset(std::size_t i) { return kSharedFeatures + kBlockWidth * i; }

/// Adds coeff * x_i to `out` without materializing X. `out` must have
/// length at least block_offset(i) + 5.
void accumulate_row(Vector& out, std::size_t i, int label, double coeff);

struct SyntheticProblem {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  Vector labels;  // +1 / -1, generation order
  Matrix X;       // n x (3 + 5n)
  double p = 1.0;  // label probability when drawn by generate_random
  int resamples = 0;  // redraws needed because a class came out empty

  std::size_t n() const { return n_plus + n_minus; }
  std::size_t dim() const { return static_cast<std::size_t>(X.cols()); }
  int label(std::size_t i) const { return labels(static_cast<Eigen::Index>(i)) > 0 ? 1 : -1; }
};

struct TestPoint {
  Vector x;
  int y = 1;
};

/// Problem with the positives first, then the negatives.
SyntheticProblem generate(std::size_t n_plus, std::size_t n_minus);

/// Problem with an explicit label order. Labels must be +1 or -1 and both
/// classes must be present.
SyntheticProblem generate_from_labels(std::span<const int> labels);

/// Labels drawn i.i.d. with P(y = +1) = p using a seeded 64-bit Mersenne
/// twister. Draws with an empty class are repeated; after
/// kMaxResampleAttempts failed draws std::runtime_error is thrown.
SyntheticProblem generate_random(std::size_t n, double p, std::uint64_t seed);

/// K = X X^T from the label pattern alone: 4 / 8 on the diagonal for
/// positive / negative samples, 3 between equal labels, 1 between opposite.
Matrix kernel_matrix(const SyntheticProblem& prob);

/// A fresh test point. Its unique block lies beyond the training
/// dimension, so inside the first `dim` coordinates it is (y, 1, 1, 0, ...).
TestPoint make_test_point(std::size_t dim, int y_test);
inline TestPoint make_test_point(const SyntheticProblem& prob, int y_test) {
  return make_test_point(prob.dim(), y_test);
}

}  // namespace robustopt::synthetic
