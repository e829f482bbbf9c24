#include "robustopt/synthetic.hpp"

#include <random>
#include <string>
#include <vector>

namespace robustopt::synthetic {

namespace {

int check_label(int label) {
  if (label != 1 && label != -1) {
    throw std::invalid_argument("labels must be +1 or -1, got " + std::to_string(label));
  }
  return label;
}

}  // namespace

void accumulate_row(Vector& out, std::size_t i, int label, double coeff) {
  check_label(label);
  const auto off = static_cast<Eigen::Index>(block_offset(i));
  if (out.size() < off + static_cast<Eigen::Index>(kBlockWidth)) {
    throw DimensionError("accumulate_row: output vector too short for sample " + std::to_string(i));
  }
  out(0) += coeff * label;
  out(1) += coeff;
  out(2) += coeff;
  if (label == 1) {
    out(off) += coeff;
  } else {
    out.segment(off, kBlockWidth).array() += coeff;
  }
}

SyntheticProblem generate_from_labels(std::span<const int> labels) {
  SyntheticProblem prob;
  const std::size_t n = labels.size();
  prob.labels.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const int y = check_label(labels[i]);
    prob.labels(static_cast<Eigen::Index>(i)) = y;
    (y == 1 ? prob.n_plus : prob.n_minus) += 1;
  }
  if (prob.n_plus == 0 || prob.n_minus == 0) {
    throw std::invalid_argument("synthetic problem needs at least one sample of each class (n_plus=" +
                                std::to_string(prob.n_plus) + ", n_minus=" + std::to_string(prob.n_minus) +
                                ")");
  }

  const auto d = static_cast<Eigen::Index>(feature_dimension(n));
  prob.X = Matrix::Zero(static_cast<Eigen::Index>(n), d);
  Vector row(d);
  for (std::size_t i = 0; i < n; ++i) {
    row.setZero();
    accumulate_row(row, i, labels[i], 1.0);
    prob.X.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return prob;
}

SyntheticProblem generate(std::size_t n_plus, std::size_t n_minus) {
  if (n_plus == 0 || n_minus == 0) {
    throw std::invalid_argument("generate: n_plus and n_minus must both be >= 1");
  }
  std::vector<int> labels(n_plus, 1);
  labels.insert(labels.end(), n_minus, -1);
  return generate_from_labels(labels);
}

SyntheticProblem generate_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p > 0.5 && p <= 1.0)) throw std::invalid_argument("generate_random: p must lie in (0.5, 1]");
  if (n < 2) throw std::invalid_argument("generate_random: n must be >= 2");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution positive(p);
  std::vector<int> labels(n);
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    std::size_t n_plus = 0;
    for (auto& y : labels) {
      y = positive(rng) ? 1 : -1;
      n_plus += (y == 1);
    }
    if (n_plus > 0 && n_plus < n) {
      SyntheticProblem prob = generate_from_labels(labels);
      prob.p = p;
      prob.resamples = attempt;
      return prob;
    }
  }
  throw std::runtime_error("generate_random: a class was empty after " + std::to_string(kMaxResampleAttempts) +
                           " draws (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

Matrix kernel_matrix(const SyntheticProblem& prob) {
  const auto n = static_cast<Eigen::Index>(prob.n());
  Matrix K(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool same = prob.labels(i) == prob.labels(j);
      if (i == j) {
        K(i, j) = prob.labels(i) > 0 ? 4.0 : 8.0;
      } else {
        K(i, j) = same ? 3.0 : 1.0;
      }
    }
  }
  return K;
}

TestPoint make_test_point(std::size_t dim, int y_test) {
  check_label(y_test);
  if (dim < kSharedFeatures) throw DimensionError("make_test_point: dimension must be >= 3");
  TestPoint t;
  t.y = y_test;
  t.x = Vector::Zero(static_cast<Eigen::Index>(dim));
  t.x(0) = y_test;
  t.x(1) = 1.0;
  t.x(2) = 1.0;
  return t;
}

}  // namespace robustopt::synthetic
