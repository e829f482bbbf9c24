#include "robustopt/closed_form.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace robustopt::closed_form {

namespace {

void require_counts(std::size_t n_plus, std::size_t n_minus) {
  if (n_plus == 0 || n_minus == 0) {
    throw std::invalid_argument("closed form needs n_plus >= 1 and n_minus >= 1");
  }
}

std::vector<int> canonical_labels(std::size_t n_plus, std::size_t n_minus) {
  std::vector<int> labels(n_plus, 1);
  labels.insert(labels.end(), n_minus, -1);
  return labels;
}

std::vector<int> labels_of(const synthetic::SyntheticProblem& prob) {
  std::vector<int> labels(prob.n());
  for (std::size_t i = 0; i < prob.n(); ++i) labels[i] = prob.label(i);
  return labels;
}

}  // namespace

AlphaCoefficients alpha_coefficients(std::size_t n_plus, std::size_t n_minus) {
  require_counts(n_plus, n_minus);
  const double np = static_cast<double>(n_plus);
  const double nm = static_cast<double>(n_minus);
  AlphaCoefficients a;
  a.denominator = 15.0 * np + 3.0 * nm + 8.0 * np * nm + 5.0;
  a.alpha_plus = (4.0 * nm + 5.0) / a.denominator;
  a.alpha_minus = -(4.0 * np + 1.0) / a.denominator;
  return a;
}

Vector alpha_vector(const synthetic::SyntheticProblem& prob) {
  const AlphaCoefficients a = alpha_coefficients(prob.n_plus, prob.n_minus);
  Vector alpha(static_cast<Eigen::Index>(prob.n()));
  for (std::size_t i = 0; i < prob.n(); ++i) {
    alpha(static_cast<Eigen::Index>(i)) = prob.label(i) == 1 ? a.alpha_plus : a.alpha_minus;
  }
  return alpha;
}

Vector adaptive_direction(std::span<const int> labels) {
  const std::size_t n = labels.size();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(synthetic::feature_dimension(n)));
  v.head(3).setOnes();
  for (std::size_t i = 0; i < n; ++i) {
    const auto off = static_cast<Eigen::Index>(synthetic::block_offset(i));
    if (labels[i] == 1) {
      v(off) = 1.0;
    } else if (labels[i] == -1) {
      v.segment(off, synthetic::kBlockWidth).setConstant(-1.0);
    } else {
      throw std::invalid_argument("adaptive_direction: labels must be +1 or -1");
    }
  }
  return v;
}

ClosedFormSolution adaptive_solution(const synthetic::SyntheticProblem& prob, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("adaptive_solution: tau must be positive");
  const auto labels = labels_of(prob);
  return {tau * adaptive_direction(labels), SolutionKind::adaptive, tau, prob.n_plus, prob.n_minus};
}

ClosedFormSolution adaptive_solution(std::size_t n_plus, std::size_t n_minus, double tau) {
  require_counts(n_plus, n_minus);
  if (!(tau > 0.0)) throw std::invalid_argument("adaptive_solution: tau must be positive");
  const auto labels = canonical_labels(n_plus, n_minus);
  return {tau * adaptive_direction(labels), SolutionKind::adaptive, tau, n_plus, n_minus};
}

ClosedFormSolution min_norm_solution(const synthetic::SyntheticProblem& prob) {
  const Vector alpha = alpha_vector(prob);
  return {prob.X.transpose() * alpha, SolutionKind::min_norm, 1.0, prob.n_plus, prob.n_minus};
}

ClosedFormSolution min_norm_solution(std::size_t n_plus, std::size_t n_minus) {
  const AlphaCoefficients a = alpha_coefficients(n_plus, n_minus);
  const std::size_t n = n_plus + n_minus;
  Vector w = Vector::Zero(static_cast<Eigen::Index>(synthetic::feature_dimension(n)));
  for (std::size_t i = 0; i < n; ++i) {
    const bool positive = i < n_plus;
    synthetic::accumulate_row(w, i, positive ? 1 : -1, positive ? a.alpha_plus : a.alpha_minus);
  }
  return {std::move(w), SolutionKind::min_norm, 1.0, n_plus, n_minus};
}

double test_margin(const ClosedFormSolution& sol, int y_test, std::size_t n_plus, std::size_t n_minus) {
  if (y_test != 1 && y_test != -1) throw std::invalid_argument("test_margin: y_test must be +1 or -1");
  if (sol.kind == SolutionKind::adaptive) return sol.tau * (y_test + 2);

  const AlphaCoefficients a = alpha_coefficients(n_plus, n_minus);
  const double np = static_cast<double>(n_plus);
  const double nm = static_cast<double>(n_minus);
  const double first = np * a.alpha_plus - nm * a.alpha_minus;
  const double shared = np * a.alpha_plus + nm * a.alpha_minus;
  return y_test * first + 2.0 * shared;
}

}  // namespace robustopt::closed_form
