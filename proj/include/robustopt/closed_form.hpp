// Limit points of adaptive and non-adaptive optimizers on the synthetic
// problem, in closed form.
#pragma once

#include <cstddef>
#include <span>

#include "robustopt/linalg.hpp"
#include "robustopt/synthetic.hpp"

namespace robustopt::closed_form {

/// Dual coefficients of the minimum-norm interpolant w = X^T alpha, where
/// alpha_i = alpha_plus for positive samples and alpha_minus for negative.
struct AlphaCoefficients {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  double denominator = 0.0;  // 15 n+ + 3 n- + 8 n+ n- + 5
};

/// Solves (3n+ + 1) a+ + n- a- = 1,  n+ a+ + (3n- + 5) a- = -1.
AlphaCoefficients alpha_coefficients(std::size_t n_plus, std::size_t n_minus);

/// Per-sample dual vector alpha in the problem's label order.
Vector alpha_vector(const synthetic::SyntheticProblem& prob);

enum class SolutionKind { adaptive, min_norm };

struct ClosedFormSolution {
  Vector w;
  SolutionKind kind = SolutionKind::min_norm;
  double tau = 1.0;
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
};

/// Sign pattern v reached by adaptive methods: 1 on the three shared
/// features, y_i on each nonzero coordinate of sample i's block.
Vector adaptive_direction(std::span<const int> labels);

ClosedFormSolution adaptive_solution(const synthetic::SyntheticProblem& prob, double tau = 1.0);
/// Same, for positives-then-negatives ordering without building X.
ClosedFormSolution adaptive_solution(std::size_t n_plus, std::size_t n_minus, double tau = 1.0);

/// w = X^T alpha, built from the problem's design matrix.
ClosedFormSolution min_norm_solution(const synthetic::SyntheticProblem& prob);
/// Same vector assembled row by row for positives-then-negatives ordering;
/// usable at sample counts where X itself would not fit in memory.
ClosedFormSolution min_norm_solution(std::size_t n_plus, std::size_t n_minus);

/// Signed score <w, x_test> on a fresh test point.
///
/// adaptive: tau (y_test + 2).
/// min_norm: y_test (n+ a+ - n- a-) + 2 (n+ a+ + n- a-), which reduces to
/// (15n+ + 8n+n- - n-) / D for y_test = 1 and (5n+ - 8n+n- - 3n-) / D for -1.
double test_margin(const ClosedFormSolution& sol, int y_test, std::size_t n_plus, std::size_t n_minus);

}  // namespace robustopt::closed_form
