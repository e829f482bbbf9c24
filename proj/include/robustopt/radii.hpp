// Robustness radii of linear classifiers.
//
// For a homogeneous linear classifier sign(<w, x>) the smallest Lp
// perturbation that reaches the decision boundary has size
// |<w, x>| / ||w||_q with q the dual norm of p. That margin oracle is the
// reference every closed-form radius in this module is checked against.
#pragma once

#include <cstddef>
#include <vector>

#include "robustopt/closed_form.hpp"
#include "robustopt/linalg.hpp"

namespace robustopt::radii {

/// Relative tolerance for declaring a printed formula equal to the oracle.
inline constexpr double kMatchTolerance = 1e-9;
inline constexpr int kMaxBisectionSteps = 200;

struct MarginResult {
  double radius = 0.0;
  Vector witness;  // minimal perturbation; <w, x + witness> == 0
};

/// Throws std::domain_error if <w, x> == 0.
MarginResult margin_radius(const Vector& w, const Vector& x, Norm norm);

/// Independent route to the same number: bisect on the budget, applying the
/// best linear attack at each trial budget and checking whether the sign of
/// the score flips. Throws ConvergenceError past kMaxBisectionSteps.
double bisection_attack_radius(const Vector& w, const Vector& x, Norm norm, double tol);

struct PrintedRadii {
  double l2 = 0.0;
  double linf = 0.0;
  /// Standing assumption n+ > n-/5 used by the min-norm derivation.
  bool assumption_holds = true;
};

/// Closed forms for the adaptive solution at a positive test point:
/// L2 sqrt(9n+ + 1125n- + 27) / (25n- + n+ + 3), Linf 3 / (3 + n+ + 5n-).
PrintedRadii theorem1_radii(std::size_t n_plus, std::size_t n_minus);

/// Closed forms for the min-norm solution at a test point of class y_test.
PrintedRadii theorem2_radii(std::size_t n_plus, std::size_t n_minus, int y_test);

/// Margin oracle on a fresh synthetic test point.
double oracle_radius(const closed_form::ClosedFormSolution& sol, int y_test, Norm norm);

struct RadiusReport {
  closed_form::SolutionKind solution = closed_form::SolutionKind::min_norm;
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  int y_test = 1;
  Norm norm = Norm::L2;
  double radius_printed = 0.0;
  double radius_oracle = 0.0;
  bool matches_oracle = false;
  bool assumption_holds = true;
};

RadiusReport adaptive_report(std::size_t n_plus, std::size_t n_minus, Norm norm);
RadiusReport min_norm_report(std::size_t n_plus, std::size_t n_minus, int y_test, Norm norm);

/// All reports over (n+, n-) in [1, grid]^2: adaptive at y = 1 and min-norm
/// at y = +-1, each for L2 and Linf.
std::vector<RadiusReport> radius_grid(std::size_t grid);

struct AsymptoticRow {
  std::size_t n = 0;  // n+ = n- = n
  double adaptive_l2 = 0.0;
  double adaptive_linf = 0.0;
  double min_norm_l2_pos = 0.0;
  double min_norm_l2_neg = 0.0;
  double min_norm_linf_pos = 0.0;
  double min_norm_linf_neg = 0.0;
};

/// Oracle radii at n = 10, 20, 40, ... up to max_n (max_n itself always
/// included). Requires max_n >= 10.
std::vector<AsymptoticRow> asymptotics_report(std::size_t max_n);
AsymptoticRow asymptotic_row(std::size_t n);

}  // namespace robustopt::radii
