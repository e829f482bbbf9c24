#include "robustopt/radii.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "robustopt/synthetic.hpp"

namespace robustopt::radii {

namespace {

double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

// Best attack of size eps against sign(<w, x>): move straight against the
// dual-norm maximizing direction.
Vector best_linear_perturbation(const Vector& w, double score, Norm norm, double eps) {
  const double toward = -sign_of(score);
  switch (norm) {
    case Norm::L2:
      return (toward * eps / w.norm()) * w;
    case Norm::Linf:
      return toward * eps * w.unaryExpr([](double c) { return c > 0.0 ? 1.0 : (c < 0.0 ? -1.0 : 0.0); });
    case Norm::L1: {
      Eigen::Index arg = 0;
      w.cwiseAbs().maxCoeff(&arg);
      Vector d = Vector::Zero(w.size());
      d(arg) = toward * eps * sign_of(w(arg));
      return d;
    }
  }
  return Vector::Zero(w.size());
}

bool attack_flips(const Vector& w, const Vector& x, double score, Norm norm, double eps) {
  const double attacked = w.dot(x + best_linear_perturbation(w, score, norm, eps));
  return score * attacked <= 0.0;
}

void require_same_dim(const Vector& w, const Vector& x, const char* who) {
  if (w.size() != x.size()) {
    throw DimensionError(std::string(who) + ": w has length " + std::to_string(w.size()) + ", x has length " +
                         std::to_string(x.size()));
  }
}

bool close(double a, double b) { return std::abs(a - b) <= kMatchTolerance * std::max(1.0, std::abs(b)); }

}  // namespace

MarginResult margin_radius(const Vector& w, const Vector& x, Norm norm) {
  require_same_dim(w, x, "margin_radius");
  const double score = w.dot(x);
  if (score == 0.0) throw std::domain_error("margin_radius: point lies on the decision boundary");

  const double dual_norm = robustopt::norm(w, dual(norm));
  MarginResult out;
  out.radius = std::abs(score) / dual_norm;
  switch (norm) {
    case Norm::L2:
      out.witness = (-score / w.squaredNorm()) * w;
      break;
    case Norm::Linf:
      out.witness = best_linear_perturbation(w, score, norm, out.radius);
      break;
    case Norm::L1: {
      Eigen::Index arg = 0;
      w.cwiseAbs().maxCoeff(&arg);
      out.witness = Vector::Zero(w.size());
      out.witness(arg) = -score / w(arg);
      break;
    }
  }
  return out;
}

double bisection_attack_radius(const Vector& w, const Vector& x, Norm norm, double tol) {
  require_same_dim(w, x, "bisection_attack_radius");
  if (!(tol > 0.0)) throw std::invalid_argument("bisection_attack_radius: tol must be positive");
  const double score = w.dot(x);
  if (score == 0.0) throw std::domain_error("bisection_attack_radius: point lies on the decision boundary");
  if (w.isZero(0.0)) throw std::domain_error("bisection_attack_radius: zero weight vector cannot be attacked");

  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (!attack_flips(w, x, score, norm, hi)) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 1000) throw ConvergenceError("bisection_attack_radius: no flipping budget found");
  }

  for (int step = 0; hi - lo > tol; ++step) {
    if (step >= kMaxBisectionSteps) {
      throw ConvergenceError("bisection_attack_radius: bracket still " + std::to_string(hi - lo) + " wide after " +
                             std::to_string(kMaxBisectionSteps) + " steps");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    (attack_flips(w, x, score, norm, mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

PrintedRadii theorem1_radii(std::size_t n_plus, std::size_t n_minus) {
  if (n_plus == 0 || n_minus == 0) throw std::invalid_argument("theorem1_radii: counts must be >= 1");
  const double np = static_cast<double>(n_plus);
  const double nm = static_cast<double>(n_minus);
  PrintedRadii r;
  r.l2 = std::sqrt(9.0 * np + 1125.0 * nm + 27.0) / (25.0 * nm + np + 3.0);
  r.linf = 3.0 / (3.0 + np + 5.0 * nm);
  return r;
}

PrintedRadii theorem2_radii(std::size_t n_plus, std::size_t n_minus, int y_test) {
  if (n_plus == 0 || n_minus == 0) throw std::invalid_argument("theorem2_radii: counts must be >= 1");
  if (y_test != 1 && y_test != -1) throw std::invalid_argument("theorem2_radii: y_test must be +1 or -1");
  const double np = static_cast<double>(n_plus);
  const double nm = static_cast<double>(n_minus);
  const double numerator =
      y_test == 1 ? 15.0 * np + 8.0 * np * nm - nm : -5.0 * np + 8.0 * np * nm + 3.0 * nm;
  const double l2_den = std::sqrt(64.0 * np * np * nm * nm + 160.0 * np * np * nm + 75.0 * np * np +
                                  32.0 * np * nm * nm + 60.0 * np * nm + 70.0 * np + 3.0 * nm * nm + 5.0 * nm);
  const double linf_den = 20.0 * np + 32.0 * np * nm + 4.0 * nm;
  PrintedRadii r;
  r.l2 = numerator / l2_den;
  r.linf = numerator / linf_den;
  r.assumption_holds = 5.0 * np > nm;
  return r;
}

double oracle_radius(const closed_form::ClosedFormSolution& sol, int y_test, Norm norm) {
  const auto test = synthetic::make_test_point(static_cast<std::size_t>(sol.w.size()), y_test);
  return margin_radius(sol.w, test.x, norm).radius;
}

RadiusReport adaptive_report(std::size_t n_plus, std::size_t n_minus, Norm norm) {
  const PrintedRadii printed = theorem1_radii(n_plus, n_minus);
  const auto sol = closed_form::adaptive_solution(n_plus, n_minus);
  RadiusReport r;
  r.solution = closed_form::SolutionKind::adaptive;
  r.n_plus = n_plus;
  r.n_minus = n_minus;
  r.y_test = 1;
  r.norm = norm;
  r.radius_printed = norm == Norm::Linf ? printed.linf : printed.l2;
  r.radius_oracle = oracle_radius(sol, 1, norm);
  r.matches_oracle = close(r.radius_printed, r.radius_oracle);
  return r;
}

RadiusReport min_norm_report(std::size_t n_plus, std::size_t n_minus, int y_test, Norm norm) {
  const PrintedRadii printed = theorem2_radii(n_plus, n_minus, y_test);
  const auto sol = closed_form::min_norm_solution(n_plus, n_minus);
  RadiusReport r;
  r.solution = closed_form::SolutionKind::min_norm;
  r.n_plus = n_plus;
  r.n_minus = n_minus;
  r.y_test = y_test;
  r.norm = norm;
  r.radius_printed = norm == Norm::Linf ? printed.linf : printed.l2;
  r.radius_oracle = oracle_radius(sol, y_test, norm);
  r.matches_oracle = close(r.radius_printed, r.radius_oracle);
  r.assumption_holds = printed.assumption_holds;
  return r;
}

std::vector<RadiusReport> radius_grid(std::size_t grid) {
  std::vector<RadiusReport> rows;
  for (std::size_t np = 1; np <= grid; ++np) {
    for (std::size_t nm = 1; nm <= grid; ++nm) {
      for (Norm norm : {Norm::L2, Norm::Linf}) {
        rows.push_back(adaptive_report(np, nm, norm));
        rows.push_back(min_norm_report(np, nm, 1, norm));
        rows.push_back(min_norm_report(np, nm, -1, norm));
      }
    }
  }
  return rows;
}

AsymptoticRow asymptotic_row(std::size_t n) {
  const auto ada = closed_form::adaptive_solution(n, n);
  const auto sgd = closed_form::min_norm_solution(n, n);
  AsymptoticRow row;
  row.n = n;
  row.adaptive_l2 = oracle_radius(ada, 1, Norm::L2);
  row.adaptive_linf = oracle_radius(ada, 1, Norm::Linf);
  row.min_norm_l2_pos = oracle_radius(sgd, 1, Norm::L2);
  row.min_norm_l2_neg = oracle_radius(sgd, -1, Norm::L2);
  row.min_norm_linf_pos = oracle_radius(sgd, 1, Norm::Linf);
  row.min_norm_linf_neg = oracle_radius(sgd, -1, Norm::Linf);
  return row;
}

std::vector<AsymptoticRow> asymptotics_report(std::size_t max_n) {
  if (max_n < 10) throw std::invalid_argument("asymptotics_report: max_n must be >= 10");
  std::vector<AsymptoticRow> rows;
  for (std::size_t n = 10; n < max_n; n *= 2) rows.push_back(asymptotic_row(n));
  rows.push_back(asymptotic_row(max_n));
  return rows;
}

}  // namespace robustopt::radii
