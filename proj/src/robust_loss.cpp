#include "robustopt/robust_loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "robustopt/closed_form.hpp"

namespace robustopt::robust_loss {

namespace {

void require_dim(const RobustLossSpec& spec, const Vector& w, const char* who) {
  if (static_cast<std::size_t>(w.size()) != spec.dim()) {
    throw DimensionError(std::string(who) + ": w has length " + std::to_string(w.size()) + ", expected " +
                         std::to_string(spec.dim()));
  }
}

Vector signs_of(const Vector& r) {
  return r.unaryExpr([](double v) { return v >= 0.0 ? 1.0 : -1.0; });
}

// Throws unless w is inside a cell and away from the origin.
void require_smooth(const RobustLossSpec& spec, const Vector& w, const char* who) {
  if (w.norm() <= kOriginTolerance) {
    throw NonSmoothPointError(std::string(who) + ": w is at the origin; use subgradient_feasibility");
  }
  const auto ties = tied_indices(spec, w);
  if (!ties.empty()) {
    throw NonSmoothPointError(std::string(who) + ": w lies on hyperplane " + std::to_string(ties.front()) +
                              " (and " + std::to_string(ties.size() - 1) +
                              " others); use subgradient_feasibility");
  }
}

struct BoxSolution {
  Vector z;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

Vector clip_unit(const Vector& z) { return z.cwiseMax(-1.0).cwiseMin(1.0); }

// KKT violation of min 1/2 ||b + C z||^2 over the box [-1, 1]^k.
double kkt_violation(const Matrix& C, const Vector& b, const Vector& z) {
  const Vector g = C.transpose() * (b + C * z);
  return (z - clip_unit(z - g)).norm();
}

// Fix the coordinates sitting on a bound, solve the rest exactly.
std::optional<Vector> polish(const Matrix& C, const Vector& b, const Vector& z) {
  const Vector g = C.transpose() * (b + C * z);
  std::vector<Eigen::Index> free;
  Vector fixed = z;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    const bool at_upper = z(j) >= 1.0 - 1e-9 && g(j) <= 0.0;
    const bool at_lower = z(j) <= -1.0 + 1e-9 && g(j) >= 0.0;
    if (at_upper) {
      fixed(j) = 1.0;
    } else if (at_lower) {
      fixed(j) = -1.0;
    } else {
      free.push_back(j);
      fixed(j) = 0.0;
    }
  }
  if (free.empty()) return fixed;

  Matrix Cf(C.rows(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) Cf.col(static_cast<Eigen::Index>(k)) = C.col(free[k]);
  const Vector rhs = -(b + C * fixed);
  const Vector zf = Eigen::CompleteOrthogonalDecomposition<Matrix>(Cf).solve(rhs);
  if ((zf.array().abs() > 1.0 + 1e-12).any()) return std::nullopt;
  for (std::size_t k = 0; k < free.size(); ++k) {
    fixed(free[k]) = std::clamp(zf(static_cast<Eigen::Index>(k)), -1.0, 1.0);
  }
  return fixed;
}

// Accelerated projected gradient with adaptive restart, polished every so
// often by an exact solve on the current free set.
BoxSolution solve_box_least_squares(const Matrix& C, const Vector& b, double kkt_tol) {
  constexpr int kMaxIterations = 200000;
  constexpr int kPolishEvery = 25;

  BoxSolution out;
  const Eigen::Index k = C.cols();
  out.z = Vector::Zero(k);
  const double lipschitz = std::max(Eigen::SelfAdjointEigenSolver<Matrix>(C.transpose() * C, Eigen::EigenvaluesOnly)
                                        .eigenvalues()
                                        .maxCoeff(),
                                    std::numeric_limits<double>::min());
  const double step = 1.0 / lipschitz;

  Vector z = out.z;
  Vector z_prev = z;
  Vector y = z;
  double t = 1.0;
  double f_prev = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= kMaxIterations; ++it) {
    const Vector g = C.transpose() * (b + C * y);
    z_prev = z;
    z = clip_unit(y - step * g);
    const double f = 0.5 * (b + C * z).squaredNorm();
    if (f > f_prev) {
      // restart momentum
      t = 1.0;
      y = z;
    } else {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      y = z + ((t - 1.0) / t_next) * (z - z_prev);
      t = t_next;
    }
    f_prev = f;

    if (it % kPolishEvery == 0 || it == kMaxIterations) {
      if (auto p = polish(C, b, z); p && kkt_violation(C, b, *p) <= kkt_tol) {
        out.z = *p;
        out.iterations = it;
        out.converged = true;
        break;
      }
      if (kkt_violation(C, b, z) <= kkt_tol) {
        out.z = z;
        out.iterations = it;
        out.converged = true;
        break;
      }
    }
    out.z = z;
    out.iterations = it;
  }
  out.residual = (b + C * out.z).norm();
  return out;
}

}  // namespace

RobustLossSpec make_spec(Matrix X, Vector y, double epsilon) {
  if (X.rows() != y.size()) {
    throw DimensionError("robust loss spec: X has " + std::to_string(X.rows()) + " rows but y has length " +
                         std::to_string(y.size()));
  }
  if (X.rows() == 0 || X.cols() == 0) throw DimensionError("robust loss spec: empty design matrix");
  require_finite(X, "robust loss spec X");
  require_finite(y, "robust loss spec y");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("robust loss spec: epsilon must be positive and finite");
  }
  return {std::move(X), std::move(y), epsilon};
}

RobustLossSpec make_spec(const synthetic::SyntheticProblem& prob, double epsilon) {
  return make_spec(prob.X, prob.labels, epsilon);
}

double tie_tolerance(const RobustLossSpec& spec) {
  const double y_inf = spec.y.size() == 0 ? 0.0 : spec.y.lpNorm<Eigen::Infinity>();
  return kTieScale * (1.0 + y_inf);
}

LossTerms loss_terms(const RobustLossSpec& spec, const Vector& w) {
  require_dim(spec, w, "loss");
  const Vector r = spec.X * w - spec.y;
  const double nw = w.norm();
  LossTerms t;
  t.squared = 0.5 * r.squaredNorm();
  t.l1 = r.lpNorm<1>();
  t.coupling = spec.epsilon * nw * t.l1;
  t.ridge = 0.5 * spec.epsilon * spec.epsilon * static_cast<double>(spec.n()) * nw * nw;
  t.total = t.squared + t.coupling + t.ridge;
  return t;
}

double loss(const RobustLossSpec& spec, const Vector& w) { return loss_terms(spec, w).total; }

Signature signature(const RobustLossSpec& spec, const Vector& w) {
  require_dim(spec, w, "signature");
  const double tol = tie_tolerance(spec);
  return {(spec.X * w - spec.y).unaryExpr([tol](double v) { return v >= -tol ? 1.0 : -1.0; })};
}

unsigned long long signature_code(const Signature& sig) {
  if (sig.s.size() > 64) throw std::invalid_argument("signature_code: more than 64 samples");
  unsigned long long code = 0;
  for (Eigen::Index i = 0; i < sig.s.size(); ++i) {
    if (sig.s(i) > 0) code |= 1ULL << i;
  }
  return code;
}

std::vector<std::size_t> tied_indices(const RobustLossSpec& spec, const Vector& w) {
  require_dim(spec, w, "tied_indices");
  const Vector r = spec.X * w - spec.y;
  const double tol = tie_tolerance(spec);
  std::vector<std::size_t> ties;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (std::abs(r(i)) <= tol) ties.push_back(static_cast<std::size_t>(i));
  }
  return ties;
}

bool is_smooth_point(const RobustLossSpec& spec, const Vector& w) {
  return w.norm() > kOriginTolerance && tied_indices(spec, w).empty();
}

Vector gradient(const RobustLossSpec& spec, const Vector& w) {
  require_dim(spec, w, "gradient");
  require_smooth(spec, w, "gradient");
  return any_subgradient(spec, w);
}

Vector any_subgradient(const RobustLossSpec& spec, const Vector& w) {
  require_dim(spec, w, "subgradient");
  const double eps = spec.epsilon;
  const double n = static_cast<double>(spec.n());
  const Vector r = spec.X * w - spec.y;
  const double nw = w.norm();
  Vector g = spec.X.transpose() * r;
  if (nw > 0.0) {
    const double tie = tie_tolerance(spec);
    const Vector s = r.unaryExpr([tie](double v) { return v >= -tie ? 1.0 : -1.0; });
    g += eps * nw * (spec.X.transpose() * s) + (eps * r.lpNorm<1>() / nw) * w + eps * eps * n * w;
  }
  return g;
}

Matrix hessian(const RobustLossSpec& spec, const Vector& w) {
  require_dim(spec, w, "hessian");
  require_smooth(spec, w, "hessian");
  const double eps = spec.epsilon;
  const double n = static_cast<double>(spec.n());
  const Vector r = spec.X * w - spec.y;
  const Vector s = signs_of(r);
  const double nw = w.norm();
  const Vector xs = spec.X.transpose() * s;
  const auto d = static_cast<Eigen::Index>(spec.dim());

  Matrix H = spec.X.transpose() * spec.X;
  H += (eps / nw) * (xs * w.transpose() + w * xs.transpose());
  const double radial = eps * s.dot(r) / nw;  // = eps ||r||_1 / ||w||
  H += radial * (Matrix::Identity(d, d) - (w * w.transpose()) / (nw * nw));
  H += eps * eps * n * Matrix::Identity(d, d);
  return H;
}

CurvatureProbe curvature_probe(const RobustLossSpec& spec, const Vector& w, const Vector& v) {
  require_dim(spec, w, "curvature_probe");
  require_dim(spec, v, "curvature_probe");
  if (std::abs(v.norm() - 1.0) > 1e-10) throw std::invalid_argument("curvature_probe: v must be a unit vector");
  require_smooth(spec, w, "curvature_probe");

  const double eps = spec.epsilon;
  const double n = static_cast<double>(spec.n());
  const Vector r = spec.X * w - spec.y;
  const Vector s = signs_of(r);
  const double nw = w.norm();
  const Vector Xv = spec.X * v;
  const double wv = w.dot(v);
  const double cos_theta = wv / nw;

  CurvatureProbe p;
  p.term1 = Xv.squaredNorm() + (2.0 * eps / nw) * wv * s.dot(Xv) + eps * eps * n * wv * wv / (nw * nw);
  p.term2 = eps * (r.lpNorm<1>() / nw + eps * n) * (1.0 - cos_theta * cos_theta);
  p.value = p.term1 + p.term2;
  return p;
}

FeasibilityResult subgradient_feasibility(const RobustLossSpec& spec, const Vector& w, double tol) {
  require_dim(spec, w, "subgradient_feasibility");
  if (!(tol > 0.0)) throw std::invalid_argument("subgradient_feasibility: tol must be positive");

  const double eps = spec.epsilon;
  const double n = static_cast<double>(spec.n());
  const Vector r = spec.X * w - spec.y;
  const double nw = w.norm();

  FeasibilityResult out;
  out.s = signs_of(r);

  if (nw <= kOriginTolerance) {
    // -X^T y + eps ||y||_1 g, ||g|| <= 1: closest point of a ball to the origin.
    out.at_origin = true;
    const Vector b = spec.X.transpose() * r;
    const double radius = eps * r.lpNorm<1>();
    const double bn = b.norm();
    out.g = Vector::Zero(w.size());
    if (bn > 0.0 && radius > 0.0) out.g = -(std::min(1.0, bn / radius) / bn) * b;
    out.residual = std::max(0.0, bn - radius);
    out.is_stationary = out.residual <= tol;
    return out;
  }

  out.free_indices = tied_indices(spec, w);
  Vector fixed_s = out.s;
  for (std::size_t i : out.free_indices) fixed_s(static_cast<Eigen::Index>(i)) = 0.0;
  const Vector b = spec.X.transpose() * r + eps * nw * (spec.X.transpose() * fixed_s) +
                   (eps * r.lpNorm<1>() / nw) * w + eps * eps * n * w;

  if (out.free_indices.empty()) {
    out.residual = b.norm();
    out.is_stationary = out.residual <= tol;
    return out;
  }

  Matrix C(b.size(), static_cast<Eigen::Index>(out.free_indices.size()));
  for (std::size_t k = 0; k < out.free_indices.size(); ++k) {
    C.col(static_cast<Eigen::Index>(k)) =
        eps * nw * spec.X.row(static_cast<Eigen::Index>(out.free_indices[k])).transpose();
  }
  const double scale = std::max(1.0, C.norm() * (b.norm() + C.norm()));
  const BoxSolution sol = solve_box_least_squares(C, b, kFeasibilitySolverTolerance * scale);
  if (!sol.converged) {
    throw ConvergenceError("subgradient_feasibility: box solver stopped after " + std::to_string(sol.iterations) +
                           " iterations with residual " + std::to_string(sol.residual) + " and KKT violation " +
                           std::to_string(kkt_violation(C, b, sol.z)));
  }
  for (std::size_t k = 0; k < out.free_indices.size(); ++k) {
    out.s(static_cast<Eigen::Index>(out.free_indices[k])) = sol.z(static_cast<Eigen::Index>(k));
  }
  out.residual = sol.residual;
  out.iterations = sol.iterations;
  out.is_stationary = out.residual <= tol;
  return out;
}

Vector min_norm_gradzero_witness(const synthetic::SyntheticProblem& prob, double epsilon) {
  const Vector alpha = closed_form::alpha_vector(prob);
  const double w_norm = closed_form::min_norm_solution(prob).w.norm();
  return (-epsilon * static_cast<double>(prob.n()) / w_norm) * alpha;
}

ConvexityCase classify_convexity(const RobustLossSpec& spec) {
  ConvexityCase out;
  out.min_norm_solution = min_norm_least_squares(spec.X, spec.y);
  out.least_squares_residual = (spec.X * out.min_norm_solution - spec.y).norm();
  if (out.least_squares_residual > kConsistencyTolerance * spec.y.norm()) {
    out.id = ConvexityCaseId::inconsistent_strict;
    return out;
  }

  const double ls_norm = out.min_norm_solution.norm();
  if (ls_norm == 0.0) {
    // y = 0: the ridge term alone makes the loss strongly convex.
    out.id = ConvexityCaseId::strict_above_threshold;
    return out;
  }
  const double theta = 1.0 / ls_norm;
  out.threshold = theta;
  const double eps = spec.epsilon;

  if (std::abs(eps - theta) <= kThresholdTieTolerance * theta) {
    out.id = ConvexityCaseId::one_segment;
    const Vector v = out.min_norm_solution / ls_norm;
    out.segments.push_back({v, v / eps});
    return out;
  }
  if (eps > theta) {
    out.id = ConvexityCaseId::strict_above_threshold;
    return out;
  }

  out.id = ConvexityCaseId::two_segments;
  const auto null_basis = nullspace_basis(spec.X);
  if (null_basis.empty()) return out;  // full column rank: no room for a flat direction
  const double u_norm = std::sqrt(std::max(0.0, 1.0 - eps * eps * ls_norm * ls_norm));
  for (double sign : {1.0, -1.0}) {
    Vector v = eps * out.min_norm_solution + sign * u_norm * null_basis.front();
    v /= v.norm();  // already unit up to rounding
    out.segments.push_back({v, v / eps});
  }
  return out;
}

std::vector<Vector> zero_curvature_directions(const RobustLossSpec& spec) {
  const ConvexityCase c = classify_convexity(spec);
  if (c.id != ConvexityCaseId::two_segments && c.id != ConvexityCaseId::one_segment) {
    throw std::logic_error("zero_curvature_directions: only defined below or at the convexity threshold");
  }
  std::vector<Vector> dirs;
  for (const auto& seg : c.segments) dirs.push_back(seg.direction);
  return dirs;
}

double imbalance_bound(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("imbalance_bound: c must be positive");
  return std::min(2.0 * c / (1.0 + c), 2.0 / (1.0 + c));
}

Theorem4Threshold theorem4_threshold(std::size_t n_plus, std::size_t n_minus) {
  const auto a = closed_form::alpha_coefficients(n_plus, n_minus);
  const double np = static_cast<double>(n_plus);
  const double nm = static_cast<double>(n_minus);

  Theorem4Threshold t;
  const double poly = 64.0 * np * np * nm * nm + 160.0 * np * np * nm + 75.0 * np * np + 32.0 * np * nm * nm +
                      60.0 * np * nm + 70.0 * np + 3.0 * nm * nm + 5.0 * nm;
  const double den = std::max(4.0 * nm * nm + 4.0 * nm * np + 5.0 * np + 5.0 * nm,
                              4.0 * np * np + 4.0 * nm * np + np + nm);
  t.printed = std::sqrt(poly) / den;

  const double w_norm = closed_form::min_norm_solution(n_plus, n_minus).w.norm();
  t.oracle = w_norm / ((np + nm) * std::max(a.alpha_plus, std::abs(a.alpha_minus)));
  t.sufficient_bound = imbalance_bound(np / nm);
  t.printed_matches_oracle = std::abs(t.printed - t.oracle) <= 1e-9 * t.oracle;
  return t;
}

}  // namespace robustopt::robust_loss
