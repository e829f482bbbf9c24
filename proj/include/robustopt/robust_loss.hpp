// The L2-adversarial least-squares objective
//
//   L(w) = 1/2 ||Xw - y||_2^2 + eps ||w||_2 ||Xw - y||_1 + (eps^2 n / 2) ||w||_2^2
//
// and its geometry. The hyperplanes x_i^T w = y_i cut weight space into
// cells; inside a cell the signature s = sign(Xw - y) (with sign(0) = +1)
// is constant and L is smooth away from the origin. The loss is convex
// everywhere, strongly convex inside every cell except the one containing
// the origin (s = -y), and how that cell behaves depends on eps relative to
// 1 / ||X^+ y||_2.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "robustopt/linalg.hpp"
#include "robustopt/synthetic.hpp"

namespace robustopt::robust_loss {

struct RobustLossSpec {
  Matrix X;
  Vector y;
  double epsilon = 0.0;

  std::size_t n() const { return static_cast<std::size_t>(X.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(X.cols()); }
};

/// Validates shapes, finiteness and eps > 0.
RobustLossSpec make_spec(Matrix X, Vector y, double epsilon);
RobustLossSpec make_spec(const synthetic::SyntheticProblem& prob, double epsilon);

/// |r_i| <= kTieScale * (1 + ||y||_inf) counts as lying on hyperplane i.
inline constexpr double kTieScale = 1e-9;
/// ||w||_2 <= kOriginTolerance counts as the origin.
inline constexpr double kOriginTolerance = 1e-12;

double tie_tolerance(const RobustLossSpec& spec);

struct LossTerms {
  double squared = 0.0;   // 1/2 ||Xw - y||^2
  double l1 = 0.0;        // ||Xw - y||_1
  double coupling = 0.0;  // eps ||w|| ||Xw - y||_1
  double ridge = 0.0;     // eps^2 n / 2 ||w||^2
  double total = 0.0;
};

double loss(const RobustLossSpec& spec, const Vector& w);
LossTerms loss_terms(const RobustLossSpec& spec, const Vector& w);

struct Signature {
  Vector s;  // entries +1 / -1
  bool operator==(const Signature& other) const { return s == other.s; }
};

/// s_i = sign(x_i^T w - y_i) with sign(0) = +1; residuals within the tie
/// tolerance count as 0.
Signature signature(const RobustLossSpec& spec, const Vector& w);
/// Bit i set iff s_i = +1; handy for labeling cells in grid exports.
unsigned long long signature_code(const Signature& sig);

/// Indices whose residual lies within tie_tolerance of zero.
std::vector<std::size_t> tied_indices(const RobustLossSpec& spec, const Vector& w);
bool is_smooth_point(const RobustLossSpec& spec, const Vector& w);

/// Gradient inside a cell, away from the origin:
///   X^T r + eps ||w|| X^T s + eps ||r||_1 w / ||w|| + eps^2 n w.
/// Throws NonSmoothPointError at ties or at the origin.
Vector gradient(const RobustLossSpec& spec, const Vector& w);

/// Some element of the subdifferential, defined everywhere: tied residuals
/// take s_i = +1 and at the origin the unit-ball direction is taken as 0.
Vector any_subgradient(const RobustLossSpec& spec, const Vector& w);

/// Symmetric Hessian inside a cell:
///   X^T X + eps/||w|| (X^T s w^T + w s^T X)
///   + eps (s^T r)/||w|| (I - w w^T/||w||^2) + eps^2 n I.
Matrix hessian(const RobustLossSpec& spec, const Vector& w);

struct CurvatureProbe {
  double value = 0.0;  // v^T H v
  double term1 = 0.0;  // ||Xv||^2 + 2 eps/||w|| (w.v)(s.Xv) + eps^2 n (w.v)^2/||w||^2
  double term2 = 0.0;  // eps (||r||_1/||w|| + eps n)(1 - cos^2 theta), theta = angle(w, v)
};

/// Curvature along unit direction v, split into its two non-negative parts.
CurvatureProbe curvature_probe(const RobustLossSpec& spec, const Vector& w, const Vector& v);

struct FeasibilityResult {
  bool is_stationary = false;
  double residual = 0.0;            // min || subgradient || over the free parameters
  Vector s;                         // full sign vector; tied entries carry the witness value in [-1, 1]
  std::vector<std::size_t> free_indices;
  bool at_origin = false;
  Vector g;                         // unit-ball direction witness (origin only)
  int iterations = 0;
};

inline constexpr double kFeasibilitySolverTolerance = 1e-10;

/// Decides whether 0 is a subgradient at w, to residual tolerance `tol`.
///
/// Tied samples contribute s_i in [-1, 1]; the remaining part of the
/// gradient is fixed. This is a box-constrained least-squares problem,
/// solved by accelerated projected gradient followed by an exact
/// active-set polish. At the origin the subdifferential is
/// {-X^T y + eps ||y||_1 g : ||g|| <= 1} (plus nothing from ties, since the
/// s-term is scaled by ||w|| = 0) and the ball problem is solved exactly.
/// Throws ConvergenceError if the box solver stalls.
FeasibilityResult subgradient_feasibility(const RobustLossSpec& spec, const Vector& w, double tol);

/// Closed-form stationarity witness at the min-norm interpolant X^T alpha of
/// the synthetic problem: s_i = -eps n alpha_i / ||X^T alpha||. The point is
/// stationary iff every |s_i| <= 1.
Vector min_norm_gradzero_witness(const synthetic::SyntheticProblem& prob, double epsilon);

enum class ConvexityCaseId {
  inconsistent_strict = 1,  // Xw = y has no solution: strictly convex
  two_segments = 2,         // eps < theta: two flat segments off the rowspace
  one_segment = 3,          // eps == theta: one flat segment along X^+ y
  strict_above_threshold = 4,
};

struct FlatSegment {
  Vector direction;  // unit v with zero curvature along w = t v in the origin cell
  Vector endpoint;   // v / eps: where the segment leaves the origin cell
};

struct ConvexityCase {
  ConvexityCaseId id = ConvexityCaseId::inconsistent_strict;
  std::optional<double> threshold;  // theta = 1 / ||X^+ y||, consistent systems only
  double least_squares_residual = 0.0;
  Vector min_norm_solution;  // X^+ y
  std::vector<FlatSegment> segments;
};

inline constexpr double kConsistencyTolerance = 1e-8;
inline constexpr double kThresholdTieTolerance = 1e-10;

/// Sorts the spec into one of the four cases. For two_segments the
/// nullspace offset is u = +-sqrt(1 - eps^2 ||X^+ y||^2) b0 with b0 the first
/// vector returned by nullspace_basis(X).
ConvexityCase classify_convexity(const RobustLossSpec& spec);

/// Unit directions of zero curvature for cases two_segments and
/// one_segment. Throws std::logic_error in any other case.
std::vector<Vector> zero_curvature_directions(const RobustLossSpec& spec);

struct Theorem4Threshold {
  double printed = 0.0;           // closed form as published
  double oracle = 0.0;            // ||X^T alpha|| / (n max(a+, |a-|))
  double sufficient_bound = 0.0;  // min(2c/(1+c), 2/(1+c)), c = n+/n-
  bool printed_matches_oracle = false;
};

/// Largest eps for which X^T alpha minimizes the robust loss on the
/// synthetic problem with the given counts.
Theorem4Threshold theorem4_threshold(std::size_t n_plus, std::size_t n_minus);

/// min(2c/(1+c), 2/(1+c)); throws std::invalid_argument for c <= 0.
double imbalance_bound(double c);

}  // namespace robustopt::robust_loss
