// PGD attacks against scoring models, per-sample aggregation over attack
// suites, robust-accuracy curves and their normalized area (NAUC).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "robustopt/linalg.hpp"
#include "robustopt/synthetic.hpp"

namespace robustopt::attack {

using synthetic::TestPoint;

/// Anything that scores inputs and can differentiate the score.
class ScoringModel {
 public:
  virtual ~ScoringModel() = default;
  virtual double score(const Vector& x) const = 0;
  virtual Vector score_gradient(const Vector& x) const = 0;
  virtual std::size_t input_dim() const = 0;
};

class LinearModel final : public ScoringModel {
 public:
  explicit LinearModel(Vector w) : w_(std::move(w)) {}
  double score(const Vector& x) const override;
  Vector score_gradient(const Vector&) const override { return w_; }
  std::size_t input_dim() const override { return static_cast<std::size_t>(w_.size()); }
  const Vector& weights() const { return w_; }

 private:
  Vector w_;
};

/// margin: drive y * score(x) down (the classification decision).
/// squared: ascend 1/2 (score(x) - y)^2. This cannot flip points whose
/// score already exceeds the label in magnitude, so it is not the default.
enum class AttackObjective { margin, squared };

struct AttackConfig {
  Norm norm = Norm::L2;
  double epsilon = 0.0;
  int steps = 100;
  /// Unset means 2.5 * epsilon / steps.
  std::optional<double> step_size;
  int restarts = 1;  // restart 0 starts at x, the rest uniformly in the ball
  std::uint64_t seed = 0;
  AttackObjective objective = AttackObjective::margin;

  /// Throws std::invalid_argument on out-of-range fields or norm L1.
  void validate() const;
};

struct AttackResult {
  bool success = false;  // y * score(adversarial_x) <= 0
  Vector adversarial_x;
};

/// Sign-gradient steps with clamping for Linf, unit-normalized gradient
/// steps with radial projection for L2. Stops at the first restart that
/// flips the prediction; otherwise returns the best point found.
AttackResult pgd_attack(const ScoringModel& model, const Vector& x, int y, const AttackConfig& cfg);
AttackResult pgd_attack(const Vector& w, const Vector& x, int y, const AttackConfig& cfg);

/// Fraction of samples that are classified correctly and survive every
/// config. All configs must share norm and epsilon. Sample i under config k
/// is seeded from (cfg.seed, i, k). Throws std::invalid_argument on an
/// empty test set or an empty suite.
double robust_accuracy(const ScoringModel& model, std::span<const TestPoint> testset,
                       std::span<const AttackConfig> cfgs);

/// Trapezoidal (1/eps_max) * integral of acc over [0, eps_max]. Samples
/// must be sorted and inside [0, eps_max]; the curve is held flat out to
/// the interval ends. Throws std::invalid_argument with fewer than two
/// samples.
double nauc(std::span<const double> eps, std::span<const double> acc, double eps_max);

/// Exact NAUC of the step curve acc(eps) = #{i : r_i > eps} / n, i.e.
/// mean_i min(r_i, eps_max) / eps_max. Misclassified samples carry r_i = 0.
double exact_nauc(std::span<const double> radii, double eps_max);

/// Exact robustness radius of a linear model on one sample: 0 when
/// misclassified, the margin radius otherwise.
double exact_radius(const Vector& w, const TestPoint& p, Norm norm);

/// Attack parameters without a budget; the sweep fills epsilon in.
struct AttackTemplate {
  int steps = 100;
  std::optional<double> step_size;  // relative: step = step_size * epsilon
  int restarts = 1;
  std::uint64_t seed = 0;
  AttackObjective objective = AttackObjective::margin;
};

struct RobustnessCurve {
  Norm norm = Norm::L2;
  std::vector<double> eps_grid;
  std::vector<double> acc_pgd;
  std::vector<double> acc_exact;
  double eps_max = 0.0;
  double nauc_pgd = 0.0;    // trapezoid over the grid
  double nauc_exact = 0.0;  // exact step-curve integral
};

inline constexpr std::size_t kDefaultGridPoints = 101;

/// Uniform grid of `points` values on [0, eps_max].
std::vector<double> uniform_grid(double eps_max, std::size_t points = kDefaultGridPoints);

/// Twice the largest exact radius over correctly classified samples (1 if
/// there are none).
double default_eps_max(const Vector& w, std::span<const TestPoint> testset, Norm norm);

/// PGD accuracy per grid point with per-sample aggregation over nested
/// budgets: a sample broken at some epsilon stays broken at every larger
/// one. The exact curve from margin radii is attached. Grid must be
/// non-empty, start at >= 0 and increase strictly.
RobustnessCurve sweep_curve(const Vector& w, std::span<const TestPoint> testset, Norm norm,
                            std::span<const double> eps_grid, std::span<const AttackTemplate> suite);

}  // namespace robustopt::attack
