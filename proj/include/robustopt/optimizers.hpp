// First-order optimizers for natural (least-squares) and adversarial
// (robust-loss) training of linear models.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "robustopt/linalg.hpp"
#include "robustopt/robust_loss.hpp"
#include "robustopt/synthetic.hpp"

namespace robustopt::optim {

enum class OptimizerKind { gd, sgd, momentum, nesterov, adagrad, rmsprop, adam, subgradient };
enum class Schedule { constant, inv_sqrt_t };

inline constexpr OptimizerKind kAllKinds[] = {OptimizerKind::gd,      OptimizerKind::sgd,     OptimizerKind::momentum,
                                              OptimizerKind::nesterov, OptimizerKind::adagrad, OptimizerKind::rmsprop,
                                              OptimizerKind::adam,    OptimizerKind::subgradient};

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_kind(std::string_view text);
bool is_adaptive(OptimizerKind kind);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::gd;
  /// Unset means a per-kind default (see default_learning_rate).
  std::optional<double> learning_rate;
  double momentum = 0.9;  // momentum, nesterov
  double rho = 0.9;       // rmsprop decay
  double beta1 = 0.9;     // adam
  double beta2 = 0.999;   // adam
  double stabilizer = 1e-8;
  Schedule schedule = Schedule::constant;
  std::uint64_t seed = 0;  // row sampling for sgd
  std::size_t record_every = 100;

  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

/// gd/sgd/momentum/nesterov: 0.1 / lambda_max(X^T X); adaptive kinds: 1e-2;
/// subgradient: 0.1 (with inv_sqrt_t decay).
double default_learning_rate(OptimizerKind kind, const Matrix& X);

struct OptimizerState {
  Vector first;   // momentum buffer / adam first moment
  Vector second;  // accumulated or averaged squared gradients
  long long t = 0;  // completed steps
};

OptimizerState initial_state(std::size_t dim);

struct StepResult {
  Vector w;
  OptimizerState state;
};

/// One update with base learning rate `lr` (the schedule is applied by the
/// caller through effective_learning_rate). Pure: returns new values.
///
///   gd/sgd       w' = w - lr g
///   momentum     m' = mu m + g,            w' = w - lr m'
///   nesterov     m' = mu m + g,            w' = w - lr (g + mu m')
///   adagrad      G' = G + g^2,             w' = w - lr g / (sqrt(G') + delta)
///   rmsprop      G' = rho G + (1-rho) g^2, w' = w - lr g / (sqrt(G') + delta)
///   adam         bias-corrected moments,   w' = w - lr mhat / (sqrt(vhat) + delta)
///   subgradient  w' = w - lr g
StepResult step(const OptimizerConfig& cfg, double lr, const OptimizerState& state, const Vector& w, const Vector& g);

/// Base rate scaled by the schedule at 1-based step t.
double effective_learning_rate(const OptimizerConfig& cfg, double base, long long t);

struct TraceRecord {
  long long step = 0;
  double loss = 0.0;
  double grad_norm = 0.0;
  Vector w;
};

struct TrainingTrace {
  std::vector<TraceRecord> records;
  bool converged = false;
  long long steps_taken = 0;
  Vector final_w;
};

struct TrainOptions {
  long long steps = 10000;
  double tol = 1e-8;           // gradient norm (natural training)
  double movement_tol = 1e-6;  // iterate spread over a 100-step window (robust loss)
};

/// Minimizes 1/2 ||Xw - y||^2 from `init`. Deterministic kinds use the full
/// gradient; sgd draws one row per step. Converged when the full gradient
/// norm drops to tol. Throws DivergenceError if the loss exceeds 1e6 times
/// its initial value.
TrainingTrace train_natural(const synthetic::SyntheticProblem& prob, const OptimizerConfig& cfg, const Vector& init,
                            TrainOptions opts = {});
TrainingTrace train_natural(const Matrix& X, const Vector& y, const OptimizerConfig& cfg, const Vector& init,
                            TrainOptions opts = {});

/// Minimizes the robust loss. Non-smooth iterates use any_subgradient
/// (tied residuals take s_i = +1). sgd uses the per-sample robust loss
/// 1/2 (|x_i^T w - y_i| + eps ||w||)^2 of one drawn row, scaled by n.
/// Converged when no iterate in a 100-step window strays more than
/// movement_tol from the window's first iterate.
TrainingTrace train_adversarial(const robust_loss::RobustLossSpec& spec, const OptimizerConfig& cfg,
                                const Vector& init, TrainOptions opts = {});

/// Adversarial training with the inner maximization done by L2 PGD on each
/// sample instead of in closed form.
TrainingTrace train_adversarial_pgd(const robust_loss::RobustLossSpec& spec, const OptimizerConfig& cfg,
                                    const Vector& init, TrainOptions opts = {}, int pgd_steps = 10);

}  // namespace robustopt::optim
