#include "robustopt/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace robustopt::optim {

std::string_view to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::gd:
      return "gd";
    case OptimizerKind::sgd:
      return "sgd";
    case OptimizerKind::momentum:
      return "momentum";
    case OptimizerKind::nesterov:
      return "nesterov";
    case OptimizerKind::adagrad:
      return "adagrad";
    case OptimizerKind::rmsprop:
      return "rmsprop";
    case OptimizerKind::adam:
      return "adam";
    case OptimizerKind::subgradient:
      return "subgradient";
  }
  return "?";
}

OptimizerKind parse_kind(std::string_view text) {
  for (OptimizerKind k : kAllKinds) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown optimizer '" + std::string(text) + "'");
}

bool is_adaptive(OptimizerKind kind) {
  return kind == OptimizerKind::adagrad || kind == OptimizerKind::rmsprop || kind == OptimizerKind::adam;
}

void OptimizerConfig::validate() const {
  if (learning_rate && !(*learning_rate > 0.0)) throw std::invalid_argument("learning rate must be positive");
  if (!(momentum >= 0.0 && momentum < 1.0)) throw std::invalid_argument("momentum must lie in [0, 1)");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rmsprop decay must lie in (0, 1)");
  if (!(beta1 > 0.0 && beta1 < 1.0) || !(beta2 > 0.0 && beta2 < 1.0)) {
    throw std::invalid_argument("adam betas must lie in (0, 1)");
  }
  if (!(stabilizer > 0.0)) throw std::invalid_argument("stabilizer must be positive");
  if (record_every == 0) throw std::invalid_argument("record_every must be >= 1");
}

double default_learning_rate(OptimizerKind kind, const Matrix& X) {
  if (is_adaptive(kind)) return 1e-2;
  if (kind == OptimizerKind::subgradient) return 0.1;
  const double lambda_max =
      Eigen::SelfAdjointEigenSolver<Matrix>(X * X.transpose(), Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
  return 0.1 / std::max(lambda_max, 1e-12);
}

OptimizerState initial_state(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return {Vector::Zero(d), Vector::Zero(d), 0};
}

double effective_learning_rate(const OptimizerConfig& cfg, double base, long long t) {
  if (cfg.schedule == Schedule::inv_sqrt_t) return base / std::sqrt(static_cast<double>(std::max(1LL, t)));
  return base;
}

StepResult step(const OptimizerConfig& cfg, double lr, const OptimizerState& state, const Vector& w, const Vector& g) {
  if (w.size() != g.size() || state.first.size() != w.size() || state.second.size() != w.size()) {
    throw DimensionError("optimizer step: state, iterate and gradient shapes differ");
  }
  StepResult out{w, state};
  out.state.t = state.t + 1;
  const double delta = cfg.stabilizer;

  switch (cfg.kind) {
    case OptimizerKind::gd:
    case OptimizerKind::sgd:
    case OptimizerKind::subgradient:
      out.w = w - lr * g;
      break;
    case OptimizerKind::momentum:
      out.state.first = cfg.momentum * state.first + g;
      out.w = w - lr * out.state.first;
      break;
    case OptimizerKind::nesterov:
      out.state.first = cfg.momentum * state.first + g;
      out.w = w - lr * (g + cfg.momentum * out.state.first);
      break;
    case OptimizerKind::adagrad:
      out.state.second = state.second + g.cwiseAbs2();
      out.w = w - lr * (g.array() / (out.state.second.array().sqrt() + delta)).matrix();
      break;
    case OptimizerKind::rmsprop:
      out.state.second = cfg.rho * state.second + (1.0 - cfg.rho) * g.cwiseAbs2();
      out.w = w - lr * (g.array() / (out.state.second.array().sqrt() + delta)).matrix();
      break;
    case OptimizerKind::adam: {
      out.state.first = cfg.beta1 * state.first + (1.0 - cfg.beta1) * g;
      out.state.second = cfg.beta2 * state.second + (1.0 - cfg.beta2) * g.cwiseAbs2();
      const double t = static_cast<double>(out.state.t);
      const double c1 = 1.0 - std::pow(cfg.beta1, t);
      const double c2 = 1.0 - std::pow(cfg.beta2, t);
      const Eigen::ArrayXd m_hat = out.state.first.array() / c1;
      const Eigen::ArrayXd v_hat = out.state.second.array() / c2;
      out.w = w - lr * (m_hat / (v_hat.sqrt() + delta)).matrix();
      break;
    }
  }
  return out;
}

namespace {

// Shared driver. `full_grad` and `sample_grad` return gradients, `objective`
// the loss being minimized.
template <typename Objective, typename FullGrad, typename SampleGrad>
TrainingTrace run(const OptimizerConfig& cfg, double base_lr, std::size_t n_samples, const Vector& init,
                  const TrainOptions& opts, bool stop_on_grad_norm, Objective objective, FullGrad full_grad,
                  SampleGrad sample_grad) {
  cfg.validate();
  if (opts.steps < 0) throw std::invalid_argument("steps must be >= 0");
  require_finite(init, "training init");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n_samples - 1);

  TrainingTrace trace;
  Vector w = init;
  OptimizerState state = initial_state(static_cast<std::size_t>(init.size()));
  const double initial_loss = objective(w);
  const double blowup = 1e6 * std::max(initial_loss, 1e-12);
  Vector anchor = w;  // iterate at the start of the current 100-step window
  double window_spread = 0.0;

  auto record = [&](long long t, double loss, double grad_norm) {
    trace.records.push_back({t, loss, grad_norm, w});
  };

  Vector g = full_grad(w);
  record(0, initial_loss, g.norm());
  if (stop_on_grad_norm && g.norm() <= opts.tol) {
    trace.converged = true;
    trace.final_w = w;
    return trace;
  }

  for (long long t = 1; t <= opts.steps; ++t) {
    const Vector direction = cfg.kind == OptimizerKind::sgd ? sample_grad(w, pick(rng)) : g;
    const double lr = effective_learning_rate(cfg, base_lr, t);
    StepResult next = step(cfg, lr, state, w, direction);
    w = std::move(next.w);
    state = std::move(next.state);
    trace.steps_taken = t;

    const double loss = objective(w);
    if (!std::isfinite(loss) || loss > blowup) {
      throw DivergenceError("training diverged at step " + std::to_string(t) + " (loss " + std::to_string(loss) +
                            "); use a smaller learning rate");
    }
    g = full_grad(w);
    const bool last = t == opts.steps;

    bool done = false;
    if (stop_on_grad_norm) {
      done = g.norm() <= opts.tol;
    } else {
      // Largest excursion from the window start, so a zigzag does not pass.
      window_spread = std::max(window_spread, (w - anchor).norm());
      if (t % 100 == 0) {
        done = window_spread <= opts.movement_tol;
        anchor = w;
        window_spread = 0.0;
      }
    }
    if (done || last || t % static_cast<long long>(cfg.record_every) == 0) record(t, loss, g.norm());
    if (done) {
      trace.converged = true;
      break;
    }
  }
  trace.final_w = w;
  return trace;
}

double robust_sample_scale(const robust_loss::RobustLossSpec& spec, const Vector& w, std::size_t i, Vector& dir) {
  // d/dw 1/2 (|r_i| + eps ||w||)^2 = (|r_i| + eps ||w||) (s_i x_i + eps w/||w||)
  const auto row = static_cast<Eigen::Index>(i);
  const double r = spec.X.row(row).dot(w) - spec.y(row);
  const double s = r >= -robust_loss::tie_tolerance(spec) ? 1.0 : -1.0;
  const double nw = w.norm();
  dir = s * spec.X.row(row).transpose();
  if (nw > 0.0) dir += (spec.epsilon / nw) * w;
  return std::abs(r) + spec.epsilon * nw;
}

}  // namespace

TrainingTrace train_natural(const Matrix& X, const Vector& y, const OptimizerConfig& cfg, const Vector& init,
                            TrainOptions opts) {
  if (X.rows() != y.size()) throw DimensionError("train_natural: X rows and y length differ");
  if (init.size() != X.cols()) throw DimensionError("train_natural: init has the wrong dimension");
  const double lr = cfg.learning_rate.value_or(default_learning_rate(cfg.kind, X));
  const double n = static_cast<double>(X.rows());

  auto objective = [&](const Vector& w) { return 0.5 * (X * w - y).squaredNorm(); };
  auto full_grad = [&](const Vector& w) -> Vector { return X.transpose() * (X * w - y); };
  auto sample_grad = [&](const Vector& w, std::size_t i) -> Vector {
    const auto row = static_cast<Eigen::Index>(i);
    return n * (X.row(row).dot(w) - y(row)) * X.row(row).transpose();
  };
  return run(cfg, lr, static_cast<std::size_t>(X.rows()), init, opts, true, objective, full_grad, sample_grad);
}

TrainingTrace train_natural(const synthetic::SyntheticProblem& prob, const OptimizerConfig& cfg, const Vector& init,
                            TrainOptions opts) {
  return train_natural(prob.X, prob.labels, cfg, init, opts);
}

TrainingTrace train_adversarial(const robust_loss::RobustLossSpec& spec, const OptimizerConfig& cfg,
                                const Vector& init, TrainOptions opts) {
  if (init.size() != static_cast<Eigen::Index>(spec.dim())) {
    throw DimensionError("train_adversarial: init has the wrong dimension");
  }
  const double lr = cfg.learning_rate.value_or(default_learning_rate(cfg.kind, spec.X));
  const double n = static_cast<double>(spec.n());

  auto objective = [&](const Vector& w) { return robust_loss::loss(spec, w); };
  auto full_grad = [&](const Vector& w) -> Vector { return robust_loss::any_subgradient(spec, w); };
  auto sample_grad = [&](const Vector& w, std::size_t i) -> Vector {
    Vector dir;
    const double scale = robust_sample_scale(spec, w, i, dir);
    return (n * scale) * dir;
  };
  return run(cfg, lr, spec.n(), init, opts, false, objective, full_grad, sample_grad);
}

TrainingTrace train_adversarial_pgd(const robust_loss::RobustLossSpec& spec, const OptimizerConfig& cfg,
                                    const Vector& init, TrainOptions opts, int pgd_steps) {
  if (init.size() != static_cast<Eigen::Index>(spec.dim())) {
    throw DimensionError("train_adversarial_pgd: init has the wrong dimension");
  }
  if (pgd_steps < 1) throw std::invalid_argument("train_adversarial_pgd: pgd_steps must be >= 1");
  const double lr = cfg.learning_rate.value_or(default_learning_rate(cfg.kind, spec.X));
  const double eps = spec.epsilon;
  const double pgd_step = 2.5 * eps / pgd_steps;
  const double n = static_cast<double>(spec.n());

  // L2 PGD ascent on 1/2 (<x_i + delta, w> - y_i)^2 over ||delta|| <= eps.
  auto worst_case_row = [&](const Vector& w, Eigen::Index i) -> Vector {
    const Vector x = spec.X.row(i).transpose();
    Vector delta = Vector::Zero(x.size());
    const double nw = w.norm();
    if (nw == 0.0) return x;
    for (int k = 0; k < pgd_steps; ++k) {
      const double r = (x + delta).dot(w) - spec.y(i);
      delta += (pgd_step * (r >= 0.0 ? 1.0 : -1.0) / nw) * w;
      const double dn = delta.norm();
      if (dn > eps) delta *= eps / dn;
    }
    return x + delta;
  };
  auto sample_grad = [&](const Vector& w, std::size_t i) -> Vector {
    const auto row = static_cast<Eigen::Index>(i);
    const Vector xa = worst_case_row(w, row);
    return (xa.dot(w) - spec.y(row)) * xa;
  };
  auto full_grad = [&](const Vector& w) -> Vector {
    Vector g = Vector::Zero(w.size());
    for (std::size_t i = 0; i < spec.n(); ++i) g += sample_grad(w, i);
    return g;
  };
  auto sample_grad_scaled = [&](const Vector& w, std::size_t i) -> Vector { return n * sample_grad(w, i); };
  auto objective = [&](const Vector& w) { return robust_loss::loss(spec, w); };
  return run(cfg, lr, spec.n(), init, opts, false, objective, full_grad, sample_grad_scaled);
}

}  // namespace robustopt::optim
