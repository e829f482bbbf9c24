#include "robustopt/attack.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "robustopt/radii.hpp"

namespace robustopt::attack {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void project(Vector& delta, Norm norm, double eps) {
  if (norm == Norm::Linf) {
    delta = delta.cwiseMax(-eps).cwiseMin(eps);
    return;
  }
  const double n = delta.norm();
  if (n > eps) delta *= eps / n;
}

Vector random_start(std::size_t dim, Norm norm, double eps, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  Vector delta(d);
  if (norm == Norm::Linf) {
    std::uniform_real_distribution<double> u(-eps, eps);
    for (Eigen::Index i = 0; i < d; ++i) delta(i) = u(rng);
    return delta;
  }
  std::normal_distribution<double> g(0.0, 1.0);
  for (Eigen::Index i = 0; i < d; ++i) delta(i) = g(rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double radius = eps * std::pow(u(rng), 1.0 / static_cast<double>(dim));
  const double n = delta.norm();
  if (n > 0.0) delta *= radius / n;
  return delta;
}

// Ascent direction on the attack objective with respect to the input.
Vector ascent_gradient(const ScoringModel& model, const Vector& x, int y, AttackObjective objective) {
  const Vector g = model.score_gradient(x);
  if (objective == AttackObjective::margin) return -static_cast<double>(y) * g;
  // both step rules discard the magnitude, so sign(r) g is enough
  return (model.score(x) - y >= 0.0 ? 1.0 : -1.0) * g;
}

void require_label(int y) {
  if (y != 1 && y != -1) throw std::invalid_argument("attack: label must be +1 or -1");
}

}  // namespace

double LinearModel::score(const Vector& x) const {
  if (x.size() != w_.size()) throw DimensionError("LinearModel: input has the wrong dimension");
  return w_.dot(x);
}

void AttackConfig::validate() const {
  if (norm == Norm::L1) throw std::invalid_argument("attack: only L2 and Linf budgets are supported");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("attack: epsilon must be >= 0");
  if (steps < 1) throw std::invalid_argument("attack: steps must be >= 1");
  if (step_size && !(*step_size > 0.0)) throw std::invalid_argument("attack: step size must be positive");
  if (restarts < 1) throw std::invalid_argument("attack: restarts must be >= 1");
}

AttackResult pgd_attack(const ScoringModel& model, const Vector& x, int y, const AttackConfig& cfg) {
  cfg.validate();
  require_label(y);
  if (static_cast<std::size_t>(x.size()) != model.input_dim()) {
    throw DimensionError("pgd_attack: input has the wrong dimension");
  }

  AttackResult best{y * model.score(x) <= 0.0, x};
  if (best.success || cfg.epsilon == 0.0) return best;

  double best_margin = y * model.score(x);
  const double step = cfg.step_size.value_or(2.5 * cfg.epsilon / cfg.steps);
  std::mt19937_64 rng(cfg.seed);

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Vector delta = restart == 0 ? Vector::Zero(x.size()) : random_start(model.input_dim(), cfg.norm, cfg.epsilon, rng);
    for (int k = 0; k < cfg.steps; ++k) {
      const Vector g = ascent_gradient(model, x + delta, y, cfg.objective);
      if (cfg.norm == Norm::Linf) {
        delta += step * g.unaryExpr([](double c) { return sgn(c); });
      } else {
        const double gn = g.norm();
        if (gn == 0.0) break;
        delta += (step / gn) * g;
      }
      project(delta, cfg.norm, cfg.epsilon);
    }
    const Vector candidate = x + delta;
    const double margin = y * model.score(candidate);
    if (margin < best_margin) {
      best_margin = margin;
      best.adversarial_x = candidate;
    }
    if (margin <= 0.0) {
      best.success = true;
      break;
    }
  }
  return best;
}

AttackResult pgd_attack(const Vector& w, const Vector& x, int y, const AttackConfig& cfg) {
  return pgd_attack(LinearModel(w), x, y, cfg);
}

double robust_accuracy(const ScoringModel& model, std::span<const TestPoint> testset,
                       std::span<const AttackConfig> cfgs) {
  if (testset.empty()) throw std::invalid_argument("robust_accuracy: empty test set");
  if (cfgs.empty()) throw std::invalid_argument("robust_accuracy: empty attack suite");
  for (const auto& c : cfgs) {
    if (c.norm != cfgs[0].norm || c.epsilon != cfgs[0].epsilon) {
      throw std::invalid_argument("robust_accuracy: attack configs must share norm and epsilon");
    }
  }
  std::size_t robust = 0;
  for (std::size_t i = 0; i < testset.size(); ++i) {
    bool survived = true;
    for (std::size_t k = 0; k < cfgs.size() && survived; ++k) {
      AttackConfig c = cfgs[k];
      std::seed_seq seq{c.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(k)};
      std::array<std::uint32_t, 2> words{};
      seq.generate(words.begin(), words.end());
      c.seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
      survived = !pgd_attack(model, testset[i].x, testset[i].y, c).success;
    }
    robust += survived ? 1 : 0;
  }
  return static_cast<double>(robust) / static_cast<double>(testset.size());
}

double nauc(std::span<const double> eps, std::span<const double> acc, double eps_max) {
  if (eps.size() != acc.size()) throw std::invalid_argument("nauc: eps and acc lengths differ");
  if (eps.size() < 2) throw std::invalid_argument("nauc: need at least two samples");
  if (!(eps_max > 0.0)) throw std::invalid_argument("nauc: eps_max must be positive");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] < 0.0 || eps[i] > eps_max) throw std::invalid_argument("nauc: eps outside [0, eps_max]");
    if (i > 0 && eps[i] < eps[i - 1]) throw std::invalid_argument("nauc: eps must be sorted");
  }
  double area = eps.front() * acc.front() + (eps_max - eps.back()) * acc.back();
  for (std::size_t i = 1; i < eps.size(); ++i) area += 0.5 * (eps[i] - eps[i - 1]) * (acc[i] + acc[i - 1]);
  return area / eps_max;
}

double exact_nauc(std::span<const double> radii, double eps_max) {
  if (radii.empty()) throw std::invalid_argument("exact_nauc: no samples");
  if (!(eps_max > 0.0)) throw std::invalid_argument("exact_nauc: eps_max must be positive");
  double total = 0.0;
  for (double r : radii) total += std::clamp(r, 0.0, eps_max) / eps_max;
  return total / static_cast<double>(radii.size());
}

double exact_radius(const Vector& w, const TestPoint& p, Norm norm) {
  const double score = w.dot(p.x);
  if (p.y * score <= 0.0) return 0.0;
  return radii::margin_radius(w, p.x, norm).radius;
}

std::vector<double> uniform_grid(double eps_max, std::size_t points) {
  if (!(eps_max > 0.0)) throw std::invalid_argument("uniform_grid: eps_max must be positive");
  if (points < 2) throw std::invalid_argument("uniform_grid: need at least two points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = eps_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  grid.back() = eps_max;
  return grid;
}

double default_eps_max(const Vector& w, std::span<const TestPoint> testset, Norm norm) {
  double largest = 0.0;
  for (const auto& p : testset) largest = std::max(largest, exact_radius(w, p, norm));
  return largest > 0.0 ? 2.0 * largest : 1.0;
}

RobustnessCurve sweep_curve(const Vector& w, std::span<const TestPoint> testset, Norm norm,
                            std::span<const double> eps_grid, std::span<const AttackTemplate> suite) {
  if (testset.empty()) throw std::invalid_argument("sweep_curve: empty test set");
  if (suite.empty()) throw std::invalid_argument("sweep_curve: empty attack suite");
  if (eps_grid.empty() || eps_grid.front() < 0.0) throw std::invalid_argument("sweep_curve: bad grid");
  for (std::size_t i = 1; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > eps_grid[i - 1])) throw std::invalid_argument("sweep_curve: grid must increase");
  }
  for (const auto& p : testset) {
    if (p.x.size() != w.size()) throw DimensionError("sweep_curve: test point has the wrong dimension");
  }

  const LinearModel model(w);
  RobustnessCurve curve;
  curve.norm = norm;
  curve.eps_grid.assign(eps_grid.begin(), eps_grid.end());
  curve.eps_max = eps_grid.back();

  std::vector<double> radius(testset.size());
  for (std::size_t i = 0; i < testset.size(); ++i) radius[i] = exact_radius(w, testset[i], norm);

  std::vector<bool> alive(testset.size(), true);
  const double n = static_cast<double>(testset.size());
  for (std::size_t g = 0; g < eps_grid.size(); ++g) {
    const double eps = eps_grid[g];
    std::size_t robust_pgd = 0;
    std::size_t robust_exact = 0;
    for (std::size_t i = 0; i < testset.size(); ++i) {
      robust_exact += radius[i] > eps ? 1 : 0;
      if (!alive[i]) continue;
      std::vector<AttackConfig> cfgs;
      for (const auto& t : suite) {
        AttackConfig c;
        c.norm = norm;
        c.epsilon = eps;
        c.steps = t.steps;
        if (t.step_size && eps > 0.0) c.step_size = *t.step_size * eps;
        c.restarts = t.restarts;
        c.seed = t.seed;
        c.objective = t.objective;
        cfgs.push_back(c);
      }
      // per-sample seeds, independent of which samples are still alive
      for (auto& c : cfgs) c.seed = c.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
      alive[i] = robust_accuracy(model, testset.subspan(i, 1), cfgs) > 0.0;
      robust_pgd += alive[i] ? 1 : 0;
    }
    curve.acc_pgd.push_back(robust_pgd / n);
    curve.acc_exact.push_back(robust_exact / n);
  }

  if (curve.eps_max > 0.0) {
    if (eps_grid.size() >= 2) curve.nauc_pgd = nauc(curve.eps_grid, curve.acc_pgd, curve.eps_max);
    curve.nauc_exact = exact_nauc(radius, curve.eps_max);
  }
  return curve;
}

}  // namespace robustopt::attack
