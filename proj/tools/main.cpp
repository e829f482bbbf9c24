// robustopt command-line interface.
//
// Exit codes: 0 success, 1 check failure or runtime error, 2 usage error.
#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "robustopt/attack.hpp"
#include "robustopt/closed_form.hpp"
#include "robustopt/errors.hpp"
#include "robustopt/io.hpp"
#include "robustopt/landscape.hpp"
#include "robustopt/optimizers.hpp"
#include "robustopt/radii.hpp"
#include "robustopt/robust_loss.hpp"
#include "robustopt/synthetic.hpp"
#include "robustopt/verify.hpp"

namespace {

using namespace robustopt;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Every option of the subcommand, given or defaulted, for the manifest.
std::map<std::string, std::string> collect_parameters(const CLI::App& sub) {
  std::map<std::string, std::string> out;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
      if (value.empty()) value = "true";
    } else {
      value = opt->get_default_str();
    }
    out[opt->get_lnames()[0]] = value;
  }
  return out;
}

void finish(const CLI::App& sub, std::uint64_t seed, std::vector<std::string> outputs) {
  io::RunManifest m;
  m.command = sub.get_name();
  m.parameters = collect_parameters(sub);
  m.seed = seed;
  m.outputs = std::move(outputs);
  m.version = ROBUSTOPT_VERSION;
  io::write_manifest(m);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    io::write_atomic(path, content);
  }
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::optional<std::size_t> n_plus, n_minus, n;
  double p = 0.7;
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen(const CLI::App& sub, const GenArgs& a) {
  synthetic::SyntheticProblem prob;
  if (a.n) {
    if (!(a.p > 0.5 && a.p <= 1.0)) throw UsageError("--p must lie in (0.5, 1]");
    prob = synthetic::generate_random(*a.n, a.p, a.seed);
  } else if (a.n_plus && a.n_minus) {
    prob = synthetic::generate(*a.n_plus, *a.n_minus);
  } else {
    throw UsageError("gen needs --n-plus and --n-minus, or --n");
  }
  emit(a.out, io::problem_to_json(prob));
  if (!a.out.empty()) finish(sub, a.seed, {a.out});
}

// ---- radii ----------------------------------------------------------------

struct RadiiArgs {
  std::size_t grid = 5;
  std::string out;
  std::size_t asym_max = 0;
  std::string asym_out;
};

std::string radii_csv(std::size_t grid) {
  io::CsvWriter csv({"solution", "n_plus", "n_minus", "y_test", "norm", "radius_printed", "radius_oracle",
                     "matches_oracle", "assumption_holds"});
  for (const auto& r : radii::radius_grid(grid)) {
    csv.cell(r.solution == closed_form::SolutionKind::adaptive ? "ada" : "sgd")
        .cell(r.n_plus)
        .cell(r.n_minus)
        .cell(r.y_test)
        .cell(to_string(r.norm))
        .cell(r.radius_printed)
        .cell(r.radius_oracle)
        .cell(r.matches_oracle)
        .cell(r.assumption_holds);
    csv.end_row();
  }
  return csv.str();
}

void run_radii(const CLI::App& sub, const RadiiArgs& a) {
  emit(a.out, radii_csv(a.grid));
  std::vector<std::string> outputs;
  if (!a.out.empty()) outputs.push_back(a.out);
  if (a.asym_max > 0) {
    io::CsvWriter csv({"n", "adaptive_l2", "adaptive_linf", "min_norm_l2_pos", "min_norm_l2_neg",
                       "min_norm_linf_pos", "min_norm_linf_neg"});
    for (const auto& r : radii::asymptotics_report(a.asym_max)) {
      csv.cell(r.n)
          .cell(r.adaptive_l2)
          .cell(r.adaptive_linf)
          .cell(r.min_norm_l2_pos)
          .cell(r.min_norm_l2_neg)
          .cell(r.min_norm_linf_pos)
          .cell(r.min_norm_linf_neg);
      csv.end_row();
    }
    if (a.asym_out.empty()) throw UsageError("--max-n needs --asymptotics FILE");
    io::write_atomic(a.asym_out, csv.str());
    outputs.push_back(a.asym_out);
  }
  if (!outputs.empty()) finish(sub, 0, outputs);
}

// ---- landscape ------------------------------------------------------------

struct LandscapeArgs {
  std::string problem;
  bool demo = false;
  double eps = 1.0;
  double grid_min = -2.0;
  double grid_max = 2.0;
  std::size_t grid_steps = 81;
  std::string out;
};

void run_landscape(const CLI::App& sub, const LandscapeArgs& a) {
  robust_loss::RobustLossSpec spec;
  if (a.demo) {
    spec = landscape::demo_2d(a.eps);
  } else if (!a.problem.empty()) {
    const auto prob = io::load_problem(a.problem);
    if (prob.dim() != 2) {
      throw UsageError("landscape export is 2-D only; problem has d = " + std::to_string(prob.dim()));
    }
    spec = robust_loss::make_spec(prob.X, prob.labels, a.eps);
  } else {
    throw UsageError("landscape needs --problem FILE or --demo-2d");
  }
  const auto land = landscape::export_grid(spec, {a.grid_min, a.grid_max, a.grid_steps});
  io::CsvWriter csv({"w1", "w2", "l1_term", "eps_term", "full_loss", "signature_code"});
  for (const auto& p : land.points) {
    csv.cell(p.w1).cell(p.w2).cell(p.l1_term).cell(p.eps_term).cell(p.full_loss).cell(
        static_cast<long long>(p.signature_code));
    csv.end_row();
  }
  emit(a.out, csv.str());
  if (!a.out.empty()) finish(sub, 0, {a.out});
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string report;
};

int run_verify(const CLI::App& sub, const VerifyArgs& a) {
  verify::Suite suite;
  try {
    suite = verify::parse_suite(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto report = verify::run(suite);
  for (const auto& c : report.checks) {
    std::printf("%-22s %-9s %s\n", std::string(verify::to_string(c.status)).c_str(), c.suite.c_str(), c.name.c_str());
  }
  if (!a.report.empty()) {
    io::write_atomic(a.report, verify::report_to_json(report));
    finish(sub, 0, {a.report});
  }
  return report.ok() ? 0 : kExitCheckFailed;
}

// ---- bound-curve ----------------------------------------------------------

struct BoundArgs {
  double c_min = 0.1;
  double c_max = 10.0;
  std::size_t steps = 100;
  std::string out;
};

void run_bound(const CLI::App& sub, const BoundArgs& a) {
  if (!(a.c_min > 0.0)) throw UsageError("--c-min must be positive");
  if (!(a.c_max > a.c_min)) throw UsageError("--c-max must exceed --c-min");
  if (a.steps < 2) throw UsageError("--steps must be >= 2");
  io::CsvWriter csv({"c", "bound"});
  for (std::size_t i = 0; i < a.steps; ++i) {
    const double c = i + 1 == a.steps ? a.c_max
                                      : a.c_min + (a.c_max - a.c_min) * static_cast<double>(i) /
                                                      static_cast<double>(a.steps - 1);
    csv.cell(c).cell(robust_loss::imbalance_bound(c));
    csv.end_row();
  }
  emit(a.out, csv.str());
  if (!a.out.empty()) finish(sub, 0, {a.out});
}

// ---- train ----------------------------------------------------------------

struct TrainArgs {
  std::string problem;
  std::string optimizer = "gd";
  double eps = 0.0;
  bool adversarial = false;
  bool pgd_inner = false;
  int pgd_steps = 10;
  long long steps = 10000;
  std::optional<double> lr;
  std::string schedule;
  double momentum = 0.9, rho = 0.9, beta1 = 0.9, beta2 = 0.999, stabilizer = 1e-8;
  std::string init = "zero";
  std::uint64_t seed = 0;
  std::size_t record_every = 100;
  double tol = 1e-8;
  double movement_tol = 1e-6;
  std::string out;
  std::string trace;
  bool trace_w = false;
};

void run_train(const CLI::App& sub, const TrainArgs& a) {
  if (a.out.empty()) throw UsageError("train needs --out FILE");
  const auto prob = io::load_problem(a.problem);
  optim::OptimizerConfig cfg;
  try {
    cfg.kind = optim::parse_kind(a.optimizer);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.learning_rate = a.lr;
  cfg.momentum = a.momentum;
  cfg.rho = a.rho;
  cfg.beta1 = a.beta1;
  cfg.beta2 = a.beta2;
  cfg.stabilizer = a.stabilizer;
  cfg.seed = a.seed;
  cfg.record_every = a.record_every;
  if (a.schedule.empty()) {
    cfg.schedule = cfg.kind == optim::OptimizerKind::subgradient ? optim::Schedule::inv_sqrt_t : optim::Schedule::constant;
  } else if (a.schedule == "constant") {
    cfg.schedule = optim::Schedule::constant;
  } else if (a.schedule == "inv_sqrt_t") {
    cfg.schedule = optim::Schedule::inv_sqrt_t;
  } else {
    throw UsageError("--schedule must be constant or inv_sqrt_t");
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto d = static_cast<Eigen::Index>(prob.dim());
  Vector init = Vector::Zero(d);
  if (a.init == "random") {
    std::mt19937_64 rng(a.seed);
    std::normal_distribution<double> g;
    for (Eigen::Index i = 0; i < d; ++i) init(i) = g(rng);
  } else if (a.init != "zero") {
    throw UsageError("--init must be zero or random");
  }

  optim::TrainOptions opts;
  opts.steps = a.steps;
  opts.tol = a.tol;
  opts.movement_tol = a.movement_tol;

  optim::TrainingTrace trace;
  if (a.adversarial) {
    if (!(a.eps > 0.0)) throw UsageError("--adversarial needs --eps > 0");
    const auto spec = robust_loss::make_spec(prob, a.eps);
    trace = a.pgd_inner ? optim::train_adversarial_pgd(spec, cfg, init, opts, a.pgd_steps)
                        : optim::train_adversarial(spec, cfg, init, opts);
  } else {
    trace = optim::train_natural(prob, cfg, init, opts);
  }

  io::Weights weights;
  weights.w = trace.final_w;
  weights.kind = "trained";
  weights.meta["optimizer"] = a.optimizer;
  weights.meta["mode"] = a.adversarial ? (a.pgd_inner ? "adversarial_pgd" : "adversarial") : "natural";
  weights.meta["steps_taken"] = std::to_string(trace.steps_taken);
  weights.meta["converged"] = trace.converged ? "true" : "false";
  if (a.adversarial) weights.meta["eps"] = io::format_double(a.eps);
  io::write_atomic(a.out, io::weights_to_json(weights));
  std::vector<std::string> outputs{a.out};
  if (!a.trace.empty()) {
    io::write_atomic(a.trace, io::trace_to_jsonl(trace, a.trace_w));
    outputs.push_back(a.trace);
  }
  std::printf("steps %lld converged %s final loss %s\n", trace.steps_taken, trace.converged ? "true" : "false",
              io::format_double(trace.records.back().loss).c_str());
  finish(sub, a.seed, outputs);
}

// ---- evaluate -------------------------------------------------------------

struct EvaluateArgs {
  std::string problem;
  std::string weights;
  std::string model;
  std::string norm = "L2";
  std::optional<double> eps_max;
  std::size_t grid_points = attack::kDefaultGridPoints;
  std::string suite = "100:1";
  std::uint64_t seed = 0;
  bool include_train = false;
  std::string out;
  std::string summary;
};

// "steps:restarts[:relative_step],..."
std::vector<attack::AttackTemplate> parse_suite_spec(const std::string& text, std::uint64_t seed) {
  std::vector<attack::AttackTemplate> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ',')) {
    std::stringstream parts(item);
    std::string f;
    std::vector<std::string> fields;
    while (std::getline(parts, f, ':')) fields.push_back(f);
    if (fields.size() < 2 || fields.size() > 3) throw UsageError("attack suite entries are steps:restarts[:step]");
    attack::AttackTemplate t;
    try {
      t.steps = std::stoi(fields[0]);
      t.restarts = std::stoi(fields[1]);
      if (fields.size() == 3) t.step_size = std::stod(fields[2]);
    } catch (const std::exception&) {
      throw UsageError("cannot parse attack suite entry '" + item + "'");
    }
    if (t.steps < 1 || t.restarts < 1 || (t.step_size && !(*t.step_size > 0.0))) {
      throw UsageError("attack suite entry '" + item + "' out of range");
    }
    t.seed = seed + out.size();
    out.push_back(t);
  }
  if (out.empty()) throw UsageError("empty attack suite");
  return out;
}

void run_evaluate(const CLI::App& sub, const EvaluateArgs& a) {
  if (a.out.empty()) throw UsageError("evaluate needs --out FILE");
  const auto prob = io::load_problem(a.problem);
  Norm norm;
  try {
    norm = parse_norm(a.norm);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (norm == Norm::L1) throw UsageError("--norm must be L2 or Linf");

  Vector w;
  if (!a.weights.empty() && !a.model.empty()) throw UsageError("give --weights or --model, not both");
  if (!a.weights.empty()) {
    w = io::load_weights(a.weights).w;
  } else if (a.model == "min_norm") {
    w = closed_form::min_norm_solution(prob).w;
  } else if (a.model == "adaptive") {
    w = closed_form::adaptive_solution(prob).w;
  } else if (a.model == "w_star") {
    w = Vector::Zero(static_cast<Eigen::Index>(prob.dim()));
    w(0) = 1.0;
  } else {
    throw UsageError("evaluate needs --weights FILE or --model {min_norm, adaptive, w_star}");
  }
  if (w.size() != static_cast<Eigen::Index>(prob.dim())) {
    throw UsageError("weights have length " + std::to_string(w.size()) + ", problem has d = " +
                     std::to_string(prob.dim()));
  }

  std::vector<synthetic::TestPoint> testset = {synthetic::make_test_point(prob, 1),
                                               synthetic::make_test_point(prob, -1)};
  if (a.include_train) {
    for (std::size_t i = 0; i < prob.n(); ++i) {
      testset.push_back({prob.X.row(static_cast<Eigen::Index>(i)).transpose(), prob.label(i)});
    }
  }
  const double eps_max = a.eps_max.value_or(attack::default_eps_max(w, testset, norm));
  if (!(eps_max > 0.0)) throw UsageError("--eps-max must be positive");
  if (a.grid_points < 2) throw UsageError("--grid-points must be >= 2");
  const auto suite = parse_suite_spec(a.suite, a.seed);
  const auto curve = attack::sweep_curve(w, testset, norm, attack::uniform_grid(eps_max, a.grid_points), suite);

  io::CsvWriter csv({"epsilon", "acc_pgd", "acc_exact", "norm"});
  for (std::size_t i = 0; i < curve.eps_grid.size(); ++i) {
    csv.cell(curve.eps_grid[i]).cell(curve.acc_pgd[i]).cell(curve.acc_exact[i]).cell(to_string(norm));
    csv.end_row();
  }
  io::write_atomic(a.out, csv.str());

  nlohmann::json s;
  s["norm"] = std::string(to_string(norm));
  s["eps_max"] = eps_max;
  s["nauc_pgd"] = curve.nauc_pgd;
  s["nauc_exact"] = curve.nauc_exact;
  const std::string summary = s.dump(2) + "\n";
  std::vector<std::string> outputs{a.out};
  if (!a.summary.empty()) {
    io::write_atomic(a.summary, summary);
    outputs.push_back(a.summary);
  }
  std::cout << summary;
  finish(sub, a.seed, outputs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robustness of adaptive vs non-adaptive solutions of linear models"};
  app.set_version_flag("--version", std::string(ROBUSTOPT_VERSION));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  int code = 0;
  auto guarded = [&code](auto&& fn) {
    return [&code, fn](CLI::App& sub) {
      try {
        if constexpr (std::is_same_v<decltype(fn(sub)), int>) {
          code = fn(sub);
        } else {
          fn(sub);
        }
      } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = kExitUsage;
      } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = kExitCheckFailed;
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = kExitCheckFailed;
      }
    };
  };

  GenArgs gen;
  {
    auto* sub = app.add_subcommand("gen", "Write a synthetic problem as JSON");
    auto* np = sub->add_option("--n-plus", gen.n_plus, "Positive samples")->check(CLI::PositiveNumber);
    auto* nm = sub->add_option("--n-minus", gen.n_minus, "Negative samples")->check(CLI::PositiveNumber);
    auto* n = sub->add_option("--n", gen.n, "Total samples (random labels)")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--p", gen.p, "P(y = +1) for random labels");
    sub->add_option("--seed", gen.seed, "Label seed");
    sub->add_option("--out", gen.out, "Output file (default stdout)");
    np->needs(nm);
    nm->needs(np);
    n->excludes(np)->excludes(nm);
    sub->callback([sub, fn = guarded([&](CLI::App& s) { run_gen(s, gen); })] { fn(*sub); });
  }

  RadiiArgs radii_args;
  {
    auto* sub = app.add_subcommand("radii", "Printed vs oracle robustness radii over a count grid");
    sub->add_option("--grid", radii_args.grid, "Counts range over [1, N]^2")->check(CLI::PositiveNumber);
    sub->add_option("--out", radii_args.out, "CSV file (default stdout)");
    sub->add_option("--max-n", radii_args.asym_max, "Also export oracle radii for n+ = n- up to this")
        ->check(CLI::Range(std::size_t{10}, std::size_t{1} << 24));
    sub->add_option("--asymptotics", radii_args.asym_out, "CSV file for --max-n");
    sub->callback([sub, fn = guarded([&](CLI::App& s) { run_radii(s, radii_args); })] { fn(*sub); });
  }

  LandscapeArgs land;
  {
    auto* sub = app.add_subcommand("landscape", "Export the robust loss and its parts on a 2-D grid");
    auto* prob = sub->add_option("--problem", land.problem, "Problem JSON with d = 2");
    auto* demo = sub->add_flag("--demo-2d", land.demo, "Use the built-in 2-D problem");
    prob->excludes(demo);
    sub->add_option("--eps", land.eps, "Perturbation budget")->check(CLI::PositiveNumber);
    sub->add_option("--grid-min", land.grid_min, "Lower grid bound");
    sub->add_option("--grid-max", land.grid_max, "Upper grid bound");
    sub->add_option("--grid-steps", land.grid_steps, "Points per axis")->check(CLI::Range(3, 10000));
    sub->add_option("--out", land.out, "CSV file (default stdout)");
    sub->callback([sub, fn = guarded([&](CLI::App& s) { run_landscape(s, land); })] { fn(*sub); });
  }

  VerifyArgs ver;
  {
    auto* sub = app.add_subcommand("verify", "Run the oracle checks");
    sub->add_option("--suite", ver.suite, "radii, geometry, optimizers, theorem4, evaluation, landscape or all");
    sub->add_option("--report", ver.report, "JSON report file");
    sub->callback([sub, fn = guarded([&](CLI::App& s) { return run_verify(s, ver); })] { fn(*sub); });
  }

  BoundArgs bound;
  {
    auto* sub = app.add_subcommand("bound-curve", "Sufficient threshold bound as a function of class imbalance");
    sub->add_option("--c-min", bound.c_min, "Smallest imbalance ratio");
    sub->add_option("--c-max", bound.c_max, "Largest imbalance ratio");
    sub->add_option("--steps", bound.steps, "Number of points");
    sub->add_option("--out", bound.out, "CSV file (default stdout)");
    sub->callback([sub, fn = guarded([&](CLI::App& s) { run_bound(s, bound); })] { fn(*sub); });
  }

  TrainArgs tr;
  {
    auto* sub = app.add_subcommand("train", "Train a linear model on a problem");
    sub->add_option("--problem", tr.problem, "Problem JSON")->required();
    sub->add_option("--optimizer", tr.optimizer, "gd, sgd, momentum, nesterov, adagrad, rmsprop, adam, subgradient");
    sub->add_option("--eps", tr.eps, "Budget for adversarial training");
    sub->add_flag("--adversarial", tr.adversarial, "Minimize the robust loss instead of least squares");
    sub->add_flag("--pgd-inner", tr.pgd_inner, "Adversarial training with PGD inner maximization");
    sub->add_option("--pgd-steps", tr.pgd_steps, "Inner PGD steps")->check(CLI::PositiveNumber);
    sub->add_option("--steps", tr.steps, "Maximum iterations")->check(CLI::NonNegativeNumber);
    sub->add_option("--lr", tr.lr, "Learning rate (default per optimizer)")->check(CLI::PositiveNumber);
    sub->add_option("--schedule", tr.schedule, "constant or inv_sqrt_t");
    sub->add_option("--momentum", tr.momentum, "Momentum coefficient");
    sub->add_option("--rho", tr.rho, "RMSprop decay");
    sub->add_option("--beta1", tr.beta1, "Adam first-moment decay");
    sub->add_option("--beta2", tr.beta2, "Adam second-moment decay");
    sub->add_option("--stabilizer", tr.stabilizer, "Adaptive denominator offset");
    sub->add_option("--init", tr.init, "zero or random");
    sub->add_option("--seed", tr.seed, "Seed for random init and sgd sampling");
    sub->add_option("--record-every", tr.record_every, "Trace sampling interval")->check(CLI::PositiveNumber);
    sub->add_option("--tol", tr.tol, "Gradient-norm tolerance (natural)");
    sub->add_option("--movement-tol", tr.movement_tol, "Iterate-spread tolerance (adversarial)");
    sub->add_option("--out", tr.out, "Weights JSON");
    sub->add_option("--trace", tr.trace, "Trace JSONL");
    sub->add_flag("--trace-w", tr.trace_w, "Include iterates in the trace");
    sub->callback([sub, fn = guarded([&](CLI::App& s) { run_train(s, tr); })] { fn(*sub); });
  }

  EvaluateArgs ev;
  {
    auto* sub = app.add_subcommand("evaluate", "Robust-accuracy curve and NAUC of a linear model");
    sub->add_option("--problem", ev.problem, "Problem JSON")->required();
    sub->add_option("--weights", ev.weights, "Weights JSON");
    sub->add_option("--model", ev.model, "min_norm, adaptive or w_star");
    sub->add_option("--norm", ev.norm, "L2 or Linf");
    sub->add_option("--eps-max", ev.eps_max, "Curve range (default twice the largest radius)");
    sub->add_option("--grid-points", ev.grid_points, "Grid size");
    sub->add_option("--attack-suite", ev.suite, "steps:restarts[:relative_step],...");
    sub->add_option("--seed", ev.seed, "Attack seed");
    sub->add_flag("--include-train", ev.include_train, "Also evaluate on the training rows");
    sub->add_option("--out", ev.out, "Curve CSV");
    sub->add_option("--summary", ev.summary, "Summary JSON");
    sub->callback([sub, fn = guarded([&](CLI::App& s) { run_evaluate(s, ev); })] { fn(*sub); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  return code;
}
