// File formats: problem and weight JSON, CSV with 17 significant digits,
// JSON-lines traces and run manifests. Every write goes to a temporary
// file that is then renamed over the target.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "robustopt/closed_form.hpp"
#include "robustopt/linalg.hpp"
#include "robustopt/optimizers.hpp"
#include "robustopt/synthetic.hpp"

namespace robustopt::io {

/// "%.17g"; non-finite values print as nan / inf / -inf.
std::string format_double(double v);

void write_atomic(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

/// {"n_plus", "n_minus", "p", "resamples", "labels": [...], "X": [[...], ...]}
std::string problem_to_json(const synthetic::SyntheticProblem& prob);
/// Accepts any X with one +-1 label per row; n_plus / n_minus are recounted.
/// Throws std::runtime_error on malformed input.
synthetic::SyntheticProblem problem_from_json(std::string_view text);
synthetic::SyntheticProblem load_problem(const std::string& path);

struct Weights {
  Vector w;
  std::string kind;  // "adaptive", "min_norm", "trained", ...
  std::map<std::string, std::string> meta;
};

std::string weights_to_json(const Weights& weights);
Weights weights_from_json(std::string_view text);
Weights load_weights(const std::string& path);
Weights from_solution(const closed_form::ClosedFormSolution& sol);

/// Comma-separated rows; numbers via format_double.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);
  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(std::size_t v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(bool v);
  CsvWriter& cell(std::string_view v);
  CsvWriter& cell(const char* v) { return cell(std::string_view(v)); }
  void end_row();
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  std::size_t columns_ = 0;
  std::size_t filled_ = 0;
};

/// One JSON object per record: {step, loss, grad_norm[, w]}.
std::string trace_to_jsonl(const optim::TrainingTrace& trace, bool include_w);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::string version;
};

std::string manifest_to_json(const RunManifest& manifest);
/// Written next to the first output as <output>.manifest.json.
void write_manifest(const RunManifest& manifest);

}  // namespace robustopt::io
