#include "robustopt/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace robustopt::io {

using nlohmann::json;

namespace {

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vector vector_from(const json& a, const char* what) {
  if (!a.is_array()) throw std::runtime_error(std::string(what) + " must be an array");
  Vector v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) throw std::runtime_error(std::string(what) + " must contain numbers");
    v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  }
  return v;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string problem_to_json(const synthetic::SyntheticProblem& prob) {
  json j;
  j["n_plus"] = prob.n_plus;
  j["n_minus"] = prob.n_minus;
  j["p"] = prob.p;
  j["resamples"] = prob.resamples;
  j["labels"] = json::array();
  for (std::size_t i = 0; i < prob.n(); ++i) j["labels"].push_back(prob.label(i));
  j["X"] = json::array();
  for (Eigen::Index r = 0; r < prob.X.rows(); ++r) j["X"].push_back(vector_json(prob.X.row(r).transpose()));
  return j.dump(2) + "\n";
}

synthetic::SyntheticProblem problem_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.contains("labels") || !j.contains("X")) throw std::runtime_error("problem JSON needs labels and X");
  const Vector labels = vector_from(j["labels"], "labels");
  const json& rows = j["X"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(labels.size()) || rows.empty()) {
    throw std::runtime_error("problem JSON: X must have one row per label");
  }
  synthetic::SyntheticProblem prob;
  const Vector first = vector_from(rows[0], "X row");
  prob.X.resize(labels.size(), first.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Vector row = vector_from(rows[r], "X row");
    if (row.size() != first.size()) throw std::runtime_error("problem JSON: ragged X");
    prob.X.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels(i) == 1.0) {
      ++prob.n_plus;
    } else if (labels(i) == -1.0) {
      ++prob.n_minus;
    } else {
      throw std::runtime_error("problem JSON: labels must be +1 or -1");
    }
  }
  prob.labels = labels;
  prob.p = j.value("p", 1.0);
  prob.resamples = j.value("resamples", 0);
  require_finite(prob.X, "problem X");
  return prob;
}

synthetic::SyntheticProblem load_problem(const std::string& path) { return problem_from_json(read_file(path)); }

std::string weights_to_json(const Weights& weights) {
  json j;
  j["kind"] = weights.kind;
  j["meta"] = weights.meta;
  j["w"] = vector_json(weights.w);
  return j.dump(2) + "\n";
}

Weights weights_from_json(std::string_view text) {
  const json j = parse(text);
  Weights out;
  if (j.is_array()) {
    out.w = vector_from(j, "weights");
    return out;
  }
  if (!j.contains("w")) throw std::runtime_error("weights JSON needs w");
  out.w = vector_from(j["w"], "w");
  out.kind = j.value("kind", "");
  if (j.contains("meta")) out.meta = j["meta"].get<std::map<std::string, std::string>>();
  require_finite(out.w, "weights");
  return out;
}

Weights load_weights(const std::string& path) { return weights_from_json(read_file(path)); }

Weights from_solution(const closed_form::ClosedFormSolution& sol) {
  Weights out;
  out.w = sol.w;
  out.kind = sol.kind == closed_form::SolutionKind::adaptive ? "adaptive" : "min_norm";
  out.meta["n_plus"] = std::to_string(sol.n_plus);
  out.meta["n_minus"] = std::to_string(sol.n_minus);
  if (sol.kind == closed_form::SolutionKind::adaptive) out.meta["tau"] = format_double(sol.tau);
  return out;
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
}

CsvWriter& CsvWriter::cell(std::string_view v) {
  if (filled_ == columns_) throw std::logic_error("CsvWriter: too many cells in row");
  if (filled_++) out_ += ',';
  out_ += v;
  return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(std::string_view(format_double(v))); }
CsvWriter& CsvWriter::cell(long long v) { return cell(std::string_view(std::to_string(v))); }
CsvWriter& CsvWriter::cell(bool v) { return cell(std::string_view(v ? "true" : "false")); }

void CsvWriter::end_row() {
  if (filled_ != columns_) throw std::logic_error("CsvWriter: row has the wrong number of cells");
  out_ += '\n';
  filled_ = 0;
}

std::string trace_to_jsonl(const optim::TrainingTrace& trace, bool include_w) {
  std::string out;
  for (const auto& r : trace.records) {
    json j;
    j["step"] = r.step;
    j["loss"] = r.loss;
    j["grad_norm"] = r.grad_norm;
    if (include_w) j["w"] = vector_json(r.w);
    out += j.dump() + "\n";
  }
  return out;
}

std::string manifest_to_json(const RunManifest& manifest) {
  json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["seed"] = manifest.seed;
  j["outputs"] = manifest.outputs;
  j["version"] = manifest.version;
  return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest) {
  if (manifest.outputs.empty()) return;
  write_atomic(manifest.outputs.front() + ".manifest.json", manifest_to_json(manifest));
}

}  // namespace robustopt::io
