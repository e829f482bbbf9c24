// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "robustopt/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 means none
};

constexpr Criterion kCriteria[] = {
    {1, "closed-form alpha and kernel table", 1.0},
    {2, "printed radii vs margin oracle", 0.0},
    {3, "asymptotic radii", 0.0},
    {4, "robust-loss geometry", 30.0},
    {5, "minimizer threshold", 0.0},
    {6, "optimizer limits", 60.0},
    {7, "attack evaluation and NAUC", 0.0},
    {8, "landscape convexity", 0.0},
};

}  // namespace

int main() {
  using robustopt::verify::Status;
  int failed = 0;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<robustopt::verify::Check> checks;
    std::string error;
    try {
      checks = robustopt::verify::criterion(c.id);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = error.empty();
    for (const auto& k : checks) ok = ok && k.status != Status::fail;
    const bool in_time = c.time_limit == 0.0 || secs < c.time_limit;
    ok = ok && in_time;
    failed += ok ? 0 : 1;

    std::printf("%s criterion %d: %s (%.2fs", ok ? "PASS" : "FAIL", c.id, c.title, secs);
    if (c.time_limit > 0.0) std::printf(", limit %.0fs", c.time_limit);
    std::printf(")\n");
    for (const auto& k : checks) {
      std::printf("    [%s] %s: %s\n", std::string(robustopt::verify::to_string(k.status)).c_str(), k.name.c_str(),
                  k.detail.c_str());
    }
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
