// Self-checks that compare closed forms against independent oracles.
//
// Each check reports pass, fail, or documented_discrepancy. The last is for
// published formulas that disagree with the oracle; the oracle value is
// what the rest of the library relies on, so those do not count as
// failures.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace robustopt::verify {

enum class Status { pass, fail, documented_discrepancy };
std::string_view to_string(Status status);

struct Check {
  std::string suite;
  std::string name;
  int criterion = 0;
  Status status = Status::pass;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool ok() const;
};

enum class Suite { radii, geometry, optimizers, theorem4, evaluation, landscape, all };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Checks grouped by acceptance criterion (1..8).
std::vector<Check> criterion(int id);

/// radii = 1-3, geometry = 4, theorem4 = 5, optimizers = 6,
/// evaluation = 7, landscape = 8.
Report run(Suite suite);

std::string report_to_json(const Report& report);

}  // namespace robustopt::verify
