#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cablecone::verify {

struct CheckResult {
  std::string id;  // "C1".."C10" for acceptance criteria, "pin:..." for oracle pins
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

enum class Suite { Paper, Properties, Oracles };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

// Acceptance criteria 1..10. Throws std::out_of_range for other ids.
CheckResult run_criterion(int id);
std::vector<int> criteria_of(Suite s);

// Criteria of the suite followed by its extra checks.
std::vector<CheckResult> run_suite(Suite s);

// "PASS C3  description (0.12 s)" plus the detail on failure.
std::string format_result(const CheckResult& r);

}  // namespace cablecone::verify
