#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "harness.hpp"

namespace cablecone::verify {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "paper") return Suite::Paper;
  if (name == "properties") return Suite::Properties;
  if (name == "oracles") return Suite::Oracles;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Paper:
      return "paper";
    case Suite::Properties:
      return "properties";
    case Suite::Oracles:
      return "oracles";
  }
  return "";
}

CheckResult run_criterion(int id) {
  using namespace detail;
  switch (id) {
    case 1:
      return criterion_trefoil_family();
    case 2:
      return criterion_phi_grid();
    case 3:
      return criterion_complex_c();
    case 4:
      return criterion_delta_shifts();
    case 5:
      return criterion_properties();
    case 6:
      return criterion_truncation();
    case 7:
      return criterion_oracle_d();
    case 8:
      return criterion_symmetry_additivity();
    case 9:
      return criterion_stabilization();
    case 10:
      return criterion_local_equivalence();
  }
  throw std::out_of_range("no acceptance criterion " + std::to_string(id));
}

std::vector<int> criteria_of(Suite s) {
  switch (s) {
    case Suite::Paper:
      return {1, 2, 3, 4, 8, 9};
    case Suite::Properties:
      return {5, 6};
    case Suite::Oracles:
      return {7, 10};
  }
  return {};
}

std::vector<CheckResult> run_suite(Suite s) {
  std::vector<CheckResult> out;
  for (int id : criteria_of(s)) out.push_back(run_criterion(id));
  if (s == Suite::Oracles)
    for (auto& r : detail::oracle_pins()) out.push_back(std::move(r));
  return out;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(4) << r.id << " " << r.description << " ("
      << std::fixed << std::setprecision(2) << r.seconds << " s)";
  if (!r.detail.empty()) out << "\n     " << r.detail;
  return out.str();
}

}  // namespace cablecone::verify
