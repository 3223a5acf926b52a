#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cablecone/knot_complex.hpp"
#include "cablecone/local_equiv.hpp"
#include "cablecone/mapping_cone.hpp"

namespace cablecone {

// Bad flags, unreadable files, malformed or invalid complexes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineInput {
  std::string knot_label;  // "torus:2,3" or "cfk:<path>"
  KnotComplex knot;
  Int n = 1;
  SurgerySpec surgery;
  std::optional<Window> window;
  bool mirror = false;
};

// "torus:2,q" -> staircase. Throws InputError.
KnotComplex knot_from_spec(const std::string& spec);
SurgerySpec parse_surgery(const std::string& text);
Window parse_window(const std::string& text);

struct ReportArrow {
  std::string source;
  std::string target;
  Int u_power = 0;
  Int drop_i = 0;
  Rational drop_j;
  friend bool operator==(const ReportArrow&, const ReportArrow&) = default;
};

struct Report {
  // Input echo.
  std::string knot;
  Int cable_n = 1;
  std::string surgery;
  Window window;
  bool mirror = false;
  std::string cfk;

  std::size_t generators_cone = 0;
  std::size_t generators_reduced = 0;
  std::vector<ReportArrow> reduced_differential;

  // "ok", "not_applicable" or "incomplete", with a reason when not ok.
  std::string standard_sequence_status;
  std::string standard_sequence_detail;
  std::vector<Int> standard_sequence;
  std::string standard_complex_x_status;
  std::string standard_complex_x_detail;
  std::vector<XEdge> standard_complex_x;

  PhiTable phi;
  PhiTable phi_ij;
  Rational d_invariant;
  Int homology_rank = 0;

  std::size_t cancellations = 0;
  std::string provenance_digest;

  friend bool operator==(const Report&, const Report&) = default;
};

Report run_pipeline(const PipelineInput& input);
// 0 on success, 2 when a standardization is incomplete.
int exit_code(const Report& r);

enum class ReportFormat { Json, Text };
std::string serialize_report(const Report& r, ReportFormat format);
// Inverse of the JSON serialization. Throws InputError on malformed input.
Report parse_report_json(const std::string& text);

}  // namespace cablecone
