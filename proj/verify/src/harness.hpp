#pragma once

#include <chrono>
#include <cstddef>
#include <exception>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cablecone/local_equiv.hpp"
#include "cablecone/mapping_cone.hpp"
#include "cablecone/verify/suite.hpp"

namespace cablecone::verify::detail {

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) messages_.push_back(what);
  }
  bool empty() const { return messages_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    const std::size_t shown = std::min<std::size_t>(messages_.size(), 8);
    for (std::size_t k = 0; k < shown; ++k) out << (k ? "; " : "") << messages_[k];
    if (messages_.size() > shown) out << "; ... " << messages_.size() - shown << " more";
    return out.str();
  }

 private:
  std::vector<std::string> messages_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class Body>
CheckResult run_check(std::string id, std::string description, Body&& body) {
  CheckResult r{std::move(id), std::move(description), false, {}, 0.0};
  Failures f;
  Stopwatch clock;
  try {
    body(f);
  } catch (const std::exception& e) {
    f.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = clock.seconds();
  r.passed = f.empty();
  r.detail = f.summary();
  return r;
}

struct CorpusItem {
  Int q = 3;
  Int n = 1;
  SurgerySpec spec;
  std::string label() const;
};

// {T(2,q) : q in {1,3,5,7,11}} x {n = 1..4} x {+1, 1/2, 1/3}.
std::vector<CorpusItem> corpus();

std::string show(const PhiTable& t);
std::string show(const std::vector<Int>& seq);
std::string show(const std::vector<XEdge>& edges);

// Grading shift (u, v) with gr(b) = gr(a) + shift on average; nullopt if not integral.
std::optional<std::pair<Int, Int>> mean_shift(const KnotComplex& a, const KnotComplex& b);

// Criterion bodies.
CheckResult criterion_trefoil_family();
CheckResult criterion_phi_grid();
CheckResult criterion_complex_c();
CheckResult criterion_delta_shifts();
CheckResult criterion_properties();
CheckResult criterion_truncation();
CheckResult criterion_oracle_d();
CheckResult criterion_symmetry_additivity();
CheckResult criterion_stabilization();
CheckResult criterion_local_equivalence();

// Extra pins recomputed by the oracles suite.
std::vector<CheckResult> oracle_pins();

}  // namespace cablecone::verify::detail
