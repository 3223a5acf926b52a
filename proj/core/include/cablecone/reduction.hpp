#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cablecone/mapping_cone.hpp"

namespace cablecone {

struct Cancellation {
  std::string source;
  std::string target;
  Int u_power = 0;
  // Generators whose differential was rewritten by the zig-zag step.
  std::vector<std::string> rewritten;
  friend bool operator==(const Cancellation&, const Cancellation&) = default;
};

struct ReducedComplex {
  FilteredComplex complex;
  std::vector<Cancellation> log;
};

// Arrows with filtration drops (0, 0), in (source, target) order.
std::vector<std::pair<std::size_t, std::size_t>> eligible_arrows(const FilteredComplex& f);
// Gaussian cancellation of the arrow source -> target (any drops).
FilteredComplex cancel_arrow(const FilteredComplex& f, std::size_t source, std::size_t target);
bool is_reduced(const FilteredComplex& f);
enum class ReductionOrder {
  Stored,
  // Arrows inside a single B tower, then inside a single A tower, then the rest.
  TowerLocalFirst,
};
ReducedComplex reduce(const FilteredComplex& f, ReductionOrder order = ReductionOrder::Stored);

struct LaurentHomology {
  // Rank over F2[U, U^-1] keyed by gr mod 2, the key in [0, 2).
  std::map<Rational, Int> rank_by_coset;
  Int total() const;
};
LaurentHomology homology_laurent(const FilteredComplex& f);

// Bottom grading of the U-nontorsion tower in the I >= 0 quotient.
// Throws std::domain_error unless the Laurent homology has rank 1.
Rational d_invariant(const FilteredComplex& f);

}  // namespace cablecone
