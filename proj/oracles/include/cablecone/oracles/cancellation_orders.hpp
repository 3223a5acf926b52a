#pragma once

#include <cstddef>
#include <vector>

#include "cablecone/mapping_cone.hpp"

namespace cablecone::oracles {

// Every reduced complex reachable by cancelling (0,0)-drop arrows in any
// order, deduplicated. Depth-first over orders with memoized states; throws
// std::length_error above max_generators.
std::vector<FilteredComplex> all_cancellation_outcomes(const FilteredComplex& f, std::size_t max_generators = 12);

// Generator count of a cone, by walking the towers of the window.
std::size_t count_cone_generators(std::size_t knot_generators, Window w);

}  // namespace cablecone::oracles
