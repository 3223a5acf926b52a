#pragma once

#include "cablecone/mapping_cone.hpp"
#include "cablecone/rational.hpp"

namespace cablecone::oracles {

// d(S^3_{1/p}(T(2,q))) from the unfiltered plus-flavor mapping cone. Generators
// [x, i, j] are enumerated explicitly below a grading ceiling, relative gradings
// are propagated through v and h, and the result is normalized by the unknot.
// Shares no code with the filtered pipeline.
Rational plus_cone_d(Int q, Int p);

// Bottom of the U-nontorsion tower of the same cone in its relative grading
// (A_0 tower offset zero). Exposed for tests.
Int plus_cone_tower_bottom(Int q, Int p);

// Rank of the homology over F2[U, U^-1], computed by setting U = 1.
Int laurent_rank(const FilteredComplex& f);

}  // namespace cablecone::oracles
