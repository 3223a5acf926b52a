#include <doctest.h>

#include <stdexcept>

#include "cablecone/reduction.hpp"

using namespace cablecone;

namespace {

FilteredComplex pair_complex(Int j_target) {
  FilteredComplex f(ConeMeta{1, SurgerySpec::plus_one(), Window{0, 0}, 0});
  const auto x = f.add_generator({"x", Tower::A, 0, "x", 0, Rational(0), Rational(1)});
  const auto y = f.add_generator({"y", Tower::A, 0, "y", 0, Rational(j_target), Rational(0)});
  f.toggle_arrow(x, y, 0);
  return f;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("a flat pair cancels completely") {
    const ReducedComplex r = reduce(pair_complex(0));
    CHECK(r.complex.size() == 0);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log.front().source == "x");
    CHECK(r.log.front().target == "y");
  }

  TEST_CASE("a filtration-lowering arrow survives") {
    const FilteredComplex f = pair_complex(-1);
    CHECK(is_reduced(f));
    CHECK(reduce(f).complex == f);
  }

  TEST_CASE("trefoil cones reduce to the expected sizes") {
    CHECK(reduce(build_cone_plus_one(staircase_t2(3), 1)).complex.size() == 3);
    CHECK(reduce(build_cone_plus_one(staircase_t2(3), 2)).complex.size() == 7);
    CHECK(reduce(build_cone_plus_one(staircase_t2(1), 4)).complex.size() == 5);
  }

  TEST_CASE("tower-local order keeps one beta per B tower") {
    const ReducedComplex r = reduce(build_cone_plus_one(staircase_t2(7), 3), ReductionOrder::TowerLocalFirst);
    CHECK(is_reduced(r.complex));
    std::map<Int, int> betas;
    for (const auto& g : r.complex.gens())
      if (g.tower == Tower::B) ++betas[g.index];
    for (const auto& [s, count] : betas) CHECK(count == 1);
    CHECK(r.complex.gen(*r.complex.index_of("B1:b4")).tower == Tower::B);
  }

  TEST_CASE("reduction preserves Laurent homology and is idempotent") {
    const FilteredComplex f = build_cone(staircase_t2(5), 3, SurgerySpec::one_over(2));
    const ReducedComplex r = reduce(f);
    CHECK(homology_laurent(f).rank_by_coset == homology_laurent(r.complex).rank_by_coset);
    CHECK(homology_laurent(r.complex).total() == 1);
    const ReducedComplex again = reduce(r.complex);
    CHECK(again.log.empty());
    CHECK(again.complex == r.complex);
  }

  TEST_CASE("Laurent homology of small complexes") {
    CHECK(homology_laurent(build_cone_plus_one(staircase_t2(1), 1)).total() == 1);
    CHECK(homology_laurent(pair_complex(0)).total() == 0);
  }

  TEST_CASE("d-invariants") {
    CHECK(d_invariant(build_cone_plus_one(staircase_t2(1), 1)) == Rational(0));
    CHECK(d_invariant(build_cone_plus_one(staircase_t2(3), 1)) == Rational(-2));
    CHECK(d_invariant(build_cone(staircase_t2(3), 1, SurgerySpec::one_over(2))) == Rational(-2));
    CHECK_THROWS_AS(d_invariant(pair_complex(0)), std::domain_error);
  }

  TEST_CASE("d is independent of the window") {
    const KnotComplex t5 = staircase_t2(5);
    const Rational base = d_invariant(build_cone(t5, 2, SurgerySpec::plus_one()));
    CHECK(d_invariant(build_cone(t5, 2, SurgerySpec::plus_one(), Window{-4, 7})) == base);
  }
}
