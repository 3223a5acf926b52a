#include <doctest.h>

#include <stdexcept>

#include "cablecone/mapping_cone.hpp"

using namespace cablecone;

TEST_SUITE("mapping_cone") {
  TEST_CASE("trefoil n=2 cone") {
    const FilteredComplex f = build_cone_plus_one(staircase_t2(3), 2);
    CHECK(f.meta().window == Window{0, 2});
    CHECK(f.size() == 15);
    CHECK(validate(f).empty());
    const FilteredGen& beta = f.gen(*f.index_of("B1:b2"));
    CHECK(beta.tower == Tower::B);
    CHECK(beta.filt_i == 0);
    CHECK(beta.filt_j == Rational(-1));
  }

  TEST_CASE("unknot cone is one generator") {
    const FilteredComplex f = build_cone_plus_one(staircase_t2(1), 1);
    CHECK(f.meta().window == Window{1, 1});
    REQUIRE(f.size() == 1);
    CHECK(f.gen(0).tower == Tower::A);
    CHECK(f.arrow_count() == 0);
  }

  TEST_CASE("1/p formulas") {
    CHECK(shift_index(1, 2) == 1);
    CHECK(alexander_value(1, 2) == Rational(3, 4));
    CHECK(shift_index(-2, 3) == -1);
    CHECK(alexander_value(-2, 3) == Rational(-2, 3));
    for (Int l = -4; l <= 4; ++l) {
      CHECK(shift_index(l, 1) == l);
      CHECK(alexander_value(l, 1) == Rational(l));
      CHECK(tower_grading_shift(l, 1) == Rational(l * l - l));
    }
    CHECK(lens_d_invariant(1, 0) == Rational(0));
    CHECK(lens_d_invariant(2, 0) == Rational(-1, 4));
  }

  TEST_CASE("p = 1 reproduces the +1 cone") {
    const KnotComplex t3 = staircase_t2(3);
    for (Int n = 1; n <= 3; ++n) {
      const FilteredComplex over = build_cone_one_over_p(t3, n, 1);
      const Window w = over.meta().window;
      const FilteredComplex plus = build_cone_plus_one(t3, n, w.lo, w.hi);
      CHECK(plus.gens() == over.gens());
      REQUIRE(plus.size() == over.size());
      for (std::size_t k = 0; k < plus.size(); ++k) CHECK(plus.arrows(k) == over.arrows(k));
    }
  }

  TEST_CASE("J constant") {
    CHECK(j_constant(1, 2, 1) == Rational(1));
    CHECK(j_constant(0, 3, 1) == Rational(-3));
    const auto [i, j] = b_filtration(0, 0, 1, 2, 1);
    CHECK(i == 0);
    CHECK(j == Rational(-1));
  }

  TEST_CASE("cones over the corpus are valid") {
    for (Int q : {1, 3, 5, 7})
      for (Int n = 1; n <= 4; ++n)
        for (Int p = 1; p <= 3; ++p) {
          const SurgerySpec spec = p == 1 ? SurgerySpec::plus_one() : SurgerySpec::one_over(p);
          const FilteredComplex f = build_cone(staircase_t2(q), n, spec);
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(p);
          CHECK(validate(f).empty());
          if (p == 1)
            for (const auto& g : f.gens()) CHECK(g.gr.is_integer());
        }
  }

  TEST_CASE("windows") {
    CHECK_THROWS_AS(check_window(1, 2, SurgerySpec::plus_one(), Window{1, 1}), std::invalid_argument);
    CHECK_NOTHROW(check_window(1, 2, SurgerySpec::plus_one(), Window{-3, 5}));
    CHECK(build_cone(staircase_t2(3), 2, SurgerySpec::plus_one(), Window{-1, 3}).size() == 5 * 3 + 4 * 3);
  }

  TEST_CASE("surgery labels") {
    CHECK(SurgerySpec::plus_one().to_string() == "1");
    CHECK(SurgerySpec::one_over(3).to_string() == "1/3");
    CHECK_THROWS(SurgerySpec::one_over(0));
  }
}
