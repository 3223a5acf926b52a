#include <doctest.h>

#include "cablecone/oracles/cancellation_orders.hpp"
#include "cablecone/oracles/plus_cone.hpp"
#include "cablecone/oracles/x_rewriting.hpp"

using namespace cablecone;
using namespace cablecone::oracles;

TEST_SUITE("oracles") {
  TEST_CASE("plus cone d") {
    for (Int p = 1; p <= 3; ++p) CHECK(plus_cone_d(1, p) == Rational(0));
    CHECK(plus_cone_d(3, 1) == Rational(-2));
    CHECK(plus_cone_d(3, 2) == Rational(-2));
  }

  TEST_CASE("Laurent rank by elimination") {
    CHECK(laurent_rank(build_cone_plus_one(staircase_t2(3), 2)) == 1);
    CHECK(laurent_rank(build_cone(staircase_t2(7), 3, SurgerySpec::one_over(3))) == 1);
  }

  TEST_CASE("every cancellation order of the trefoil n=1 cone") {
    const auto outcomes = all_cancellation_outcomes(build_cone_plus_one(staircase_t2(3), 1));
    REQUIRE_FALSE(outcomes.empty());
    for (const auto& r : outcomes) CHECK(r.size() == 3);
    CHECK_THROWS(all_cancellation_outcomes(build_cone_plus_one(staircase_t2(3), 2), 12));
  }

  TEST_CASE("cone generator count") {
    CHECK(count_cone_generators(3, Window{0, 2}) == 15);
    CHECK(count_cone_generators(1, Window{1, 1}) == 1);
  }

  TEST_CASE("mixed products rewrite to zero") {
    CHECK(rewrites_to_zero(concat(word_of(RUMonomial{1, 0}), word_of(RVMonomial{1, 0}))));
    CHECK(rewrites_to_zero(concat(word_of(RUMonomial{1, 0}), word_of(RVMonomial{0, 1}))));
    CHECK(rewrites_to_zero(concat(word_of(RUMonomial{-2, 1}), word_of(RVMonomial{-1, 2}))));
    CHECK_FALSE(rewrite_normal_form(concat(word_of(RUMonomial{1, 0}), word_of(RVMonomial{0, 1}))));
  }

  TEST_CASE("one-sided normal forms") {
    for (Int i1 = -2; i1 <= 3; ++i1)
      for (Int i2 = -2; i2 <= 3; ++i2) {
        const RUMonomial a{i1, 1};
        const RUMonomial b{i2, 2};
        const auto nf = rewrite_normal_form(concat(word_of(a), word_of(b)));
        REQUIRE(nf);
        CHECK(*nf == x_mul(XPoly::from(a), XPoly::from(b)));
      }
    CHECK(rewrite_normal_form(XWord{}) == XPoly::one());
  }
}
