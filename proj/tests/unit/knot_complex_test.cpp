#include <doctest.h>

#include <stdexcept>

#include "cablecone/knot_complex.hpp"

using namespace cablecone;

TEST_SUITE("knot_complex") {
  TEST_CASE("trefoil staircase") {
    const KnotComplex t = staircase_t2(3);
    REQUIRE(t.size() == 3);
    const auto a1 = *t.index_of("a1");
    const auto b1 = *t.index_of("b1");
    const auto b2 = *t.index_of("b2");
    CHECK(t.gen(a1).alexander() == 0);
    CHECK(t.gen(b1).alexander() == -1);
    CHECK(t.gen(b2).alexander() == 1);
    const std::vector<KnotArrow> expected{{b1, UVMonomial(0, 1)}, {b2, UVMonomial(1, 0)}};
    CHECK(t.arrows(a1) == expected);
  }

  TEST_CASE("staircase sizes and genus") {
    CHECK(staircase_t2(1).size() == 1);
    CHECK(staircase_t2(1).arrow_count() == 0);
    CHECK(staircase_t2(11).size() == 11);
    for (Int q : {1, 3, 5, 7, 9, 11}) {
      CHECK(staircase_t2(q).genus() == (q - 1) / 2);
      CHECK(validate(staircase_t2(q)).empty());
    }
    CHECK_THROWS(staircase_t2(4));
  }

  TEST_CASE("reflection") {
    const KnotComplex t7 = staircase_t2(7);
    CHECK(reflect(reflect(t7)) == t7);
    CHECK(reflect(staircase_t2(1)) == staircase_t2(1));
    const KnotComplex r = reflect(staircase_t2(3));
    CHECK(r.gen(*r.index_of("b2")).alexander() == -1);
    CHECK(find_reflection_symmetry(t7));
  }

  TEST_CASE("tensor products") {
    const KnotComplex t3 = staircase_t2(3);
    CHECK(find_relabelling(tensor(staircase_t2(1), t3), t3));
    CHECK(tensor(t3, t3).size() == 9);
    CHECK(validate(tensor(t3, reflect(staircase_t2(5)))).empty());
    CHECK(validate(tensor(t3, dual(t3))).empty());
  }

  TEST_CASE("a U^a V^b arrow raises the Alexander grading by a - b") {
    const KnotComplex c = tensor(staircase_t2(5), staircase_t2(3));
    for (std::size_t k = 0; k < c.size(); ++k)
      for (const auto& a : c.arrows(k))
        CHECK(c.gen(a.to).alexander() - c.gen(k).alexander() == a.coeff.u_exp() - a.coeff.v_exp());
  }

  TEST_CASE("validation diagnostics") {
    KnotComplex parity;
    const auto x = parity.add_generator("x", 0, 0);
    const auto y = parity.add_generator("y", 0, 0);
    parity.toggle_arrow(x, y, UVMonomial(0, 0));
    const auto v = validate(parity);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind != Violation::Kind::DSquared);

    KnotComplex chain;
    const auto p = chain.add_generator("x", 0, 0);
    const auto q = chain.add_generator("y", -1, -1);
    const auto r = chain.add_generator("z", -2, -2);
    chain.toggle_arrow(p, q, UVMonomial(0, 0));
    chain.toggle_arrow(q, r, UVMonomial(0, 0));
    const auto w = validate(chain);
    REQUIRE(w.size() == 1);
    CHECK(w.front().kind == Violation::Kind::DSquared);
  }

  TEST_CASE("toggling an arrow twice removes it") {
    KnotComplex c = staircase_t2(3);
    c.toggle_arrow(*c.index_of("a1"), *c.index_of("b1"), UVMonomial(0, 1));
    CHECK(c.arrow_count() == 1);
  }
}
