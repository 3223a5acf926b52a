#include <doctest.h>

#include "cablecone/cfk_io.hpp"
#include "cablecone/local_equiv.hpp"
#include "test_paths.hpp"

using namespace cablecone;

namespace {

KnotComplex reduced_uv(Int q, Int n) {
  return to_uv_presentation(reduce(build_cone_plus_one(staircase_t2(q), n)));
}

KnotComplex complex_c() { return parse_cfk(read_test_file("complex_c.cfk")); }

KnotComplex shifted(const KnotComplex& c, Int du, Int dv) {
  KnotComplex out;
  for (const auto& g : c.gens()) out.add_generator(g.id, g.gr_u + du, g.gr_v + dv);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) out.toggle_arrow(k, a.to, a.coeff);
  return out;
}

}  // namespace

TEST_SUITE("local_equiv") {
  TEST_CASE("uv presentation of the trefoil n=2 cone") {
    const KnotComplex k = reduced_uv(3, 2);
    CHECK(k.size() == 7);
    CHECK(validate(k).empty());
    int unit_pairs = 0;
    for (std::size_t g = 0; g < k.size(); ++g) {
      const auto& arrows = k.arrows(g);
      if (arrows.size() != 2) continue;
      const bool u_then_v = arrows[0].coeff.u_exp() + arrows[1].coeff.u_exp() == 1 &&
                            arrows[0].coeff.v_exp() + arrows[1].coeff.v_exp() == 1;
      if (u_then_v) ++unit_pairs;
    }
    CHECK(unit_pairs >= 1);
  }

  TEST_CASE("single generator") {
    const KnotComplex u = staircase_t2(1);
    CHECK(standardize_z(u).seq.empty());
    CHECK(standardize_x(u).edges.empty());
    CHECK(phi_from_standard(standardize_z(u)).empty());
    CHECK(to_uv_presentation(reduce(build_cone_plus_one(u, 1))).size() == 1);
  }

  TEST_CASE("trefoil cable sequences") {
    CHECK(standardize_z(reduced_uv(3, 1)).seq == std::vector<Int>{-1, 1});
    CHECK(standardize_z(reduced_uv(3, 2)).seq == std::vector<Int>{-1, 2, 1, -1, -2, 1});
    CHECK(standardize_z(reduced_uv(3, 3)).seq == std::vector<Int>{-1, 3, 1, -1, -2, 2, 1, -1, -3, 1});
  }

  TEST_CASE("seven-generator complex C over X") {
    const StandardComplexX sx = standardize_x(complex_c());
    const std::vector<XEdge> expected{{-1, 3, 2}, {1, 4, 2}, {1, 1, 0}, {-1, 1, 0}, {-1, 4, 2}, {1, 3, 2}};
    CHECK(sx.edges == expected);
    CHECK(is_symmetric(sx));
    const PhiTable phi{{{1, 0}, 1}, {{3, 2}, -1}, {{4, 2}, -1}};
    CHECK(phi_from_standard(sx) == phi);
    CHECK(phi_from_standard_rv(sx) == phi);
  }

  TEST_CASE("T(2,11) n=2 is not knot-like mod UV") {
    CHECK_THROWS_AS(standardize_z(reduced_uv(11, 2)), NotKnotLike);
  }

  TEST_CASE("phi from a sequence") {
    const PhiTable phi = phi_from_standard(StandardComplexZ{{-1, 2, 1, -1, -2, 1}});
    CHECK(phi == PhiTable{{{2, 0}, -1}});
    CHECK(phi_sum(phi, phi) == PhiTable{{{2, 0}, -2}});
    CHECK(phi_sum(phi, PhiTable{{{2, 0}, 1}}).empty());
  }

  TEST_CASE("symmetry of standard sequences") {
    CHECK(is_symmetric(StandardComplexZ{{-1, 2, 1, -1, -2, 1}}));
    CHECK_FALSE(is_symmetric(StandardComplexZ{{-1, 2}}));
  }

  TEST_CASE("realized standard complexes") {
    const StandardComplexZ s = standardize_z(reduced_uv(3, 2));
    const KnotComplex r = realize(s);
    CHECK(r.size() == s.seq.size() + 1);
    CHECK(r.arrow_count() == s.seq.size());
    CHECK(standardize_z(r).seq == s.seq);
  }

  TEST_CASE("local equivalence") {
    const KnotComplex t3 = staircase_t2(3);
    CHECK(verify_local_equiv(t3, t3, 2));
    const KnotComplex k = reduced_uv(3, 2);
    CHECK(verify_local_equiv(k, realize(standardize_z(k)), 2));
    CHECK_FALSE(verify_local_equiv(t3, staircase_t2(1), 2));
    CHECK(verify_local_equiv(t3, t3, 2, LocalRing::X));
    CHECK_THROWS_AS(verify_local_equiv(t3, t3, 7), ResourceLimitExceeded);
    CHECK_THROWS_AS(verify_local_equiv(reduced_uv(11, 2), t3, 2), ResourceLimitExceeded);
  }

  TEST_CASE("isomorphism search") {
    const KnotComplex t5 = staircase_t2(5);
    CHECK(are_isomorphic(t5, t5));
    CHECK_FALSE(are_isomorphic(t5, staircase_t2(3)));
    const KnotComplex k = to_uv_presentation(reduce(build_cone_truncated(staircase_t2(11), 2, 2)));
    const KnotComplex c = complex_c();
    REQUIRE(k.size() == c.size());
    Int du = 0;
    Int dv = 0;
    for (std::size_t g = 0; g < k.size(); ++g) {
      du += k.gen(g).gr_u - c.gen(g).gr_u;
      dv += k.gen(g).gr_v - c.gen(g).gr_v;
    }
    REQUIRE(du % 7 == 0);
    REQUIRE(dv % 7 == 0);
    CHECK(are_isomorphic(shifted(c, du / 7, dv / 7), k));
    CHECK_FALSE(are_isomorphic(c, k));
  }
}
