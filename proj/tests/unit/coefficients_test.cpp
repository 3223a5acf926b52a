#include <doctest.h>

#include <stdexcept>

#include "cablecone/coefficients.hpp"

using namespace cablecone;

namespace {

XPoly ru(Int i, Int j) { return XPoly::from(RUMonomial{i, j}); }
XPoly rv(Int i, Int j) { return XPoly::from(RVMonomial{i, j}); }

}  // namespace

TEST_SUITE("coefficients") {
  TEST_CASE("uv monomials reject negative exponents") {
    CHECK_THROWS_AS(UVMonomial(-1, 0), std::invalid_argument);
    CHECK((UVMonomial(1, 2) * UVMonomial(3, 0)) == UVMonomial(4, 2));
    CHECK(UVMonomial(1, 1).vanishes_mod_uv());
    CHECK_FALSE(UVMonomial(3, 0).vanishes_mod_uv());
  }

  TEST_CASE("local monomial domain") {
    CHECK(RUMonomial::legal(-3, 1));
    CHECK_FALSE(RUMonomial::legal(-1, 0));
    CHECK_FALSE(RUMonomial::make(0, -1));
    CHECK(RUMonomial::make(2, 0));
  }

  TEST_CASE("embedding of U^a V^b") {
    CHECK(embed_uv_to_x(UVMonomial(3, 2)) == ru(3, 2) + rv(2, 3));
    CHECK(embed_uv_to_x(UVMonomial(0, 0)) == XPoly::one());
    CHECK(embed_uv_to_x(UVMonomial(1, 0)) == ru(1, 0) + rv(0, 1));
    CHECK(embed_uv_to_x(UVMonomial(2, 0)).term_count() == 2);
  }

  TEST_CASE("products in X") {
    CHECK(x_mul(ru(1, 0), rv(1, 0)).is_zero());
    CHECK(x_mul(ru(1, 0), rv(0, 1)).is_zero());
    CHECK(x_mul(ru(-1, 1), ru(-1, 1)) == ru(-2, 2));
    CHECK(x_mul(XPoly::one(), rv(2, 1)) == rv(2, 1));
    const XPoly s = ru(1, 0) + XPoly::one();
    CHECK(x_mul(s, s) == ru(2, 0) + XPoly::one());
  }

  TEST_CASE("embedding is multiplicative") {
    for (Int a = 0; a <= 8; ++a)
      for (Int b = 0; b <= 8; ++b)
        for (Int c = 0; c <= 8; c += 2)
          for (Int d = 0; d <= 8; d += 3) {
            const UVMonomial m1(a, b);
            const UVMonomial m2(c, d);
            CHECK(embed_uv_to_x(m1 * m2) == x_mul(embed_uv_to_x(m1), embed_uv_to_x(m2)));
          }
  }

  TEST_CASE("division in R_U") {
    CHECK(ru_divide({2, 3}, {3, 2}) == RUMonomial{-1, 1});
    CHECK_FALSE(ru_divide({2, 0}, {3, 0}));
    CHECK(ru_divide({0, 1}, {0, 1}) == RUMonomial{0, 0});
    CHECK(rv_divide({4, 2}, {3, 2}) == RVMonomial{1, 0});
  }

  TEST_CASE("addition is symmetric difference") {
    XPoly p = ru(1, 0) + rv(2, 0);
    p += ru(1, 0);
    CHECK(p == rv(2, 0));
    p += rv(2, 0);
    CHECK(p.is_zero());
  }
}
