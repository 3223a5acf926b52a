#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>

#include "cablecone/rational.hpp"

namespace cablecone {

// U^a V^b in F2[U,V].
class UVMonomial {
 public:
  UVMonomial() = default;
  UVMonomial(Int u_exp, Int v_exp);  // throws std::invalid_argument on negative exponents

  Int u_exp() const { return u_; }
  Int v_exp() const { return v_; }
  bool is_one() const { return u_ == 0 && v_ == 0; }
  // Zero in F2[U,V]/(UV).
  bool vanishes_mod_uv() const { return u_ > 0 && v_ > 0; }

  friend UVMonomial operator*(const UVMonomial& a, const UVMonomial& b);
  friend auto operator<=>(const UVMonomial&, const UVMonomial&) = default;
  std::string to_string() const;

 private:
  Int u_ = 0;
  Int v_ = 0;
};

// Monomial g^i W^j of R_U (g = U_B, W = W_{B,0}) or R_V (g = V_T, W = W_{T,0}).
// Legal exponents: j >= 0, and i >= 0 whenever j == 0.
template <class Side>
struct LocalMonomial {
  Int i = 0;
  Int j = 0;

  static bool legal(Int i, Int j) { return j > 0 || (j == 0 && i >= 0); }
  static std::optional<LocalMonomial> make(Int i, Int j) {
    if (!legal(i, j)) return std::nullopt;
    return LocalMonomial{i, j};
  }
  bool is_one() const { return i == 0 && j == 0; }

  friend LocalMonomial operator*(const LocalMonomial& a, const LocalMonomial& b) {
    return LocalMonomial{checked_add(a.i, b.i), checked_add(a.j, b.j)};
  }
  // Divisibility order: (j, i) lexicographic. a divides b iff a <= b in this order.
  friend std::strong_ordering valuation_order(const LocalMonomial& a, const LocalMonomial& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  friend auto operator<=>(const LocalMonomial&, const LocalMonomial&) = default;
};

struct RUTag {};
struct RVTag {};
using RUMonomial = LocalMonomial<RUTag>;
using RVMonomial = LocalMonomial<RVTag>;

std::optional<RUMonomial> ru_divide(const RUMonomial& num, const RUMonomial& den);
std::optional<RVMonomial> rv_divide(const RVMonomial& num, const RVMonomial& den);

// Element of the ring X in canonical form: constant bit plus nonconstant
// R_U and R_V monomials.
class XPoly {
 public:
  XPoly() = default;
  static XPoly one();
  static XPoly from(const RUMonomial& m);
  static XPoly from(const RVMonomial& m);

  bool constant() const { return constant_; }
  const std::set<RUMonomial>& ru_terms() const { return ru_; }
  const std::set<RVMonomial>& rv_terms() const { return rv_; }
  bool is_zero() const { return !constant_ && ru_.empty() && rv_.empty(); }
  std::size_t term_count() const { return (constant_ ? 1 : 0) + ru_.size() + rv_.size(); }

  XPoly& operator+=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend bool operator==(const XPoly&, const XPoly&) = default;
  std::string to_string() const;

 private:
  bool constant_ = false;
  std::set<RUMonomial> ru_;
  std::set<RVMonomial> rv_;
};

XPoly embed_uv_to_x(const UVMonomial& m);
XPoly x_mul(const XPoly& a, const XPoly& b);

}  // namespace cablecone
