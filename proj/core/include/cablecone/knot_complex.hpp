#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cablecone/coefficients.hpp"

namespace cablecone {

struct KnotGen {
  std::string id;
  Int gr_u = 0;
  Int gr_v = 0;

  // (gr_u - gr_v) / 2; throws if the parities differ.
  Int alexander() const;
  friend bool operator==(const KnotGen&, const KnotGen&) = default;
};

struct KnotArrow {
  std::size_t to = 0;
  UVMonomial coeff;
  friend auto operator<=>(const KnotArrow&, const KnotArrow&) = default;
};

// Finitely generated bigraded complex over F2[U,V]. Arrows out of each
// generator are kept sorted by (target, coefficient).
class KnotComplex {
 public:
  std::size_t add_generator(std::string id, Int gr_u, Int gr_v);
  // Adds the term coeff*to to d(from); an identical existing term cancels (F2).
  void toggle_arrow(std::size_t from, std::size_t to, UVMonomial coeff);

  std::size_t size() const { return gens_.size(); }
  const KnotGen& gen(std::size_t k) const { return gens_.at(k); }
  const std::vector<KnotGen>& gens() const { return gens_; }
  const std::vector<KnotArrow>& arrows(std::size_t k) const { return diff_.at(k); }
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t arrow_count() const;
  // max |A| over generators; 0 for the empty complex.
  Int genus() const;

  friend bool operator==(const KnotComplex&, const KnotComplex&) = default;

 private:
  std::vector<KnotGen> gens_;
  std::vector<std::vector<KnotArrow>> diff_;
};

// Staircase of T(2,q): a_1..a_g, b_1..b_{g+1}, d a_i = U b_{i+1} + V b_i.
KnotComplex staircase_t2(Int q);
// Swap the two gradings and the two exponents (the flip map for knots in S^3).
KnotComplex reflect(const KnotComplex& c);
// Dual complex: arrows reversed, gradings negated. Presents the mirror knot.
KnotComplex dual(const KnotComplex& c);
KnotComplex tensor(const KnotComplex& c1, const KnotComplex& c2);

struct Violation {
  enum class Kind { DSquared, GradingU, GradingV, Parity };
  Kind kind;
  std::string message;
};
std::vector<Violation> validate(const KnotComplex& c);

// Generator permutation sigma with reflect(c) mapped isomorphically onto c:
// gr(sigma x) = swap(gr x) and every arrow x -> U^a V^b y becomes
// sigma x -> U^b V^a sigma y. Backtracking search; nullopt if none exists.
std::optional<std::vector<std::size_t>> find_reflection_symmetry(const KnotComplex& c);

// Generator bijection (pure relabelling plus a uniform grading shift) if one exists.
std::optional<std::vector<std::size_t>> find_relabelling(const KnotComplex& a, const KnotComplex& b,
                                                        Int shift_u = 0, Int shift_v = 0);

}  // namespace cablecone
