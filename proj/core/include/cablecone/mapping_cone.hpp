#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cablecone/knot_complex.hpp"
#include "cablecone/rational.hpp"

namespace cablecone {

struct SurgerySpec {
  enum class Kind { IntegerPlusOne, OneOverP };
  Kind kind = Kind::IntegerPlusOne;
  Int p = 1;

  static SurgerySpec plus_one() { return {}; }
  static SurgerySpec one_over(Int p);
  // "1" or "1/p".
  std::string to_string() const;
  friend bool operator==(const SurgerySpec&, const SurgerySpec&) = default;
};

enum class Tower { A, B };

struct FilteredGen {
  std::string id;
  Tower tower = Tower::A;
  Int index = 0;
  std::string base;
  Int filt_i = 0;
  Rational filt_j;
  Rational gr;
  friend bool operator==(const FilteredGen&, const FilteredGen&) = default;
};

// Term U^u_power * to in the differential, over F2[U, U^-1].
struct ConeArrow {
  std::size_t to = 0;
  Int u_power = 0;
  friend auto operator<=>(const ConeArrow&, const ConeArrow&) = default;
};

struct Window {
  Int lo = 0;
  Int hi = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

struct ConeMeta {
  Int n = 1;
  SurgerySpec surgery;
  Window window;
  Int genus = 0;
  friend bool operator==(const ConeMeta&, const ConeMeta&) = default;
};

// Generators are the i = 0 representatives; U^c * g has (I, J, gr) lowered by (c, c, 2c).
class FilteredComplex {
 public:
  FilteredComplex() = default;
  explicit FilteredComplex(ConeMeta meta) : meta_(meta) {}

  std::size_t add_generator(FilteredGen g);
  // Toggle the term U^u_power * to in d(from). Two terms with the same
  // target and different powers are rejected: homogeneity forbids them.
  void toggle_arrow(std::size_t from, std::size_t to, Int u_power);

  std::size_t size() const { return gens_.size(); }
  const FilteredGen& gen(std::size_t k) const { return gens_.at(k); }
  const std::vector<FilteredGen>& gens() const { return gens_; }
  const std::vector<ConeArrow>& arrows(std::size_t k) const { return diff_.at(k); }
  const ConeMeta& meta() const { return meta_; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t arrow_count() const;

  // Filtration drops (dI, dJ) of the term U^c * to in d(from).
  std::pair<Int, Rational> drops(std::size_t from, const ConeArrow& a) const;

  friend bool operator==(const FilteredComplex&, const FilteredComplex&) = default;

 private:
  ConeMeta meta_;
  std::vector<FilteredGen> gens_;
  std::vector<std::vector<ConeArrow>> diff_;
};

// d^2 = 0, filtration monotonicity, degree -1; empty when valid.
std::vector<std::string> validate(const FilteredComplex& f);

// r(l) = floor((2l + p) / 2p).
Int shift_index(Int l, Int p);
// s_l: l/p for odd p, (2l+1)/2p for even p.
Rational alexander_value(Int l, Int p);
// The q in {0..p-1} labelling the lens-space factor of tower l.
Int lens_label(Int l, Int p);
// d(-L(p,1), u_q) = 1/4 - (p - 2q)^2 / 4p.
Rational lens_d_invariant(Int p, Int q);
// Absolute grading shift of tower A_l (B_l is one lower).
Rational tower_grading_shift(Int l, Int p);
// Constant term nl - n(np-1)/2 (p odd) or nl - n(np-2)/2 (p even) of J.
Rational j_constant(Int l, Int n, Int p);
// (I, J) of [x, i, j] in A_l and in B_l.
std::pair<Int, Rational> a_filtration(Int i, Int j, Int l, Int n, Int p);
std::pair<Int, Rational> b_filtration(Int i, Int j, Int l, Int n, Int p);

Window default_window(Int genus, Int n, SurgerySpec spec);
void check_window(Int genus, Int n, SurgerySpec spec, Window w);  // throws std::invalid_argument

FilteredComplex build_cone_plus_one(const KnotComplex& c, Int n, std::optional<Int> a = {}, std::optional<Int> b = {});
FilteredComplex build_cone_one_over_p(const KnotComplex& c, Int n, Int p, std::optional<Int> l_lo = {},
                                      std::optional<Int> l_hi = {});
FilteredComplex build_cone(const KnotComplex& c, Int n, SurgerySpec spec, std::optional<Window> window = {});
// The +1 cone on the window [n - l, l], with no lower bound on l. For staircase
// inputs X<n> carries the same local-equivalence class as the full cone.
FilteredComplex build_cone_truncated(const KnotComplex& c, Int n, Int l);

}  // namespace cablecone
