#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "cablecone/coefficients.hpp"

namespace cablecone::oracles {

// Monomial word in U_B, V_T and the telescoping generators W_{B,k}, W_{T,k}
// (k over all integers), stored as letter counts.
struct XWord {
  Int u_b = 0;
  Int v_t = 0;
  std::map<Int, Int> w_b;
  std::map<Int, Int> w_t;
  friend auto operator<=>(const XWord&, const XWord&) = default;
};

XWord word_of(const RUMonomial& m);
XWord word_of(const RVMonomial& m);
XWord concat(const XWord& a, const XWord& b);

// Breadth-first search over the rewrites W_{B,k} <-> U_B W_{B,k-1},
// W_{T,k} <-> V_T W_{T,k-1}, looking for a word containing U_B V_T.
// Gives up (returns false) after max_states states.
bool rewrites_to_zero(const XWord& w, std::size_t max_states = 20000);

// Normal form reached by rewriting alone: the word collapsed to a single
// R_U or R_V monomial, or the constant 1 for the empty word. nullopt if the
// word mixes both sides.
std::optional<XPoly> rewrite_normal_form(const XWord& w);

}  // namespace cablecone::oracles
