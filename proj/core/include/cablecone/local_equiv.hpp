#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cablecone/coefficients.hpp"
#include "cablecone/knot_complex.hpp"
#include "cablecone/reduction.hpp"

namespace cablecone {

// Basis-change passes reached a fixed point that is not a standard complex.
class StandardizationIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The complex is not knot-like over the requested ring: localized homology
// on one side has rank other than 1 (over F2[U,V]/(UV) this happens when the
// ambient manifold is not an L-space).
class NotKnotLike : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

KnotComplex to_uv_presentation(const FilteredComplex& f);
KnotComplex to_uv_presentation(const ReducedComplex& r);

struct StandardComplexZ {
  std::vector<Int> seq;
  // Gradings of the distinguished start generator t0.
  Int start_gr_u = 0;
  Int start_gr_v = 0;
};

struct XEdge {
  int sign = 1;
  Int i = 0;
  Int j = 0;
  friend bool operator==(const XEdge&, const XEdge&) = default;
};

struct StandardComplexX {
  // Odd positions (1-based) are R_U edges U_B^i W_B^j, even ones R_V edges V_T^i W_T^j.
  std::vector<XEdge> edges;
  Int start_gr_u = 0;
  Int start_gr_v = 0;
};

StandardComplexZ standardize_z(const KnotComplex& c);
StandardComplexX standardize_x(const KnotComplex& c);

// phi_i is stored under the key (i, 0).
using PhiTable = std::map<std::pair<Int, Int>, Int>;
PhiTable phi_from_standard(const StandardComplexZ& s);
// R_U edge count.
PhiTable phi_from_standard(const StandardComplexX& s);
// The same table counted on R_V edges (should agree with the R_U count).
PhiTable phi_from_standard_rv(const StandardComplexX& s);
PhiTable phi_sum(const PhiTable& a, const PhiTable& b);

bool is_symmetric(const StandardComplexZ& s);
bool is_symmetric(const StandardComplexX& s);

// Complex over the ring X with homogeneous entries.
class XComplex {
 public:
  std::size_t add_generator(std::string id, Int gr_u, Int gr_v);
  void add_to_entry(std::size_t from, std::size_t to, const XPoly& p);

  std::size_t size() const { return gens_.size(); }
  const KnotGen& gen(std::size_t k) const { return gens_.at(k); }
  const std::map<std::size_t, XPoly>& row(std::size_t k) const { return rows_.at(k); }

 private:
  std::vector<KnotGen> gens_;
  std::vector<std::map<std::size_t, XPoly>> rows_;
};

XComplex embed_in_x(const KnotComplex& c);
// Mod UV: mixed arrows dropped, U^a -> U_B^a, V^b -> V_T^b.
XComplex embed_mod_uv(const KnotComplex& c);
KnotComplex realize(const StandardComplexZ& s);
XComplex realize(const StandardComplexX& s);

enum class LocalRing { UVQuotient, X };

struct LocalEquivLimits {
  Int exponent_bound = 2;
  std::size_t max_generators = 10;
  Int max_exponent_bound = 6;
  std::size_t max_unknowns = 1U << 20;
};

// Decides whether grading-preserving chain maps C1 -> C2 and C2 -> C1 exist
// that induce isomorphisms on homology localized at each side of the ring.
// Map entries are monomials with exponents bounded by limits.exponent_bound.
// Solved as an affine system over F2.
bool verify_local_equiv(const KnotComplex& c1, const KnotComplex& c2, Int exponent_bound,
                        LocalRing ring = LocalRing::UVQuotient);
bool verify_local_equiv(const XComplex& c1, const XComplex& c2, const LocalEquivLimits& limits, LocalRing ring);
// Existence of a local map in one direction.
bool local_map_exists(const XComplex& from, const XComplex& to, const LocalEquivLimits& limits, LocalRing ring);

// Grading-preserving chain isomorphism over F2[U,V] (not only a relabelling).
bool are_isomorphic(const KnotComplex& a, const KnotComplex& b, std::size_t max_nullity = 22);

}  // namespace cablecone
