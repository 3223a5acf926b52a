#include "cablecone/local_equiv.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "gf2.hpp"

namespace cablecone {

KnotComplex to_uv_presentation(const FilteredComplex& f) {
  KnotComplex c;
  for (const auto& g : f.gens()) {
    const Int gr = g.gr.to_int();
    c.add_generator(g.id, checked_sub(gr, checked_mul(2, g.filt_i)), checked_sub(gr, checked_mul(2, g.filt_j.to_int())));
  }
  for (std::size_t k = 0; k < f.size(); ++k)
    for (const auto& a : f.arrows(k)) {
      auto [di, dj] = f.drops(k, a);
      if (!dj.is_integer())
        throw std::domain_error("non-integer J drop on " + f.gen(k).id + " -> " + f.gen(a.to).id);
      c.toggle_arrow(k, a.to, UVMonomial(di, dj.to_int()));
    }
  return c;
}

KnotComplex to_uv_presentation(const ReducedComplex& r) { return to_uv_presentation(r.complex); }

namespace {

using Mono = RUMonomial;  // (i, j) exponent pair; R_V entries reuse the same shape.
constexpr int kU = 0;
constexpr int kV = 1;

// A complex split into its R_U and R_V projections. Basis changes by
// nonconstant elements of one side leave the other side untouched; unit
// changes act on both.
class TwoSided {
 public:
  explicit TwoSided(std::size_t n) : n_(n), rank_(n) {
    for (std::size_t k = 0; k < n; ++k) rank_[k] = k;
    for (int s : {kU, kV}) {
      rows_[s].assign(n, {});
      cols_[s].assign(n, {});
    }
  }

  void toggle(int s, std::size_t from, std::size_t to, const Mono& m) {
    auto it = rows_[s][from].find(to);
    if (it == rows_[s][from].end()) {
      rows_[s][from].emplace(to, m);
      cols_[s][to].insert(from);
      return;
    }
    if (it->second != m) throw std::logic_error("inhomogeneous entry during standardization");
    rows_[s][from].erase(it);
    cols_[s][to].erase(from);
  }

  // New basis element e_a + q e_b on side s.
  void change(int s, std::size_t a, std::size_t b, const Mono& q) {
    const auto row_b = rows_[s][b];
    for (const auto& [t, m] : row_b) toggle(s, a, t, q * m);
    const std::vector<std::size_t> into_a(cols_[s][a].begin(), cols_[s][a].end());
    for (auto w : into_a) toggle(s, w, b, rows_[s][w].at(a) * q);
  }

  // Tie-break order among pivots of equal valuation.
  void shuffle_ties(std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::shuffle(rank_.begin(), rank_.end(), rng);
  }

  void unit_change(std::size_t a, std::size_t b) {
    change(kU, a, b, Mono{0, 0});
    change(kV, a, b, Mono{0, 0});
  }

  void reduce_side(int s, std::size_t& budget) {
    std::vector<bool> paired(n_, false);
    while (true) {
      if (budget-- == 0) throw StandardizationIncomplete("basis-change budget exhausted");
      std::optional<std::tuple<Mono, std::size_t, std::size_t>> best;
      std::size_t best_cost = 0;
      for (std::size_t x = 0; x < n_; ++x) {
        if (paired[x]) continue;
        for (const auto& [y, m] : rows_[s][x]) {
          if (paired[y]) continue;
          if (best && valuation_order(m, std::get<0>(*best)) > 0) continue;
          const std::size_t cost = disturbance(s, x, y, m);
          if (!best || valuation_order(m, std::get<0>(*best)) < 0 || cost < best_cost ||
              (cost == best_cost && before(m, x, y, *best))) {
            best = std::tuple{m, x, y};
            best_cost = cost;
          }
        }
      }
      if (!best) return;
      const auto [rho, x, y] = *best;
      const std::vector<std::size_t> sources(cols_[s][y].begin(), cols_[s][y].end());
      for (auto z : sources) {
        if (z == x) continue;
        apply(s, z, x, quotient(rows_[s][z].at(y), rho));
      }
      std::vector<std::pair<std::size_t, Mono>> targets(rows_[s][x].begin(), rows_[s][x].end());
      for (const auto& [t, sigma] : targets) {
        if (t == y) continue;
        apply(s, y, t, quotient(sigma, rho));
      }
      paired[x] = paired[y] = true;
    }
  }

  bool is_matching(int s) const {
    for (std::size_t g = 0; g < n_; ++g)
      if (rows_[s][g].size() + cols_[s][g].size() > 1) return false;
    return true;
  }

  // Partner of g on side s and whether the arrow points from g to it.
  std::optional<std::pair<std::size_t, bool>> partner(int s, std::size_t g) const {
    if (!rows_[s][g].empty()) return std::pair{rows_[s][g].begin()->first, true};
    if (!cols_[s][g].empty()) return std::pair{*cols_[s][g].begin(), false};
    return std::nullopt;
  }

  const Mono& entry(int s, std::size_t from, std::size_t to) const { return rows_[s][from].at(to); }
  std::size_t size() const { return n_; }

 private:
  // Entries on the other side touched by the unit changes that clearing
  // around the pivot x -> y would make.
  std::size_t disturbance(int s, std::size_t x, std::size_t y, const Mono& rho) const {
    const int o = 1 - s;
    std::size_t cost = 0;
    for (auto z : cols_[s][y])
      if (z != x && rows_[s][z].at(y) == rho) cost += rows_[o][x].size() + cols_[o][z].size();
    for (const auto& [t, sigma] : rows_[s][x])
      if (t != y && sigma == rho) cost += rows_[o][t].size() + cols_[o][y].size();
    return cost;
  }

  bool before(const Mono& m, std::size_t x, std::size_t y, const std::tuple<Mono, std::size_t, std::size_t>& b) const {
    if (auto c = valuation_order(m, std::get<0>(b)); c != 0) return c < 0;
    return std::pair{rank_[x], rank_[y]} < std::pair{rank_[std::get<1>(b)], rank_[std::get<2>(b)]};
  }

  static Mono quotient(const Mono& num, const Mono& den) {
    auto q = ru_divide(num, den);
    if (!q) throw StandardizationIncomplete("pivot does not divide a competing entry");
    return *q;
  }

  void apply(int s, std::size_t a, std::size_t b, const Mono& q) {
    if (q.is_one())
      unit_change(a, b);
    else
      change(s, a, b, q);
  }

  std::size_t n_;
  std::vector<std::size_t> rank_;
  std::vector<std::map<std::size_t, Mono>> rows_[2];
  std::vector<std::set<std::size_t>> cols_[2];
};

struct PathEdge {
  int sign;
  Mono m;
};

struct Path {
  std::vector<PathEdge> edges;
  std::size_t start = 0;
};

Path simplify_and_walk(TwoSided& t) {
  // Each reduction pass costs at most n pivots per side; unit changes made on
  // one side can disturb the other, so passes repeat a bounded number of times.
  std::size_t budget = 64 * (t.size() + 1);
  for (int pass = 0;; ++pass) {
    if (pass == 16) throw StandardizationIncomplete("sides did not simplify simultaneously");
    t.reduce_side(kU, budget);
    t.reduce_side(kV, budget);
    if (t.is_matching(kU) && t.is_matching(kV)) break;
  }
  std::vector<std::size_t> free_u;
  std::vector<std::size_t> free_v;
  for (std::size_t g = 0; g < t.size(); ++g) {
    if (!t.partner(kU, g)) free_u.push_back(g);
    if (!t.partner(kV, g)) free_v.push_back(g);
  }
  if (free_u.size() != 1 || free_v.size() != 1)
    throw NotKnotLike("localized homology ranks are " + std::to_string(free_u.size()) + " (U side) and " +
                      std::to_string(free_v.size()) + " (V side), not 1");
  Path path;
  path.start = free_v.front();
  std::size_t cur = path.start;
  int side = kU;
  while (auto p = t.partner(side, cur)) {
    const auto [next, outgoing] = *p;
    const Mono& m = outgoing ? t.entry(side, cur, next) : t.entry(side, next, cur);
    if (m.is_one()) throw StandardizationIncomplete("complex is not reduced: unit arrow on the path");
    path.edges.push_back({outgoing ? -1 : 1, m});
    cur = next;
    side = 1 - side;
  }
  if (side != kU || cur != free_u.front()) throw StandardizationIncomplete("path does not end at the U-side cycle");
  return path;
}

// Deterministic restarts with reshuffled pivot tie-breaks; the first
// attempt uses generator order.
Path standard_path(const TwoSided& base) {
  constexpr int kAttempts = 16;
  std::string last;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    TwoSided t = base;
    if (attempt > 0) t.shuffle_ties(0x5eedU + static_cast<std::uint32_t>(attempt));
    try {
      return simplify_and_walk(t);
    } catch (const StandardizationIncomplete& e) {
      last = e.what();
    }
  }
  throw StandardizationIncomplete(last + " (after " + std::to_string(kAttempts) + " pivot orders)");
}

}  // namespace

StandardComplexX standardize_x(const KnotComplex& c) {
  TwoSided t(c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) {
      const Int u = a.coeff.u_exp();
      const Int v = a.coeff.v_exp();
      t.toggle(kU, k, a.to, Mono{u, v});
      t.toggle(kV, k, a.to, Mono{v, u});
    }
  if (c.size() == 0) throw NotKnotLike("empty complex");
  const Path path = standard_path(t);
  StandardComplexX out;
  for (const auto& e : path.edges) out.edges.push_back({e.sign, e.m.i, e.m.j});
  out.start_gr_u = c.gen(path.start).gr_u;
  out.start_gr_v = c.gen(path.start).gr_v;
  return out;
}

StandardComplexZ standardize_z(const KnotComplex& c) {
  TwoSided t(c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) {
      const Int u = a.coeff.u_exp();
      const Int v = a.coeff.v_exp();
      if (u > 0 && v > 0) continue;
      if (v == 0) t.toggle(kU, k, a.to, Mono{u, 0});
      if (u == 0) t.toggle(kV, k, a.to, Mono{v, 0});
    }
  if (c.size() == 0) throw NotKnotLike("empty complex");
  const Path path = standard_path(t);
  StandardComplexZ out;
  for (const auto& e : path.edges) out.seq.push_back(e.sign * e.m.i);
  out.start_gr_u = c.gen(path.start).gr_u;
  out.start_gr_v = c.gen(path.start).gr_v;
  return out;
}

PhiTable phi_from_standard(const StandardComplexZ& s) {
  PhiTable t;
  for (std::size_t k = 0; k < s.seq.size(); k += 2) {
    const Int b = s.seq[k];
    t[{std::abs(b), 0}] += b > 0 ? 1 : -1;
  }
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

PhiTable phi_from_standard(const StandardComplexX& s) {
  PhiTable t;
  for (std::size_t k = 0; k < s.edges.size(); k += 2) t[{s.edges[k].i, s.edges[k].j}] += s.edges[k].sign;
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

PhiTable phi_from_standard_rv(const StandardComplexX& s) {
  PhiTable t;
  for (std::size_t k = 1; k < s.edges.size(); k += 2) t[{s.edges[k].i, s.edges[k].j}] -= s.edges[k].sign;
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

PhiTable phi_sum(const PhiTable& a, const PhiTable& b) {
  PhiTable t = a;
  for (const auto& [k, v] : b) t[k] += v;
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

bool is_symmetric(const StandardComplexZ& s) {
  const std::size_t n = s.seq.size();
  for (std::size_t k = 0; k < n; ++k)
    if (s.seq[k] != -s.seq[n - 1 - k]) return false;
  return true;
}

bool is_symmetric(const StandardComplexX& s) {
  const std::size_t n = s.edges.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = s.edges[k];
    const auto& b = s.edges[n - 1 - k];
    if (a.i != b.i || a.j != b.j || a.sign != -b.sign) return false;
  }
  return true;
}

std::size_t XComplex::add_generator(std::string id, Int gr_u, Int gr_v) {
  gens_.push_back(KnotGen{std::move(id), gr_u, gr_v});
  rows_.emplace_back();
  return gens_.size() - 1;
}

void XComplex::add_to_entry(std::size_t from, std::size_t to, const XPoly& p) {
  auto& e = rows_.at(from)[to];
  e += p;
  if (e.is_zero()) rows_[from].erase(to);
}

XComplex embed_in_x(const KnotComplex& c) {
  XComplex x;
  for (const auto& g : c.gens()) x.add_generator(g.id, g.gr_u, g.gr_v);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) x.add_to_entry(k, a.to, embed_uv_to_x(a.coeff));
  return x;
}

XComplex embed_mod_uv(const KnotComplex& c) {
  XComplex x;
  for (const auto& g : c.gens()) x.add_generator(g.id, g.gr_u, g.gr_v);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) {
      const Int u = a.coeff.u_exp();
      const Int v = a.coeff.v_exp();
      if (u > 0 && v > 0) continue;
      XPoly p = u == 0 && v == 0 ? XPoly::one() : (v == 0 ? XPoly::from(RUMonomial{u, 0}) : XPoly::from(RVMonomial{v, 0}));
      x.add_to_entry(k, a.to, p);
    }
  return x;
}

namespace {

// Gradings of t_0..t_m along a path; arrow x -> m y has gr(y) = gr(x) - 1 - deg m.
template <class DegreeOf>
std::vector<std::pair<Int, Int>> path_gradings(std::size_t edges, Int u0, Int v0, DegreeOf degree) {
  std::vector<std::pair<Int, Int>> gr{{u0, v0}};
  for (std::size_t k = 0; k < edges; ++k) {
    auto [du, dv, sign] = degree(k);
    auto [u, v] = gr.back();
    // sign < 0: t_k -> t_{k+1}; sign > 0: t_{k+1} -> t_k.
    if (sign < 0)
      gr.emplace_back(u - 1 - du, v - 1 - dv);
    else
      gr.emplace_back(u + 1 + du, v + 1 + dv);
  }
  return gr;
}

}  // namespace

KnotComplex realize(const StandardComplexZ& s) {
  const auto gr = path_gradings(s.seq.size(), s.start_gr_u, s.start_gr_v, [&](std::size_t k) {
    const Int len = std::abs(s.seq[k]);
    const int sign = s.seq[k] > 0 ? 1 : -1;
    return k % 2 == 0 ? std::tuple{-2 * len, Int{0}, sign} : std::tuple{Int{0}, -2 * len, sign};
  });
  KnotComplex c;
  for (std::size_t k = 0; k < gr.size(); ++k) c.add_generator("t" + std::to_string(k), gr[k].first, gr[k].second);
  for (std::size_t k = 0; k < s.seq.size(); ++k) {
    const Int len = std::abs(s.seq[k]);
    UVMonomial m = k % 2 == 0 ? UVMonomial(len, 0) : UVMonomial(0, len);
    if (s.seq[k] > 0)
      c.toggle_arrow(k + 1, k, m);
    else
      c.toggle_arrow(k, k + 1, m);
  }
  return c;
}

XComplex realize(const StandardComplexX& s) {
  const auto gr = path_gradings(s.edges.size(), s.start_gr_u, s.start_gr_v, [&](std::size_t k) {
    const auto& e = s.edges[k];
    // U_B^i W_B^j has degree (-2i, -2j); V_T^i W_T^j has degree (-2j, -2i).
    return k % 2 == 0 ? std::tuple{-2 * e.i, -2 * e.j, e.sign} : std::tuple{-2 * e.j, -2 * e.i, e.sign};
  });
  XComplex c;
  for (std::size_t k = 0; k < gr.size(); ++k) c.add_generator("t" + std::to_string(k), gr[k].first, gr[k].second);
  for (std::size_t k = 0; k < s.edges.size(); ++k) {
    const auto& e = s.edges[k];
    XPoly p = k % 2 == 0 ? XPoly::from(RUMonomial{e.i, e.j}) : XPoly::from(RVMonomial{e.i, e.j});
    if (e.sign > 0)
      c.add_to_entry(k + 1, k, p);
    else
      c.add_to_entry(k, k + 1, p);
  }
  return c;
}

namespace {

// Coefficient unknown: constant (side -1), R_U monomial (side 0) or R_V monomial (side 1).
struct Unknown {
  std::size_t from;
  std::size_t to;
  int side;
  Mono m;
};

// Equation key: (source, target, component side, monomial).
using TermKey = std::tuple<std::size_t, std::size_t, int, Int, Int>;

void product_terms(int side, const Mono& m, const XPoly& p, const std::function<void(int, const Mono&)>& emit) {
  if (side < 0) {
    if (p.constant()) emit(-1, Mono{0, 0});
    for (const auto& t : p.ru_terms()) emit(kU, Mono{t.i, t.j});
    for (const auto& t : p.rv_terms()) emit(kV, Mono{t.i, t.j});
    return;
  }
  if (p.constant()) emit(side, m);
  if (side == kU)
    for (const auto& t : p.ru_terms()) emit(kU, Mono{checked_add(m.i, t.i), checked_add(m.j, t.j)});
  else
    for (const auto& t : p.rv_terms()) emit(kV, Mono{checked_add(m.i, t.i), checked_add(m.j, t.j)});
}

bool on_side(const XPoly& p, int side) {
  return p.constant() || (side == kU ? !p.ru_terms().empty() : !p.rv_terms().empty());
}

// One-dimensional homology of the side-s support complex: a cycle z and a
// cocycle phi with phi(z) = 1 that kills all boundaries.
struct SideClass {
  gf2::BitVec cycle;
  gf2::BitVec cocycle;
};

SideClass side_class(const XComplex& c, int side) {
  const std::size_t n = c.size();
  // Columns of the support matrix: boundary of each generator.
  std::vector<gf2::BitVec> bd(n, gf2::BitVec(n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [t, p] : c.row(k))
      if (on_side(p, side)) bd[k].set(t);

  gf2::AffineSystem kernel(n);
  for (std::size_t r = 0; r < n; ++r) {
    gf2::BitVec row(n);
    for (std::size_t k = 0; k < n; ++k)
      if (bd[k].get(r)) row.set(k);
    kernel.add(row, false);
  }
  gf2::Basis image(n);
  for (const auto& b : bd) image.insert(b);
  const auto cycles = kernel.nullspace();
  const std::size_t rank = cycles.size() - image.rank();
  if (rank != 1)
    throw NotKnotLike("localized homology on the " + std::string(side == kU ? "U" : "V") + " side has rank " +
                      std::to_string(rank));
  gf2::BitVec z;
  for (const auto& cyc : cycles)
    if (!image.contains(cyc)) {
      z = cyc;
      break;
    }
  gf2::AffineSystem dual(n);
  for (const auto& b : bd) dual.add(b, false);
  dual.add(z, true);
  auto phi = dual.solve();
  if (!phi) throw std::logic_error("no cocycle dual to the homology generator");
  return {z, *phi};
}

}  // namespace

bool local_map_exists(const XComplex& from, const XComplex& to, const LocalEquivLimits& limits, LocalRing ring) {
  const Int bound = limits.exponent_bound;
  std::vector<Unknown> unknowns;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> index;
  for (std::size_t x = 0; x < from.size(); ++x)
    for (std::size_t y = 0; y < to.size(); ++y) {
      const Int du = from.gen(x).gr_u - to.gen(y).gr_u;
      const Int dv = from.gen(x).gr_v - to.gen(y).gr_v;
      if (du % 2 != 0 || dv % 2 != 0) continue;
      const Int i = -du / 2;
      const Int j = -dv / 2;
      auto add = [&](int side, Mono m) {
        index[{x, y, side}] = unknowns.size();
        unknowns.push_back({x, y, side, m});
      };
      if (i == 0 && j == 0) {
        add(-1, Mono{0, 0});
        continue;
      }
      const bool z_ring = ring == LocalRing::UVQuotient;
      if (Mono::legal(i, j) && std::abs(i) <= bound && j <= bound && (!z_ring || j == 0)) add(kU, Mono{i, j});
      if (Mono::legal(j, i) && std::abs(j) <= bound && i <= bound && (!z_ring || i == 0)) add(kV, Mono{j, i});
    }
  if (unknowns.size() > limits.max_unknowns) throw ResourceLimitExceeded("local-map search space too large");

  // Incoming arrows of the source complex.
  std::vector<std::vector<std::pair<std::size_t, const XPoly*>>> into(from.size());
  for (std::size_t w = 0; w < from.size(); ++w)
    for (const auto& [t, p] : from.row(w)) into[t].emplace_back(w, &p);

  std::map<TermKey, gf2::BitVec> equations;
  auto touch = [&](std::size_t a, std::size_t b, std::size_t u) {
    return [&, a, b, u](int side, const Mono& m) {
      auto [it, fresh] = equations.try_emplace(TermKey{a, b, side, m.i, m.j}, unknowns.size());
      it->second.flip(u);
    };
  };
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& q = unknowns[u];
    // d_to o f
    for (const auto& [t, p] : to.row(q.to)) product_terms(q.side, q.m, p, touch(q.from, t, u));
    // f o d_from
    for (const auto& [w, p] : into[q.from]) product_terms(q.side, q.m, *p, touch(w, q.to, u));
  }

  gf2::AffineSystem system(unknowns.size());
  for (auto& [key, row] : equations)
    if (!system.add(row, false)) return false;

  for (int side : {kU, kV}) {
    const auto src = side_class(from, side);
    const auto dst = side_class(to, side);
    gf2::BitVec row(unknowns.size());
    for (std::size_t x = 0; x < from.size(); ++x) {
      if (!src.cycle.get(x)) continue;
      for (std::size_t y = 0; y < to.size(); ++y) {
        if (!dst.cocycle.get(y)) continue;
        for (int s : {-1, side})
          if (auto it = index.find({x, y, s}); it != index.end()) row.flip(it->second);
      }
    }
    if (!system.add(row, true)) return false;
  }
  return system.consistent();
}

bool verify_local_equiv(const XComplex& c1, const XComplex& c2, const LocalEquivLimits& limits, LocalRing ring) {
  if (c1.size() > limits.max_generators || c2.size() > limits.max_generators)
    throw ResourceLimitExceeded("local-equivalence search is limited to " + std::to_string(limits.max_generators) +
                                " generators");
  if (limits.exponent_bound < 0 || limits.exponent_bound > limits.max_exponent_bound)
    throw ResourceLimitExceeded("exponent bound out of range");
  return local_map_exists(c1, c2, limits, ring) && local_map_exists(c2, c1, limits, ring);
}

bool verify_local_equiv(const KnotComplex& c1, const KnotComplex& c2, Int exponent_bound, LocalRing ring) {
  LocalEquivLimits limits;
  limits.exponent_bound = exponent_bound;
  if (ring == LocalRing::X) return verify_local_equiv(embed_in_x(c1), embed_in_x(c2), limits, ring);
  return verify_local_equiv(embed_mod_uv(c1), embed_mod_uv(c2), limits, ring);
}

bool are_isomorphic(const KnotComplex& a, const KnotComplex& b, std::size_t max_nullity) {
  if (a.size() != b.size() || a.arrow_count() != b.arrow_count()) return false;
  if (find_relabelling(a, b)) return true;
  const std::size_t n = a.size();
  // Unknown f(x -> y) = U^p V^q with gr(x) - gr(y) = (-2p, -2q).
  struct Entry {
    std::size_t x, y;
    UVMonomial m;
  };
  std::vector<Entry> unknowns;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Int du = a.gen(x).gr_u - b.gen(y).gr_u;
      const Int dv = a.gen(x).gr_v - b.gen(y).gr_v;
      if (du > 0 || dv > 0 || du % 2 != 0 || dv % 2 != 0) continue;
      unknowns.push_back({x, y, UVMonomial(-du / 2, -dv / 2)});
    }
  std::vector<std::vector<std::pair<std::size_t, UVMonomial>>> into(n);
  for (std::size_t w = 0; w < n; ++w)
    for (const auto& e : a.arrows(w)) into[e.to].emplace_back(w, e.coeff);
  std::map<std::tuple<std::size_t, std::size_t, UVMonomial>, gf2::BitVec> equations;
  auto flip = [&](std::size_t s, std::size_t t, UVMonomial m, std::size_t u) {
    auto [it, fresh] = equations.try_emplace({s, t, m}, unknowns.size());
    it->second.flip(u);
  };
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& q = unknowns[u];
    for (const auto& e : b.arrows(q.y)) flip(q.x, e.to, q.m * e.coeff, u);
    for (const auto& [w, m] : into[q.x]) flip(w, q.y, m * q.m, u);
  }
  gf2::AffineSystem system(unknowns.size());
  for (auto& [k, row] : equations) system.add(row, false);
  const auto basis = system.nullspace();

  auto invertible = [&](const gf2::BitVec& sol) {
    gf2::Basis rows(n);
    std::vector<gf2::BitVec> m(n, gf2::BitVec(n));
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (sol.get(u) && unknowns[u].m.is_one()) m[unknowns[u].x].flip(unknowns[u].y);
    for (auto& r : m)
      if (!rows.insert(r)) return false;
    return true;
  };
  auto combine = [&](auto pick) {
    gf2::BitVec sol(unknowns.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (pick(k)) sol ^= basis[k];
    return sol;
  };
  if (basis.size() <= std::min<std::size_t>(max_nullity, 20)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask)
      if (invertible(combine([&](std::size_t k) { return (mask >> k) & 1U; }))) return true;
    return false;
  }
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 1 << 14; ++trial) {
    std::vector<bool> pick(basis.size());
    for (auto&& p : pick) p = rng() & 1U;
    if (invertible(combine([&](std::size_t k) { return static_cast<bool>(pick[k]); }))) return true;
  }
  throw ResourceLimitExceeded("isomorphism search inconclusive");
}

}  // namespace cablecone
