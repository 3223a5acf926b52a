#include "cablecone/oracles/plus_cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bits.hpp"

namespace cablecone::oracles {

namespace {

using detail::Bits;
using detail::Echelon;

struct StairGen {
  Int alex = 0;
  Int gr_u = 0;
};

struct StairArrow {
  std::size_t to;
  Int a;
  Int b;
};

struct Stair {
  Int genus = 0;
  std::vector<StairGen> gens;
  std::vector<std::vector<StairArrow>> arrows;
  std::vector<std::size_t> flip;
};

// b_m at slot m-1, a_m at slot g+m-1; d a_m = U b_{m+1} + V b_m.
Stair make_stair(Int q) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("q must be odd and positive");
  const Int g = (q - 1) / 2;
  const auto nb = static_cast<std::size_t>(g + 1);
  const auto na = static_cast<std::size_t>(g);
  Stair s;
  s.genus = g;
  s.gens.resize(nb + na);
  s.arrows.resize(nb + na);
  s.flip.resize(nb + na);
  // H(C/V) = F[U] is carried by b_{g+1}; each V arrow then U arrow climbs by 2.
  for (Int m = g + 1; m >= 1; --m) {
    auto& b = s.gens[static_cast<std::size_t>(m - 1)];
    b.alex = 2 * m - g - 2;
    b.gr_u = (m == g + 1) ? 0 : s.gens[static_cast<std::size_t>(m)].gr_u - 2;
  }
  for (Int m = 1; m <= g; ++m) {
    const auto slot = nb + static_cast<std::size_t>(m - 1);
    const auto lo = static_cast<std::size_t>(m - 1);
    const auto hi = static_cast<std::size_t>(m);
    s.gens[slot] = {s.gens[lo].alex + 1, s.gens[lo].gr_u + 1};
    s.arrows[slot] = {{hi, 1, 0}, {lo, 0, 1}};
  }
  for (Int m = 1; m <= g + 1; ++m) s.flip[static_cast<std::size_t>(m - 1)] = static_cast<std::size_t>(g + 1 - m);
  for (Int m = 1; m <= g; ++m)
    s.flip[nb + static_cast<std::size_t>(m - 1)] = nb + static_cast<std::size_t>(g - m);
  return s;
}

Int fdiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// (tower is B, s, x, i); j = i + A(x).
using Cell = std::tuple<bool, Int, std::size_t, Int>;

class PlusCone {
 public:
  PlusCone(const Stair& st, Int p) : st_(st), p_(p) {
    n_ = p * (st.genus + 2);
    // c_A(s+1) = c_A(s) + 2 floor(s/p), forced by h having degree -1.
    for (Int s = 0; s < n_; ++s) offset_[s + 1] = offset_[s] + 2 * fdiv(s, p);
    for (Int s = 0; s > -n_; --s) offset_[s - 1] = offset_[s] - 2 * fdiv(s - 1, p);
    Int top = 0;
    for (const auto& [s, c] : offset_) top = std::max(top, c);
    ceiling_ = top + 4 * st.genus + 24;
    enumerate();
    build_differential();
  }

  Int tower_bottom() {
    Int probe = ceiling_ - 2;
    Bits z;
    for (Int d : {probe, probe - 1}) {
      auto cycles = kernel(d);
      Echelon im = image(d);
      std::vector<Bits> classes;
      Echelon span = im;
      for (const auto& c : cycles)
        if (span.insert(c)) classes.push_back(c);
      if (classes.size() > 1) throw std::logic_error("grading ceiling too low for the tower");
      if (classes.size() == 1) {
        probe = d;
        z = classes.front();
        break;
      }
    }
    if (z.empty()) throw std::logic_error("no tower class below the ceiling");
    Int deg = probe;
    for (;;) {
      Bits next = apply_u(deg, z);
      if (!next.any() || image(deg - 2).contains(next)) return deg;
      z = next;
      deg -= 2;
    }
  }

 private:
  bool in_region(const Cell& c) const {
    const auto& [is_b, s, x, i] = c;
    if (is_b) return i >= 0;
    const Int j = i + st_.gens[x].alex;
    return std::max(i, j - fdiv(s, p_)) >= 0;
  }

  Int grading(const Cell& c) const {
    const auto& [is_b, s, x, i] = c;
    return st_.gens[x].gr_u + 2 * i + offset_.at(s) - (is_b ? 1 : 0);
  }

  void enumerate() {
    for (Int s = -n_; s <= n_; ++s)
      for (bool is_b : {false, true}) {
        if (is_b && s == -n_) continue;
        for (std::size_t x = 0; x < st_.gens.size(); ++x) {
          const Int t = fdiv(s, p_);
          Int i = is_b ? 0 : std::min<Int>(0, t - st_.gens[x].alex);
          for (;; ++i) {
            Cell c{is_b, s, x, i};
            if (grading(c) > ceiling_) break;
            if (!in_region(c)) continue;
            auto& bucket = by_degree_[grading(c)];
            slot_[c] = bucket.size();
            bucket.push_back(c);
          }
        }
      }
  }

  void add_term(const Cell& from, const Cell& to) {
    if (!in_region(to)) return;
    if (grading(to) != grading(from) - 1) throw std::logic_error("cone map is not of degree -1");
    auto it = slot_.find(to);
    if (it == slot_.end()) throw std::logic_error("target missing below ceiling");
    diff_[from].push_back(it->second);
  }

  void build_differential() {
    for (const auto& [deg, cells] : by_degree_)
      for (const auto& c : cells) {
        const auto& [is_b, s, x, i] = c;
        const Int j = i + st_.gens[x].alex;
        diff_[c];
        for (const auto& a : st_.arrows[x]) add_term(c, Cell{is_b, s, a.to, i - a.a});
        if (is_b) continue;
        const Int t = fdiv(s, p_);
        if (s > -n_ && i >= 0) add_term(c, Cell{true, s, x, i});
        if (s < n_ && j - t >= 0) add_term(c, Cell{true, s + 1, st_.flip[x], j - t});
      }
  }

  std::size_t dim(Int d) const {
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? 0 : it->second.size();
  }

  Bits boundary(const Cell& c) const {
    Bits v(dim(grading(c) - 1));
    for (auto k : diff_.at(c)) v.flip(k);
    return v;
  }

  Echelon image(Int d) const {
    Echelon e;
    auto it = by_degree_.find(d + 1);
    if (it != by_degree_.end())
      for (const auto& c : it->second) e.insert(boundary(c));
    return e;
  }

  std::vector<Bits> kernel(Int d) const {
    auto it = by_degree_.find(d);
    if (it == by_degree_.end()) return {};
    const std::size_t rows = dim(d - 1);
    const std::size_t cols = it->second.size();
    std::map<std::size_t, std::pair<Bits, Bits>> pivots;
    std::vector<Bits> out;
    for (std::size_t k = 0; k < cols; ++k) {
      Bits img = boundary(it->second[k]);
      img.resize(rows);
      Bits tag(cols);
      tag.set(k);
      for (auto p = img.find_first(); p != Bits::npos; p = img.find_next(p)) {
        auto pv = pivots.find(p);
        if (pv != pivots.end()) {
          img ^= pv->second.first;
          tag ^= pv->second.second;
        }
      }
      if (img.none())
        out.push_back(tag);
      else
        pivots.emplace(img.find_first(), std::make_pair(img, tag));
    }
    return out;
  }

  Bits apply_u(Int d, const Bits& v) const {
    Bits out(dim(d - 2));
    const auto& cells = by_degree_.at(d);
    for (auto k = v.find_first(); k != Bits::npos; k = v.find_next(k)) {
      auto [is_b, s, x, i] = cells[k];
      Cell lower{is_b, s, x, i - 1};
      if (!in_region(lower)) continue;
      out.flip(slot_.at(lower));
    }
    return out;
  }

  const Stair& st_;
  Int p_;
  Int n_ = 0;
  Int ceiling_ = 0;
  std::map<Int, Int> offset_{{0, 0}};
  std::map<Int, std::vector<Cell>> by_degree_;
  std::map<Cell, std::size_t> slot_;
  std::map<Cell, std::vector<std::size_t>> diff_;
};

}  // namespace

Int plus_cone_tower_bottom(Int q, Int p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  Stair st = make_stair(q);
  PlusCone cone(st, p);
  return cone.tower_bottom();
}

Rational plus_cone_d(Int q, Int p) { return Rational(plus_cone_tower_bottom(q, p) - plus_cone_tower_bottom(1, p)); }

Int laurent_rank(const FilteredComplex& f) {
  Echelon e;
  for (std::size_t k = 0; k < f.size(); ++k) {
    Bits v(f.size());
    for (const auto& a : f.arrows(k)) v.flip(a.to);
    e.insert(v);
  }
  return static_cast<Int>(f.size()) - 2 * static_cast<Int>(e.rank());
}

}  // namespace cablecone::oracles
