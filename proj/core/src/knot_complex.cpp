#include "cablecone/knot_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cablecone {

Int KnotGen::alexander() const {
  Int diff = checked_sub(gr_u, gr_v);
  if (diff % 2 != 0) throw std::domain_error("generator " + id + " has gr_u and gr_v of different parity");
  return diff / 2;
}

std::size_t KnotComplex::add_generator(std::string id, Int gr_u, Int gr_v) {
  gens_.push_back(KnotGen{std::move(id), gr_u, gr_v});
  diff_.emplace_back();
  return gens_.size() - 1;
}

void KnotComplex::toggle_arrow(std::size_t from, std::size_t to, UVMonomial coeff) {
  if (from >= size() || to >= size()) throw std::out_of_range("arrow endpoint out of range");
  auto& row = diff_[from];
  KnotArrow arrow{to, coeff};
  auto it = std::lower_bound(row.begin(), row.end(), arrow);
  if (it != row.end() && *it == arrow)
    row.erase(it);
  else
    row.insert(it, arrow);
}

std::optional<std::size_t> KnotComplex::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k].id == id) return k;
  return std::nullopt;
}

std::size_t KnotComplex::arrow_count() const {
  std::size_t n = 0;
  for (const auto& row : diff_) n += row.size();
  return n;
}

Int KnotComplex::genus() const {
  Int g = 0;
  for (const auto& x : gens_) g = std::max(g, std::abs(x.alexander()));
  return g;
}

KnotComplex staircase_t2(Int q) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("staircase_t2 needs an odd q >= 1, got " + std::to_string(q));
  const Int g = (q - 1) / 2;
  KnotComplex c;
  // gr(b_i) = (-2(g+1-i), -2(i-1)), so gr_u(b_{g+1}) = 0.
  for (Int i = 1; i <= g; ++i) {
    Int gu = -2 * (g + 1 - (i + 1)) - 1;  // a_i -> U b_{i+1}
    Int gv = -2 * (i - 1) - 1;            // a_i -> V b_i
    c.add_generator("a" + std::to_string(i), gu, gv);
  }
  for (Int i = 1; i <= g + 1; ++i) c.add_generator("b" + std::to_string(i), -2 * (g + 1 - i), -2 * (i - 1));
  for (Int i = 1; i <= g; ++i) {
    auto a = static_cast<std::size_t>(i - 1);
    auto b = [&](Int k) { return static_cast<std::size_t>(g + k - 1); };
    c.toggle_arrow(a, b(i + 1), UVMonomial(1, 0));
    c.toggle_arrow(a, b(i), UVMonomial(0, 1));
  }
  return c;
}

KnotComplex reflect(const KnotComplex& c) {
  KnotComplex r;
  for (const auto& x : c.gens()) r.add_generator(x.id, x.gr_v, x.gr_u);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) r.toggle_arrow(k, a.to, UVMonomial(a.coeff.v_exp(), a.coeff.u_exp()));
  return r;
}

KnotComplex dual(const KnotComplex& c) {
  KnotComplex r;
  for (const auto& x : c.gens()) r.add_generator(x.id, checked_neg(x.gr_u), checked_neg(x.gr_v));
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) r.toggle_arrow(a.to, k, a.coeff);
  return r;
}

KnotComplex tensor(const KnotComplex& c1, const KnotComplex& c2) {
  KnotComplex r;
  const std::size_t m = c2.size();
  for (const auto& x : c1.gens())
    for (const auto& y : c2.gens()) r.add_generator(x.id + "*" + y.id, checked_add(x.gr_u, y.gr_u), checked_add(x.gr_v, y.gr_v));
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& a : c1.arrows(i)) r.toggle_arrow(i * m + j, a.to * m + j, a.coeff);
      for (const auto& a : c2.arrows(j)) r.toggle_arrow(i * m + j, i * m + a.to, a.coeff);
    }
  return r;
}

std::vector<Violation> validate(const KnotComplex& c) {
  std::vector<Violation> out;
  for (const auto& x : c.gens())
    if ((x.gr_u - x.gr_v) % 2 != 0)
      out.push_back({Violation::Kind::Parity, "generator " + x.id + ": gr_u and gr_v differ in parity"});
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& x = c.gen(k);
    for (const auto& a : c.arrows(k)) {
      const auto& y = c.gen(a.to);
      std::string arrow = x.id + " -> " + a.coeff.to_string() + " " + y.id;
      if (y.gr_u != x.gr_u - 1 + 2 * a.coeff.u_exp())
        out.push_back({Violation::Kind::GradingU, arrow + ": gr_u(target) != gr_u(source) - 1 + 2a"});
      if (y.gr_v != x.gr_v - 1 + 2 * a.coeff.v_exp())
        out.push_back({Violation::Kind::GradingV, arrow + ": gr_v(target) != gr_v(source) - 1 + 2b"});
    }
    std::map<std::pair<std::size_t, UVMonomial>, int> dd;
    for (const auto& a : c.arrows(k))
      for (const auto& b : c.arrows(a.to)) dd[{b.to, a.coeff * b.coeff}] ^= 1;
    for (const auto& [term, bit] : dd)
      if (bit)
        out.push_back({Violation::Kind::DSquared,
                       "d^2(" + x.id + ") contains " + term.second.to_string() + " " + c.gen(term.first).id});
  }
  return out;
}

namespace {

// Backtracking search for a bijection pi: a -> b with gr(b[pi x]) = gmap(gr(a[x]))
// and arrows x -> m y carried to pi x -> cmap(m) pi y.
std::optional<std::vector<std::size_t>> match_complexes(
    const KnotComplex& a, const KnotComplex& b, const std::function<std::pair<Int, Int>(const KnotGen&)>& gmap,
    const std::function<UVMonomial(const UVMonomial&)>& cmap) {
  const std::size_t n = a.size();
  if (b.size() != n || a.arrow_count() != b.arrow_count()) return std::nullopt;

  auto adjacency = [](const KnotComplex& c) {
    std::vector<std::map<std::size_t, std::vector<UVMonomial>>> adj(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
      for (const auto& e : c.arrows(k)) adj[k][e.to].push_back(e.coeff);
    return adj;
  };
  const auto adj_a = adjacency(a);
  const auto adj_b = adjacency(b);

  std::map<std::pair<Int, Int>, std::vector<std::size_t>> bucket;
  for (std::size_t k = 0; k < n; ++k) bucket[{b.gen(k).gr_u, b.gen(k).gr_v}].push_back(k);

  // Visit a's generators in breadth-first order over the undirected arrow graph.
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& e : a.arrows(k)) {
      nbr[k].push_back(e.to);
      nbr[e.to].push_back(k);
    }
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (auto t : nbr[order[h]])
        if (!seen[t]) {
          seen[t] = true;
          order.push_back(t);
        }
  }

  auto mapped_coeffs = [&](std::size_t x, std::size_t y) {
    std::vector<UVMonomial> v;
    if (auto it = adj_a[x].find(y); it != adj_a[x].end())
      for (const auto& m : it->second) v.push_back(cmap(m));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto b_coeffs = [&](std::size_t x, std::size_t y) {
    std::vector<UVMonomial> v;
    if (auto it = adj_b[x].find(y); it != adj_b[x].end()) v = it->second;
    std::sort(v.begin(), v.end());
    return v;
  };

  std::vector<std::size_t> pi(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    auto it = bucket.find(gmap(a.gen(x)));
    if (it == bucket.end()) return false;
    for (auto cand : it->second) {
      if (used[cand]) continue;
      bool ok = mapped_coeffs(x, x) == b_coeffs(cand, cand);
      for (std::size_t d = 0; ok && d < depth; ++d) {
        const std::size_t y = order[d];
        ok = mapped_coeffs(x, y) == b_coeffs(cand, pi[y]) && mapped_coeffs(y, x) == b_coeffs(pi[y], cand);
      }
      if (!ok) continue;
      pi[x] = cand;
      used[cand] = true;
      if (place(depth + 1)) return true;
      used[cand] = false;
      pi[x] = n;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return pi;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_reflection_symmetry(const KnotComplex& c) {
  return match_complexes(
      c, c, [](const KnotGen& x) { return std::pair{x.gr_v, x.gr_u}; },
      [](const UVMonomial& m) { return UVMonomial(m.v_exp(), m.u_exp()); });
}

std::optional<std::vector<std::size_t>> find_relabelling(const KnotComplex& a, const KnotComplex& b, Int shift_u,
                                                        Int shift_v) {
  return match_complexes(
      a, b, [&](const KnotGen& x) { return std::pair{checked_add(x.gr_u, shift_u), checked_add(x.gr_v, shift_v)}; },
      [](const UVMonomial& m) { return m; });
}

}  // namespace cablecone
