#include "cablecone/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gf2.hpp"

namespace cablecone {

namespace {

// Mutable sparse copy of a filtered complex supporting incremental cancellation.
class Workspace {
 public:
  explicit Workspace(const FilteredComplex& f) : f_(f), rows_(f.size()), cols_(f.size()), alive_(f.size(), true) {
    for (std::size_t k = 0; k < f.size(); ++k)
      for (const auto& a : f.arrows(k)) set_entry(k, a.to, a.u_power);
  }

  const std::set<std::pair<std::size_t, std::size_t>>& eligible() const { return eligible_; }

  Cancellation cancel(std::size_t x, std::size_t y) {
    const Int c = rows_[x].at(y);
    Cancellation log{f_.gen(x).id, f_.gen(y).id, c, {}};
    const auto row_x = rows_[x];
    std::vector<std::size_t> sources(cols_[y].begin(), cols_[y].end());
    for (auto z : sources) {
      if (z == x) continue;
      const Int e = rows_[z].at(y);
      for (const auto& [t, pw] : row_x) toggle(z, t, checked_add(checked_sub(e, c), pw));
      log.rewritten.push_back(f_.gen(z).id);
    }
    remove(x);
    remove(y);
    return log;
  }

  FilteredComplex extract() const {
    FilteredComplex out(f_.meta());
    std::vector<std::size_t> new_index(f_.size(), f_.size());
    for (std::size_t k = 0; k < f_.size(); ++k)
      if (alive_[k]) new_index[k] = out.add_generator(f_.gen(k));
    for (std::size_t k = 0; k < f_.size(); ++k)
      if (alive_[k])
        for (const auto& [t, pw] : rows_[k]) out.toggle_arrow(new_index[k], new_index[t], pw);
    return out;
  }

 private:
  bool zero_drops(std::size_t from, std::size_t to, Int c) const {
    return f_.drops(from, ConeArrow{to, c}) == std::pair<Int, Rational>{0, Rational(0)};
  }

  void set_entry(std::size_t from, std::size_t to, Int c) {
    rows_[from][to] = c;
    cols_[to].insert(from);
    if (zero_drops(from, to, c)) eligible_.insert({from, to});
  }

  void erase_entry(std::size_t from, std::size_t to) {
    rows_[from].erase(to);
    cols_[to].erase(from);
    eligible_.erase({from, to});
  }

  void toggle(std::size_t from, std::size_t to, Int c) {
    auto it = rows_[from].find(to);
    if (it == rows_[from].end()) {
      set_entry(from, to, c);
      return;
    }
    if (it->second != c)
      throw std::logic_error("inhomogeneous zig-zag term " + f_.gen(from).id + " -> " + f_.gen(to).id);
    erase_entry(from, to);
  }

  void remove(std::size_t g) {
    std::vector<std::size_t> targets;
    for (const auto& [t, pw] : rows_[g]) targets.push_back(t);
    for (auto t : targets) erase_entry(g, t);
    std::vector<std::size_t> sources(cols_[g].begin(), cols_[g].end());
    for (auto s : sources) erase_entry(s, g);
    alive_[g] = false;
  }

  const FilteredComplex& f_;
  std::vector<std::map<std::size_t, Int>> rows_;
  std::vector<std::set<std::size_t>> cols_;
  std::vector<bool> alive_;
  std::set<std::pair<std::size_t, std::size_t>> eligible_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> eligible_arrows(const FilteredComplex& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < f.size(); ++k)
    for (const auto& a : f.arrows(k))
      if (f.drops(k, a) == std::pair<Int, Rational>{0, Rational(0)}) out.emplace_back(k, a.to);
  return out;
}

FilteredComplex cancel_arrow(const FilteredComplex& f, std::size_t source, std::size_t target) {
  Workspace w(f);
  w.cancel(source, target);
  return w.extract();
}

bool is_reduced(const FilteredComplex& f) { return eligible_arrows(f).empty(); }

ReducedComplex reduce(const FilteredComplex& f, ReductionOrder order) {
  Workspace w(f);
  std::vector<Cancellation> log;
  if (order == ReductionOrder::TowerLocalFirst) {
    for (Tower t : {Tower::B, Tower::A}) {
      auto local = [&](const std::pair<std::size_t, std::size_t>& e) {
        const auto& a = f.gen(e.first);
        const auto& b = f.gen(e.second);
        return a.tower == t && b.tower == t && a.index == b.index;
      };
      for (;;) {
        auto it = std::find_if(w.eligible().begin(), w.eligible().end(), local);
        if (it == w.eligible().end()) break;
        auto [x, y] = *it;
        log.push_back(w.cancel(x, y));
      }
    }
  }
  while (!w.eligible().empty()) {
    auto [x, y] = *w.eligible().begin();
    log.push_back(w.cancel(x, y));
  }
  return {w.extract(), std::move(log)};
}

Int LaurentHomology::total() const {
  Int t = 0;
  for (const auto& [k, r] : rank_by_coset) t += r;
  return t;
}

namespace {

Rational coset_of(const Rational& gr) {
  Rational half = gr / Rational(2);
  return gr - Rational(2) * Rational(half.floor());
}

Rational prev_coset(const Rational& k) { return coset_of(k - Rational(1)); }

// Generators of each coset, with their position inside the coset.
struct CosetIndex {
  std::map<Rational, std::vector<std::size_t>> members;
  std::vector<std::size_t> position;
  std::vector<Rational> coset;

  explicit CosetIndex(const FilteredComplex& f) : position(f.size()), coset(f.size()) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      coset[k] = coset_of(f.gen(k).gr);
      position[k] = members[coset[k]].size();
      members[coset[k]].push_back(k);
    }
  }
  std::size_t dim(const Rational& k) const {
    auto it = members.find(k);
    return it == members.end() ? 0 : it->second.size();
  }
};

gf2::BitVec boundary_vector(const FilteredComplex& f, const CosetIndex& idx, std::size_t g) {
  gf2::BitVec v(idx.dim(prev_coset(idx.coset[g])));
  for (const auto& a : f.arrows(g)) v.flip(idx.position[a.to]);
  return v;
}

std::size_t boundary_rank(const FilteredComplex& f, const CosetIndex& idx, const Rational& k) {
  auto it = idx.members.find(k);
  if (it == idx.members.end()) return 0;
  gf2::Basis basis(idx.dim(prev_coset(k)));
  for (auto g : it->second) basis.insert(boundary_vector(f, idx, g));
  return basis.rank();
}

}  // namespace

LaurentHomology homology_laurent(const FilteredComplex& f) {
  CosetIndex idx(f);
  LaurentHomology h;
  for (const auto& [k, gens] : idx.members) {
    Rational next = coset_of(k + Rational(1));
    Int r = static_cast<Int>(gens.size()) - static_cast<Int>(boundary_rank(f, idx, k)) -
            static_cast<Int>(boundary_rank(f, idx, next));
    if (r != 0) h.rank_by_coset[k] = r;
  }
  return h;
}

Rational d_invariant(const FilteredComplex& f) {
  const auto h = homology_laurent(f);
  if (h.total() != 1)
    throw std::domain_error("d-invariant needs Laurent homology of rank 1, found rank " + std::to_string(h.total()));
  const Rational kappa = h.rank_by_coset.begin()->first;
  CosetIndex idx(f);
  const auto& members = idx.members.at(kappa);
  const std::size_t dim = members.size();

  // Boundaries landing in this coset.
  gf2::Basis image(dim);
  if (auto up = idx.members.find(coset_of(kappa + Rational(1))); up != idx.members.end())
    for (auto g : up->second) image.insert(boundary_vector(f, idx, g));

  std::vector<Rational> tau(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const auto& g = f.gen(members[p]);
    tau[p] = g.gr - Rational(checked_mul(2, g.filt_i));
  }

  // Is the degree-delta class represented by a cycle supported where I < 0?
  auto killed = [&](const Rational& delta) {
    std::vector<std::size_t> support;
    for (std::size_t p = 0; p < dim; ++p)
      if (delta < tau[p]) support.push_back(p);
    // dim(ker d restricted to support) versus dim(image meets support).
    gf2::Basis bd(idx.dim(prev_coset(kappa)));
    for (auto p : support) bd.insert(boundary_vector(f, idx, members[p]));
    const std::size_t ker = support.size() - bd.rank();
    gf2::Basis joint = image;
    for (auto p : support) {
      gf2::BitVec e(dim);
      e.set(p);
      joint.insert(e);
    }
    const std::size_t meet = image.rank() + support.size() - joint.rank();
    return ker > meet;
  };

  std::vector<Rational> candidates;
  for (const auto& t : tau) candidates.push_back(t - Rational(2));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // killed() is monotone: true on a prefix of the ascending candidate list.
  auto first_false = std::partition_point(candidates.begin(), candidates.end(), killed);
  if (first_false == candidates.begin()) throw std::logic_error("tower class never vanishes in the I < 0 part");
  return *(first_false - 1) + Rational(2);
}

}  // namespace cablecone
