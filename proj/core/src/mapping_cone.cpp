#include "cablecone/mapping_cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cablecone {

SurgerySpec SurgerySpec::one_over(Int p) {
  if (p < 1) throw std::invalid_argument("surgery 1/p needs p >= 1, got " + std::to_string(p));
  return {Kind::OneOverP, p};
}

std::string SurgerySpec::to_string() const {
  if (kind == Kind::IntegerPlusOne) return "1";
  return "1/" + std::to_string(p);
}

std::size_t FilteredComplex::add_generator(FilteredGen g) {
  gens_.push_back(std::move(g));
  diff_.emplace_back();
  return gens_.size() - 1;
}

void FilteredComplex::toggle_arrow(std::size_t from, std::size_t to, Int u_power) {
  if (from >= size() || to >= size()) throw std::out_of_range("arrow endpoint out of range");
  auto& row = diff_[from];
  auto it = std::lower_bound(row.begin(), row.end(), to, [](const ConeArrow& a, std::size_t t) { return a.to < t; });
  if (it != row.end() && it->to == to) {
    if (it->u_power != u_power)
      throw std::logic_error("inhomogeneous differential: " + gens_[from].id + " -> " + gens_[to].id);
    row.erase(it);
  } else {
    row.insert(it, ConeArrow{to, u_power});
  }
}

std::optional<std::size_t> FilteredComplex::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k].id == id) return k;
  return std::nullopt;
}

std::size_t FilteredComplex::arrow_count() const {
  std::size_t n = 0;
  for (const auto& row : diff_) n += row.size();
  return n;
}

std::pair<Int, Rational> FilteredComplex::drops(std::size_t from, const ConeArrow& a) const {
  const auto& g = gens_.at(from);
  const auto& h = gens_.at(a.to);
  return {checked_add(checked_sub(g.filt_i, h.filt_i), a.u_power), g.filt_j - h.filt_j + Rational(a.u_power)};
}

std::vector<std::string> validate(const FilteredComplex& f) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& g = f.gen(k);
    std::map<std::size_t, std::map<Int, int>> dd;
    for (const auto& a : f.arrows(k)) {
      const auto& h = f.gen(a.to);
      auto [di, dj] = f.drops(k, a);
      std::string arrow = g.id + " -> U^" + std::to_string(a.u_power) + " " + h.id;
      if (di < 0) out.push_back(arrow + ": raises I");
      if (dj < Rational(0)) out.push_back(arrow + ": raises J");
      if (h.gr - Rational(checked_mul(2, a.u_power)) != g.gr - Rational(1)) out.push_back(arrow + ": degree is not -1");
      for (const auto& b : f.arrows(a.to)) dd[b.to][checked_add(a.u_power, b.u_power)] ^= 1;
    }
    for (const auto& [t, powers] : dd)
      for (const auto& [c, bit] : powers)
        if (bit) out.push_back("d^2(" + g.id + ") contains U^" + std::to_string(c) + " " + f.gen(t).id);
  }
  return out;
}

Int shift_index(Int l, Int p) { return floor_div(checked_add(checked_mul(2, l), p), checked_mul(2, p)); }

Rational alexander_value(Int l, Int p) {
  if (p % 2 != 0) return Rational(l, p);
  return Rational(checked_add(checked_mul(2, l), 1), checked_mul(2, p));
}

Int lens_label(Int l, Int p) {
  const Int r = shift_index(l, p);
  const Int base = checked_mul(checked_sub(checked_mul(2, r), 1), p);
  return p % 2 == 0 ? checked_sub(l, base / 2) : checked_sub(l, (base + 1) / 2);
}

Rational lens_d_invariant(Int p, Int q) {
  const Int t = checked_sub(p, checked_mul(2, q));
  return Rational(1, 4) - Rational(checked_mul(t, t), checked_mul(4, p));
}

Rational tower_grading_shift(Int l, Int p) {
  const Rational t = Rational(checked_mul(2, p)) * alexander_value(l, p) - Rational(1);
  return t * t / Rational(checked_mul(4, p)) - Rational(1, 4) + lens_d_invariant(p, lens_label(l, p));
}

Rational j_constant(Int l, Int n, Int p) {
  const Int np = checked_mul(n, p);
  const Int tail = checked_mul(n, p % 2 != 0 ? np - 1 : np - 2);
  return Rational(checked_mul(n, l)) - Rational(tail, 2);
}

std::pair<Int, Rational> a_filtration(Int i, Int j, Int l, Int n, Int p) {
  const Int r = shift_index(l, p);
  const Int jr = checked_sub(j, r);
  return {std::max(i, jr), Rational(std::max(checked_sub(i, n), jr)) + j_constant(l, n, p)};
}

std::pair<Int, Rational> b_filtration(Int i, Int /*j*/, Int l, Int n, Int p) {
  return {i, Rational(checked_sub(i, n)) + j_constant(l, n, p)};
}

Window default_window(Int genus, Int n, SurgerySpec spec) {
  if (spec.kind == SurgerySpec::Kind::IntegerPlusOne) {
    const Int a = 1 - genus;
    return {a, std::max(checked_add(genus, n - 1), a)};
  }
  return {checked_mul(-spec.p, genus), checked_mul(spec.p, checked_add(genus, n))};
}

void check_window(Int genus, Int n, SurgerySpec spec, Window w) {
  if (n < 1) throw std::invalid_argument("cable parameter n must be >= 1, got " + std::to_string(n));
  if (w.lo > w.hi) throw std::invalid_argument("empty window");
  const Window need = spec.kind == SurgerySpec::Kind::IntegerPlusOne
                          ? Window{1 - genus, checked_add(genus, n - 1)}
                          : default_window(genus, n, spec);
  if (w.lo > need.lo || w.hi < need.hi)
    throw std::invalid_argument("window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "] must contain [" +
                                std::to_string(need.lo) + "," + std::to_string(need.hi) + "]");
}

namespace {

FilteredComplex assemble(const KnotComplex& c, Int n, SurgerySpec spec, Window w) {
  const auto sigma = find_reflection_symmetry(c);
  if (!sigma) throw std::invalid_argument("input complex admits no reflection symmetry");
  const Int p = spec.p;
  FilteredComplex f(ConeMeta{n, spec, w, c.genus()});

  std::map<Int, std::size_t> a_start;
  std::map<Int, std::size_t> b_start;
  for (Int l = w.lo; l <= w.hi; ++l) {
    a_start[l] = f.size();
    const Rational shift = tower_grading_shift(l, p);
    for (const auto& x : c.gens()) {
      auto [fi, fj] = a_filtration(0, x.alexander(), l, n, p);
      f.add_generator({"A" + std::to_string(l) + ":" + x.id, Tower::A, l, x.id, fi, fj, Rational(x.gr_u) + shift});
    }
  }
  for (Int l = w.lo + 1; l <= w.hi; ++l) {
    b_start[l] = f.size();
    const Rational shift = tower_grading_shift(l, p) - Rational(1);
    for (const auto& x : c.gens()) {
      auto [fi, fj] = b_filtration(0, x.alexander(), l, n, p);
      f.add_generator({"B" + std::to_string(l) + ":" + x.id, Tower::B, l, x.id, fi, fj, Rational(x.gr_u) + shift});
    }
  }

  auto copy_internal = [&](std::size_t start) {
    for (std::size_t k = 0; k < c.size(); ++k)
      for (const auto& a : c.arrows(k)) f.toggle_arrow(start + k, start + a.to, a.coeff.u_exp());
  };
  for (const auto& [l, start] : a_start) copy_internal(start);
  for (const auto& [l, start] : b_start) copy_internal(start);

  for (const auto& [l, start] : a_start) {
    if (auto v = b_start.find(l); v != b_start.end())
      for (std::size_t k = 0; k < c.size(); ++k) f.toggle_arrow(start + k, v->second + k, 0);
    if (auto h = b_start.find(l + 1); h != b_start.end()) {
      const Int r = shift_index(l, p);
      for (std::size_t k = 0; k < c.size(); ++k)
        f.toggle_arrow(start + k, h->second + (*sigma)[k], checked_sub(r, c.gen(k).alexander()));
    }
  }
  return f;
}

}  // namespace

FilteredComplex build_cone_plus_one(const KnotComplex& c, Int n, std::optional<Int> a, std::optional<Int> b) {
  const Int g = c.genus();
  const Window d = default_window(g, n, SurgerySpec::plus_one());
  const Window w{a.value_or(d.lo), b.value_or(std::max(d.hi, a.value_or(d.lo)))};
  check_window(g, n, SurgerySpec::plus_one(), w);
  return assemble(c, n, SurgerySpec::plus_one(), w);
}

FilteredComplex build_cone_one_over_p(const KnotComplex& c, Int n, Int p, std::optional<Int> l_lo,
                                      std::optional<Int> l_hi) {
  const auto spec = SurgerySpec::one_over(p);
  const Window d = default_window(c.genus(), n, spec);
  const Window w{l_lo.value_or(d.lo), l_hi.value_or(d.hi)};
  check_window(c.genus(), n, spec, w);
  return assemble(c, n, spec, w);
}

FilteredComplex build_cone(const KnotComplex& c, Int n, SurgerySpec spec, std::optional<Window> window) {
  if (spec.kind == SurgerySpec::Kind::IntegerPlusOne) {
    if (window) return build_cone_plus_one(c, n, window->lo, window->hi);
    return build_cone_plus_one(c, n);
  }
  if (window) return build_cone_one_over_p(c, n, spec.p, window->lo, window->hi);
  return build_cone_one_over_p(c, n, spec.p);
}

FilteredComplex build_cone_truncated(const KnotComplex& c, Int n, Int l) {
  if (n < 1) throw std::invalid_argument("cable parameter n must be >= 1");
  const Window w{checked_sub(n, l), l};
  if (w.lo > w.hi) throw std::invalid_argument("truncation X<l> needs 2l >= n");
  return assemble(c, n, SurgerySpec::plus_one(), w);
}

}  // namespace cablecone
