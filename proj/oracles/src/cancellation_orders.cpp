#include "cablecone/oracles/cancellation_orders.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cablecone::oracles {

namespace {

struct State {
  std::set<std::size_t> alive;
  std::map<std::pair<std::size_t, std::size_t>, Int> arrows;
  friend auto operator<=>(const State&, const State&) = default;
};

bool flat(const FilteredComplex& f, std::size_t x, std::size_t y, Int c) {
  const auto& gx = f.gen(x);
  const auto& gy = f.gen(y);
  return gx.filt_i - gy.filt_i + c == 0 && gx.filt_j - gy.filt_j + Rational(c) == Rational(0);
}

State cancel(const State& s, std::size_t x, std::size_t y) {
  State out = s;
  const Int c = s.arrows.at({x, y});
  for (const auto& [zy, e] : s.arrows) {
    if (zy.second != y || zy.first == x) continue;
    for (const auto& [xt, pw] : s.arrows) {
      if (xt.first != x) continue;
      const std::pair<std::size_t, std::size_t> key{zy.first, xt.second};
      const Int power = e - c + pw;
      auto it = out.arrows.find(key);
      if (it == out.arrows.end())
        out.arrows.emplace(key, power);
      else if (it->second == power)
        out.arrows.erase(it);
      else
        throw std::logic_error("inhomogeneous term after cancellation");
    }
  }
  for (auto it = out.arrows.begin(); it != out.arrows.end();) {
    const auto [a, b] = it->first;
    if (a == x || a == y || b == x || b == y)
      it = out.arrows.erase(it);
    else
      ++it;
  }
  out.alive.erase(x);
  out.alive.erase(y);
  return out;
}

FilteredComplex materialize(const FilteredComplex& f, const State& s) {
  FilteredComplex out(f.meta());
  std::map<std::size_t, std::size_t> index;
  for (auto k : s.alive) index[k] = out.add_generator(f.gen(k));
  for (const auto& [ab, c] : s.arrows) out.toggle_arrow(index.at(ab.first), index.at(ab.second), c);
  return out;
}

}  // namespace

std::vector<FilteredComplex> all_cancellation_outcomes(const FilteredComplex& f, std::size_t max_generators) {
  if (f.size() > max_generators) throw std::length_error("too many generators for exhaustive cancellation");
  State start;
  for (std::size_t k = 0; k < f.size(); ++k) {
    start.alive.insert(k);
    for (const auto& a : f.arrows(k)) start.arrows[{k, a.to}] = a.u_power;
  }
  std::set<State> seen;
  std::set<State> finals;
  std::vector<State> stack{start};
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(s).second) continue;
    bool terminal = true;
    for (const auto& [xy, c] : s.arrows)
      if (flat(f, xy.first, xy.second, c)) {
        terminal = false;
        stack.push_back(cancel(s, xy.first, xy.second));
      }
    if (terminal) finals.insert(s);
  }
  std::vector<FilteredComplex> out;
  for (const auto& s : finals) out.push_back(materialize(f, s));
  return out;
}

std::size_t count_cone_generators(std::size_t knot_generators, Window w) {
  std::size_t count = 0;
  for (Int l = w.lo; l <= w.hi; ++l) {
    count += knot_generators;
    if (l > w.lo) count += knot_generators;
  }
  return count;
}

}  // namespace cablecone::oracles
