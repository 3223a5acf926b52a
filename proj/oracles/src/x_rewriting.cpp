#include "cablecone/oracles/x_rewriting.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <vector>

namespace cablecone::oracles {

namespace {

void bump(std::map<Int, Int>& m, Int k, Int by) {
  if ((m[k] += by) == 0) m.erase(k);
}

bool mixed(const XWord& w) {
  const bool u_side = w.u_b > 0 || !w.w_b.empty();
  const bool v_side = w.v_t > 0 || !w.w_t.empty();
  return u_side && v_side;
}

// One side at a time: g is the bare letter count, ws the W letters.
std::vector<std::pair<Int, std::map<Int, Int>>> side_moves(Int g, const std::map<Int, Int>& ws) {
  std::vector<std::pair<Int, std::map<Int, Int>>> out;
  for (const auto& [k, count] : ws) {
    (void)count;
    auto down = ws;
    bump(down, k, -1);
    bump(down, k - 1, 1);
    out.emplace_back(g + 1, down);
    if (g > 0) {
      auto up = ws;
      bump(up, k, -1);
      bump(up, k + 1, 1);
      out.emplace_back(g - 1, up);
    }
  }
  return out;
}

// Collapse one side: absorb bare letters into a W, then shift index mass
// onto a single W by W_a W_b -> W_{a+1} W_{b-1}.
std::pair<Int, Int> collapse(Int g, std::map<Int, Int> ws) {
  if (ws.empty()) return {g, 0};
  while (g > 0) {
    const Int k = ws.begin()->first;
    bump(ws, k, -1);
    bump(ws, k + 1, 1);
    --g;
  }
  for (;;) {
    Int letters = 0;
    for (const auto& [k, c] : ws) letters += c;
    Int nonzero = 0;
    for (const auto& [k, c] : ws)
      if (k != 0) nonzero += c;
    if (nonzero <= 1) {
      Int index = 0;
      for (const auto& [k, c] : ws)
        if (k != 0) index = k;
      return {index, letters};
    }
    // Walk the letter of smallest |index| one step toward 0 and push the
    // step onto the next nonzero letter; the walking letter reaches W_0.
    std::vector<Int> nz;
    for (const auto& [k, c] : ws)
      if (k != 0)
        for (Int r = 0; r < c; ++r) nz.push_back(k);
    std::sort(nz.begin(), nz.end(), [](Int x, Int y) { return std::abs(x) < std::abs(y); });
    const Int b = nz[0];
    const Int a = nz[1];
    bump(ws, b, -1);
    bump(ws, a, -1);
    if (b > 0) {
      bump(ws, b - 1, 1);
      bump(ws, a + 1, 1);
    } else {
      bump(ws, b + 1, 1);
      bump(ws, a - 1, 1);
    }
  }
}

}  // namespace

XWord word_of(const RUMonomial& m) {
  XWord w;
  if (m.j == 0) {
    w.u_b = m.i;
    return w;
  }
  bump(w.w_b, m.i, 1);
  if (m.j > 1) bump(w.w_b, 0, m.j - 1);
  return w;
}

XWord word_of(const RVMonomial& m) {
  XWord w;
  if (m.j == 0) {
    w.v_t = m.i;
    return w;
  }
  bump(w.w_t, m.i, 1);
  if (m.j > 1) bump(w.w_t, 0, m.j - 1);
  return w;
}

XWord concat(const XWord& a, const XWord& b) {
  XWord w = a;
  w.u_b += b.u_b;
  w.v_t += b.v_t;
  for (const auto& [k, c] : b.w_b) bump(w.w_b, k, c);
  for (const auto& [k, c] : b.w_t) bump(w.w_t, k, c);
  return w;
}

bool rewrites_to_zero(const XWord& start, std::size_t max_states) {
  std::set<XWord> seen{start};
  std::deque<XWord> queue{start};
  while (!queue.empty() && seen.size() <= max_states) {
    XWord w = queue.front();
    queue.pop_front();
    if (w.u_b > 0 && w.v_t > 0) return true;
    std::vector<XWord> next;
    for (auto& [g, ws] : side_moves(w.u_b, w.w_b)) {
      XWord n = w;
      n.u_b = g;
      n.w_b = ws;
      next.push_back(n);
    }
    for (auto& [g, ws] : side_moves(w.v_t, w.w_t)) {
      XWord n = w;
      n.v_t = g;
      n.w_t = ws;
      next.push_back(n);
    }
    for (auto& n : next)
      if (seen.insert(n).second) queue.push_back(n);
  }
  return false;
}

std::optional<XPoly> rewrite_normal_form(const XWord& w) {
  if (mixed(w)) return std::nullopt;
  if (w.u_b > 0 || !w.w_b.empty()) {
    auto [i, j] = collapse(w.u_b, w.w_b);
    return XPoly::from(RUMonomial{i, j});
  }
  if (w.v_t > 0 || !w.w_t.empty()) {
    auto [i, j] = collapse(w.v_t, w.w_t);
    return XPoly::from(RVMonomial{i, j});
  }
  return XPoly::one();
}

}  // namespace cablecone::oracles
