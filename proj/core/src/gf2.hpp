#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cablecone::gf2 {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t k) const { return (w_[k / 64] >> (k % 64)) & 1U; }
  void set(std::size_t k, bool v = true) {
    if (v)
      w_[k / 64] |= (std::uint64_t{1} << (k % 64));
    else
      w_[k / 64] &= ~(std::uint64_t{1} << (k % 64));
  }
  void flip(std::size_t k) { w_[k / 64] ^= (std::uint64_t{1} << (k % 64)); }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  std::optional<std::size_t> lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return std::nullopt;
  }
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) % 2 == 1;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Incremental row-echelon basis of a subspace of F2^n, keyed by pivot bit.
class Basis {
 public:
  explicit Basis(std::size_t n) : pivot_row_(n, -1) {}

  // Reduces v against the basis in place; true when v becomes zero.
  bool reduce(BitVec& v) const {
    while (auto p = v.lowest()) {
      auto r = pivot_row_[*p];
      if (r < 0) return false;
      v ^= rows_[static_cast<std::size_t>(r)];
    }
    return true;
  }
  bool contains(BitVec v) const { return reduce(v); }
  // Adds v; returns false if it was already in the span.
  bool insert(BitVec v) {
    if (reduce(v)) return false;
    pivot_row_[*v.lowest()] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<long> pivot_row_;
  std::vector<BitVec> rows_;
};

// Affine system A x = b over F2, built row by row.
class AffineSystem {
 public:
  explicit AffineSystem(std::size_t unknowns) : n_(unknowns), pivot_of_(unknowns, -1) {}

  std::size_t unknowns() const { return n_; }
  // Returns false if the system became inconsistent.
  bool add(BitVec row, bool rhs) {
    if (!consistent_) return false;
    while (auto p = row.lowest()) {
      auto r = pivot_of_[*p];
      if (r < 0) {
        pivot_of_[*p] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(row));
        rhs_.push_back(rhs);
        return true;
      }
      row ^= rows_[static_cast<std::size_t>(r)];
      rhs ^= rhs_[static_cast<std::size_t>(r)];
    }
    if (rhs) consistent_ = false;
    return consistent_;
  }
  bool consistent() const { return consistent_; }

  bool is_pivot(std::size_t v) const { return pivot_of_[v] >= 0; }

  // Some solution (free variables zero), if consistent.
  std::optional<BitVec> solve() const {
    if (!consistent_) return std::nullopt;
    return back_substitute(BitVec(n_), false);
  }

  // Basis of the solution space of the homogeneous system.
  std::vector<BitVec> nullspace() const {
    std::vector<BitVec> out;
    for (std::size_t v = 0; v < n_; ++v) {
      if (is_pivot(v)) continue;
      BitVec seed(n_);
      seed.set(v);
      out.push_back(back_substitute(seed, true));
    }
    return out;
  }

 private:
  // Fills pivot variables of x given its free variables.
  BitVec back_substitute(BitVec x, bool homogeneous) const {
    // Pivot of row k is its lowest bit; later rows never share earlier pivots,
    // so back-substitute from the highest pivot downward.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t v = 0; v < n_; ++v)
      if (pivot_of_[v] >= 0) order.emplace_back(v, static_cast<std::size_t>(pivot_of_[v]));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto& row = rows_[it->second];
      bool val = homogeneous ? false : static_cast<bool>(rhs_[it->second]);
      BitVec masked = row;
      masked.set(it->first, false);
      val ^= masked.dot(x);
      x.set(it->first, val);
    }
    return x;
  }

  std::size_t n_;
  std::vector<long> pivot_of_;
  std::vector<BitVec> rows_;
  std::vector<bool> rhs_;
  bool consistent_ = true;
};

}  // namespace cablecone::gf2
