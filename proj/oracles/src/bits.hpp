#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <map>

namespace cablecone::oracles::detail {

using Bits = boost::dynamic_bitset<>;

// Row space over F2, kept in echelon form keyed by lowest set bit.
class Echelon {
 public:
  Bits reduce(Bits v) const {
    for (auto p = v.find_first(); p != Bits::npos; p = v.find_next(p)) {
      auto it = rows_.find(p);
      if (it != rows_.end()) v ^= it->second;
    }
    return v;
  }

  // True when v was independent of the rows already present.
  bool insert(const Bits& v) {
    Bits r = reduce(v);
    if (r.none()) return false;
    rows_.emplace(r.find_first(), r);
    return true;
  }

  bool contains(const Bits& v) const { return reduce(v).none(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, Bits> rows_;
};

}  // namespace cablecone::oracles::detail
