#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "harness.hpp"

namespace cablecone::verify::detail {

std::string CorpusItem::label() const {
  return "T(2," + std::to_string(q) + ") n=" + std::to_string(n) + " " + spec.to_string();
}

std::vector<CorpusItem> corpus() {
  std::vector<CorpusItem> out;
  for (Int q : {1, 3, 5, 7, 11})
    for (Int n = 1; n <= 4; ++n)
      for (auto spec : {SurgerySpec::plus_one(), SurgerySpec::one_over(2), SurgerySpec::one_over(3)})
        out.push_back({q, n, spec});
  return out;
}

std::string show(const PhiTable& t) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : t) {
    if (v == 0) continue;
    out << (first ? "" : ", ") << "(" << k.first << "," << k.second << "):" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string show(const std::vector<Int>& seq) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < seq.size(); ++k) out << (k ? "," : "") << seq[k];
  out << ")";
  return out.str();
}

std::string show(const std::vector<XEdge>& edges) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < edges.size(); ++k)
    out << (k ? "," : "") << (edges[k].sign < 0 ? "-" : "") << "(" << edges[k].i << "," << edges[k].j << ")";
  out << ")";
  return out.str();
}

std::optional<std::pair<Int, Int>> mean_shift(const KnotComplex& a, const KnotComplex& b) {
  if (a.size() != b.size() || a.size() == 0) return std::nullopt;
  Int du = 0;
  Int dv = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    du += b.gen(k).gr_u - a.gen(k).gr_u;
    dv += b.gen(k).gr_v - a.gen(k).gr_v;
  }
  const auto n = static_cast<Int>(a.size());
  if (du % n != 0 || dv % n != 0) return std::nullopt;
  return std::pair{du / n, dv / n};
}

}  // namespace cablecone::verify::detail
