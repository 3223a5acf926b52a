#include "cablecone/coefficients.hpp"

#include <stdexcept>

namespace cablecone {

UVMonomial::UVMonomial(Int u_exp, Int v_exp) : u_(u_exp), v_(v_exp) {
  if (u_exp < 0 || v_exp < 0) throw std::invalid_argument("UVMonomial exponents must be nonnegative");
}

UVMonomial operator*(const UVMonomial& a, const UVMonomial& b) {
  return UVMonomial(checked_add(a.u_, b.u_), checked_add(a.v_, b.v_));
}

std::string UVMonomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  if (u_ > 0) s += u_ == 1 ? "U" : "U^" + std::to_string(u_);
  if (v_ > 0) s += v_ == 1 ? "V" : "V^" + std::to_string(v_);
  return s;
}

namespace {

template <class M>
std::optional<M> divide(const M& num, const M& den) {
  return M::make(checked_sub(num.i, den.i), checked_sub(num.j, den.j));
}

template <class M>
void toggle(std::set<M>& s, const M& m) {
  if (auto [it, inserted] = s.insert(m); !inserted) s.erase(it);
}

template <class M>
std::string monomial_string(const M& m, const char* g, const char* w) {
  std::string s;
  if (m.i != 0) s += std::string(g) + (m.i == 1 ? "" : "^" + std::to_string(m.i));
  if (m.j != 0) s += std::string(w) + (m.j == 1 ? "" : "^" + std::to_string(m.j));
  return s;
}

}  // namespace

std::optional<RUMonomial> ru_divide(const RUMonomial& num, const RUMonomial& den) { return divide(num, den); }
std::optional<RVMonomial> rv_divide(const RVMonomial& num, const RVMonomial& den) { return divide(num, den); }

XPoly XPoly::one() {
  XPoly p;
  p.constant_ = true;
  return p;
}

XPoly XPoly::from(const RUMonomial& m) {
  if (!RUMonomial::legal(m.i, m.j)) throw std::invalid_argument("illegal R_U exponents");
  if (m.is_one()) return one();
  XPoly p;
  p.ru_.insert(m);
  return p;
}

XPoly XPoly::from(const RVMonomial& m) {
  if (!RVMonomial::legal(m.i, m.j)) throw std::invalid_argument("illegal R_V exponents");
  if (m.is_one()) return one();
  XPoly p;
  p.rv_.insert(m);
  return p;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  constant_ ^= o.constant_;
  for (const auto& m : o.ru_) toggle(ru_, m);
  for (const auto& m : o.rv_) toggle(rv_, m);
  return *this;
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto add = [&](const std::string& t) { s += (s.empty() ? "" : " + ") + t; };
  if (constant_) add("1");
  for (const auto& m : ru_) add(monomial_string(m, "U_B", "W_B"));
  for (const auto& m : rv_) add(monomial_string(m, "V_T", "W_T"));
  return s;
}

XPoly embed_uv_to_x(const UVMonomial& m) {
  if (m.is_one()) return XPoly::one();
  return XPoly::from(RUMonomial{m.u_exp(), m.v_exp()}) + XPoly::from(RVMonomial{m.v_exp(), m.u_exp()});
}

XPoly x_mul(const XPoly& a, const XPoly& b) {
  XPoly r;
  if (a.constant()) r += b;
  if (b.constant()) {
    r += a;
    if (a.constant()) r += XPoly::one();  // 1*1 was counted twice
  }
  for (const auto& x : a.ru_terms())
    for (const auto& y : b.ru_terms()) r += XPoly::from(x * y);
  for (const auto& x : a.rv_terms())
    for (const auto& y : b.rv_terms()) r += XPoly::from(x * y);
  // Mixed nonconstant R_U * R_V products vanish.
  return r;
}

}  // namespace cablecone
