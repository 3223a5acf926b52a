#include "cablecone/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cablecone {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Int Rational::to_int() const {
  if (den_ != 1) throw std::domain_error("rational " + to_string() + " is not an integer");
  return num_;
}

Int Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::operator-() const { return Rational(checked_neg(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  Int g = std::gcd(a.den_, b.den_);
  Int l = checked_mul(a.den_ / g, b.den_);
  return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = std::gcd(a.num_, b.den_);
  Int g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Compare a.num*b.den against b.num*a.den in 128 bits.
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Int parse_integer(std::string_view s) {
  bool negative = false;
  if (s.starts_with("\xE2\x88\x92")) {
    negative = true;
    s.remove_prefix(3);
  } else if (s.starts_with("-")) {
    negative = true;
    s.remove_prefix(1);
  }
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || (!s.empty() && s.front() == '-'))
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  return negative ? checked_neg(v) : v;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

}  // namespace cablecone
