#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cablecone {

using Int = std::int64_t;

// Overflow-checked int64 arithmetic; throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int floor_div(Int a, Int b);
// Decimal integer; accepts ASCII '-' or U+2212 as the sign. Throws std::invalid_argument.
Int parse_integer(std::string_view text);

// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  // Throws std::domain_error when not an integer.
  Int to_int() const;
  Int floor() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Always "num/den", e.g. "-2/1", "3/4".
  std::string to_string() const;
  // Accepts "num/den" or a bare integer; ASCII or U+2212 minus.
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace cablecone
