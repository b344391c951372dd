#pragma once

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace icx {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "3", "-4", "1/2", "13.5", "-0.025". Decimals are converted exactly.
Rational parse_rational(std::string_view text);
std::string render(const Rational& q);
/// Exact decimal expansion when the reduced denominator is 2^a 5^b, otherwise
/// rounded toward zero after `max_digits` fractional digits.
std::string render_decimal(const Rational& q, int max_digits = 20);

/// Rational floor/ceil toward -inf/+inf.
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Extended value in Q ∪ {+inf}. Finite values are always canonical, so
/// equality is structural.
class ExtValue {
 public:
  ExtValue() = default;  // finite zero
  ExtValue(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtValue(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  ExtValue(Rational v);             // NOLINT(google-explicit-constructor)

  static ExtValue infinity() {
    ExtValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }

  /// Throws if infinite.
  const Rational& value() const;

  ExtValue& operator+=(const ExtValue& rhs);
  friend ExtValue operator+(ExtValue lhs, const ExtValue& rhs) { return lhs += rhs; }

  /// Multiplication by a nonnegative rational scalar. +inf * 0 is an error.
  ExtValue scaled(const Rational& factor) const;

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

  /// "+inf" for infinity, otherwise the rational rendering.
  std::string str() const;
  static ExtValue parse(std::string_view text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

}  // namespace icx
