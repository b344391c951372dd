#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "icx/rational.hpp"

namespace icx {

/// Integer lattice point. Coordinates are 64-bit; every structure in this
/// library lives inside an enumerable box, so coordinates stay small.
class IntPoint {
 public:
  IntPoint() = default;
  explicit IntPoint(std::size_t n, std::int64_t fill = 0) : c_(n, fill) {}
  IntPoint(std::initializer_list<std::int64_t> c) : c_(c) {}
  explicit IntPoint(std::vector<std::int64_t> c) : c_(std::move(c)) {}

  std::size_t size() const noexcept { return c_.size(); }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }
  const std::vector<std::int64_t>& coords() const noexcept { return c_; }

  IntPoint& operator+=(const IntPoint& o);
  IntPoint& operator-=(const IntPoint& o);
  friend IntPoint operator+(IntPoint a, const IntPoint& b) { return a += b; }
  friend IntPoint operator-(IntPoint a, const IntPoint& b) { return a -= b; }
  friend IntPoint operator*(std::int64_t k, IntPoint a);

  friend bool operator==(const IntPoint&, const IntPoint&) = default;
  /// Lexicographic order.
  friend auto operator<=>(const IntPoint& a, const IntPoint& b) { return a.c_ <=> b.c_; }

  /// "(4,2,2)"
  std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

std::int64_t linf_distance(const IntPoint& a, const IntPoint& b);
std::int64_t linf_norm(const IntPoint& a);
IntPoint unit_vector(std::size_t n, std::size_t i);

struct IntPointHash {
  std::size_t operator()(const IntPoint& p) const noexcept;
};

/// Exact rational vector.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c);
  explicit RationalPoint(const IntPoint& p);

  std::size_t size() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  /// (a + b) / 2
  static RationalPoint midpoint(const IntPoint& a, const IntPoint& b);
  /// Parses "1,1/2,1/2".
  static RationalPoint parse(std::string_view text);

  bool is_integral() const;
  IntPoint to_int() const;  // requires is_integral()

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// Integer box [lower, upper]_Z with lower <= upper componentwise.
class IntBox {
 public:
  IntBox() = default;
  IntBox(IntPoint lower, IntPoint upper);

  std::size_t dimension() const noexcept { return lower_.size(); }
  const IntPoint& lower() const noexcept { return lower_; }
  const IntPoint& upper() const noexcept { return upper_; }

  bool contains(const IntPoint& p) const;
  /// Π (upper_i - lower_i + 1)
  BigInt count() const;

  /// Tight box around a nonempty point list.
  static IntBox bounding(std::span<const IntPoint> points);

  /// Visits every member in lexicographic order. Throws Unsupported when the
  /// box holds more than `limit` points.
  void for_each(const std::function<void(const IntPoint&)>& visit,
                std::uint64_t limit = kDefaultEnumerationLimit) const;
  std::vector<IntPoint> points(std::uint64_t limit = kDefaultEnumerationLimit) const;

  friend bool operator==(const IntBox&, const IntBox&) = default;

  static constexpr std::uint64_t kDefaultEnumerationLimit = 20'000'000;

 private:
  IntPoint lower_;
  IntPoint upper_;
};

/// All d in {-1,0,+1}^n in lexicographic order.
std::vector<IntPoint> unit_directions(std::size_t n);

}  // namespace icx
