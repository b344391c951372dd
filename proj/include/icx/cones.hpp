#pragma once

#include <cstdint>
#include <vector>

#include "icx/checkers.hpp"
#include "icx/point.hpp"

namespace icx {

/// B_A = {χ_A ± e^i : i in A} ∪ {χ_A + e^i : i not in A} ∪ {χ_A}, with the
/// zero vector (χ_A - e^i when A = {i}) removed, deduplicated and sorted.
/// `subset` holds 0-based coordinate indices.
struct ConeSpec {
  std::size_t n = 0;
  std::vector<std::size_t> subset;
  std::vector<IntPoint> generators;
};

ConeSpec generators(std::size_t n, std::vector<std::size_t> subset);

/// Same cone data with an arbitrary generator list (used for mutated
/// generator sets). Generators must be nonnegative and nonzero.
ConeSpec custom_cone(std::size_t n, std::vector<IntPoint> gens);

/// z is a nonnegative integer combination of the generators.
bool in_integer_cone(const ConeSpec& spec, const IntPoint& z);

/// z is a nonnegative real combination of the generators.
bool in_real_cone(const ConeSpec& spec, const RationalPoint& z);

/// Checks integer cone == real cone ∩ Z^n on [0, radius]^n. The witness is
/// the lexicographically first point of the real cone missing from the
/// integer cone. Guards: n <= 4, radius <= 8.
CheckReport verify_hilbert(const ConeSpec& spec, std::int64_t radius);
CheckReport verify_hilbert(std::size_t n, const std::vector<std::size_t>& subset, std::int64_t radius);

/// Every nonempty subset of {0..n-1}, ordered by bitmask.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n);

}  // namespace icx
