#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icx/linalg.hpp"
#include "icx/oracle.hpp"
#include "icx/point.hpp"

namespace icx {

/// A violated inequality. The checked relation always reads `lhs <= rhs`;
/// a witness carries values with lhs > rhs (or, for set checks, a real
/// point that escapes the local hull).
struct Violation {
  std::vector<IntPoint> points;            // the pair (x, y), or the cell corner
  std::optional<RationalPoint> real_point;  // midpoint or offending vertex
  std::optional<IntPoint> direction;        // α-local checks: the step d
  std::optional<std::size_t> index;         // M♮ checks: the coordinate i
  ExtValue lhs;
  ExtValue rhs;
  std::string detail;
};

struct CheckReport {
  bool verdict = true;
  std::string check;
  std::optional<Violation> witness;

  explicit operator bool() const noexcept { return verdict; }
};

/// Desk-scale guard for set recognition.
inline constexpr std::size_t kMaxSetDimension = 4;

/// conv(S) ∩ C = conv(S ∩ C) for every unit cell C meeting the bounding box.
/// Cells are visited in lexicographic order of their lower corner and
/// vertices of conv(S) ∩ C in lexicographic order; the first vertex outside
/// conv(S ∩ C) is the witness.
CheckReport check_integrally_convex_set(std::span<const IntPoint> set);

/// dom f integrally convex and f̃((x+y)/2) <= (f(x)+f(y))/2 for every pair in
/// dom f at l∞ distance 2. Pairs are scanned as (x, y) with x < y
/// lexicographically, in lexicographic order of the concatenation.
CheckReport check_integrally_convex_fn(const FnOracle& f);

/// Discrete midpoint convexity f(x)+f(y) >= f(⌈(x+y)/2⌉)+f(⌊(x+y)/2⌋).
CheckReport check_Lnat(const FnOracle& f);

/// Exchange property over ordered pairs of dom f.
CheckReport check_Mnat(const FnOracle& f);

/// f(x)+f(y) >= f(x∨y)+f(x∧y).
CheckReport check_submodular(const FnOracle& f);

struct QuadraticSpec {
  RMatrix q;  // symmetric n×n
  RVector p;
  IntBox box;
};

struct QuadraticOracle {
  FnOracle oracle;
  bool diag_dominant = false;  // q_ii >= Σ_{j≠i} |q_ij|
  bool lnat_pattern = false;   // diag_dominant and q_ij <= 0 off the diagonal
};

/// x^T Q x + p^T x on the box.
QuadraticOracle quadratic_oracle(const QuadraticSpec& spec);

}  // namespace icx
