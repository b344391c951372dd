#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icx/checkers.hpp"
#include "icx/oracle.hpp"
#include "icx/point.hpp"

namespace icx {

/// β_1 = 1, β_2 = 2, β_n = (n+1)/2 · β_{n-1} + 1.
Rational beta(int n);
/// (n+1)! / 2^{n-1}, defined for n >= 3.
Rational beta_upper_bound(int n);

enum class FunctionClass { Separable, Lnat, Mnat, IntegrallyConvex, IcN2 };

std::string to_string(FunctionClass c);
FunctionClass parse_function_class(std::string_view text);

/// Direction set and proximity multiplier for a function class.
struct ProximitySpec {
  FunctionClass cls = FunctionClass::IntegrallyConvex;

  /// Separable: ±e^i. L♮: {0,1}^n ∪ {0,-1}^n. M♮: ±e^i and e^i - e^j.
  /// Integrally convex (any n, or n = 2): all of {-1,0,1}^n. Lexicographic
  /// order, zero vector omitted.
  std::vector<IntPoint> directions(std::size_t n) const;

  /// Separable 1, L♮/M♮ n, n = 2 integrally convex 2, integrally convex β_n.
  Rational multiplier(std::size_t n) const;

  static ProximitySpec of(FunctionClass c) { return ProximitySpec{c}; }
};

/// f(x) <= f(x + αd) for every d in the class's direction set. The witness
/// names the first violating d (lhs = f(x), rhs = f(x + αd)).
CheckReport is_alpha_local_min(const FnOracle& f, const IntPoint& x, std::int64_t alpha, const ProximitySpec& spec);

/// Every global minimizer of f, lexicographically sorted (exhaustive scan).
std::vector<IntPoint> argmin_set(const FnOracle& f);

struct ProximityResult {
  bool holds = false;
  std::int64_t distance = 0;  // min over x* in argmin of ||x_alpha - x*||∞
  IntPoint nearest;           // lexicographically first minimizer at that distance
  Rational bound;             // multiplier · (α - 1); the asserted bound
  BigInt floored_bound;       // ⌊multiplier · (α - 1)⌋, reported only
  Rational floored_beta_bound;  // ⌊multiplier⌋ · (α - 1), reported only
};

/// Brute-force proximity check for an α-local minimizer (the precondition is
/// verified and a violation is an error).
ProximityResult proximity_holds(const FnOracle& f, const IntPoint& x_alpha, std::int64_t alpha, const ProximitySpec& spec);

/// Coordinates for barrier boxes: nullopt stands for -inf (lower) / +inf
/// (upper).
using BoundVector = std::vector<std::optional<std::int64_t>>;

struct BarrierReport {
  bool hypothesis = false;
  bool conclusion = false;
  bool verdict = false;  // !hypothesis || conclusion
  std::optional<Violation> hypothesis_witness;  // wall point y with f(y) < f(x̂)
  std::optional<Violation> conclusion_witness;  // exterior z with f(z) < f(x̂)

  explicit operator bool() const noexcept { return verdict; }
};

/// Box-barrier property on S = {p < x < q} with walls at x_i ∈ {p_i, q_i}.
/// Infinite bounds are clamped one step outside the oracle box.
BarrierReport verify_box_barrier(const FnOracle& f, const BoundVector& p, const BoundVector& q, const IntPoint& x_hat);

/// Hyperplane-barrier property: wall {y_i = q}, exterior {z_i >= q}. `i` is
/// 0-based.
BarrierReport verify_hyperplane_barrier(const FnOracle& f, const IntPoint& x_hat, std::size_t i, std::int64_t q);

/// The smallest integrally convex set in Z^2 containing x and y.
std::vector<IntPoint> ich(const IntPoint& x, const IntPoint& y);

/// x is the unique minimizer of f on [0, x]: no y <= x, y != x, y >= 0 with
/// f(y) <= f(x).
bool is_f_minimal(const FnOracle& f, const IntPoint& x);

}  // namespace icx
