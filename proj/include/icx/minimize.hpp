#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "icx/oracle.hpp"
#include "icx/point.hpp"

namespace icx {

/// Order on (value, point): by value, then lexicographically by point. This is
/// the order induced by f(x) + Σ ε^i x_i for all small enough ε > 0.
struct LexOrder {
  bool operator()(const std::pair<ExtValue, IntPoint>& a, const std::pair<ExtValue, IntPoint>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

/// ℓ∞ diameter of dom f.
std::int64_t k_infinity(const FnOracle& f);

struct DescentResult {
  IntPoint point;
  std::uint64_t iterations = 0;   // moves made
  std::uint64_t evaluations = 0;  // in-window queries
};

/// Steepest descent over {-1,0,1}^n steps under LexOrder, restricted to
/// `window`: each round picks the LexOrder-minimal (g(y+d), y+d) and stops
/// when that is y itself. Throws IterationLimit beyond `max_iterations`.
DescentResult steepest_descent(const std::function<ExtValue(const IntPoint&)>& g, const IntBox& window, const IntPoint& y0,
                               std::optional<BigInt> max_iterations = std::nullopt);

/// Descent on an oracle view; the window is the oracle box.
IntPoint steepest_descent_local(const FnOracle& g, const IntPoint& y0);

struct PhaseRecord {
  std::int64_t alpha = 1;
  IntPoint start;      // x at the beginning of the phase
  IntPoint step;       // local minimizer y of x -> f(x + αy)
  std::uint64_t iterations = 0;
};

struct MinimizeResult {
  IntPoint minimizer;
  ExtValue value;
  std::uint64_t evaluations = 0;
  std::vector<PhaseRecord> phases;
  BigInt budget;  // ⌈(12β_n)^n⌉ · max(1, ⌈log2 K∞⌉)
  std::int64_t k_inf = 0;
};

/// ⌈(12β_n)^n⌉ · max(1, ⌈log2 K∞⌉).
BigInt evaluation_budget(std::size_t n, std::int64_t k_inf);

/// ⌈log2 k⌉ for k >= 1.
int ceil_log2(std::int64_t k);

/// Proximity-scaling minimization with steepest descent and LexOrder
/// tie-breaking. The input is expected to be integrally convex; otherwise
/// the per-phase iteration guard (4β_n)^n may throw IterationLimit.
MinimizeResult minimize_proximity_scaling(const FnOracle& f);

/// LexOrder-minimal (point, value) by exhaustive scan.
std::pair<IntPoint, ExtValue> brute_force_min(const FnOracle& f);

}  // namespace icx
