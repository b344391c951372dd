#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icx/oracle.hpp"
#include "icx/point.hpp"

namespace icx {

/// N(x) = {z in Z^n : |x_i - z_i| < 1 for all i}, lexicographically sorted.
struct Neighborhood {
  RationalPoint center;
  std::vector<IntPoint> points;
};

Neighborhood integer_neighborhood(const RationalPoint& x);

/// One optimal convex combination realizing the local convex extension.
struct ExtensionCertificate {
  ExtValue value;
  std::vector<std::pair<IntPoint, Rational>> support;  // weights > 0
};

/// Local convex extension at x: min Σ λ_y f(y) over convex combinations of
/// points y in N(x) ∩ dom f that reproduce x. nullopt means +inf (x is not
/// in the hull of the finite neighbors).
std::optional<ExtensionCertificate> evaluate_extension(const FnOracle& f, const RationalPoint& x);

/// Convenience wrapper returning just the value (+inf when infeasible).
ExtValue extension_value(const FnOracle& f, const RationalPoint& x);

/// Re-derives Σλ = 1, Σλy = x, value = Σλ f(y) and the support conditions.
bool certificate_is_valid(const FnOracle& f, const RationalPoint& x, const ExtensionCertificate& cert);

}  // namespace icx
