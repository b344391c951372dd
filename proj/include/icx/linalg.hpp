#pragma once

#include <optional>
#include <vector>

#include "icx/rational.hpp"

namespace icx {

using RVector = std::vector<Rational>;
/// Row-major dense rational matrix.
using RMatrix = std::vector<RVector>;

std::size_t rank(RMatrix m);

/// Basis of {v : M v = 0}; `cols` is needed when M has no rows.
std::vector<RVector> null_space(RMatrix m, std::size_t cols);

/// Unique solution of the square system M v = b, or nullopt if M is singular.
std::optional<RVector> solve_square(RMatrix m, RVector b);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
RVector primitive_direction(const RVector& v);

Rational dot(const RVector& a, const RVector& b);

}  // namespace icx
