#pragma once

#include <cstddef>
#include <optional>

#include "icx/linalg.hpp"

namespace icx {

struct LpSolution {
  Rational value;
  RVector x;  // basic optimal solution, one entry per column
  std::size_t pivots = 0;
};

/// Exact min c^T x subject to A x = b, x >= 0.
///
/// Dense two-phase primal simplex over the rationals. Phase 1 starts from
/// an all-artificial basis; both phases pick the entering column and the
/// leaving row by Bland's rule, so the returned vertex is deterministic.
/// Returns nullopt when infeasible. An unbounded objective, or a pivot count
/// beyond C(columns + rows, rows), throws ErrorKind::Internal.
std::optional<LpSolution> lp_min(const RVector& costs, const RMatrix& a, const RVector& b);

}  // namespace icx
