#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icx/oracle.hpp"
#include "icx/point.hpp"

namespace icx {

/// f^α(x) = f(αx). The box is the tight integer box {x : αx in box(f)}; if
/// no multiple of α lies in some coordinate range the result has empty
/// finite support.
FnOracle scale_fn(const FnOracle& f, std::int64_t alpha);

/// {x : αx in S}, lexicographically sorted.
std::vector<IntPoint> scale_set(std::span<const IntPoint> set, std::int64_t alpha);

}  // namespace icx
