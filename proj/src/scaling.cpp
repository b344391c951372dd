#include "icx/scaling.hpp"

#include <algorithm>

#include "icx/error.hpp"

namespace icx {

namespace {

void require_alpha(std::int64_t alpha) {
  if (alpha < 1) fail(ErrorKind::Precondition, "scaling factor must be >= 1, got " + std::to_string(alpha));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

FnOracle scale_fn(const FnOracle& f, std::int64_t alpha) {
  require_alpha(alpha);
  const IntBox& box = f.box();
  const std::size_t n = box.dimension();
  IntPoint lo(n), hi(n);
  bool empty = false;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil_div(box.lower()[i], alpha);
    hi[i] = floor_div(box.upper()[i], alpha);
    if (hi[i] < lo[i]) {
      empty = true;
      hi[i] = lo[i];
    }
  }
  std::string name = f.name().empty() ? std::string() : f.name() + "^" + std::to_string(alpha);
  if (empty) {
    return FnOracle::generator(IntBox(lo, hi), [](const IntPoint&) { return ExtValue::infinity(); }, name);
  }
  return FnOracle::generator(IntBox(lo, hi), [f, alpha](const IntPoint& x) { return f(alpha * x); }, name);
}

std::vector<IntPoint> scale_set(std::span<const IntPoint> set, std::int64_t alpha) {
  require_alpha(alpha);
  std::vector<IntPoint> out;
  for (const auto& p : set) {
    bool divisible = std::all_of(p.begin(), p.end(), [alpha](std::int64_t c) { return c % alpha == 0; });
    if (!divisible) continue;
    IntPoint q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] / alpha;
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace icx
