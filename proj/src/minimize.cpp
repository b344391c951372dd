#include "icx/minimize.hpp"

#include <algorithm>

#include "icx/error.hpp"
#include "icx/proximity.hpp"

namespace icx {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

BigInt ceil_pow(const Rational& base, std::size_t n) {
  Rational p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= base;
  p.canonicalize();
  return ceil(p);
}

}  // namespace

std::int64_t k_infinity(const FnOracle& f) {
  auto dom = f.domain();
  if (dom.empty()) fail(ErrorKind::EmptyDomain, "k_infinity of a function with empty domain");
  std::int64_t k = 0;
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    auto [lo, hi] = std::minmax_element(dom.begin(), dom.end(), [i](const IntPoint& a, const IntPoint& b) { return a[i] < b[i]; });
    k = std::max(k, (*hi)[i] - (*lo)[i]);
  }
  return k;
}

int ceil_log2(std::int64_t k) {
  if (k < 1) fail(ErrorKind::Precondition, "ceil_log2 needs k >= 1");
  int e = 0;
  while ((std::int64_t{1} << e) < k) ++e;
  return e;
}

BigInt evaluation_budget(std::size_t n, std::int64_t k_inf) {
  BigInt per_phase = ceil_pow(12 * beta(static_cast<int>(n)), n);
  int phases = k_inf >= 1 ? std::max(1, ceil_log2(k_inf)) : 1;
  return per_phase * phases;
}

DescentResult steepest_descent(const std::function<ExtValue(const IntPoint&)>& g, const IntBox& window, const IntPoint& y0,
                               std::optional<BigInt> max_iterations) {
  if (!window.contains(y0)) fail(ErrorKind::Precondition, "steepest descent start " + y0.str() + " is outside the window");
  DescentResult r;
  r.point = y0;
  const auto dirs = unit_directions(y0.size());
  auto query = [&](const IntPoint& y) {
    if (!window.contains(y)) return ExtValue::infinity();
    ++r.evaluations;
    return g(y);
  };
  IntPoint y = y0;
  if (!g(y).is_finite()) fail(ErrorKind::Precondition, "steepest descent start " + y0.str() + " is not in dom g");
  const LexOrder less;
  while (true) {
    std::pair<ExtValue, IntPoint> best{ExtValue::infinity(), IntPoint()};
    bool have = false;
    for (const auto& d : dirs) {
      IntPoint z = y + d;
      std::pair<ExtValue, IntPoint> cand{query(z), z};
      if (!have || less(cand, best)) {
        best = std::move(cand);
        have = true;
      }
    }
    if (best.second == y) return r;
    y = best.second;
    r.point = y;
    ++r.iterations;
    if (max_iterations && BigInt(static_cast<unsigned long>(r.iterations)) > *max_iterations) {
      fail(ErrorKind::IterationLimit, "steepest descent exceeded " + max_iterations->get_str() +
                                          " iterations; the input is probably not integrally convex");
    }
  }
}

IntPoint steepest_descent_local(const FnOracle& g, const IntPoint& y0) {
  return steepest_descent([&g](const IntPoint& y) { return g(y); }, g.box(), y0).point;
}

MinimizeResult minimize_proximity_scaling(const FnOracle& f) {
  const auto entries = f.finite_entries();
  if (entries.empty()) fail(ErrorKind::EmptyDomain, "minimize: empty effective domain");
  const std::size_t n = f.dimension();
  const Rational b = beta(static_cast<int>(n));

  MinimizeResult res;
  res.k_inf = k_infinity(f);
  res.budget = evaluation_budget(n, res.k_inf);
  IntPoint x = entries.front().first;
  if (res.k_inf == 0) {
    res.minimizer = x;
    res.value = f(x);
    return res;
  }
  const BigInt guard = ceil_pow(4 * b, n);
  const IntBox& box = f.box();
  for (std::int64_t alpha = std::int64_t{1} << ceil_log2(res.k_inf); alpha >= 1; alpha /= 2) {
    Rational reach = b * (2 * alpha - 1) / alpha;
    const std::int64_t w = floor(reach).get_si();
    IntPoint lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::max(-w, ceil_div(box.lower()[i] - x[i], alpha));
      hi[i] = std::min(w, floor_div(box.upper()[i] - x[i], alpha));
    }
    auto phase = steepest_descent([&](const IntPoint& y) { return f(x + alpha * y); }, IntBox(lo, hi), IntPoint(n), guard);
    const IntPoint& y = phase.point;
    res.phases.push_back(PhaseRecord{alpha, x, y, phase.iterations});
    res.evaluations += phase.evaluations;
    x = x + alpha * y;
  }
  res.minimizer = x;
  res.value = f(x);
  return res;
}

std::pair<IntPoint, ExtValue> brute_force_min(const FnOracle& f) {
  const auto entries = f.finite_entries();
  if (entries.empty()) fail(ErrorKind::EmptyDomain, "brute_force_min: empty effective domain");
  const LexOrder less;
  std::pair<ExtValue, IntPoint> best{entries.front().second, entries.front().first};
  for (const auto& [p, v] : entries) {
    std::pair<ExtValue, IntPoint> cand{v, p};
    if (less(cand, best)) best = std::move(cand);
  }
  return {best.second, best.first};
}

}  // namespace icx
