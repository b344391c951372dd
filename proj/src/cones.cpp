#include "icx/cones.hpp"

#include <algorithm>
#include <unordered_set>

#include "icx/error.hpp"
#include "icx/lp.hpp"

namespace icx {

namespace {

void require_nonneg_generators(const std::vector<IntPoint>& gens, std::size_t n) {
  for (const auto& g : gens) {
    if (g.size() != n) fail(ErrorKind::DimensionMismatch, "cone generator has the wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t c) { return c < 0; })) {
      fail(ErrorKind::Precondition, "cone generators must be nonnegative");
    }
    if (g == IntPoint(n)) fail(ErrorKind::Precondition, "cone generators must be nonzero");
  }
}

struct Search {
  const std::vector<IntPoint>& gens;
  std::unordered_set<IntPoint, IntPointHash> dead;  // residual with the start index appended

  bool reachable(const IntPoint& residual, std::size_t start) {
    if (std::all_of(residual.begin(), residual.end(), [](std::int64_t c) { return c == 0; })) return true;
    std::vector<std::int64_t> k = residual.coords();
    k.push_back(static_cast<std::int64_t>(start));
    IntPoint memo(std::move(k));
    if (dead.contains(memo)) return false;
    // Generator indices are used in nonincreasing order to avoid permutations.
    for (std::size_t g = start; g < gens.size(); ++g) {
      IntPoint next = residual - gens[g];
      if (std::any_of(next.begin(), next.end(), [](std::int64_t c) { return c < 0; })) continue;
      if (reachable(next, g)) return true;
    }
    dead.insert(std::move(memo));
    return false;
  }
};

}  // namespace

ConeSpec generators(std::size_t n, std::vector<std::size_t> subset) {
  if (n == 0) fail(ErrorKind::Precondition, "cone dimension must be >= 1");
  if (subset.empty()) fail(ErrorKind::Precondition, "cone subset A must be nonempty");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.back() >= n) fail(ErrorKind::Precondition, "cone subset index out of range");
  IntPoint chi(n);
  for (auto i : subset) chi[i] = 1;
  std::vector<IntPoint> gens{chi};
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(chi + unit_vector(n, i));
    if (std::binary_search(subset.begin(), subset.end(), i)) gens.push_back(chi - unit_vector(n, i));
  }
  const IntPoint zero(n);
  gens.erase(std::remove(gens.begin(), gens.end(), zero), gens.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ConeSpec{n, std::move(subset), std::move(gens)};
}

ConeSpec custom_cone(std::size_t n, std::vector<IntPoint> gens) {
  require_nonneg_generators(gens, n);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ConeSpec{n, {}, std::move(gens)};
}

bool in_integer_cone(const ConeSpec& spec, const IntPoint& z) {
  if (z.size() != spec.n) fail(ErrorKind::DimensionMismatch, "in_integer_cone: dimension mismatch");
  if (std::any_of(z.begin(), z.end(), [](std::int64_t c) { return c < 0; })) return false;
  Search s{spec.generators, {}};
  return s.reachable(z, 0);
}

bool in_real_cone(const ConeSpec& spec, const RationalPoint& z) {
  if (z.size() != spec.n) fail(ErrorKind::DimensionMismatch, "in_real_cone: dimension mismatch");
  const std::size_t m = spec.generators.size();
  if (m == 0) return std::all_of(z.begin(), z.end(), [](const Rational& c) { return c == 0; });
  RMatrix a(spec.n, RVector(m, Rational(0)));
  RVector b(z.begin(), z.end());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < spec.n; ++i) a[i][j] = static_cast<long>(spec.generators[j][i]);
  }
  return lp_min(RVector(m, Rational(0)), a, b).has_value();
}

CheckReport verify_hilbert(const ConeSpec& spec, std::int64_t radius) {
  if (spec.n > 4) fail(ErrorKind::Unsupported, "verify_hilbert supports n <= 4");
  if (radius < 0 || radius > 8) fail(ErrorKind::Unsupported, "verify_hilbert supports 0 <= radius <= 8");
  CheckReport report{true, "hilbert", std::nullopt};
  IntBox(IntPoint(spec.n), IntPoint(spec.n, radius)).for_each([&](const IntPoint& z) {
    if (!report.verdict) return;
    const bool real = in_real_cone(spec, RationalPoint(z));
    const bool integer = in_integer_cone(spec, z);
    if (integer && !real) fail(ErrorKind::Internal, "integer cone member outside the real cone: " + z.str());
    if (real && !integer) {
      Violation v;
      v.points = {z};
      v.lhs = ExtValue(1);
      v.rhs = ExtValue(0);
      v.detail = z.str() + " lies in the real cone but not in the integer cone";
      report.verdict = false;
      report.witness = std::move(v);
    }
  });
  return report;
}

CheckReport verify_hilbert(std::size_t n, const std::vector<std::size_t>& subset, std::int64_t radius) {
  return verify_hilbert(generators(n, subset), radius);
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace icx
