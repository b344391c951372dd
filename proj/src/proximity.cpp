#include "icx/proximity.hpp"

#include <algorithm>

#include "icx/error.hpp"

namespace icx {

Rational beta(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "beta(n) needs n >= 1, got " + std::to_string(n));
  if (n > 256) fail(ErrorKind::Unsupported, "beta(n) is limited to n <= 256");
  Rational b = 1;
  if (n >= 2) b = 2;
  for (int k = 3; k <= n; ++k) b = Rational(k + 1, 2) * b + 1;
  b.canonicalize();
  return b;
}

Rational beta_upper_bound(int n) {
  if (n < 3) fail(ErrorKind::Precondition, "beta_upper_bound(n) needs n >= 3, got " + std::to_string(n));
  if (n > 256) fail(ErrorKind::Unsupported, "beta_upper_bound(n) is limited to n <= 256");
  BigInt fact = 1;
  for (int k = 2; k <= n + 1; ++k) fact *= k;
  BigInt pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(n - 1);
  Rational r(fact, pow2);
  r.canonicalize();
  return r;
}

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Separable: return "separable";
    case FunctionClass::Lnat: return "lnat";
    case FunctionClass::Mnat: return "mnat";
    case FunctionClass::IntegrallyConvex: return "integrally_convex";
    case FunctionClass::IcN2: return "ic_n2";
  }
  return "?";
}

FunctionClass parse_function_class(std::string_view text) {
  for (auto c : {FunctionClass::Separable, FunctionClass::Lnat, FunctionClass::Mnat, FunctionClass::IntegrallyConvex,
                 FunctionClass::IcN2}) {
    if (to_string(c) == text) return c;
  }
  fail(ErrorKind::Parse, "unknown function class '" + std::string(text) + "'");
}

std::vector<IntPoint> ProximitySpec::directions(std::size_t n) const {
  std::vector<IntPoint> out;
  switch (cls) {
    case FunctionClass::Separable:
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(unit_vector(n, i));
        out.push_back(-1 * unit_vector(n, i));
      }
      break;
    case FunctionClass::Lnat:
      for (const auto& d : unit_directions(n)) {
        bool nonneg = std::all_of(d.begin(), d.end(), [](std::int64_t c) { return c >= 0; });
        bool nonpos = std::all_of(d.begin(), d.end(), [](std::int64_t c) { return c <= 0; });
        if (nonneg || nonpos) out.push_back(d);
      }
      break;
    case FunctionClass::Mnat:
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(unit_vector(n, i));
        out.push_back(-1 * unit_vector(n, i));
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) out.push_back(unit_vector(n, i) - unit_vector(n, j));
        }
      }
      break;
    case FunctionClass::IntegrallyConvex:
    case FunctionClass::IcN2:
      out = unit_directions(n);
      break;
  }
  const IntPoint zero(n);
  out.erase(std::remove(out.begin(), out.end(), zero), out.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational ProximitySpec::multiplier(std::size_t n) const {
  switch (cls) {
    case FunctionClass::Separable: return 1;
    case FunctionClass::Lnat:
    case FunctionClass::Mnat: return Rational(static_cast<long>(n));
    case FunctionClass::IcN2:
      if (n != 2) fail(ErrorKind::Precondition, "the ic_n2 class requires n = 2");
      return 2;
    case FunctionClass::IntegrallyConvex: return beta(static_cast<int>(n));
  }
  fail(ErrorKind::Internal, "unknown function class");
}

CheckReport is_alpha_local_min(const FnOracle& f, const IntPoint& x, std::int64_t alpha, const ProximitySpec& spec) {
  if (alpha < 1) fail(ErrorKind::Precondition, "alpha must be >= 1");
  const ExtValue fx = f(x);
  if (!fx.is_finite()) fail(ErrorKind::Precondition, "is_alpha_local_min: " + x.str() + " is not in dom f");
  CheckReport report{true, "alpha-local-min:" + to_string(spec.cls), std::nullopt};
  for (const auto& d : spec.directions(x.size())) {
    IntPoint y = x + alpha * d;
    ExtValue fy = f(y);
    if (fx <= fy) continue;
    Violation v;
    v.points = {x, y};
    v.direction = d;
    v.lhs = fx;
    v.rhs = fy;
    v.detail = "f decreases along direction " + d.str();
    report.verdict = false;
    report.witness = std::move(v);
    break;
  }
  return report;
}

std::vector<IntPoint> argmin_set(const FnOracle& f) {
  auto entries = f.finite_entries();
  if (entries.empty()) fail(ErrorKind::EmptyDomain, "argmin of a function with empty domain");
  ExtValue best = ExtValue::infinity();
  for (const auto& [p, v] : entries) best = std::min(best, v);
  std::vector<IntPoint> out;
  for (const auto& [p, v] : entries) {
    if (v == best) out.push_back(p);
  }
  return out;
}

ProximityResult proximity_holds(const FnOracle& f, const IntPoint& x_alpha, std::int64_t alpha, const ProximitySpec& spec) {
  auto local = is_alpha_local_min(f, x_alpha, alpha, spec);
  if (!local.verdict) {
    fail(ErrorKind::Precondition, "proximity_holds: " + x_alpha.str() + " is not " + std::to_string(alpha) + "-local minimal");
  }
  const auto minimizers = argmin_set(f);
  ProximityResult r;
  r.distance = -1;
  for (const auto& m : minimizers) {
    std::int64_t d = linf_distance(x_alpha, m);
    if (r.distance < 0 || d < r.distance) {
      r.distance = d;
      r.nearest = m;
    }
  }
  const Rational mult = spec.multiplier(x_alpha.size());
  r.bound = mult * (alpha - 1);
  r.bound.canonicalize();
  r.floored_bound = floor(r.bound);
  r.floored_beta_bound = Rational(floor(mult)) * (alpha - 1);
  r.floored_beta_bound.canonicalize();
  r.holds = Rational(static_cast<long>(r.distance)) <= r.bound;
  return r;
}

namespace {

Violation barrier_violation(const IntPoint& x_hat, const IntPoint& y, const ExtValue& fx, const ExtValue& fy, std::string detail) {
  Violation v;
  v.points = {x_hat, y};
  v.lhs = fx;
  v.rhs = fy;
  v.detail = std::move(detail);
  return v;
}

BarrierReport finish(BarrierReport r) {
  r.verdict = !r.hypothesis || r.conclusion;
  return r;
}

}  // namespace

BarrierReport verify_box_barrier(const FnOracle& f, const BoundVector& p, const BoundVector& q, const IntPoint& x_hat) {
  const std::size_t n = f.dimension();
  if (p.size() != n || q.size() != n || x_hat.size() != n) {
    fail(ErrorKind::DimensionMismatch, "verify_box_barrier: dimension mismatch");
  }
  const IntBox& box = f.box();
  IntPoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = p[i] ? std::max(*p[i], box.lower()[i] - 1) : box.lower()[i] - 1;
    hi[i] = q[i] ? std::min(*q[i], box.upper()[i] + 1) : box.upper()[i] + 1;
    if (!(lo[i] < x_hat[i] && x_hat[i] < hi[i])) {
      fail(ErrorKind::Precondition, "verify_box_barrier: x_hat is not strictly inside (p, q)");
    }
  }
  const ExtValue fx = f(x_hat);
  if (!fx.is_finite()) fail(ErrorKind::Precondition, "verify_box_barrier: x_hat is not in dom f");

  auto strictly_inside = [&](const IntPoint& z) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(lo[i] < z[i] && z[i] < hi[i])) return false;
    }
    return true;
  };

  BarrierReport r;
  r.hypothesis = true;
  // Wall points outside the oracle box are +inf and cannot break the hypothesis.
  IntPoint wlo(n), whi(n);
  for (std::size_t i = 0; i < n; ++i) {
    wlo[i] = std::max(lo[i], box.lower()[i]);
    whi[i] = std::min(hi[i], box.upper()[i]);
  }
  IntBox(wlo, whi).for_each([&](const IntPoint& y) {
    if (!r.hypothesis || strictly_inside(y)) return;
    ExtValue fy = f(y);
    if (fy < fx) {
      r.hypothesis = false;
      r.hypothesis_witness = barrier_violation(x_hat, y, fx, fy, "wall point below f(x_hat)");
    }
  });
  r.conclusion = true;
  box.for_each([&](const IntPoint& z) {
    if (!r.conclusion || strictly_inside(z)) return;
    ExtValue fz = f(z);
    if (fz < fx) {
      r.conclusion = false;
      r.conclusion_witness = barrier_violation(x_hat, z, fx, fz, "exterior point below f(x_hat)");
    }
  });
  return finish(std::move(r));
}

BarrierReport verify_hyperplane_barrier(const FnOracle& f, const IntPoint& x_hat, std::size_t i, std::int64_t q) {
  const std::size_t n = f.dimension();
  if (x_hat.size() != n) fail(ErrorKind::DimensionMismatch, "verify_hyperplane_barrier: dimension mismatch");
  if (i >= n) fail(ErrorKind::Precondition, "verify_hyperplane_barrier: coordinate out of range");
  if (!(x_hat[i] < q)) fail(ErrorKind::Precondition, "verify_hyperplane_barrier: needs x_hat_i < q");
  const ExtValue fx = f(x_hat);
  if (!fx.is_finite()) fail(ErrorKind::Precondition, "verify_hyperplane_barrier: x_hat is not in dom f");

  BarrierReport r;
  r.hypothesis = true;
  r.conclusion = true;
  f.box().for_each([&](const IntPoint& z) {
    if (z[i] < q) return;
    ExtValue fz = f(z);
    if (!(fz < fx)) return;
    if (z[i] == q && r.hypothesis) {
      r.hypothesis = false;
      r.hypothesis_witness = barrier_violation(x_hat, z, fx, fz, "wall point below f(x_hat)");
    }
    if (r.conclusion) {
      r.conclusion = false;
      r.conclusion_witness = barrier_violation(x_hat, z, fx, fz, "exterior point below f(x_hat)");
    }
  });
  return finish(std::move(r));
}

std::vector<IntPoint> ich(const IntPoint& x, const IntPoint& y) {
  if (x.size() != 2 || y.size() != 2) fail(ErrorKind::Precondition, "ich is defined for n = 2 only");
  auto range = [](std::int64_t a, std::int64_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  auto [l1, h1] = range(x[0], y[0]);
  auto [l2, h2] = range(x[1], y[1]);
  auto [ld, hd] = range(x[0] - x[1], y[0] - y[1]);
  auto [ls, hs] = range(x[0] + x[1], y[0] + y[1]);
  std::vector<IntPoint> out;
  for (std::int64_t a = l1; a <= h1; ++a) {
    for (std::int64_t b = l2; b <= h2; ++b) {
      if (a - b < ld || a - b > hd || a + b < ls || a + b > hs) continue;
      out.push_back(IntPoint{a, b});
    }
  }
  return out;
}

bool is_f_minimal(const FnOracle& f, const IntPoint& x) {
  if (std::any_of(x.begin(), x.end(), [](std::int64_t c) { return c < 0; })) {
    fail(ErrorKind::Precondition, "is_f_minimal needs x >= 0");
  }
  const ExtValue fx = f(x);
  if (!fx.is_finite()) fail(ErrorKind::Precondition, "is_f_minimal: " + x.str() + " is not in dom f");
  bool minimal = true;
  IntBox(IntPoint(x.size()), x).for_each([&](const IntPoint& y) {
    if (minimal && y != x && f(y) <= fx) minimal = false;
  });
  return minimal;
}

}  // namespace icx
