#include "icx/extension.hpp"

#include <algorithm>

#include "icx/error.hpp"
#include "icx/lp.hpp"

namespace icx {

Neighborhood integer_neighborhood(const RationalPoint& x) {
  const std::size_t n = x.size();
  IntPoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = floor(x[i]).get_si();
    hi[i] = ceil(x[i]).get_si();
  }
  return Neighborhood{x, IntBox(lo, hi).points()};
}

std::optional<ExtensionCertificate> evaluate_extension(const FnOracle& f, const RationalPoint& x) {
  if (x.size() != f.dimension()) {
    fail(ErrorKind::DimensionMismatch, "extension point " + x.str() + " for an oracle of dimension " +
                                           std::to_string(f.dimension()));
  }
  Neighborhood nb = integer_neighborhood(x);
  std::vector<IntPoint> cols;
  RVector costs;
  for (auto& y : nb.points) {
    ExtValue v = f(y);
    if (v.is_finite()) {
      costs.push_back(v.value());
      cols.push_back(y);
    }
  }
  if (cols.empty()) return std::nullopt;

  // Integral coordinates are shared by every neighbor, so their rows are
  // implied by Σλ = 1; only fractional coordinates need a constraint.
  RMatrix a;
  RVector b;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].get_den() == 1) continue;
    RVector row;
    row.reserve(cols.size());
    for (const auto& y : cols) row.emplace_back(static_cast<long>(y[i]));
    a.push_back(std::move(row));
    b.push_back(x[i]);
  }
  a.emplace_back(cols.size(), Rational(1));
  b.emplace_back(1);

  auto sol = lp_min(costs, a, b);
  if (!sol) return std::nullopt;
  ExtensionCertificate cert{ExtValue(sol->value), {}};
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (sol->x[j] > 0) cert.support.emplace_back(cols[j], sol->x[j]);
  }
  return cert;
}

ExtValue extension_value(const FnOracle& f, const RationalPoint& x) {
  auto cert = evaluate_extension(f, x);
  return cert ? cert->value : ExtValue::infinity();
}

bool certificate_is_valid(const FnOracle& f, const RationalPoint& x, const ExtensionCertificate& cert) {
  if (cert.support.empty() || cert.value.is_infinite()) return false;
  const std::size_t n = x.size();
  Rational total = 0;
  Rational value = 0;
  std::vector<Rational> combo(n, Rational(0));
  for (const auto& [y, w] : cert.support) {
    if (w <= 0 || y.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (abs(x[i] - y[i]) >= 1) return false;  // y must lie in N(x)
    }
    ExtValue fy = f(y);
    if (fy.is_infinite()) return false;
    total += w;
    value += w * fy.value();
    for (std::size_t i = 0; i < n; ++i) combo[i] += w * y[i];
  }
  if (total != 1 || value != cert.value.value()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (combo[i] != x[i]) return false;
  }
  return true;
}

}  // namespace icx
