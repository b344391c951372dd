#include "icx/checkers.hpp"

#include <algorithm>
#include <unordered_map>

#include "icx/error.hpp"
#include "icx/extension.hpp"
#include "icx/parallel.hpp"
#include "icx/polytope.hpp"

namespace icx {

namespace {

std::vector<IntPoint> nonempty_domain(const FnOracle& f, const char* who) {
  auto dom = f.domain();
  if (dom.empty()) fail(ErrorKind::EmptyDomain, std::string(who) + ": empty effective domain");
  return dom;
}

// Copy of an oracle's values for the quadratic pair scans: box-indexed when
// the box is small, otherwise a hash map of the finite entries.
class DenseView {
 public:
  explicit DenseView(const FnOracle& f) : box_(f.box()) {
    const std::size_t n = box_.dimension();
    strides_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * (box_.upper()[i] - box_.lower()[i] + 1);
    if (box_.count() <= kMaxDense) {
      values_.reserve(box_.count().get_ui());
      box_.for_each([&](const IntPoint& p) { values_.push_back(f(p)); });
    } else {
      for (auto& [p, v] : f.finite_entries()) sparse_.emplace(std::move(p), std::move(v));
    }
  }

  const ExtValue& operator()(const IntPoint& x) const {
    if (!box_.contains(x)) return kInfinity;
    if (values_.empty()) {
      auto it = sparse_.find(x);
      return it == sparse_.end() ? kInfinity : it->second;
    }
    std::int64_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i) k += (x[i] - box_.lower()[i]) * strides_[i];
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  static constexpr unsigned long kMaxDense = 4'000'000;
  static inline const ExtValue kInfinity = ExtValue::infinity();
  IntBox box_;
  std::vector<std::int64_t> strides_;
  std::vector<ExtValue> values_;
  std::unordered_map<IntPoint, ExtValue, IntPointHash> sparse_;
};

CheckReport pass(std::string check) { return CheckReport{true, std::move(check), std::nullopt}; }

CheckReport failed(std::string check, Violation v) { return CheckReport{false, std::move(check), std::move(v)}; }

// Range of normal·x over the unit cell [corner, corner + 1].
std::pair<Rational, Rational> cell_range(const RVector& normal, const IntPoint& corner) {
  Rational lo = 0, hi = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    Rational base = normal[i] * corner[i];
    lo += base;
    hi += base;
    if (normal[i] > 0) hi += normal[i];
    if (normal[i] < 0) lo += normal[i];
  }
  return {lo, hi};
}

/// Scans pairs (dom[i], dom[j]) with j in [i+1, end) (unordered) or all j != i
/// (ordered) and returns the first pair whose probe reports a violation.
std::optional<Violation> scan_pairs(const std::vector<IntPoint>& dom, bool ordered,
                                    const std::function<std::optional<Violation>(const IntPoint&, const IntPoint&)>& probe) {
  auto hit = first_hit<Violation>(dom.size(), [&](std::size_t i) -> std::optional<Violation> {
    for (std::size_t j = ordered ? 0 : i + 1; j < dom.size(); ++j) {
      if (j == i) continue;
      if (auto v = probe(dom[i], dom[j])) return v;
    }
    return std::nullopt;
  });
  if (!hit) return std::nullopt;
  return std::move(hit->second);
}

}  // namespace

CheckReport check_integrally_convex_set(std::span<const IntPoint> set) {
  const std::string name = "icx-set";
  if (set.empty()) fail(ErrorKind::EmptyDomain, "check_integrally_convex_set: empty set");
  const std::size_t n = set.front().size();
  if (n > kMaxSetDimension) {
    fail(ErrorKind::Unsupported, "check_integrally_convex_set supports n <= 4, got n = " + std::to_string(n));
  }
  std::vector<IntPoint> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  const Halfspaces hull = hull_halfspaces(s);
  const IntBox bbox = IntBox::bounding(s);
  IntPoint cell_hi = bbox.upper();
  for (std::size_t i = 0; i < n; ++i) cell_hi[i] = std::max(bbox.lower()[i], bbox.upper()[i] - 1);

  std::optional<Violation> witness;
  IntBox(bbox.lower(), cell_hi).for_each([&](const IntPoint& corner) {
    if (witness) return;
    Halfspaces cell;
    for (std::size_t k = 0; k < hull.eq_normals.size(); ++k) {
      auto [lo, hi] = cell_range(hull.eq_normals[k], corner);
      if (hull.eq_rhs[k] < lo || hull.eq_rhs[k] > hi) return;
      cell.eq_normals.push_back(hull.eq_normals[k]);
      cell.eq_rhs.push_back(hull.eq_rhs[k]);
    }
    for (std::size_t k = 0; k < hull.normals.size(); ++k) {
      auto [lo, hi] = cell_range(hull.normals[k], corner);
      if (lo > hull.rhs[k]) return;    // cell misses conv(S)
      if (hi <= hull.rhs[k]) continue;  // facet does not cut the cell
      cell.normals.push_back(hull.normals[k]);
      cell.rhs.push_back(hull.rhs[k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      RVector e(n, Rational(0));
      e[i] = 1;
      cell.normals.push_back(e);
      cell.rhs.emplace_back(static_cast<long>(corner[i] + 1));
      e[i] = -1;
      cell.normals.push_back(e);
      cell.rhs.emplace_back(static_cast<long>(-corner[i]));
    }
    auto verts = polytope_vertices(cell, n);
    if (verts.empty()) return;
    std::vector<IntPoint> local;
    for (const auto& p : s) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) inside = p[i] >= corner[i] && p[i] <= corner[i] + 1;
      if (inside) local.push_back(p);
    }
    for (const auto& v : verts) {
      if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.get_den() == 1; })) {
        IntPoint iv(n);
        for (std::size_t i = 0; i < n; ++i) iv[i] = v[i].get_num().get_si();
        if (std::binary_search(s.begin(), s.end(), iv)) continue;
      }
      if (!in_convex_hull(local, v)) {
        Violation w;
        w.points = {corner};
        w.real_point = RationalPoint(v);
        w.lhs = ExtValue::infinity();  // the local hull does not reach the point
        w.rhs = ExtValue(0);
        w.detail = "point " + w.real_point->str() + " of conv(S) is not in conv(S ∩ cell " + corner.str() + ")";
        witness = std::move(w);
        return;
      }
    }
  });
  if (witness) return failed(name, std::move(*witness));
  return pass(name);
}

CheckReport check_integrally_convex_fn(const FnOracle& f) {
  const std::string name = "icx";
  auto dom = nonempty_domain(f, "check_integrally_convex_fn");
  if (auto set_report = check_integrally_convex_set(dom); !set_report.verdict) {
    set_report.check = name;
    set_report.witness->detail = "effective domain is not integrally convex: " + set_report.witness->detail;
    return set_report;
  }
  auto witness = scan_pairs(dom, false, [&](const IntPoint& x, const IntPoint& y) -> std::optional<Violation> {
    if (linf_distance(x, y) != 2) return std::nullopt;
    RationalPoint mid = RationalPoint::midpoint(x, y);
    ExtValue lhs = extension_value(f, mid);
    ExtValue rhs = (f(x) + f(y)).scaled(Rational(1, 2));
    if (lhs <= rhs) return std::nullopt;
    Violation v;
    v.points = {x, y};
    v.real_point = mid;
    v.lhs = lhs;
    v.rhs = rhs;
    v.detail = "extension at midpoint exceeds the average of the endpoint values";
    return v;
  });
  if (witness) return failed(name, std::move(*witness));
  return pass(name);
}

CheckReport check_Lnat(const FnOracle& f) {
  const std::string name = "lnat";
  auto dom = nonempty_domain(f, "check_Lnat");
  const DenseView fv(f);
  auto witness = scan_pairs(dom, false, [&](const IntPoint& x, const IntPoint& y) -> std::optional<Violation> {
    IntPoint up(x.size()), down(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::int64_t s = x[i] + y[i];
      down[i] = s >= 0 ? s / 2 : -((-s + 1) / 2);
      up[i] = s - down[i];
    }
    ExtValue lhs = fv(up) + fv(down);
    ExtValue rhs = fv(x) + fv(y);
    if (lhs <= rhs) return std::nullopt;
    return Violation{{x, y}, RationalPoint::midpoint(x, y), std::nullopt, std::nullopt, lhs, rhs,
                     "discrete midpoint convexity fails"};
  });
  if (witness) return failed(name, std::move(*witness));
  return pass(name);
}

CheckReport check_Mnat(const FnOracle& f) {
  const std::string name = "mnat";
  auto dom = nonempty_domain(f, "check_Mnat");
  const DenseView fv(f);
  const std::size_t n = f.dimension();
  auto witness = scan_pairs(dom, true, [&](const IntPoint& x, const IntPoint& y) -> std::optional<Violation> {
    const ExtValue rhs = fv(x) + fv(y);
    IntPoint xp = x, yp = y;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] <= y[i]) continue;
      ExtValue best = ExtValue::infinity();
      --xp[i];
      ++yp[i];
      // j = n stands for the zero vector e^0.
      for (std::size_t j = 0; j <= n; ++j) {
        if (j < n && x[j] >= y[j]) continue;
        if (j < n) {
          ++xp[j];
          --yp[j];
        }
        ExtValue v = fv(xp) + fv(yp);
        if (j < n) {
          --xp[j];
          ++yp[j];
        }
        if (v < best) best = std::move(v);
        if (best <= rhs) break;
      }
      ++xp[i];
      --yp[i];
      if (best > rhs) {
        return Violation{{x, y}, std::nullopt, std::nullopt, i, best, rhs, "exchange fails for coordinate " + std::to_string(i + 1)};
      }
    }
    return std::nullopt;
  });
  if (witness) return failed(name, std::move(*witness));
  return pass(name);
}

CheckReport check_submodular(const FnOracle& f) {
  const std::string name = "submodular";
  auto dom = nonempty_domain(f, "check_submodular");
  const DenseView fv(f);
  auto witness = scan_pairs(dom, false, [&](const IntPoint& x, const IntPoint& y) -> std::optional<Violation> {
    IntPoint join(x.size()), meet(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      join[i] = std::max(x[i], y[i]);
      meet[i] = std::min(x[i], y[i]);
    }
    ExtValue lhs = fv(join) + fv(meet);
    ExtValue rhs = fv(x) + fv(y);
    if (lhs <= rhs) return std::nullopt;
    return Violation{{x, y}, std::nullopt, std::nullopt, std::nullopt, lhs, rhs, "submodular inequality fails"};
  });
  if (witness) return failed(name, std::move(*witness));
  return pass(name);
}

QuadraticOracle quadratic_oracle(const QuadraticSpec& spec) {
  const std::size_t n = spec.box.dimension();
  if (spec.q.size() != n || spec.p.size() != n) fail(ErrorKind::DimensionMismatch, "quadratic spec sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.q[i].size() != n) fail(ErrorKind::DimensionMismatch, "quadratic Q is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.q[i][j] != spec.q[j][i]) fail(ErrorKind::Precondition, "quadratic Q is not symmetric");
    }
  }
  QuadraticOracle out{FnOracle::generator(spec.box,
                                          [q = spec.q, p = spec.p](const IntPoint& x) {
                                            Rational v = 0;
                                            for (std::size_t i = 0; i < x.size(); ++i) {
                                              Rational row = 0;
                                              for (std::size_t j = 0; j < x.size(); ++j) row += q[i][j] * x[j];
                                              v += (row + p[i]) * x[i];
                                            }
                                            return ExtValue(v);
                                          },
                                          "quadratic")};
  out.diag_dominant = true;
  out.lnat_pattern = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational off = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      off += abs(spec.q[i][j]);
      if (spec.q[i][j] > 0) out.lnat_pattern = false;
    }
    if (spec.q[i][i] < off) out.diag_dominant = false;
  }
  out.lnat_pattern = out.lnat_pattern && out.diag_dominant;
  return out;
}

}  // namespace icx
