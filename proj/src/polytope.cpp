#include "icx/polytope.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "icx/error.hpp"
#include "icx/lp.hpp"

namespace icx {

namespace {

RVector to_rvector(const IntPoint& p) {
  RVector v;
  v.reserve(p.size());
  for (auto c : p) v.emplace_back(static_cast<long>(c));
  return v;
}

bool lex_less(const RVector& a, const RVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

}  // namespace

void for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool in_convex_hull(std::span<const IntPoint> points, const RVector& x) {
  if (points.empty()) return false;
  const std::size_t n = x.size();
  RMatrix a(n + 1, RVector(points.size(), Rational(0)));
  RVector b(n + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = static_cast<long>(points[j][i]);
    a[n][j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
  b[n] = 1;
  return lp_min(RVector(points.size(), Rational(0)), a, b).has_value();
}

std::vector<IntPoint> extreme_points(std::span<const IntPoint> points) {
  std::vector<IntPoint> uniq(points.begin(), points.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  // A point with p ± d both present for some d in {-1,0,1}^n is a midpoint
  // and never extreme; the LP only runs on the remaining candidates, whose
  // hull still equals conv(points).
  const std::unordered_set<IntPoint, IntPointHash> members(uniq.begin(), uniq.end());
  const auto dirs = uniq.empty() ? std::vector<IntPoint>{} : unit_directions(uniq.front().size());
  std::vector<IntPoint> cand;
  for (const auto& p : uniq) {
    bool midpoint = false;
    for (std::size_t k = 0; k < dirs.size() / 2 && !midpoint; ++k) {
      midpoint = members.contains(p + dirs[k]) && members.contains(p - dirs[k]);
    }
    if (!midpoint) cand.push_back(p);
  }
  std::vector<IntPoint> out;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    std::vector<IntPoint> others;
    others.reserve(cand.size() - 1);
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (j != k) others.push_back(cand[j]);
    }
    if (!in_convex_hull(others, to_rvector(cand[k]))) out.push_back(cand[k]);
  }
  return out;
}

Halfspaces hull_halfspaces(std::span<const IntPoint> points) {
  if (points.empty()) fail(ErrorKind::EmptyDomain, "convex hull of an empty set");
  const std::size_t n = points.front().size();
  std::vector<IntPoint> verts = extreme_points(points);
  std::vector<RVector> vv;
  for (const auto& p : verts) vv.push_back(to_rvector(p));

  Halfspaces h;
  RMatrix diffs;
  for (std::size_t k = 1; k < vv.size(); ++k) {
    RVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = vv[k][i] - vv[0][i];
    diffs.push_back(std::move(d));
  }
  for (auto& normal : null_space(diffs, n)) {
    normal = primitive_direction(normal);
    h.eq_rhs.push_back(dot(normal, vv[0]));
    h.eq_normals.push_back(std::move(normal));
  }
  const std::size_t affine_dim = n - h.eq_normals.size();
  if (affine_dim == 0) return h;

  std::set<std::pair<RVector, Rational>, bool (*)(const std::pair<RVector, Rational>&, const std::pair<RVector, Rational>&)>
      facets([](const std::pair<RVector, Rational>& a, const std::pair<RVector, Rational>& b) {
        if (lex_less(a.first, b.first)) return true;
        if (lex_less(b.first, a.first)) return false;
        return a.second < b.second;
      });

  for_each_combination(vv.size(), affine_dim, [&](const std::vector<std::size_t>& pick) {
    RMatrix m = h.eq_normals;
    for (std::size_t k = 1; k < pick.size(); ++k) {
      RVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = vv[pick[k]][i] - vv[pick[0]][i];
      m.push_back(std::move(d));
    }
    auto ns = null_space(m, n);
    if (ns.size() != 1) return true;  // picked points are affinely dependent
    RVector normal = primitive_direction(ns.front());
    Rational c = dot(normal, vv[pick[0]]);
    bool all_le = true, all_ge = true;
    for (const auto& v : vv) {
      Rational s = dot(normal, v);
      if (s > c) all_le = false;
      if (s < c) all_ge = false;
    }
    if (all_le) {
      facets.emplace(normal, c);
    } else if (all_ge) {
      for (auto& q : normal) q = -q;
      facets.emplace(normal, Rational(-c));
    }
    return true;
  });
  for (const auto& [normal, c] : facets) {
    h.normals.push_back(normal);
    h.rhs.push_back(c);
  }
  return h;
}

std::vector<RVector> polytope_vertices(const Halfspaces& h, std::size_t n) {
  const std::size_t free = n - h.eq_normals.size();
  std::vector<RVector> out;
  auto feasible = [&](const RVector& x) {
    for (std::size_t k = 0; k < h.eq_normals.size(); ++k) {
      if (dot(h.eq_normals[k], x) != h.eq_rhs[k]) return false;
    }
    for (std::size_t k = 0; k < h.normals.size(); ++k) {
      if (dot(h.normals[k], x) > h.rhs[k]) return false;
    }
    return true;
  };
  for_each_combination(h.normals.size(), free, [&](const std::vector<std::size_t>& pick) {
    RMatrix m = h.eq_normals;
    RVector b = h.eq_rhs;
    for (auto k : pick) {
      m.push_back(h.normals[k]);
      b.push_back(h.rhs[k]);
    }
    if (auto x = solve_square(m, b); x && feasible(*x)) out.push_back(std::move(*x));
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace icx
