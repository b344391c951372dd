#pragma once

#include <functional>
#include <span>
#include <vector>

#include "icx/linalg.hpp"
#include "icx/point.hpp"

namespace icx {

/// {x : eq_normals[k]·x = eq_rhs[k], normals[k]·x <= rhs[k]}
struct Halfspaces {
  std::vector<RVector> eq_normals;
  RVector eq_rhs;
  std::vector<RVector> normals;
  RVector rhs;
};

/// Exact H-representation of conv(points), found by brute force: the affine
/// hull gives the equalities, and every hyperplane through affinely
/// independent extreme points that leaves all points on one side is kept as
/// a facet inequality. Intended for n <= 4 and a few dozen points.
Halfspaces hull_halfspaces(std::span<const IntPoint> points);

/// Points of `points` that are not convex combinations of the others.
std::vector<IntPoint> extreme_points(std::span<const IntPoint> points);

/// All vertices of a bounded polytope given by its halfspaces, sorted
/// lexicographically. Vertices are intersections of the equalities with
/// n - #eq tight inequalities that satisfy every constraint.
std::vector<RVector> polytope_vertices(const Halfspaces& h, std::size_t n);

/// True iff x is a convex combination of `points` (exact LP feasibility).
bool in_convex_hull(std::span<const IntPoint> points, const RVector& x);

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when visit returns false.
void for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace icx
