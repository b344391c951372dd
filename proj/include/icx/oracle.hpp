#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icx/point.hpp"
#include "icx/rational.hpp"

namespace icx {

enum class OracleKind { Table, Generator };

/// A function Z^n -> Q ∪ {+inf} with a declared finite bounding box.
///
/// Points outside the box evaluate to +inf without reaching the inner
/// evaluator. Generator-backed oracles memoize behind a mutex, so a single
/// oracle may be shared between threads. Copies share state.
class FnOracle {
 public:
  using Evaluator = std::function<ExtValue(const IntPoint&)>;
  using Entry = std::pair<IntPoint, ExtValue>;

  /// Generator-backed oracle. `evaluator` is only called for points in `box`
  /// and must be pure.
  static FnOracle generator(IntBox box, Evaluator evaluator, std::string name = {});

  /// Table-backed oracle; unlisted in-box points are +inf. Entries must lie in
  /// `box`; duplicates are rejected.
  static FnOracle table(IntBox box, std::span<const Entry> entries, std::string name = {});

  std::size_t dimension() const noexcept;
  const IntBox& box() const noexcept;
  OracleKind kind() const noexcept;
  const std::string& name() const noexcept;

  ExtValue operator()(const IntPoint& x) const;

  /// Finite-valued points inside the box, in lexicographic order.
  std::vector<IntPoint> domain() const;
  /// Finite entries in lexicographic order.
  std::vector<Entry> finite_entries() const;

 private:
  struct Impl;
  explicit FnOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

ExtValue evaluate(const FnOracle& f, const IntPoint& x);

/// Tight-box table from (point, value) pairs. Rejects duplicates and an empty
/// finite support. +inf entries are allowed and simply dropped.
FnOracle table_from_points(std::size_t n, std::span<const FnOracle::Entry> entries, std::string name = {});

/// Indicator function of a finite set (0 on S, +inf elsewhere).
FnOracle indicator(std::span<const IntPoint> set, std::string name = {});

/// Same values on the box, but +inf outside `window` (intersected with the
/// oracle's box).
FnOracle restrict_to_box(const FnOracle& f, const IntBox& window);

/// Affine change of variables x -> shift + signs ⊙ (x permuted), i.e.
/// t(x)_i = shift_i + sign_i * x_{perm(i)}. Permutation is 0-based.
class Transform {
 public:
  Transform(IntPoint shift, std::vector<std::size_t> permutation, std::vector<int> signs);
  static Transform identity(std::size_t n);
  static Transform shift_only(IntPoint shift);

  std::size_t dimension() const noexcept { return shift_.size(); }
  const IntPoint& shift() const noexcept { return shift_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  IntPoint apply(const IntPoint& x) const;
  /// Preimage of a box: {x : apply(x) in box}.
  IntBox preimage(const IntBox& box) const;

  /// compose(outer, inner)(x) = outer.apply(inner.apply(x)).
  static Transform compose(const Transform& outer, const Transform& inner);

 private:
  IntPoint shift_;
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

/// g(x) = f(t(x)). Applying t1 then t2 equals one application of
/// Transform::compose(t1, t2).
FnOracle apply_transform(const FnOracle& f, const Transform& t);

}  // namespace icx
