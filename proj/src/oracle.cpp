#include "icx/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "icx/error.hpp"

namespace icx {

struct FnOracle::Impl {
  IntBox box;
  OracleKind kind;
  std::string name;
  Evaluator evaluator;  // generator only
  std::unordered_map<IntPoint, ExtValue, IntPointHash> table;
  mutable std::unordered_map<IntPoint, ExtValue, IntPointHash> memo;
  mutable std::mutex memo_mutex;
};

FnOracle FnOracle::generator(IntBox box, Evaluator evaluator, std::string name) {
  if (!evaluator) fail(ErrorKind::Precondition, "generator oracle needs an evaluator");
  auto impl = std::make_shared<Impl>();
  impl->box = std::move(box);
  impl->kind = OracleKind::Generator;
  impl->name = std::move(name);
  impl->evaluator = std::move(evaluator);
  return FnOracle(std::move(impl));
}

FnOracle FnOracle::table(IntBox box, std::span<const Entry> entries, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->kind = OracleKind::Table;
  impl->name = std::move(name);
  for (const auto& [p, v] : entries) {
    if (!box.contains(p)) fail(ErrorKind::Precondition, "table entry " + p.str() + " outside the bounding box");
    if (!impl->table.emplace(p, v).second) fail(ErrorKind::Precondition, "duplicate table point " + p.str());
  }
  std::erase_if(impl->table, [](const auto& kv) { return kv.second.is_infinite(); });
  impl->box = std::move(box);
  return FnOracle(std::move(impl));
}

std::size_t FnOracle::dimension() const noexcept { return impl_->box.dimension(); }
const IntBox& FnOracle::box() const noexcept { return impl_->box; }
OracleKind FnOracle::kind() const noexcept { return impl_->kind; }
const std::string& FnOracle::name() const noexcept { return impl_->name; }

ExtValue FnOracle::operator()(const IntPoint& x) const {
  if (x.size() != dimension()) {
    fail(ErrorKind::DimensionMismatch, "point " + x.str() + " for an oracle of dimension " + std::to_string(dimension()));
  }
  if (!impl_->box.contains(x)) return ExtValue::infinity();
  if (impl_->kind == OracleKind::Table) {
    auto it = impl_->table.find(x);
    return it == impl_->table.end() ? ExtValue::infinity() : it->second;
  }
  {
    std::lock_guard lock(impl_->memo_mutex);
    if (auto it = impl_->memo.find(x); it != impl_->memo.end()) return it->second;
  }
  ExtValue v = impl_->evaluator(x);
  std::lock_guard lock(impl_->memo_mutex);
  impl_->memo.emplace(x, v);
  return v;
}

std::vector<IntPoint> FnOracle::domain() const {
  std::vector<IntPoint> out;
  if (impl_->kind == OracleKind::Table) {
    for (const auto& kv : impl_->table) out.push_back(kv.first);
    std::sort(out.begin(), out.end());
    return out;
  }
  impl_->box.for_each([&](const IntPoint& p) {
    if ((*this)(p).is_finite()) out.push_back(p);
  });
  return out;
}

std::vector<FnOracle::Entry> FnOracle::finite_entries() const {
  std::vector<Entry> out;
  for (auto& p : domain()) {
    ExtValue v = (*this)(p);
    out.emplace_back(std::move(p), std::move(v));
  }
  return out;
}

ExtValue evaluate(const FnOracle& f, const IntPoint& x) { return f(x); }

FnOracle table_from_points(std::size_t n, std::span<const FnOracle::Entry> entries, std::string name) {
  std::vector<IntPoint> finite;
  for (const auto& [p, v] : entries) {
    if (p.size() != n) fail(ErrorKind::DimensionMismatch, "entry " + p.str() + " in dimension " + std::to_string(n));
    if (v.is_finite()) finite.push_back(p);
  }
  if (finite.empty()) fail(ErrorKind::EmptyDomain, "table has no finite entries");
  IntBox box = IntBox::bounding(finite);
  std::vector<FnOracle::Entry> kept;
  std::vector<IntPoint> seen;
  for (const auto& e : entries) seen.push_back(e.first);
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
    fail(ErrorKind::Precondition, "duplicate table point " + dup->str());
  }
  for (const auto& e : entries) {
    if (e.second.is_finite()) kept.push_back(e);
  }
  return FnOracle::table(std::move(box), kept, std::move(name));
}

FnOracle indicator(std::span<const IntPoint> set, std::string name) {
  if (set.empty()) fail(ErrorKind::EmptyDomain, "indicator of an empty set");
  std::vector<FnOracle::Entry> entries;
  std::vector<IntPoint> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& p : sorted) entries.emplace_back(p, ExtValue(0));
  return table_from_points(sorted.front().size(), entries, std::move(name));
}

FnOracle restrict_to_box(const FnOracle& f, const IntBox& window) {
  const std::size_t n = f.dimension();
  if (window.dimension() != n) fail(ErrorKind::DimensionMismatch, "restriction window dimension");
  IntPoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::max(window.lower()[i], f.box().lower()[i]);
    hi[i] = std::min(window.upper()[i], f.box().upper()[i]);
    if (lo[i] > hi[i]) {
      // Disjoint: keep a degenerate box whose single point evaluates to +inf.
      lo = hi = f.box().lower();
      return FnOracle::generator(IntBox(lo, hi), [](const IntPoint&) { return ExtValue::infinity(); },
                                 f.name() + "|empty");
    }
  }
  return FnOracle::generator(IntBox(lo, hi), [f](const IntPoint& x) { return f(x); }, f.name());
}

Transform::Transform(IntPoint shift, std::vector<std::size_t> permutation, std::vector<int> signs)
    : shift_(std::move(shift)), perm_(std::move(permutation)), signs_(std::move(signs)) {
  const std::size_t n = shift_.size();
  if (perm_.size() != n || signs_.size() != n) fail(ErrorKind::DimensionMismatch, "transform components differ in length");
  std::vector<bool> seen(n, false);
  for (auto p : perm_) {
    if (p >= n || seen[p]) fail(ErrorKind::Precondition, "transform permutation is not a bijection");
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) fail(ErrorKind::Precondition, "transform signs must be +1 or -1");
  }
}

Transform Transform::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return Transform(IntPoint(n), std::move(perm), std::vector<int>(n, 1));
}

Transform Transform::shift_only(IntPoint shift) {
  Transform t = identity(shift.size());
  t.shift_ = std::move(shift);
  return t;
}

IntPoint Transform::apply(const IntPoint& x) const {
  if (x.size() != dimension()) fail(ErrorKind::DimensionMismatch, "transform applied to " + x.str());
  IntPoint y(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) y[i] = shift_[i] + signs_[i] * x[perm_[i]];
  return y;
}

IntBox Transform::preimage(const IntBox& box) const {
  if (box.dimension() != dimension()) fail(ErrorKind::DimensionMismatch, "transform preimage of box");
  IntPoint lo(dimension()), hi(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    std::int64_t a = signs_[i] * (box.lower()[i] - shift_[i]);
    std::int64_t b = signs_[i] * (box.upper()[i] - shift_[i]);
    lo[perm_[i]] = std::min(a, b);
    hi[perm_[i]] = std::max(a, b);
  }
  return IntBox(lo, hi);
}

Transform Transform::compose(const Transform& outer, const Transform& inner) {
  const std::size_t n = outer.dimension();
  if (inner.dimension() != n) fail(ErrorKind::DimensionMismatch, "composing transforms of different dimension");
  IntPoint shift(n);
  std::vector<std::size_t> perm(n);
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = outer.perm_[i];
    shift[i] = outer.shift_[i] + outer.signs_[i] * inner.shift_[j];
    signs[i] = outer.signs_[i] * inner.signs_[j];
    perm[i] = inner.perm_[j];
  }
  return Transform(std::move(shift), std::move(perm), std::move(signs));
}

FnOracle apply_transform(const FnOracle& f, const Transform& t) {
  if (t.dimension() != f.dimension()) fail(ErrorKind::DimensionMismatch, "transform dimension differs from oracle");
  IntBox box = t.preimage(f.box());
  return FnOracle::generator(std::move(box), [f, t](const IntPoint& x) { return f(t.apply(x)); }, f.name());
}

}  // namespace icx
