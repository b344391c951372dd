#include "icx/point.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "icx/error.hpp"

namespace icx {

namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b) fail(ErrorKind::DimensionMismatch, "points of dimension " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

IntPoint& IntPoint::operator+=(const IntPoint& o) {
  require_same(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

IntPoint& IntPoint::operator-=(const IntPoint& o) {
  require_same(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

IntPoint operator*(std::int64_t k, IntPoint a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

std::string IntPoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

std::int64_t linf_distance(const IntPoint& a, const IntPoint& b) {
  require_same(a.size(), b.size());
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::int64_t linf_norm(const IntPoint& a) {
  std::int64_t d = 0;
  for (auto v : a) d = std::max(d, std::abs(v));
  return d;
}

IntPoint unit_vector(std::size_t n, std::size_t i) {
  IntPoint e(n);
  e[i] = 1;
  return e;
}

std::size_t IntPointHash::operator()(const IntPoint& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : p) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

RationalPoint::RationalPoint(std::vector<Rational> c) : c_(std::move(c)) {
  for (auto& q : c_) q.canonicalize();
}

RationalPoint::RationalPoint(const IntPoint& p) {
  c_.reserve(p.size());
  for (auto v : p) c_.emplace_back(static_cast<long>(v));
}

RationalPoint RationalPoint::midpoint(const IntPoint& a, const IntPoint& b) {
  require_same(a.size(), b.size());
  std::vector<Rational> c;
  c.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c.emplace_back(static_cast<long>(a[i] + b[i]), 2);
  return RationalPoint(std::move(c));
}

RationalPoint RationalPoint::parse(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalPoint(std::move(c));
}

bool RationalPoint::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntPoint RationalPoint::to_int() const {
  if (!is_integral()) fail(ErrorKind::Precondition, "point " + str() + " is not integral");
  IntPoint p(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) p[i] = c_[i].get_num().get_si();
  return p;
}

std::string RationalPoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += render(c_[i]);
  }
  return s + ")";
}

IntBox::IntBox(IntPoint lower, IntPoint upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same(lower_.size(), upper_.size());
  if (lower_.size() == 0) fail(ErrorKind::Precondition, "box of dimension 0");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i] > upper_[i]) fail(ErrorKind::Precondition, "box lower " + lower_.str() + " exceeds upper " + upper_.str());
  }
}

bool IntBox::contains(const IntPoint& p) const {
  require_same(p.size(), dimension());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lower_[i] || p[i] > upper_[i]) return false;
  }
  return true;
}

BigInt IntBox::count() const {
  BigInt c = 1;
  for (std::size_t i = 0; i < dimension(); ++i) c *= BigInt(static_cast<long>(upper_[i] - lower_[i] + 1));
  return c;
}

IntBox IntBox::bounding(std::span<const IntPoint> points) {
  if (points.empty()) fail(ErrorKind::EmptyDomain, "bounding box of an empty point list");
  IntPoint lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    require_same(p.size(), lo.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return IntBox(lo, hi);
}

void IntBox::for_each(const std::function<void(const IntPoint&)>& visit, std::uint64_t limit) const {
  if (count() > BigInt(static_cast<unsigned long>(limit))) {
    fail(ErrorKind::Unsupported, "box " + lower_.str() + ".." + upper_.str() + " has too many points to enumerate");
  }
  const std::size_t n = dimension();
  IntPoint p = lower_;
  while (true) {
    visit(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < upper_[i]) {
        ++p[i];
        break;
      }
      p[i] = lower_[i];
      if (i == 0) return;
    }
  }
}

std::vector<IntPoint> IntBox::points(std::uint64_t limit) const {
  std::vector<IntPoint> out;
  for_each([&](const IntPoint& p) { out.push_back(p); }, limit);
  return out;
}

std::vector<IntPoint> unit_directions(std::size_t n) {
  return IntBox(IntPoint(n, -1), IntPoint(n, 1)).points();
}

}  // namespace icx
