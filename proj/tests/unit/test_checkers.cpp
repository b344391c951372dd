#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "icx/checkers.hpp"
#include "icx/error.hpp"
#include "icx/extension.hpp"
#include "icx/fixtures.hpp"
#include "icx/scaling.hpp"

using namespace icx;

namespace {

FnOracle on_box(IntPoint lo, IntPoint hi, std::function<long(const IntPoint&)> g) {
  return FnOracle::generator(IntBox(std::move(lo), std::move(hi)), [g](const IntPoint& x) { return ExtValue(g(x)); });
}

// Plain pair loops over the domain, written independently of the library scans.
bool brute_lnat(const FnOracle& f) {
  const auto dom = f.domain();
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      IntPoint up(x.size()), down(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto s = x[i] + y[i];
        down[i] = static_cast<std::int64_t>(std::floor(s / 2.0));
        up[i] = static_cast<std::int64_t>(std::ceil(s / 2.0));
      }
      if (f(x) + f(y) < f(up) + f(down)) return false;
    }
  }
  return true;
}

bool brute_submodular(const FnOracle& f) {
  const auto dom = f.domain();
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      IntPoint join(x.size()), meet(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        join[i] = std::max(x[i], y[i]);
        meet[i] = std::min(x[i], y[i]);
      }
      if (f(x) + f(y) < f(join) + f(meet)) return false;
    }
  }
  return true;
}

bool brute_mnat(const FnOracle& f) {
  const auto dom = f.domain();
  const std::size_t n = f.dimension();
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        bool ok = false;
        for (std::size_t j = 0; j <= n && !ok; ++j) {
          if (j < n && x[j] >= y[j]) continue;
          IntPoint d = unit_vector(n, i);
          if (j < n) d = d - unit_vector(n, j);
          ok = f(x) + f(y) >= f(x - d) + f(y + d);
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// An n = 2 set is integrally convex exactly when it is cut out by the
// inequalities d·x <= max_S d·x over the eight nonzero d in {-1,0,1}^2.
bool tight_system_reproduces(const std::vector<IntPoint>& s) {
  const auto dirs = unit_directions(2);
  std::vector<std::int64_t> rhs;
  for (const auto& d : dirs) {
    std::int64_t best = INT64_MIN;
    for (const auto& p : s) best = std::max(best, d[0] * p[0] + d[1] * p[1]);
    rhs.push_back(best);
  }
  const IntBox box = IntBox::bounding(s);
  const std::set<IntPoint> members(s.begin(), s.end());
  bool same = true;
  box.for_each([&](const IntPoint& p) {
    bool inside = true;
    for (std::size_t k = 0; k < dirs.size(); ++k) inside = inside && dirs[k][0] * p[0] + dirs[k][1] * p[1] <= rhs[k];
    same = same && inside == members.contains(p);
  });
  return same;
}

// Re-evaluates a two-point witness against its stated inequality.
void check_pair_witness(const FnOracle& f, const CheckReport& r) {
  REQUIRE_FALSE(r.verdict);
  REQUIRE(r.witness);
  const auto& w = *r.witness;
  CHECK(w.lhs > w.rhs);
  REQUIRE(w.points.size() == 2);
  const auto &x = w.points[0], &y = w.points[1];
  if (r.check == "icx") {
    CHECK(w.lhs == extension_value(f, RationalPoint::midpoint(x, y)));
    CHECK(w.rhs == (f(x) + f(y)).scaled(Rational(1, 2)));
  } else {
    CHECK(w.rhs == f(x) + f(y));
  }
}

}  // namespace

TEST_CASE("set recognition examples") {
  CHECK(check_integrally_convex_set(build("remark2.2").set).verdict);
  std::vector<IntPoint> scaled_argmin{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {2, 1, 1}};
  auto r = check_integrally_convex_set(scaled_argmin);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(r.witness->real_point);
  // The two points share a unit cell, so the segment between them is its own local hull.
  std::vector<IntPoint> pair{{0, 0, 0}, {1, 1, -1}};
  CHECK(check_integrally_convex_set(pair).verdict);
  CHECK(check_integrally_convex_set(build("ex1.1").set).verdict);
  std::vector<IntPoint> gap{{0, 0}, {2, 0}};
  CHECK_FALSE(check_integrally_convex_set(gap).verdict);
  std::vector<IntPoint> knight{{0, 0}, {2, 1}};
  CHECK_FALSE(check_integrally_convex_set(knight).verdict);
  std::vector<IntPoint> big{{0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(check_integrally_convex_set(big), Error);
  CHECK_THROWS_AS(check_integrally_convex_set(std::vector<IntPoint>{}), Error);
}

TEST_CASE("function recognition examples") {
  CHECK(check_integrally_convex_fn(build("ex4.4").oracle).verdict);
  const FnOracle f2 = scale_fn(build("ex3.1").oracle, 2);
  auto r = check_integrally_convex_fn(f2);
  check_pair_witness(f2, r);
  CHECK(r.witness->points == std::vector<IntPoint>{{0, 0, 0}, {2, 1, 1}});
  CHECK(r.witness->lhs == ExtValue(Rational(1, 2)));
  CHECK(r.witness->rhs == ExtValue(0));
  std::vector<IntPoint> one{{2, -1}};
  CHECK(check_integrally_convex_fn(indicator(one)).verdict);
  CHECK_THROWS_AS(check_integrally_convex_fn(FnOracle::generator(IntBox(IntPoint{0}, IntPoint{1}),
                                                                  [](const IntPoint&) { return ExtValue::infinity(); })),
                  Error);
}

TEST_CASE("L-natural, M-natural and submodular examples") {
  const FnOracle ex42 = build("ex4.2:n=2:alpha=2").oracle;
  CHECK(check_Lnat(ex42).verdict);
  CHECK(brute_lnat(ex42));
  const FnOracle ex44 = build("ex4.4").oracle;
  auto r = check_Lnat(ex44);
  CHECK_FALSE(brute_lnat(ex44));
  check_pair_witness(ex44, r);
  const FnOracle zero = on_box(IntPoint{-1, 0}, IntPoint{2, 2}, [](const IntPoint&) { return 0L; });
  CHECK(check_Lnat(zero).verdict);
  CHECK(check_submodular(zero).verdict);
  CHECK(check_Mnat(zero).verdict == brute_mnat(zero));

  CHECK(check_Mnat(build("ex1.1").oracle).verdict);
  const std::vector<IntPoint> pair{{0, 0, 0}, {1, 1, -1}};
  const FnOracle pair_ind = indicator(pair);
  auto m = check_Mnat(pair_ind);
  check_pair_witness(pair_ind, m);
  CHECK(m.witness->index.has_value());
  CHECK_FALSE(brute_mnat(pair_ind));
  const std::vector<IntPoint> one{{1, 2, 3}};
  CHECK(check_Mnat(indicator(one)).verdict);

  // x1*x2 rewards the join; its negation is the submodular one.
  const FnOracle prod = on_box(IntPoint{0, 0}, IntPoint{1, 1}, [](const IntPoint& x) { return x[0] * x[1]; });
  const FnOracle neg = on_box(IntPoint{0, 0}, IntPoint{1, 1}, [](const IntPoint& x) { return -x[0] * x[1]; });
  auto s = check_submodular(prod);
  check_pair_witness(prod, s);
  CHECK(s.witness->points == std::vector<IntPoint>{{0, 1}, {1, 0}});
  CHECK(s.witness->lhs == ExtValue(1));
  CHECK(s.witness->rhs == ExtValue(0));
  CHECK_FALSE(brute_submodular(prod));
  CHECK(check_submodular(neg).verdict);
  CHECK(brute_submodular(neg));
}

TEST_CASE("checkers agree with plain pair loops") {
  std::vector<FnOracle> fs;
  for (const char* id : {"ex1.1", "ex3.1", "ex4.4", "ex4.1:n=2:alpha=3", "ex4.2:n=2:alpha=3", "ex4.3:n=2:alpha=3",
                         "remark2.2"}) {
    fs.push_back(build(id).oracle);
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    fs.push_back(random_icx(2, seed, RandomFamily::Table));
    fs.push_back(random_icx(2, seed, RandomFamily::Quadratic));
  }
  for (const auto& f : fs) {
    CAPTURE(f.name());
    auto l = check_Lnat(f), m = check_Mnat(f), s = check_submodular(f);
    CHECK(l.verdict == brute_lnat(f));
    CHECK(m.verdict == brute_mnat(f));
    CHECK(s.verdict == brute_submodular(f));
    if (!l.verdict) check_pair_witness(f, l);
    if (!m.verdict) check_pair_witness(f, m);
    if (!s.verdict) check_pair_witness(f, s);
  }
}

TEST_CASE("quadratic oracle flags") {
  auto mk = [](long a, long b, long c) {
    RMatrix q{{Rational(a), Rational(b)}, {Rational(b), Rational(c)}};
    return quadratic_oracle({q, {Rational(0), Rational(0)}, IntBox(IntPoint{-2, -2}, IntPoint{2, 2})});
  };
  auto id = mk(1, 0, 1);
  CHECK(id.diag_dominant);
  CHECK(id.lnat_pattern);
  CHECK(id.oracle(IntPoint{2, -1}) == ExtValue(5));
  auto pos = mk(2, 1, 2);
  CHECK(pos.diag_dominant);
  CHECK_FALSE(pos.lnat_pattern);
  CHECK(check_integrally_convex_fn(pos.oracle).verdict);
  auto bad = mk(1, 2, 1);
  CHECK_FALSE(bad.diag_dominant);
  auto r = check_integrally_convex_fn(bad.oracle);
  check_pair_witness(bad.oracle, r);
  RMatrix asym{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(quadratic_oracle({asym, {Rational(0), Rational(0)}, IntBox(IntPoint{0, 0}, IntPoint{1, 1})}), Error);
}

TEST_CASE("class inclusions") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const FnOracle l = random_icx(2, seed, RandomFamily::Lnat);
    CHECK(check_Lnat(l).verdict);
    CHECK(check_integrally_convex_fn(l).verdict);
    const FnOracle s = random_icx(2, seed, RandomFamily::Separable);
    CHECK(check_Lnat(s).verdict);
    CHECK(check_Mnat(s).verdict);
    CHECK(check_integrally_convex_fn(s).verdict);
  }
  CHECK(check_Lnat(build("ex4.1:n=2:alpha=3").oracle).verdict);
  CHECK(check_Mnat(build("ex4.1:n=2:alpha=3").oracle).verdict);
}

TEST_CASE("set check matches the eight-direction description in the plane") {
  std::mt19937_64 rng(99);
  int ic = 0, not_ic = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<IntPoint> s;
    const int side = 2 + static_cast<int>(rng() % 2);
    for (std::int64_t a = 0; a <= side; ++a) {
      for (std::int64_t b = 0; b <= side; ++b) {
        if (rng() % 100 < 60) s.push_back(IntPoint{a, b});
      }
    }
    if (s.empty()) continue;
    const bool verdict = check_integrally_convex_set(s).verdict;
    CHECK(verdict == tight_system_reproduces(s));
    (verdict ? ic : not_ic)++;
    CHECK(check_integrally_convex_fn(indicator(s)).verdict == verdict);
  }
  CHECK(ic > 5);
  CHECK(not_ic > 5);
}

TEST_CASE("passing functions have a midpoint-convex extension on sampled segments") {
  std::mt19937_64 rng(8);
  for (const char* id : {"ex4.4", "ex3.1", "icx_rand:n=2:seed=2"}) {
    const FnOracle f = build(id).oracle;
    REQUIRE(check_integrally_convex_fn(f).verdict);
    const IntBox& box = f.box();
    const std::size_t n = f.dimension();
    auto sample = [&] {
      std::vector<Rational> c(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto span = box.upper()[i] - box.lower()[i];
        c[i] = Rational(static_cast<long>(box.lower()[i] * 4 + static_cast<std::int64_t>(rng() % (4 * span + 1))), 4);
        c[i].canonicalize();
      }
      return RationalPoint(c);
    };
    for (int k = 0; k < 60; ++k) {
      const RationalPoint a = sample(), b = sample();
      std::vector<Rational> mid(n);
      for (std::size_t i = 0; i < n; ++i) {
        mid[i] = (a[i] + b[i]) / 2;
        mid[i].canonicalize();
      }
      const ExtValue fa = extension_value(f, a), fb = extension_value(f, b);
      if (fa.is_infinite() || fb.is_infinite()) continue;
      CHECK(extension_value(f, RationalPoint(mid)) <= (fa + fb).scaled(Rational(1, 2)));
    }
  }
}
