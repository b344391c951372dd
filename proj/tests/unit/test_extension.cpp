#include <doctest.h>

#include <random>

#include "icx/error.hpp"
#include "icx/extension.hpp"
#include "icx/fixtures.hpp"
#include "icx/lp.hpp"
#include "icx/polytope.hpp"
#include "icx/scaling.hpp"

using namespace icx;

namespace {

// Solves the columns `cols` of A against b by elimination on the augmented
// matrix. Returns the coefficients when the columns are independent and the
// system is consistent.
std::optional<RVector> solve_columns(const RMatrix& a, const RVector& b, const std::vector<std::size_t>& cols) {
  const std::size_t m = a.size(), k = cols.size();
  RMatrix t(m, RVector(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) t[r][c] = a[r][cols[c]];
    t[r][k] = b[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < m && t[piv][c] == 0) ++piv;
    if (piv == m) return std::nullopt;  // dependent columns
    std::swap(t[piv], t[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || t[r][c] == 0) continue;
      Rational q = t[r][c] / t[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) t[r][cc] -= q * t[row][cc];
    }
    ++row;
  }
  for (std::size_t r = row; r < m; ++r) {
    if (t[r][k] != 0) return std::nullopt;
  }
  RVector x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = t[c][k] / t[c][c];
  return x;
}

// Minimum of c·x over every basic feasible solution of Ax = b, x >= 0.
std::optional<Rational> basic_solution_min(const RVector& c, const RMatrix& a, const RVector& b) {
  std::optional<Rational> best;
  const std::size_t cols = c.size();
  for (std::size_t k = 0; k <= std::min(cols, a.size()); ++k) {
    for_each_combination(cols, k, [&](const std::vector<std::size_t>& pick) {
      auto x = solve_columns(a, b, pick);
      if (!x) return true;
      Rational v = 0;
      for (std::size_t j = 0; j < pick.size(); ++j) {
        if ((*x)[j] < 0) return true;
        v += c[pick[j]] * (*x)[j];
      }
      if (!best || v < *best) best = v;
      return true;
    });
  }
  return best;
}

FnOracle squares(std::int64_t r) {
  return FnOracle::generator(IntBox(IntPoint{-r, -r}, IntPoint{r, r}),
                             [](const IntPoint& x) { return ExtValue(static_cast<long>(x[0] * x[0] + x[1] * x[1])); });
}

}  // namespace

TEST_CASE("integer neighborhoods") {
  auto nb = integer_neighborhood(RationalPoint::parse("1,1/2,1/2"));
  CHECK(nb.points == std::vector<IntPoint>{{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
  CHECK(integer_neighborhood(RationalPoint::parse("3,7")).points == std::vector<IntPoint>{{3, 7}});
  CHECK(integer_neighborhood(RationalPoint::parse("1/3,2/5")).points ==
        std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(integer_neighborhood(RationalPoint::parse("-1/2,-3")).points == std::vector<IntPoint>{{-1, -3}, {0, -3}});
}

TEST_CASE("extension values") {
  SUBCASE("scaled 3.1 at (1,1/2,1/2)") {
    const FnOracle f2 = scale_fn(build("ex3.1").oracle, 2);
    const RationalPoint x = RationalPoint::parse("1,1/2,1/2");
    auto cert = evaluate_extension(f2, x);
    REQUIRE(cert);
    CHECK(cert->value == ExtValue(Rational(1, 2)));
    CHECK(certificate_is_valid(f2, x, *cert));
  }
  SUBCASE("integral points reproduce the table") {
    const FnOracle f = build("ex4.4").oracle;
    for (const auto& p : f.domain()) {
      auto cert = evaluate_extension(f, RationalPoint(p));
      REQUIRE(cert);
      CHECK(cert->value == f(p));
      REQUIRE(cert->support.size() == 1);
      CHECK(cert->support[0] == std::make_pair(p, Rational(1)));
    }
    CHECK_FALSE(evaluate_extension(f, RationalPoint(IntPoint{5, 0, 0})));
    CHECK(extension_value(f, RationalPoint(IntPoint{5, 0, 0})).is_infinite());
  }
  SUBCASE("separable squares at (1/2,0)") {
    auto cert = evaluate_extension(squares(2), RationalPoint::parse("1/2,0"));
    REQUIRE(cert);
    CHECK(cert->value == ExtValue(Rational(1, 2)));
    CHECK(cert->support == std::vector<std::pair<IntPoint, Rational>>{{IntPoint{0, 0}, Rational(1, 2)},
                                                                      {IntPoint{1, 0}, Rational(1, 2)}});
  }
  SUBCASE("outside the hull of the finite neighbors") {
    const FnOracle s = build("remark2.2").oracle;
    CHECK(extension_value(s, RationalPoint::parse("1/2,0")) == ExtValue(0));
    CHECK(extension_value(s, RationalPoint::parse("1/2,1/2")).is_infinite());
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(evaluate_extension(squares(1), RationalPoint::parse("1,1,1")), Error);
  }
}

TEST_CASE("lp kernel") {
  auto one = lp_min({Rational(5)}, {{Rational(1)}}, {Rational(1)});
  REQUIRE(one);
  CHECK(one->value == 5);
  CHECK(one->x == RVector{Rational(1)});
  CHECK_FALSE(lp_min({Rational(1), Rational(1)}, {{Rational(1), Rational(1)}}, {Rational(-1)}));
  CHECK_THROWS_AS(lp_min({Rational(-1), Rational(0)}, {{Rational(1), Rational(-1)}}, {Rational(0)}), Error);
}

TEST_CASE("lp kernel agrees with basic-solution enumeration") {
  std::mt19937_64 rng(77);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = pick(1, 4), cols = pick(1, 8);
    RMatrix a(rows, RVector(cols));
    RVector c(cols), b(rows, Rational(0));
    for (auto& row : a) {
      for (auto& v : row) v = pick(-3, 3);
    }
    for (auto& v : c) v = Rational(pick(0, 12), pick(1, 3));
    if (trial % 4 == 0) {
      for (auto& v : b) v = pick(-4, 4);
    } else {
      for (std::size_t j = 0; j < cols; ++j) {
        Rational w(pick(0, 3), pick(1, 2));
        for (std::size_t r = 0; r < rows; ++r) b[r] += w * a[r][j];
      }
    }
    for (auto& v : b) v.canonicalize();
    for (auto& v : c) v.canonicalize();
    auto sol = lp_min(c, a, b);
    auto oracle = basic_solution_min(c, a, b);
    REQUIRE(sol.has_value() == oracle.has_value());
    if (!sol) continue;
    CHECK(sol->value == *oracle);
    Rational v = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      CHECK(sol->x[j] >= 0);
      v += c[j] * sol->x[j];
    }
    CHECK(v == sol->value);
    for (std::size_t r = 0; r < rows; ++r) CHECK(dot(a[r], sol->x) == b[r]);
  }
}

TEST_CASE("extension is a lower bound on every feasible combination") {
  std::mt19937_64 rng(3);
  const FnOracle f = build("icx_rand:n=3:seed=5").oracle;
  const auto dom = f.domain();
  for (int trial = 0; trial < 200; ++trial) {
    // Random convex combination of points inside one unit cell.
    IntPoint corner = dom[rng() % dom.size()];
    std::vector<std::pair<IntPoint, Rational>> mix;
    Rational total = 0;
    for (const auto& d : unit_directions(3)) {
      IntPoint y = corner + d;
      bool in_cell = true;
      for (std::size_t i = 0; i < 3; ++i) in_cell = in_cell && d[i] >= 0;
      if (!in_cell || f(y).is_infinite() || rng() % 2) continue;
      Rational w(static_cast<long>(rng() % 5 + 1));
      mix.emplace_back(y, w);
      total += w;
    }
    if (mix.empty()) continue;
    std::vector<Rational> x(3, Rational(0));
    Rational value = 0;
    for (auto& [y, w] : mix) {
      w /= total;
      for (std::size_t i = 0; i < 3; ++i) x[i] += w * y[i];
      value += w * f(y).value();
    }
    for (auto& c : x) c.canonicalize();
    const RationalPoint rx(x);
    auto cert = evaluate_extension(f, rx);
    REQUIRE(cert);
    CHECK(certificate_is_valid(f, rx, *cert));
    CHECK(cert->value <= ExtValue(value));
  }
}

TEST_CASE("certificate validation rejects tampering") {
  const FnOracle f = squares(2);
  const RationalPoint x = RationalPoint::parse("1/2,1/3");
  auto cert = evaluate_extension(f, x);
  REQUIRE(cert);
  CHECK(certificate_is_valid(f, x, *cert));
  auto bad = *cert;
  bad.value = bad.value + ExtValue(1);
  CHECK_FALSE(certificate_is_valid(f, x, bad));
  bad = *cert;
  bad.support[0].second += Rational(1, 7);
  CHECK_FALSE(certificate_is_valid(f, x, bad));
}
