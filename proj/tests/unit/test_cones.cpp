#include <doctest.h>

#include <random>

#include "icx/cones.hpp"
#include "icx/error.hpp"

using namespace icx;

namespace {

// Integer membership by counting up every coefficient vector up to ||z||_1.
bool integer_member_brute(const std::vector<IntPoint>& gens, const IntPoint& z) {
  std::int64_t l1 = 0;
  for (auto c : z) l1 += c;
  std::vector<std::int64_t> mu(gens.size(), 0);
  while (true) {
    IntPoint s(z.size());
    for (std::size_t g = 0; g < gens.size(); ++g) s = s + mu[g] * gens[g];
    if (s == z) return true;
    std::size_t k = 0;
    while (k < mu.size() && mu[k] == l1) mu[k++] = 0;
    if (k == mu.size()) return false;
    ++mu[k];
  }
}

// Real membership by Carathéodory: some linearly independent subset of the
// generators represents z with nonnegative coefficients.
bool real_member_brute(const std::vector<IntPoint>& gens, const RationalPoint& z) {
  const std::size_t n = z.size(), m = gens.size();
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t g = 0; g < m; ++g) {
      if ((mask >> g) & 1) cols.push_back(g);
    }
    if (cols.size() > n) continue;
    const std::size_t k = cols.size();
    std::vector<std::vector<Rational>> t(n, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < k; ++c) t[r][c] = static_cast<long>(gens[cols[c]][r]);
      t[r][k] = z[r];
    }
    bool independent = true;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && independent; ++c) {
      std::size_t piv = row;
      while (piv < n && t[piv][c] == 0) ++piv;
      if (piv == n) {
        independent = false;
        break;
      }
      std::swap(t[piv], t[row]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == row || t[r][c] == 0) continue;
        Rational q = t[r][c] / t[row][c];
        for (std::size_t cc = c; cc <= k; ++cc) t[r][cc] -= q * t[row][cc];
      }
      ++row;
    }
    if (!independent) continue;
    bool ok = true;
    for (std::size_t r = row; r < n; ++r) ok = ok && t[r][k] == 0;
    for (std::size_t c = 0; c < k; ++c) ok = ok && t[c][k] / t[c][c] >= 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("generator sets") {
  CHECK(generators(2, {0}).generators == std::vector<IntPoint>{{1, 0}, {1, 1}, {2, 0}});
  CHECK(generators(2, {0, 1}).generators == std::vector<IntPoint>{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(generators(1, {0}).generators == std::vector<IntPoint>{{1}, {2}});
  CHECK(generators(3, {1}).generators.size() == 4);
  CHECK(generators(3, {0, 1, 2}).generators.size() == 7);
  CHECK_THROWS_AS(generators(2, {}), Error);
  CHECK_THROWS_AS(generators(2, {2}), Error);
  CHECK_THROWS_AS(custom_cone(2, {IntPoint{1, -1}}), Error);
  CHECK_THROWS_AS(custom_cone(2, {IntPoint{0, 0}}), Error);
  CHECK(nonempty_subsets(3).size() == 7);
  CHECK(nonempty_subsets(2) == std::vector<std::vector<std::size_t>>{{0}, {1}, {0, 1}});
}

TEST_CASE("membership examples") {
  const auto a1 = generators(2, {0});
  const auto n2 = generators(2, {0, 1});
  CHECK(in_integer_cone(a1, IntPoint{0, 0}));
  CHECK_FALSE(in_integer_cone(a1, IntPoint{1, 2}));
  CHECK(in_integer_cone(a1, IntPoint{5, 3}));
  CHECK_FALSE(in_integer_cone(a1, IntPoint{-1, 0}));
  CHECK(in_real_cone(a1, RationalPoint::parse("0,0")));
  CHECK(in_real_cone(a1, RationalPoint::parse("3/2,3/4")));
  CHECK_FALSE(in_real_cone(a1, RationalPoint::parse("1,2")));
  // C_N contains both unit vectors, so every nonnegative point of the plane.
  for (std::int64_t a = 0; a <= 4; ++a) {
    for (std::int64_t b = 0; b <= 4; ++b) CHECK(in_integer_cone(n2, IntPoint{a, b}));
  }
  CHECK_THROWS_AS(in_integer_cone(a1, IntPoint{1, 1, 1}), Error);
}

TEST_CASE("membership agrees with brute force") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : nonempty_subsets(n)) {
      const auto spec = generators(n, a);
      IntBox(IntPoint(n), IntPoint(n, n == 3 ? 2 : 3)).for_each([&](const IntPoint& z) {
        const bool integer = in_integer_cone(spec, z);
        CHECK(integer == integer_member_brute(spec.generators, z));
        CHECK(in_real_cone(spec, RationalPoint(z)) == real_member_brute(spec.generators, RationalPoint(z)));
        if (integer) CHECK(in_real_cone(spec, RationalPoint(z)));
      });
      for (int k = 0; k < 20; ++k) {
        std::vector<Rational> c(n);
        for (auto& v : c) {
          v = Rational(static_cast<long>(rng() % 13), static_cast<long>(rng() % 4 + 1));
          v.canonicalize();
        }
        CHECK(in_real_cone(spec, RationalPoint(c)) == real_member_brute(spec.generators, RationalPoint(c)));
      }
    }
  }
}

TEST_CASE("zero-one combinations of generators are members") {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& a : nonempty_subsets(n)) {
      const auto spec = generators(n, a);
      const std::size_t m = spec.generators.size();
      for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        IntPoint z(n);
        for (std::size_t g = 0; g < m; ++g) {
          if ((mask >> g) & 1) z = z + spec.generators[g];
        }
        CHECK(in_integer_cone(spec, z));
      }
    }
  }
}

TEST_CASE("Hilbert basis identity on boxes") {
  CHECK(verify_hilbert(2, {0}, 6).verdict);
  for (const auto& a : nonempty_subsets(2)) CHECK(verify_hilbert(2, a, 6).verdict);
  for (const auto& a : nonempty_subsets(3)) CHECK(verify_hilbert(3, a, 4).verdict);
  CHECK_THROWS_AS(verify_hilbert(5, {0}, 2), Error);
  CHECK_THROWS_AS(verify_hilbert(2, {0}, 9), Error);
}

TEST_CASE("dropping the indicator generator breaks the identity") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto gens = generators(n, {0}).generators;
    gens.erase(std::find(gens.begin(), gens.end(), unit_vector(n, 0)));
    auto r = verify_hilbert(custom_cone(n, gens), 4);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.witness);
    CHECK(r.witness->points == std::vector<IntPoint>{unit_vector(n, 0)});
  }
  // Removing chi_A + e^i for i outside A shrinks both cones alike.
  auto gens = generators(2, {0}).generators;
  gens.erase(std::find(gens.begin(), gens.end(), IntPoint{1, 1}));
  CHECK(verify_hilbert(custom_cone(2, gens), 6).verdict);
}
