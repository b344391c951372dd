#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "icx/oracle.hpp"
#include "icx/point.hpp"

namespace icx {

enum class FixtureKind {
  Ex1_1,      // M♮-convex indicator in Z^3
  Ex3_1,      // integrally convex table whose 2-scaling is not
  Ex4_1,      // separable tightness, (n, alpha)
  Ex4_2,      // L♮ tightness, (n, alpha)
  Ex4_3,      // M♮ tightness, (n, alpha)
  Ex4_4,      // n = 3 table beyond n(α-1)
  Ex4_5,      // quadratic lower bound, (m, alpha)
  Remark2_2,  // {(0,0),(1,0)}
  Quad,       // random diagonally dominant quadratic, (n, seed)
  LnatRand,   // random L♮ quadratic, (n, seed)
  SepRand,    // random separable convex, (n, seed)
  IcxRand,    // random verified table, (n, seed)
};

/// Stable textual ids such as "ex3.1", "ex4.1:n=3:alpha=4", "ex4.5:m=2:alpha=3"
/// or "quad:n=3:seed=7". Omitted parameters take defaults.
struct FixtureId {
  FixtureKind kind = FixtureKind::Ex4_4;
  int n = 0;
  std::int64_t alpha = 0;
  int m = 0;
  std::uint64_t seed = 0;

  static FixtureId parse(std::string_view text);
  std::string str() const;
};

struct Fixture {
  FixtureId id;
  FnOracle oracle;
  std::vector<IntPoint> set;  // the underlying set for set fixtures, else empty
};

Fixture build(const FixtureId& id);
Fixture build(std::string_view id);

/// Fixture ids covering every paper example with its default parameters.
std::vector<std::string> paper_fixture_ids();

enum class RandomFamily { Quadratic, Lnat, Separable, Table };

std::string to_string(RandomFamily f);
RandomFamily parse_random_family(std::string_view text);

/// Seeded instance that passes check_integrally_convex_fn. Quadratic: n <= 6
/// on [-2,2]^n (n <= 4: [-3,3]^n); table: n <= 4.
FnOracle random_icx(int n, std::uint64_t seed, RandomFamily family);

/// Ex. 4.5 helpers. Coordinates are ordered 0+, 1+..m+, 0-, 1-..m-.
bool ex45_member(int m, std::int64_t alpha, const IntPoint& x);
IntPoint ex45_minimizer(int m, std::int64_t alpha);

}  // namespace icx
