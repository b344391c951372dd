#include "icx/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>

#include "icx/checkers.hpp"
#include "icx/error.hpp"

namespace icx {

namespace {

// slices[x3][r][x1] with x2 = 2 - r, as the tables are printed.
using Slices = std::array<std::array<std::array<int, 5>, 3>, 3>;

constexpr Slices kEx31 = {{
    {{{3, 1, 1, 1, 3}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 3}}},
    {{{2, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}},
    {{{3, 2, 1, 0, 0}, {2, 1, 0, 0, 0}, {3, 0, 0, 0, 3}}},
}};

constexpr Slices kEx44 = {{
    {{{5, 1, 0, 0, 4}, {2, -1, -2, 0, 3}, {0, -1, 0, 1, 6}}},
    {{{4, 1, -2, -3, -1}, {2, -1, -2, -3, -1}, {2, -1, -2, 0, 5}}},
    {{{6, 3, 0, -3, -4}, {6, 1, -2, -3, 1}, {6, 2, 0, 3, 6}}},
}};

FnOracle slice_table(const Slices& s, std::string name) {
  std::vector<FnOracle::Entry> entries;
  for (int x3 = 0; x3 < 3; ++x3) {
    for (int r = 0; r < 3; ++r) {
      for (int x1 = 0; x1 < 5; ++x1) entries.emplace_back(IntPoint{x1, 2 - r, x3}, ExtValue(s[x3][r][x1]));
    }
  }
  return table_from_points(3, entries, std::move(name));
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Precondition, "fixture parameter out of range: " + what);
}

Fixture ex1_1() {
  const IntPoint g[4] = {{1, 0, -1}, {1, 0, 0}, {0, 1, -1}, {0, 1, 0}};
  std::vector<IntPoint> s;
  for (int mask = 0; mask < 16; ++mask) {
    IntPoint p(3);
    for (int k = 0; k < 4; ++k) {
      if (mask & (1 << k)) p += g[k];
    }
    s.push_back(p);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return Fixture{FixtureId{FixtureKind::Ex1_1}, indicator(s, "ex1.1"), s};
}

FnOracle ex4_1(int n, std::int64_t a) {
  auto phi = [a](std::int64_t t) { return std::max(-t, (a - 1) * (t - a)); };
  return FnOracle::generator(IntBox(IntPoint(n, -a), IntPoint(n, 2 * a)),
                             [phi](const IntPoint& x) {
                               std::int64_t v = 0;
                               for (auto c : x) v += phi(c);
                               return ExtValue(static_cast<long>(v));
                             },
                             "ex4.1");
}

FnOracle ex4_2(int n, std::int64_t a) {
  IntPoint lo(n), hi(n);
  for (int i = 0; i < n; ++i) hi[i] = (n - i) * (a - 1);
  return FnOracle::generator(IntBox(lo, hi),
                             [n, a](const IntPoint& x) {
                               for (int i = 0; i + 1 < n; ++i) {
                                 std::int64_t d = x[i] - x[i + 1];
                                 if (d < 0 || d > a - 1) return ExtValue::infinity();
                               }
                               if (x[n - 1] < 0 || x[n - 1] > a - 1) return ExtValue::infinity();
                               return ExtValue(static_cast<long>(-x[0]));
                             },
                             "ex4.2");
}

FnOracle ex4_3(int n, std::int64_t a) {
  IntPoint lo(n, -(a - 1)), hi(n, 0);
  lo[0] = 0;
  hi[0] = n * (a - 1);
  return FnOracle::generator(IntBox(lo, hi),
                             [a](const IntPoint& x) {
                               std::int64_t s = 0;
                               for (auto c : x) s += c;
                               if (s < 0 || s > a - 1) return ExtValue::infinity();
                               return ExtValue(static_cast<long>(-x[0]));
                             },
                             "ex4.3");
}

FnOracle ex4_5(int m, std::int64_t a) {
  const int n = 2 * m + 2;
  IntPoint lo(n), hi(n);
  hi[0] = std::int64_t{m} * m * (a - 1);
  lo[m + 1] = -hi[0];
  for (int i = 1; i <= m; ++i) {
    hi[i] = std::int64_t{m} * (a - 1);
    lo[m + 1 + i] = -hi[i];
  }
  return FnOracle::generator(IntBox(lo, hi),
                             [m, a](const IntPoint& x) {
                               if (!ex45_member(m, a, x)) return ExtValue::infinity();
                               // f1 and f2 both equal x(V-) on their domains.
                               std::int64_t v = 0;
                               for (int j = 1; j <= m; ++j) v += x[m + 1 + j];
                               return ExtValue(static_cast<long>(2 * v));
                             },
                             "ex4.5");
}

std::map<std::string, std::int64_t> parse_params(std::string_view rest, const std::string& full) {
  std::map<std::string, std::int64_t> out;
  while (!rest.empty()) {
    auto colon = rest.find(':');
    std::string_view item = rest.substr(0, colon);
    rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::Parse, "bad fixture parameter in '" + full + "'");
    std::int64_t v = 0;
    auto val = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size()) {
      fail(ErrorKind::Parse, "bad fixture parameter value in '" + full + "'");
    }
    out[std::string(item.substr(0, eq))] = v;
  }
  return out;
}

struct KindName {
  FixtureKind kind;
  const char* name;
};

constexpr KindName kNames[] = {
    {FixtureKind::Ex1_1, "ex1.1"},         {FixtureKind::Ex3_1, "ex3.1"},         {FixtureKind::Ex4_1, "ex4.1"},
    {FixtureKind::Ex4_2, "ex4.2"},         {FixtureKind::Ex4_3, "ex4.3"},         {FixtureKind::Ex4_4, "ex4.4"},
    {FixtureKind::Ex4_5, "ex4.5"},         {FixtureKind::Remark2_2, "remark2.2"}, {FixtureKind::Quad, "quad"},
    {FixtureKind::LnatRand, "lnat_rand"}, {FixtureKind::SepRand, "sep_rand"},    {FixtureKind::IcxRand, "icx_rand"},
};

}  // namespace

FixtureId FixtureId::parse(std::string_view text) {
  const std::string full(text);
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  FixtureId id;
  bool found = false;
  for (const auto& kn : kNames) {
    if (head == kn.name) {
      id.kind = kn.kind;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::Parse, "unknown fixture id '" + full + "'");
  auto params = parse_params(rest, full);
  auto take = [&](const char* key, std::int64_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::int64_t v = it->second;
    params.erase(it);
    return v;
  };
  switch (id.kind) {
    case FixtureKind::Ex4_1:
    case FixtureKind::Ex4_2:
    case FixtureKind::Ex4_3:
      id.n = static_cast<int>(take("n", 3));
      id.alpha = take("alpha", 2);
      break;
    case FixtureKind::Ex4_5:
      id.m = static_cast<int>(take("m", 2));
      id.alpha = take("alpha", 2);
      break;
    case FixtureKind::Quad:
    case FixtureKind::LnatRand:
    case FixtureKind::SepRand:
    case FixtureKind::IcxRand:
      id.n = static_cast<int>(take("n", 3));
      id.seed = static_cast<std::uint64_t>(take("seed", 1));
      break;
    default:
      break;
  }
  if (!params.empty()) fail(ErrorKind::Parse, "unexpected parameter '" + params.begin()->first + "' in '" + full + "'");
  return id;
}

std::string FixtureId::str() const {
  std::string s;
  for (const auto& kn : kNames) {
    if (kn.kind == kind) s = kn.name;
  }
  switch (kind) {
    case FixtureKind::Ex4_1:
    case FixtureKind::Ex4_2:
    case FixtureKind::Ex4_3:
      return s + ":n=" + std::to_string(n) + ":alpha=" + std::to_string(alpha);
    case FixtureKind::Ex4_5:
      return s + ":m=" + std::to_string(m) + ":alpha=" + std::to_string(alpha);
    case FixtureKind::Quad:
    case FixtureKind::LnatRand:
    case FixtureKind::SepRand:
    case FixtureKind::IcxRand:
      return s + ":n=" + std::to_string(n) + ":seed=" + std::to_string(seed);
    default:
      return s;
  }
}

Fixture build(const FixtureId& id) {
  auto check_n_alpha = [&](int nmin) {
    require(id.n >= nmin && id.n <= 6, "n = " + std::to_string(id.n));
    require(id.alpha >= 1 && id.alpha <= 8, "alpha = " + std::to_string(id.alpha));
  };
  switch (id.kind) {
    case FixtureKind::Ex1_1: return ex1_1();
    case FixtureKind::Ex3_1: return Fixture{id, slice_table(kEx31, "ex3.1"), {}};
    case FixtureKind::Ex4_4: return Fixture{id, slice_table(kEx44, "ex4.4"), {}};
    case FixtureKind::Remark2_2: {
      std::vector<IntPoint> s{{0, 0}, {1, 0}};
      return Fixture{id, indicator(s, "remark2.2"), s};
    }
    case FixtureKind::Ex4_1: check_n_alpha(1); return Fixture{id, ex4_1(id.n, id.alpha), {}};
    case FixtureKind::Ex4_2: check_n_alpha(1); return Fixture{id, ex4_2(id.n, id.alpha), {}};
    case FixtureKind::Ex4_3: check_n_alpha(1); return Fixture{id, ex4_3(id.n, id.alpha), {}};
    case FixtureKind::Ex4_5:
      require(id.m >= 1 && id.m <= 3, "m = " + std::to_string(id.m));
      require(id.alpha >= 1 && id.alpha <= 8, "alpha = " + std::to_string(id.alpha));
      return Fixture{id, ex4_5(id.m, id.alpha), {}};
    case FixtureKind::Quad: return Fixture{id, random_icx(id.n, id.seed, RandomFamily::Quadratic), {}};
    case FixtureKind::LnatRand: return Fixture{id, random_icx(id.n, id.seed, RandomFamily::Lnat), {}};
    case FixtureKind::SepRand: return Fixture{id, random_icx(id.n, id.seed, RandomFamily::Separable), {}};
    case FixtureKind::IcxRand: return Fixture{id, random_icx(id.n, id.seed, RandomFamily::Table), {}};
  }
  fail(ErrorKind::Internal, "unhandled fixture kind");
}

Fixture build(std::string_view id) { return build(FixtureId::parse(id)); }

std::vector<std::string> paper_fixture_ids() {
  return {"ex1.1",           "ex3.1",           "ex4.1:n=2:alpha=3", "ex4.1:n=3:alpha=4", "ex4.2:n=3:alpha=2",
          "ex4.3:n=3:alpha=2", "ex4.4",           "ex4.5:m=2:alpha=2", "remark2.2"};
}

std::string to_string(RandomFamily f) {
  switch (f) {
    case RandomFamily::Quadratic: return "quadratic";
    case RandomFamily::Lnat: return "lnat";
    case RandomFamily::Separable: return "separable";
    case RandomFamily::Table: return "table";
  }
  return "?";
}

RandomFamily parse_random_family(std::string_view text) {
  for (auto f : {RandomFamily::Quadratic, RandomFamily::Lnat, RandomFamily::Separable, RandomFamily::Table}) {
    if (to_string(f) == text) return f;
  }
  fail(ErrorKind::Parse, "unknown family '" + std::string(text) + "'");
}

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

QuadraticSpec random_quadratic(int n, Rng& rng, bool nonpositive_offdiag, const IntBox& box) {
  QuadraticSpec spec{RMatrix(n, RVector(n, Rational(0))), RVector(n, Rational(0)), box};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t q = nonpositive_offdiag ? uniform(rng, -2, 0) : uniform(rng, -2, 2);
      spec.q[i][j] = spec.q[j][i] = static_cast<long>(q);
    }
  }
  for (int i = 0; i < n; ++i) {
    Rational off = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) off += abs(spec.q[i][j]);
    }
    spec.q[i][i] = off + static_cast<long>(uniform(rng, 0, 2));
    spec.p[i] = static_cast<long>(uniform(rng, -6, 6));
  }
  return spec;
}

FnOracle random_separable(int n, Rng& rng) {
  constexpr std::int64_t r = 3;
  // φ_i(t) = Σ of nondecreasing slopes from t = -r.
  std::vector<std::vector<std::int64_t>> values(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> slopes(2 * r);
    for (auto& s : slopes) s = uniform(rng, -5, 5);
    std::sort(slopes.begin(), slopes.end());
    std::int64_t v = uniform(rng, -3, 3);
    values[i].push_back(v);
    for (auto s : slopes) values[i].push_back(v += s);
  }
  return FnOracle::generator(IntBox(IntPoint(n, -r), IntPoint(n, r)),
                             [values](const IntPoint& x) {
                               std::int64_t v = 0;
                               for (std::size_t i = 0; i < x.size(); ++i) v += values[i][x[i] + r];
                               return ExtValue(static_cast<long>(v));
                             },
                             "separable");
}

FnOracle random_table(int n, std::uint64_t seed, Rng& rng) {
  const std::int64_t side = n <= 2 ? 4 : (n == 3 ? 3 : 2);
  const IntBox box(IntPoint(n), IntPoint(n, side));
  const auto base = quadratic_oracle(random_quadratic(n, rng, false, box)).oracle;
  const bool cut = n >= 2 && uniform(rng, 0, 1) == 1;
  const std::int64_t cut_at = uniform(rng, 0, 1);
  const auto points = box.points();
  std::vector<std::int64_t> noise(points.size());
  for (auto& e : noise) e = uniform(rng, -2, 2);

  auto make = [&](int k, bool with_cut) {
    std::vector<FnOracle::Entry> entries;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const auto& x = points[idx];
      if (with_cut && x[0] - x[1] > cut_at) continue;
      Rational v = base(x).value();
      if (k >= 0) v += Rational(noise[idx], 1L << k);
      entries.emplace_back(x, ExtValue(v));
    }
    return FnOracle::table(box, entries, "table");
  };
  constexpr int kRetries = 6;
  for (bool with_cut : {cut, false}) {
    for (int k = 0; k <= kRetries; ++k) {
      auto f = make(k < kRetries ? k : -1, with_cut);
      if (check_integrally_convex_fn(f).verdict) return f;
    }
    if (!with_cut) break;
  }
  fail(ErrorKind::IterationLimit, "random table generation failed verification for seed " + std::to_string(seed));
}

}  // namespace

FnOracle random_icx(int n, std::uint64_t seed, RandomFamily family) {
  if (n < 1) fail(ErrorKind::Precondition, "random_icx needs n >= 1");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(family));
  switch (family) {
    case RandomFamily::Quadratic:
    case RandomFamily::Lnat: {
      if (n > 6) fail(ErrorKind::Precondition, "quadratic families support n <= 6");
      const std::int64_t r = n <= 4 ? 3 : 2;
      const IntBox box(IntPoint(n, -r), IntPoint(n, r));
      auto q = quadratic_oracle(random_quadratic(n, rng, family == RandomFamily::Lnat, box));
      return q.oracle;
    }
    case RandomFamily::Separable:
      if (n > 6) fail(ErrorKind::Precondition, "the separable family supports n <= 6");
      return random_separable(n, rng);
    case RandomFamily::Table:
      if (n > 4) fail(ErrorKind::Precondition, "the table family supports n <= 4");
      return random_table(n, seed, rng);
  }
  fail(ErrorKind::Internal, "unhandled random family");
}

bool ex45_member(int m, std::int64_t alpha, const IntPoint& x) {
  const std::int64_t c = alpha - 1;
  if (static_cast<int>(x.size()) != 2 * m + 2) fail(ErrorKind::DimensionMismatch, "ex4.5 point has the wrong dimension");
  const std::int64_t zp = x[0], zm = x[m + 1];
  std::vector<std::int64_t> rows(m), cols(m);
  std::int64_t rsum = 0, csum = 0;
  for (int i = 0; i < m; ++i) {
    rows[i] = x[1 + i];
    cols[i] = -x[m + 2 + i];
    if (rows[i] < 0 || cols[i] < 0) return false;
    rsum += rows[i];
    csum += cols[i];
  }
  if (zp != -zm || zp != rsum || zp != csum) return false;
  if (zp < 0 || zp > std::int64_t{m} * m * c) return false;
  // Uniform-capacity transportation feasibility (rows to columns, cap c).
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::int64_t need = 0, size = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) {
        need += rows[i];
        ++size;
      }
    }
    std::int64_t cap = 0;
    for (int j = 0; j < m; ++j) cap += std::min(cols[j], c * size);
    if (need > cap) return false;
  }
  return true;
}

IntPoint ex45_minimizer(int m, std::int64_t alpha) {
  IntPoint x(2 * m + 2);
  x[0] = std::int64_t{m} * m * (alpha - 1);
  x[m + 1] = -x[0];
  for (int i = 1; i <= m; ++i) {
    x[i] = std::int64_t{m} * (alpha - 1);
    x[m + 1 + i] = -x[i];
  }
  return x;
}

}  // namespace icx
