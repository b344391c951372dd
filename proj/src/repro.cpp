#include <algorithm>
#include <ostream>

#include "icx/cones.hpp"
#include "icx/error.hpp"
#include "icx/extension.hpp"
#include "icx/io.hpp"
#include "icx/minimize.hpp"
#include "icx/proximity.hpp"
#include "icx/scaling.hpp"

namespace icx {

namespace {

class Claims {
 public:
  explicit Claims(std::ostream& out) : out_(out) {}

  void operator()(bool ok, const std::string& claim) {
    out_ << (ok ? "PASS " : "FAIL ") << claim << '\n';
    all_ = all_ && ok;
  }

  bool all() const { return all_; }

 private:
  std::ostream& out_;
  bool all_ = true;
};

bool witness_pair(const CheckReport& r, const IntPoint& x, const IntPoint& y) {
  return r.witness && r.witness->points.size() == 2 && r.witness->points[0] == x && r.witness->points[1] == y;
}

IntPoint uniform_point(std::size_t n, std::int64_t v) { return IntPoint(n, v); }

void repro_ex1_1(Claims& claim) {
  const Fixture fx = build("ex1.1");
  claim(fx.set.size() == 15, "ex1.1: 16 generator combinations give 15 distinct points");
  claim(check_Mnat(fx.oracle).verdict, "ex1.1: indicator of S is M-natural convex");
  claim(check_integrally_convex_fn(fx.oracle).verdict, "ex1.1: indicator of S is integrally convex");
  const auto scaled = scale_set(fx.set, 2);
  const std::vector<IntPoint> two{{0, 0, 0}, {1, 1, -1}};
  claim(scaled == two, "ex1.1: the 2-scaled set is {(0,0,0),(1,1,-1)}");
  claim(!check_Mnat(indicator(two)).verdict, "ex1.1: the 2-scaled indicator is not M-natural convex");
  claim(check_integrally_convex_set(two).verdict, "ex1.1: the 2-scaled set is integrally convex");
}

void repro_ex3_1(Claims& claim) {
  const FnOracle f = build("ex3.1").oracle;
  claim(f.domain().size() == 45, "ex3.1: dom f is the box [(0,0,0),(4,2,2)]");
  claim(check_integrally_convex_fn(f).verdict, "ex3.1: f is integrally convex");
  const FnOracle f2 = scale_fn(f, 2);
  claim(f2(IntPoint{1, 1, 1}) == ExtValue(1), "ex3.1: f^2(1,1,1) = f(2,2,2) = 1");
  const auto r = check_integrally_convex_fn(f2);
  claim(!r.verdict && witness_pair(r, {0, 0, 0}, {2, 1, 1}), "ex3.1: f^2 fails with witness (0,0,0),(2,1,1)");
  claim(r.witness && r.witness->lhs == ExtValue(Rational(1, 2)) && r.witness->rhs == ExtValue(0),
        "ex3.1: extension of f^2 at the midpoint is 1/2 > 0");
  const auto s = argmin_set(f);
  claim(check_integrally_convex_set(s).verdict, "ex3.1: argmin f is an integrally convex set");
  const auto s2 = scale_set(s, 2);
  const std::vector<IntPoint> expect{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {2, 1, 1}};
  claim(s2 == expect, "ex3.1: 2-scaled argmin is {(0,0,0),(1,0,0),(1,0,1),(2,1,1)}");
  claim(!check_integrally_convex_set(s2).verdict, "ex3.1: 2-scaled argmin is not integrally convex");
}

void repro_tightness(Claims& claim, const FixtureId& id, FunctionClass cls, const IntPoint& expected, std::int64_t expected_dist) {
  const std::string tag = id.str() + ": ";
  const FnOracle f = build(id).oracle;
  const std::size_t n = f.dimension();
  const auto am = argmin_set(f);
  claim(am.size() == 1 && am.front() == expected, tag + "unique minimizer " + expected.str());
  const IntPoint zero(n);
  claim(is_alpha_local_min(f, zero, id.alpha, ProximitySpec::of(cls)).verdict, tag + "0 is alpha-local minimal (class directions)");
  claim(is_alpha_local_min(f, zero, id.alpha, ProximitySpec::of(FunctionClass::IntegrallyConvex)).verdict,
        tag + "0 is alpha-local minimal (all directions)");
  const auto prox = proximity_holds(f, zero, id.alpha, ProximitySpec::of(cls));
  claim(prox.distance == expected_dist, tag + "distance is exactly " + std::to_string(expected_dist));
  claim(prox.holds, tag + "distance within the class bound " + render(prox.bound));
  const auto run = minimize_proximity_scaling(f);
  claim(run.minimizer == expected && BigInt(static_cast<unsigned long>(run.evaluations)) <= run.budget,
        tag + "proximity-scaling finds the minimizer within budget");
}

void repro_ex4_1(Claims& claim, const FixtureId& id) {
  const FnOracle f = build(id).oracle;
  claim(check_Lnat(f).verdict && check_Mnat(f).verdict, id.str() + ": f is L-natural and M-natural convex");
  repro_tightness(claim, id, FunctionClass::Separable, uniform_point(id.n, id.alpha - 1), id.alpha - 1);
}

void repro_ex4_2(Claims& claim, const FixtureId& id) {
  IntPoint x(id.n);
  for (int i = 0; i < id.n; ++i) x[i] = (id.n - i) * (id.alpha - 1);
  claim(check_Lnat(build(id).oracle).verdict, id.str() + ": f is L-natural convex");
  repro_tightness(claim, id, FunctionClass::Lnat, x, id.n * (id.alpha - 1));
}

void repro_ex4_3(Claims& claim, const FixtureId& id) {
  IntPoint x(id.n, -(id.alpha - 1));
  x[0] = id.n * (id.alpha - 1);
  claim(check_Mnat(build(id).oracle).verdict, id.str() + ": f is M-natural convex");
  repro_tightness(claim, id, FunctionClass::Mnat, x, id.n * (id.alpha - 1));
}

void repro_ex4_4(Claims& claim) {
  const FnOracle f = build("ex4.4").oracle;
  claim(f(IntPoint{1, 1, 0}) == ExtValue(-1) && f(IntPoint{3, 2, 1}) == ExtValue(-3) && f(IntPoint{4, 2, 2}) == ExtValue(-4),
        "ex4.4: table values f(1,1,0)=-1, f(3,2,1)=-3, f(4,2,2)=-4");
  claim(check_integrally_convex_fn(f).verdict, "ex4.4: f is integrally convex");
  const IntPoint zero{0, 0, 0};
  claim(is_alpha_local_min(f, zero, 2, ProximitySpec::of(FunctionClass::IntegrallyConvex)).verdict,
        "ex4.4: (0,0,0) is 2-local minimal");
  const auto bf = brute_force_min(f);
  claim(bf.first == IntPoint{4, 2, 2} && bf.second == ExtValue(-4), "ex4.4: brute force gives (4,2,2) with value -4");
  const auto run = minimize_proximity_scaling(f);
  claim(run.minimizer == IntPoint{4, 2, 2} && run.value == ExtValue(-4), "ex4.4: proximity-scaling gives (4,2,2) with value -4");
  claim(BigInt(static_cast<unsigned long>(run.evaluations)) <= run.budget, "ex4.4: evaluations within budget");
  const auto nat = proximity_holds(f, zero, 2, ProximitySpec::of(FunctionClass::Lnat));
  claim(nat.distance == 4 && !nat.holds, "ex4.4: distance 4 exceeds n(alpha-1) = 3");
  const auto ic = proximity_holds(f, zero, 2, ProximitySpec::of(FunctionClass::IntegrallyConvex));
  claim(ic.holds && ic.bound == 5, "ex4.4: distance 4 respects beta_3(alpha-1) = 5");
  claim(!check_integrally_convex_fn(scale_fn(f, 2)).verdict, "ex4.4: f^2 is not integrally convex");
}

void repro_ex4_5(Claims& claim, const FixtureId& id) {
  const std::string tag = id.str() + ": ";
  const FnOracle f = build(id).oracle;
  const std::size_t n = f.dimension();
  const std::int64_t a = id.alpha;
  std::vector<IntPoint> hits;
  IntBox(IntPoint(n, -1), IntPoint(n, 1)).for_each([&](const IntPoint& d) {
    if (f(a * d).is_finite()) hits.push_back(a * d);
  });
  claim(hits.size() == 1 && hits.front() == IntPoint(n), tag + "dom f meets {-alpha,0,alpha}^n only at 0");
  const IntPoint xs = ex45_minimizer(id.m, a);
  const auto am = argmin_set(f);
  claim(am.size() == 1 && am.front() == xs, tag + "unique minimizer " + xs.str());
  claim(linf_norm(xs) == std::int64_t{id.m} * id.m * (a - 1), tag + "||x*|| = m^2(alpha-1)");
  const auto prox = proximity_holds(f, IntPoint(n), a, ProximitySpec::of(FunctionClass::IntegrallyConvex));
  const std::int64_t nn = static_cast<std::int64_t>(n);
  claim(4 * prox.distance == (nn - 2) * (nn - 2) * (a - 1) && prox.holds, tag + "distance equals (n-2)^2(alpha-1)/4");
  const auto run = minimize_proximity_scaling(f);
  claim(run.minimizer == xs, tag + "proximity-scaling finds x*");
}

void repro_remark2_2(Claims& claim) {
  const Fixture fx = build("remark2.2");
  claim(check_integrally_convex_set(fx.set).verdict, "remark2.2: {(0,0),(1,0)} is integrally convex");
  claim(check_integrally_convex_fn(fx.oracle).verdict, "remark2.2: its indicator is integrally convex");
}

void repro_random(Claims& claim, const FixtureId& id) {
  const std::string tag = id.str() + ": ";
  const FnOracle f = build(id).oracle;
  claim(check_integrally_convex_fn(f).verdict, tag + "instance is integrally convex");
  const auto bf = brute_force_min(f);
  const auto run = minimize_proximity_scaling(f);
  claim(run.minimizer == bf.first && run.value == bf.second, tag + "proximity-scaling equals brute force");
  claim(BigInt(static_cast<unsigned long>(run.evaluations)) <= run.budget, tag + "evaluations within budget");
}

void repro_hilbert(Claims& claim, std::size_t n, std::int64_t radius) {
  const std::string tag = "hilbert-n" + std::to_string(n) + ": ";
  for (const auto& a : nonempty_subsets(n)) {
    std::string name = "A={";
    for (std::size_t k = 0; k < a.size(); ++k) name += (k ? "," : "") + std::to_string(a[k] + 1);
    name += "}";
    claim(verify_hilbert(n, a, radius).verdict, tag + name + " integer cone equals real cone on [0," + std::to_string(radius) + "]^" + std::to_string(n));
  }
  // Without χ_A the integer cone misses χ_A = (2χ_A)/2 when |A| = 1.
  auto spec = generators(n, {0});
  IntPoint chi = unit_vector(n, 0);
  std::erase(spec.generators, chi);
  const auto r = verify_hilbert(custom_cone(n, spec.generators), radius);
  claim(!r.verdict && r.witness && r.witness->points.front() == chi, tag + "dropping chi_A breaks the Hilbert property at chi_A");
}

void repro_beta(Claims& claim) {
  const Rational expect[] = {1, 2, 5, Rational(27, 2), Rational(83, 2), Rational(585, 4), 586};
  for (int n = 1; n <= 7; ++n) claim(beta(n) == expect[n - 1], "beta(" + std::to_string(n) + ") = " + render(expect[n - 1]));
  const Rational bound[] = {6, 15, 45, Rational(315, 2), 630};
  for (int n = 3; n <= 7; ++n) {
    claim(beta_upper_bound(n) == bound[n - 3], "bound(" + std::to_string(n) + ") = " + render(bound[n - 3]));
  }
  bool ok = true;
  for (int n = 3; n <= 12; ++n) ok = ok && beta(n) <= beta_upper_bound(n);
  claim(ok, "beta(n) <= (n+1)!/2^(n-1) for 3 <= n <= 12");
}

}  // namespace

std::vector<std::string> repro_ids() {
  std::vector<std::string> ids = paper_fixture_ids();
  for (const char* extra : {"ex4.2:n=2:alpha=3", "ex4.3:n=2:alpha=3", "ex4.5:m=2:alpha=3", "quad:n=3:seed=7",
                            "lnat_rand:n=3:seed=7", "sep_rand:n=3:seed=7", "icx_rand:n=3:seed=7", "hilbert-n2", "hilbert-n3",
                            "beta"}) {
    ids.emplace_back(extra);
  }
  return ids;
}

bool run_repro(std::string_view id, std::ostream& out) {
  Claims claim(out);
  if (id == "hilbert-n2") {
    repro_hilbert(claim, 2, 6);
  } else if (id == "hilbert-n3") {
    repro_hilbert(claim, 3, 4);
  } else if (id == "beta") {
    repro_beta(claim);
  } else {
    const FixtureId fid = FixtureId::parse(id);
    switch (fid.kind) {
      case FixtureKind::Ex1_1: repro_ex1_1(claim); break;
      case FixtureKind::Ex3_1: repro_ex3_1(claim); break;
      case FixtureKind::Ex4_1: repro_ex4_1(claim, fid); break;
      case FixtureKind::Ex4_2: repro_ex4_2(claim, fid); break;
      case FixtureKind::Ex4_3: repro_ex4_3(claim, fid); break;
      case FixtureKind::Ex4_4: repro_ex4_4(claim); break;
      case FixtureKind::Ex4_5: repro_ex4_5(claim, fid); break;
      case FixtureKind::Remark2_2: repro_remark2_2(claim); break;
      default: repro_random(claim, fid); break;
    }
  }
  return claim.all();
}

}  // namespace icx
