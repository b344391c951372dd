#include <ostream>

#include "icx/error.hpp"
#include "icx/io.hpp"
#include "icx/minimize.hpp"
#include "icx/proximity.hpp"

namespace icx {

namespace {

std::string csv_point(const IntPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(p[i]);
  }
  return s;
}

// α-local minimizer reached by steepest descent with step α from the
// lexicographically smallest domain point.
IntPoint alpha_descent(const FnOracle& f, std::int64_t alpha) {
  const IntPoint x0 = f.domain().front();
  const std::size_t n = f.dimension();
  const IntBox& box = f.box();
  IntPoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    // y with x0 + αy in the box
    std::int64_t a = box.lower()[i] - x0[i], b = box.upper()[i] - x0[i];
    lo[i] = -((-a) / alpha);
    hi[i] = b / alpha;
  }
  auto r = steepest_descent([&](const IntPoint& y) { return f(x0 + alpha * y); }, IntBox(lo, hi), IntPoint(n));
  return x0 + alpha * r.point;
}

}  // namespace

void run_bench(const BenchOptions& options, std::ostream& out) {
  if (options.alpha < 1) fail(ErrorKind::Precondition, "bench: alpha must be >= 1");
  out << kBenchHeader << '\n';
  const ProximitySpec spec = ProximitySpec::of(FunctionClass::IntegrallyConvex);
  for (std::uint64_t k = 0; k < options.count; ++k) {
    const std::uint64_t seed = options.seed + k;
    const FnOracle f = random_icx(options.n, seed, options.family);
    const IntPoint local = alpha_descent(f, options.alpha);
    const ProximityResult prox = proximity_holds(f, local, options.alpha, spec);
    const MinimizeResult run = minimize_proximity_scaling(f);
    out << seed << ',' << to_string(options.family) << ',' << options.n << ',' << options.alpha << ',' << run.k_inf << ','
        << csv_point(local) << ',' << prox.distance << ',' << render(prox.bound) << ',' << (prox.holds ? "true" : "false")
        << ',' << run.evaluations << ',' << run.budget.get_str() << '\n';
  }
}

}  // namespace icx
