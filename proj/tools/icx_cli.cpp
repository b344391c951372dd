// icx: command-line front end for the integral convexity toolkit.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "icx/checkers.hpp"
#include "icx/error.hpp"
#include "icx/extension.hpp"
#include "icx/fixtures.hpp"
#include "icx/io.hpp"
#include "icx/minimize.hpp"
#include "icx/proximity.hpp"
#include "icx/scaling.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

int cmd_check(const std::string& path, const std::string& cls) {
  const auto f = icx::read_function_file(path);
  icx::CheckReport report;
  if (cls == "icx") {
    report = icx::check_integrally_convex_fn(f);
  } else if (cls == "icx-set") {
    auto dom = f.domain();
    report = icx::check_integrally_convex_set(dom);
  } else if (cls == "lnat") {
    report = icx::check_Lnat(f);
  } else if (cls == "mnat") {
    report = icx::check_Mnat(f);
  } else {
    report = icx::check_submodular(f);
  }
  std::cout << icx::report_to_json(report) << '\n';
  return report.verdict ? kExitPass : kExitFail;
}

int cmd_minimize(const std::string& path, bool trace) {
  const auto f = icx::read_function_file(path);
  const auto r = icx::minimize_proximity_scaling(f);
  if (trace) {
    for (const auto& ph : r.phases) {
      std::cout << "phase alpha=" << ph.alpha << " start=" << ph.start.str() << " step=" << ph.step.str()
                << " iterations=" << ph.iterations << '\n';
    }
  }
  std::cout << r.minimizer.str() << " value " << r.value << '\n';
  std::cout << "evaluations " << r.evaluations << " budget " << r.budget.get_str() << '\n';
  return kExitPass;
}

int cmd_bruteforce(const std::string& path) {
  const auto f = icx::read_function_file(path);
  const auto [x, v] = icx::brute_force_min(f);
  std::cout << x.str() << " value " << v << '\n';
  return kExitPass;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) icx::fail(icx::ErrorKind::Parse, out + ": cannot open for writing");
  file << text;
}

int cmd_scale(const std::string& path, std::int64_t alpha, const std::string& out) {
  const auto f = icx::read_function_file(path);
  emit(icx::function_to_json(icx::scale_fn(f, alpha)), out);
  return kExitPass;
}

int cmd_extension(const std::string& path, const std::string& point) {
  const auto f = icx::read_function_file(path);
  const auto x = icx::RationalPoint::parse(point);
  if (x.size() != f.dimension()) icx::fail(icx::ErrorKind::DimensionMismatch, "point dimension does not match the function");
  const auto cert = icx::evaluate_extension(f, x);
  if (!cert) {
    std::cout << "value +inf\n";
    return kExitPass;
  }
  std::cout << "value " << cert->value << '\n';
  for (const auto& [y, w] : cert->support) std::cout << "  " << y.str() << ' ' << icx::render(w) << '\n';
  return kExitPass;
}

std::string with_decimal(const icx::Rational& q) {
  if (q.get_den() == 1) return icx::render(q);
  return icx::render(q) + " (" + icx::render_decimal(q) + ")";
}

int cmd_beta(int n) {
  std::cout << with_decimal(icx::beta(n));
  if (n >= 3) std::cout << ", bound " << with_decimal(icx::beta_upper_bound(n));
  std::cout << '\n';
  return kExitPass;
}

int cmd_repro(const std::string& id) {
  if (id == "all") {
    bool ok = true;
    for (const auto& each : icx::repro_ids()) ok = icx::run_repro(each, std::cout) && ok;
    return ok ? kExitPass : kExitFail;
  }
  return icx::run_repro(id, std::cout) ? kExitPass : kExitFail;
}

int cmd_bench(const icx::BenchOptions& opts, const std::string& out) {
  std::ostringstream buf;
  icx::run_bench(opts, buf);
  emit(buf.str(), out);
  return kExitPass;
}

int cmd_export(const std::string& id, const std::string& out) {
  emit(icx::function_to_json(icx::build(id).oracle), out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for integrally convex functions on Z^n"};
  app.require_subcommand(1);

  std::string path, cls = "icx", out, point, id, family = "quadratic";
  bool trace = false;
  std::int64_t alpha = 2;
  int n = 3;
  icx::BenchOptions bench;

  auto* check = app.add_subcommand("check", "Check a function class; exit 0 pass, 2 fail");
  check->add_option("file", path, "Function file")->required();
  check->add_option("--class", cls, "Class to check")
      ->check(CLI::IsMember({"icx", "icx-set", "lnat", "mnat", "submodular"}));

  auto* minimize = app.add_subcommand("minimize", "Proximity-scaling minimization");
  minimize->add_option("file", path, "Function file")->required();
  minimize->add_flag("--trace", trace, "Print one row per scaling phase");

  auto* brute = app.add_subcommand("bruteforce", "Exhaustive minimization");
  brute->add_option("file", path, "Function file")->required();

  auto* scale = app.add_subcommand("scale", "Write f^alpha");
  scale->add_option("file", path, "Function file")->required();
  scale->add_option("--alpha", alpha, "Scaling factor")->required();
  scale->add_option("-o,--out", out, "Output file (default stdout)");

  auto* ext = app.add_subcommand("extension", "Evaluate the local convex extension");
  ext->add_option("file", path, "Function file")->required();
  ext->add_option("--point", point, "Point such as 1,1/2,1/2")->required();

  auto* beta = app.add_subcommand("beta", "Print beta_n and (n+1)!/2^(n-1)");
  beta->add_option("--n", n, "Dimension")->required();

  auto* repro = app.add_subcommand("repro", "Run the assertion bundle of a fixture id (or 'all')");
  repro->add_option("id", id, "Fixture id")->required();

  auto* benchcmd = app.add_subcommand("bench", "Random proximity benchmark as CSV");
  benchcmd->add_option("--n", bench.n, "Dimension");
  benchcmd->add_option("--family", family, "quadratic | lnat | separable | table");
  benchcmd->add_option("--count", bench.count, "Number of instances");
  benchcmd->add_option("--alpha", bench.alpha, "Local minimality scale");
  benchcmd->add_option("--seed", bench.seed, "First seed");
  benchcmd->add_option("--out", out, "Output CSV (default stdout)");

  auto* exportcmd = app.add_subcommand("export", "Write a fixture as a function file");
  exportcmd->add_option("id", id, "Fixture id")->required();
  exportcmd->add_option("-o,--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*check) return cmd_check(path, cls);
    if (*minimize) return cmd_minimize(path, trace);
    if (*brute) return cmd_bruteforce(path);
    if (*scale) return cmd_scale(path, alpha, out);
    if (*ext) return cmd_extension(path, point);
    if (*beta) return cmd_beta(n);
    if (*repro) return cmd_repro(id);
    if (*benchcmd) {
      bench.family = icx::parse_random_family(family);
      return cmd_bench(bench, out);
    }
    if (*exportcmd) return cmd_export(id, out);
  } catch (const icx::Error& e) {
    std::cerr << "icx: " << icx::to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
