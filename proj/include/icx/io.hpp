#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "icx/checkers.hpp"
#include "icx/fixtures.hpp"
#include "icx/oracle.hpp"

namespace icx {

/// Function file:
///   {"dimension": n, "lower": [..], "upper": [..],
///    "entries": [{"point": [..], "value": "-3/2"}, ...]}
/// Values are strings holding integers, fractions or finite decimals (plain
/// JSON integers are accepted too). In-box points without an entry are +inf.
/// Errors are ErrorKind::Parse with a line number when the JSON is malformed.
FnOracle parse_function_json(std::string_view text, const std::string& source = "<input>");
FnOracle read_function_file(const std::string& path);

/// Finite entries in lexicographic order, 2-space indentation, trailing LF.
std::string function_to_json(const FnOracle& f);
void write_function_file(const FnOracle& f, const std::string& path);

/// {"check": .., "verdict": .., "witness": {..}}
std::string report_to_json(const CheckReport& report);

struct BenchOptions {
  int n = 3;
  RandomFamily family = RandomFamily::Quadratic;
  std::uint64_t count = 10;
  std::int64_t alpha = 2;
  std::uint64_t seed = 1;
};

inline constexpr const char* kBenchHeader =
    "seed,family,n,alpha,K_inf,local_min_point,realized_distance,bound,within_bound,evaluations,budget";

/// One CSV row per instance (seeds seed, seed+1, ...), LF line endings.
void run_bench(const BenchOptions& options, std::ostream& out);

/// Every id accepted by run_repro.
std::vector<std::string> repro_ids();

/// Runs the assertion bundle for a fixture id (or "hilbert-n2", "hilbert-n3",
/// "beta"), printing one "PASS <claim>" / "FAIL <claim>" line each. Returns
/// true when every claim passes.
bool run_repro(std::string_view id, std::ostream& out);

}  // namespace icx
