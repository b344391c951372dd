#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "icx/checkers.hpp"
#include "icx/error.hpp"
#include "icx/fixtures.hpp"
#include "icx/io.hpp"
#include "icx/scaling.hpp"

using namespace icx;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_function_json(text, "doc.json");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  return "";
}

bool same_function(const FnOracle& a, const FnOracle& b) {
  if (a.box() != b.box()) return false;
  bool same = true;
  a.box().for_each([&](const IntPoint& p) { same = same && a(p) == b(p); });
  return same;
}

std::string bench_text(const BenchOptions& opt) {
  std::ostringstream out;
  run_bench(opt, out);
  return out.str();
}

}  // namespace

TEST_CASE("function files parse") {
  const char* doc = R"({
  "dimension": 2,
  "lower": [0, -1],
  "upper": [1, 1],
  "entries": [
    {"point": [0, 0], "value": "13.5"},
    {"point": [1, -1], "value": "-1/2"},
    {"point": [1, 1], "value": 4}
  ]
})";
  const FnOracle f = parse_function_json(doc);
  CHECK(f(IntPoint{0, 0}) == ExtValue(Rational(27, 2)));
  CHECK(f(IntPoint{1, -1}) == ExtValue(Rational(-1, 2)));
  CHECK(f(IntPoint{1, 1}) == ExtValue(4));
  CHECK(f(IntPoint{0, 1}).is_infinite());
  CHECK(f.box() == IntBox(IntPoint{0, -1}, IntPoint{1, 1}));
}

TEST_CASE("parse errors name the problem") {
  const std::string truncated = "{\n  \"dimension\": 2,\n  \"lower\": [0, 0],\n  \"upper\": [1,";
  CHECK(parse_error(truncated).find("doc.json: line 4: malformed JSON") != std::string::npos);
  CHECK(parse_error("[]").find("top level") != std::string::npos);
  CHECK(parse_error(R"({"dimension": 1, "lower": [0], "upper": [1]})").find("entries") != std::string::npos);
  CHECK(parse_error(R"({"dimension": 1, "lower": [0], "upper": [1], "entries": [{"point": [2], "value": "0"}]})")
            .find("doc.json") != std::string::npos);
  CHECK(parse_error(R"({"dimension": 1, "lower": [0], "upper": [1], "entries": [{"point": [0, 1], "value": "0"}]})")
            .find("entries[0].point") != std::string::npos);
  CHECK(parse_error(R"({"dimension": 1, "lower": [0], "upper": [1], "entries": [{"point": [0], "value": "x"}]})")
            .find("entries[0].value") != std::string::npos);
  CHECK(parse_error(R"({"dimension": 1, "lower": [0], "upper": [1], "entries": [{"point": [0], "value": 0.5}]})")
            .find("entries[0].value") != std::string::npos);
  CHECK_FALSE(parse_error(R"({"dimension": 1, "lower": [0], "upper": [1],
    "entries": [{"point": [0], "value": "1"}, {"point": [0], "value": "2"}]})").empty());
  CHECK(parse_error(R"({"dimension": 2, "lower": [2, 0], "upper": [1, 0], "entries": []})").find("lower exceeds upper") !=
        std::string::npos);
  CHECK_THROWS_AS(read_function_file("/nonexistent/file.json"), Error);
}

TEST_CASE("write then read is extensionally exact") {
  std::vector<FnOracle> fs;
  for (const auto& id : paper_fixture_ids()) fs.push_back(build(id).oracle);
  fs.push_back(scale_fn(build("ex3.1").oracle, 2));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) fs.push_back(random_icx(3, seed, RandomFamily::Table));
  const auto dir = std::filesystem::temp_directory_path() / "icx_io_test";
  std::filesystem::create_directories(dir);
  int k = 0;
  for (const auto& f : fs) {
    const std::string text = function_to_json(f);
    CHECK(text.back() == '\n');
    const FnOracle g = parse_function_json(text);
    CHECK(same_function(f, g));
    CHECK(function_to_json(g) == text);
    const std::string path = (dir / ("f" + std::to_string(k++) + ".json")).string();
    write_function_file(f, path);
    CHECK(same_function(f, read_function_file(path)));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("report json") {
  auto r = check_integrally_convex_fn(scale_fn(build("ex3.1").oracle, 2));
  const std::string j = report_to_json(r);
  CHECK(j.find("\"verdict\":false") != std::string::npos);
  CHECK(j.find("\"points\":[[0,0,0],[2,1,1]]") != std::string::npos);
  CHECK(j.find("\"lhs\":\"1/2\"") != std::string::npos);
  CHECK(j.find("\"rhs\":\"0\"") != std::string::npos);
  const std::string ok = report_to_json(check_integrally_convex_fn(build("ex4.4").oracle));
  CHECK(ok.find("\"verdict\":true") != std::string::npos);
  CHECK(ok.find("witness") == std::string::npos);
}

TEST_CASE("bench output") {
  BenchOptions opt;
  opt.count = 0;
  CHECK(bench_text(opt) == std::string(kBenchHeader) + "\n");
  opt.count = 8;
  opt.seed = 5;
  const std::string a = bench_text(opt);
  CHECK(a == bench_text(opt));
  std::istringstream lines(a);
  std::string line;
  std::getline(lines, line);
  CHECK(line == kBenchHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",true,") != std::string::npos);
    CHECK(line.rfind(std::to_string(opt.seed + rows - 1) + ",quadratic,3,2,", 0) == 0);
  }
  CHECK(rows == 8);
  CHECK(a.find('\r') == std::string::npos);
  opt.seed = 6;
  CHECK(bench_text(opt) != a);
  opt.family = RandomFamily::Table;
  opt.count = 3;
  opt.alpha = 4;
  CHECK(bench_text(opt) == bench_text(opt));
}

TEST_CASE("repro bundles") {
  for (const char* id : {"ex3.1", "ex4.4", "remark2.2", "beta", "ex1.1"}) {
    std::ostringstream out;
    CHECK(run_repro(id, out));
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("PASS") != std::string::npos);
  }
  std::ostringstream out;
  CHECK_THROWS_AS(run_repro("nope", out), Error);
  const auto ids = repro_ids();
  for (const auto& id : paper_fixture_ids()) CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
}
