#include "icx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "icx/error.hpp"

namespace icx {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& source, const std::string& msg) { fail(ErrorKind::Parse, source + ": " + msg); }

std::int64_t as_int(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(source, where + " must be an integer");
  return j.get<std::int64_t>();
}

IntPoint as_point(const json& j, std::size_t n, const std::string& source, const std::string& where) {
  if (!j.is_array()) parse_fail(source, where + " must be an array");
  if (j.size() != n) {
    parse_fail(source, where + " has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(n));
  }
  IntPoint p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = as_int(j[i], source, where + "[" + std::to_string(i) + "]");
  return p;
}

json point_json(const IntPoint& p) { return json(p.coords()); }

}  // namespace

FnOracle parse_function_json(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    parse_fail(source, "line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) parse_fail(source, "top level must be an object");
  for (const char* key : {"dimension", "lower", "upper", "entries"}) {
    if (!doc.contains(key)) parse_fail(source, std::string("missing key \"") + key + "\"");
  }
  const std::int64_t n = as_int(doc["dimension"], source, "dimension");
  if (n < 1) parse_fail(source, "dimension must be >= 1");
  const IntPoint lo = as_point(doc["lower"], static_cast<std::size_t>(n), source, "lower");
  const IntPoint hi = as_point(doc["upper"], static_cast<std::size_t>(n), source, "upper");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) parse_fail(source, "lower exceeds upper in coordinate " + std::to_string(i));
  }
  const json& items = doc["entries"];
  if (!items.is_array()) parse_fail(source, "entries must be an array");
  std::vector<FnOracle::Entry> entries;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string where = "entries[" + std::to_string(k) + "]";
    const json& e = items[k];
    if (!e.is_object() || !e.contains("point") || !e.contains("value")) {
      parse_fail(source, where + " needs \"point\" and \"value\"");
    }
    IntPoint p = as_point(e["point"], static_cast<std::size_t>(n), source, where + ".point");
    Rational v;
    const json& val = e["value"];
    try {
      if (val.is_string()) {
        v = parse_rational(val.get<std::string>());
      } else if (val.is_number_integer()) {
        v = static_cast<long>(val.get<std::int64_t>());
      } else {
        parse_fail(source, where + ".value must be a string");
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Parse) throw;
      parse_fail(source, where + ".value: " + err.what());
    }
    entries.emplace_back(std::move(p), ExtValue(v));
  }
  try {
    return FnOracle::table(IntBox(lo, hi), entries, source);
  } catch (const Error& err) {
    parse_fail(source, err.what());
  }
}

FnOracle read_function_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_function_json(buf.str(), path);
}

std::string function_to_json(const FnOracle& f) {
  json doc;
  doc["dimension"] = f.dimension();
  doc["lower"] = point_json(f.box().lower());
  doc["upper"] = point_json(f.box().upper());
  json items = json::array();
  for (const auto& [p, v] : f.finite_entries()) items.push_back(json{{"point", point_json(p)}, {"value", v.str()}});
  doc["entries"] = std::move(items);
  return doc.dump(2) + "\n";
}

void write_function_file(const FnOracle& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, path + ": cannot open for writing");
  out << function_to_json(f);
}

std::string report_to_json(const CheckReport& report) {
  json doc;
  doc["check"] = report.check;
  doc["verdict"] = report.verdict;
  if (report.witness) {
    const Violation& w = *report.witness;
    json wj;
    json pts = json::array();
    for (const auto& p : w.points) pts.push_back(point_json(p));
    wj["points"] = std::move(pts);
    if (w.real_point) {
      json rp = json::array();
      for (const auto& c : *w.real_point) rp.push_back(render(c));
      wj["real_point"] = std::move(rp);
    }
    if (w.direction) wj["direction"] = point_json(*w.direction);
    if (w.index) wj["index"] = *w.index + 1;
    wj["lhs"] = w.lhs.str();
    wj["rhs"] = w.rhs.str();
    wj["detail"] = w.detail;
    doc["witness"] = std::move(wj);
  }
  return doc.dump();
}

}  // namespace icx
