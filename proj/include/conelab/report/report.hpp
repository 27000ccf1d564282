#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "conelab/core/check.hpp"
#include "conelab/core/extended_real.hpp"
#include "conelab/core/rational.hpp"

namespace conelab::report {

/// A reported scalar. Rationals render as exact "p/q" strings, reals are
/// rounded to 12 significant digits, infinities render as "+inf" / "-inf".
using Field = std::variant<Rational, double, std::int64_t, bool, std::string, ExtRational>;

struct Report {
  std::string scenario;
  std::map<std::string, Field> params;
  std::map<std::string, Field> results;
  std::map<std::string, Field> analytic;
  std::vector<Check> checks;

  bool pass() const { return all_pass(checks); }
  void check(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

enum class Format { json, csv };

inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string field_text(const Field& f) {
  struct V {
    std::string operator()(const Rational& q) const { return format_rational(q); }
    std::string operator()(double d) const {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", d);
      return buf;
    }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const ExtRational& e) const { return e.is_finite() ? format_rational(e.value()) : e.describe(); }
  };
  return std::visit(V{}, f);
}

inline nlohmann::json field_json(const Field& f) {
  if (const auto* d = std::get_if<double>(&f)) {
    if (!std::isfinite(*d)) return field_text(f);
    return round12(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&f)) return *i;
  if (const auto* b = std::get_if<bool>(&f)) return *b;
  return field_text(f);
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json doc;
  doc["scenario"] = r.scenario;
  auto section = [](const std::map<std::string, Field>& m) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [k, v] : m) o[k] = field_json(v);
    return o;
  };
  doc["params"] = section(r.params);
  doc["results"] = section(r.results);
  doc["analytic"] = section(r.analytic);
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  doc["pass"] = r.pass();
  return doc;
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render(const Report& r, Format fmt) {
  if (fmt == Format::json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "name,value\n";
  os << "scenario," << csv_cell(r.scenario) << "\n";
  for (const auto& [k, v] : r.params) os << "param." << k << "," << csv_cell(field_text(v)) << "\n";
  for (const auto& [k, v] : r.results) os << k << "," << csv_cell(field_text(v)) << "\n";
  for (const auto& [k, v] : r.analytic) os << "analytic." << k << "," << csv_cell(field_text(v)) << "\n";
  for (const auto& c : r.checks) os << "check:" << csv_cell(c.name) << "," << (c.pass ? "pass" : "fail") << "\n";
  return os.str();
}

} // namespace conelab::report
