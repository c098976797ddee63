#pragma once

// JSON documents for friezes, equations, polygons and form evaluations, and
// an RFC-4180 CSV writer. Rationals serialize as "p/q" strings ("p" when
// q = 1); doubles print with 17 significant digits.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frieze_lab/error.hpp"
#include "frieze_lab/frieze.hpp"
#include "frieze_lab/rational.hpp"
#include "frieze_lab/recurrence.hpp"

namespace frieze_lab {

using json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// JSON number for finite values, null otherwise.
inline json json_double(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json to_json(const Rational& r) { return r.str(); }

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(ErrorKind::InvalidArgument, "expected a rational as \"p/q\" string or integer");
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) fail(ErrorKind::InvalidArgument, "empty list");
  return out;
}

inline json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

inline json to_json(const FriezePattern<Rational>& F) {
  json rows = json::array();
  for (const auto& row : F.rows()) rows.push_back(rational_array(row));
  return json{{"width", F.width()}, {"period", F.period()}, {"quiddity", rational_array(F.quiddity())},
              {"rows", rows}};
}

/// Reads a frieze document without validating the frieze rule (that is the
/// job of the checks); shape errors throw InvalidArgument.
inline FriezePattern<Rational> frieze_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    fail(ErrorKind::InvalidArgument, "frieze document needs a \"rows\" array");
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) fail(ErrorKind::InvalidArgument, "each row must be an array");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    rows.push_back(std::move(r));
  }
  FriezePattern<Rational> F(std::move(rows));
  if (j.contains("width") && j["width"] != F.width()) fail(ErrorKind::InvalidArgument, "width disagrees with rows");
  if (j.contains("period") && j["period"] != F.period()) fail(ErrorKind::InvalidArgument, "period disagrees with rows");
  if (j.contains("quiddity")) {
    std::vector<Rational> q;
    for (const auto& v : j["quiddity"]) q.push_back(rational_from_json(v));
    if (q != F.quiddity()) fail(ErrorKind::InvalidArgument, "quiddity disagrees with row 1");
  }
  return F;
}

inline json to_json(const DiscreteHillEquation<Rational>& eq) {
  return json{{"n", eq.n()}, {"quiddity", rational_array(eq.c)}};
}

inline json to_json(const DiscreteHillEquation<double>& eq) {
  json a = json::array();
  for (double v : eq.c) a.push_back(v);
  return json{{"n", eq.n()}, {"quiddity", a}};
}

inline json to_json(const PlanarPolygon<Rational>& P) {
  json a = json::array();
  for (const auto& v : P.vertices) a.push_back(json::array({v.x.str(), v.y.str()}));
  return json{{"vertices", a}};
}

inline json to_json(const PlanarPolygon<double>& P) {
  json a = json::array();
  for (const auto& v : P.vertices) a.push_back(json::array({v.x, v.y}));
  return json{{"vertices", a}};
}

inline json to_json(const Mat2<double>& m) {
  return json::array({json::array({m.m[0][0], m.m[0][1]}), json::array({m.m[1][0], m.m[1][1]})});
}

inline json to_json(const Mat2<Rational>& m) {
  return json::array({json::array({m.m[0][0].str(), m.m[0][1].str()}),
                      json::array({m.m[1][0].str(), m.m[1][1].str()})});
}

inline json error_json(ErrorKind kind, const std::string& reason) {
  const std::string k(to_string(kind));
  return json{{"error", k}, {"reason", reason.rfind(k, 0) == 0 ? reason : k + ": " + reason}};
}

/// RFC-4180 CSV: CRLF line ends, fields quoted when they contain a comma,
/// quote, CR or LF.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os_ << ',';
      os_ << quote(fields[i]);
    }
    os_ << "\r\n";
  }

  static std::string quote(const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char ch : f) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }

 private:
  std::ostream& os_;
};

}  // namespace frieze_lab
