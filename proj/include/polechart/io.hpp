#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chart.hpp"
#include "rational.hpp"
#include "reduction.hpp"

namespace polechart::io {

using json = nlohmann::ordered_json;

// Problem document; optional fields carry chart options and a gain to inspect.
struct ProblemFile {
  Problem problem;
  std::optional<MultiIndex> multi_index;
  std::optional<std::vector<Rational>> x;
  std::optional<RatMatrix> k2;
  std::optional<RatMatrix> gain;
};

inline Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.dump());
  throw ParseError(where + ": expected a rational string \"p/q\" or an integer");
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline RatMatrix matrix_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of rows");
  if (v.empty()) return RatMatrix();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) throw ParseError(where + ": row " + std::to_string(i + 1) + " is not an array");
    if (i == 0) cols = v[i].size();
    if (v[i].size() != cols) throw ParseError(where + ": ragged rows");
  }
  RatMatrix m(v.size(), cols);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rational_from_json(v[i][j], where + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  return m;
}

inline json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Partition partition_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a nonempty array of positive integers");
  Partition p;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<long>() <= 0) throw ParseError(where + ": parts must be positive integers");
    p.push_back(e.get<int>());
  }
  if (!is_partition(p)) throw ParseError(where + ": parts must be nonincreasing");
  return p;
}

inline json partition_to_json(const Partition& p) { return json(p); }

inline std::vector<Rational> vector_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_from_json(v[i], where + "[" + std::to_string(i + 1) + "]"));
  return out;
}

inline json vector_to_json(const std::vector<Rational>& x) {
  json a = json::array();
  for (const auto& q : x) a.push_back(rational_to_json(q));
  return a;
}

// Comma-separated rationals, e.g. "1/2,-3,0".
inline std::vector<Rational> parse_vector(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
  if (s.back() == ',') throw ParseError("trailing comma in '" + s + "'");
  return out;
}

inline SpectralData spectrum_from_json(const json& v) {
  if (!v.is_object()) throw ParseError("target: expected an object");
  SpectralData sd;
  for (auto it = v.begin(); it != v.end(); ++it)
    if (it.key() != "real" && it.key() != "complex") throw ParseError("target: unknown field '" + it.key() + "'");
  if (v.contains("real")) {
    if (!v["real"].is_array()) throw ParseError("target.real: expected an array");
    for (const auto& e : v["real"]) {
      if (!e.is_object() || !e.contains("value") || !e.contains("segre"))
        throw ParseError("target.real: entries need 'value' and 'segre'");
      sd.real.push_back({rational_from_json(e["value"], "target.real.value"),
                         partition_from_json(e["segre"], "target.real.segre")});
    }
  }
  if (v.contains("complex")) {
    if (!v["complex"].is_array()) throw ParseError("target.complex: expected an array");
    for (const auto& e : v["complex"]) {
      if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e.contains("segre"))
        throw ParseError("target.complex: entries need 're', 'im' and 'segre'");
      sd.complex.push_back({rational_from_json(e["re"], "target.complex.re"),
                            rational_from_json(e["im"], "target.complex.im"),
                            partition_from_json(e["segre"], "target.complex.segre")});
    }
  }
  try {
    sd.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("target: ") + e.what());
  }
  return sd;
}

inline json spectrum_to_json(const SpectralData& sd) {
  json out = json::object();
  json re = json::array(), cx = json::array();
  for (const auto& e : sd.real) re.push_back({{"value", rational_to_json(e.value)}, {"segre", e.segre}});
  for (const auto& e : sd.complex)
    cx.push_back({{"re", rational_to_json(e.re)}, {"im", rational_to_json(e.im)}, {"segre", e.segre}});
  out["real"] = re;
  out["complex"] = cx;
  return out;
}

inline const std::vector<std::string>& known_fields() {
  static const std::vector<std::string> f{"F", "G", "target", "multi_index", "x", "K2", "gain",
                                          "command", "status", "result"};
  return f;
}

inline ProblemFile problem_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const auto& k : known_fields()) known = known || k == it.key();
    if (!known) throw ParseError("unknown field '" + it.key() + "'");
  }
  for (const char* req : {"F", "G", "target"})
    if (!doc.contains(req)) throw ParseError(std::string("missing field '") + req + "'");
  ProblemFile pf;
  pf.problem.F = matrix_from_json(doc["F"], "F");
  pf.problem.G = matrix_from_json(doc["G"], "G");
  if (pf.problem.F.rows() != pf.problem.F.cols() || pf.problem.F.rows() == 0)
    throw ParseError("F must be a nonempty square matrix");
  if (pf.problem.G.rows() != pf.problem.F.rows() || pf.problem.G.cols() == 0)
    throw ParseError("G must be n x m with m > 0");
  pf.problem.target = spectrum_from_json(doc["target"]);
  if (doc.contains("multi_index")) {
    if (!doc["multi_index"].is_string()) throw ParseError("multi_index: expected a string");
    pf.multi_index = parse_multi_index(doc["multi_index"].get<std::string>());
  }
  if (doc.contains("x")) pf.x = vector_from_json(doc["x"], "x");
  if (doc.contains("K2")) pf.k2 = matrix_from_json(doc["K2"], "K2");
  if (doc.contains("gain")) pf.gain = matrix_from_json(doc["gain"], "gain");
  return pf;
}

inline json problem_to_json(const ProblemFile& pf) {
  json doc = json::object();
  doc["F"] = matrix_to_json(pf.problem.F);
  doc["G"] = matrix_to_json(pf.problem.G);
  doc["target"] = spectrum_to_json(pf.problem.target);
  if (pf.multi_index) doc["multi_index"] = to_string(*pf.multi_index);
  if (pf.x) doc["x"] = vector_to_json(*pf.x);
  if (pf.k2) doc["K2"] = matrix_to_json(*pf.k2);
  if (pf.gain) doc["gain"] = matrix_to_json(*pf.gain);
  return doc;
}

inline json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProblemFile load_problem(const std::string& path) {
  return problem_from_json(parse_json_text(read_file(path), path));
}

}  // namespace polechart::io
