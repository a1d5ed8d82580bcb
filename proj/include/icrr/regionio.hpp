// Region-file JSON I/O. A region file is
//   { "variables": ["R1", ...],
//     "inequalities": [ { "coeffs": {"R1": "2", ...}, "rhs": "4" }, ... ] }
// with every number a rational string. Writing always emits canonical
// form (coprime integer coefficients, sorted rows), so serialize after
// parse is a fixed point.
#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "polyhedron.hpp"

namespace icrr {

inline Polyhedron region_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed region JSON: ") + e.what());
  }
  try {
    std::vector<VarId> vars;
    for (const auto& name : doc.at("variables"))
      vars.push_back(parse_var_name(name.get<std::string>()));
    Polyhedron poly(std::move(vars));
    for (const auto& row : doc.at("inequalities")) {
      LinearInequality q;
      for (auto it = row.at("coeffs").begin(); it != row.at("coeffs").end(); ++it) {
        VarId v = parse_var_name(it.key());
        if (poly.var_index(v) < 0)
          throw ParseError("coefficient on undeclared variable: " + it.key());
        q.coeffs[v] = parse_rational(it.value().get<std::string>());
      }
      q.rhs = parse_rational(row.at("rhs").get<std::string>());
      poly.add(std::move(q));
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed region JSON: ") + e.what());
  }
}

inline std::string region_to_json(const Polyhedron& poly) {
  nlohmann::json doc;
  doc["variables"] = nlohmann::json::array();
  for (const auto& v : poly.variables()) doc["variables"].push_back(var_name(v));
  doc["inequalities"] = nlohmann::json::array();
  for (const auto& q : poly.inequalities()) {
    nlohmann::json row;
    row["coeffs"] = nlohmann::json::object();
    for (const auto& [v, c] : q.coeffs) row["coeffs"][var_name(v)] = rational_to_string(c);
    row["rhs"] = rational_to_string(q.rhs);
    doc["inequalities"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

inline Polyhedron load_region(const std::string& path) {
  return region_from_json(read_file(path));
}

}  // namespace icrr
