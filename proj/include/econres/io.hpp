#pragma once

// JSON, TSV and plain-text renderings, and parsers for parameters.

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "econres/brick.hpp"
#include "econres/chamber.hpp"
#include "econres/fan.hpp"
#include "econres/stability.hpp"

namespace econres {

using Json = nlohmann::ordered_json;

struct ParseError : Error {
  using Error::Error;
};

inline Json int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt json_int(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

inline Json vec_json(const IntVec3& v) { return Json::array({int_json(v[0]), int_json(v[1]), int_json(v[2])}); }

inline IntVec3 json_vec(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected a 3-array, got " + j.dump());
  return {json_int(j[0]), json_int(j[1]), json_int(j[2])};
}

inline Json monomial_json(const Monomial& m) { return vec_json(m.e); }
inline Monomial json_monomial(const Json& j) { return Monomial(json_vec(j)); }

inline std::vector<Monomial> json_monomials(const Json& j) {
  std::vector<Monomial> out;
  for (const auto& e : j) out.push_back(json_monomial(e));
  return out;
}

inline Json cone_json(const Cone& c) {
  Json rays = Json::array();
  for (const auto& w : c.rays) rays.push_back(vec_json(w));
  return {{"scale", c.scale()}, {"rays", rays}};
}

inline Json fan_json(const EconFan& f) {
  Json cones = Json::array();
  for (const auto& c : f.maximal_cones) cones.push_back(cone_json(c));
  return {{"r", f.group.r}, {"a", f.group.a}, {"maximal_cones", cones}};
}

inline Json brick_json(const GBrick& b) {
  Json entries = Json::object();
  for (std::size_t w = 0; w < b.size(); ++w) entries[std::to_string(w)] = monomial_json(b[w]);
  return {{"r", b.group.r}, {"a", b.group.a}, {"entries", entries}};
}

inline Json monomials_json(const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(monomial_json(m));
  return out;
}

inline Json theta_json(const Theta& t) {
  Json vals = Json::array();
  for (const auto& v : t.values) vals.push_back(to_string(v));
  return {{"values", vals}};
}

inline Json root_json(const Root& r) { return Json::array({r.head, r.tail}); }

inline Json matrix_json(const std::vector<std::vector<BigInt>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(int_json(v));
    out.push_back(jr);
  }
  return out;
}

inline Theta json_theta(const Json& j) {
  const Json& vals = j.is_object() ? j.at("values") : j;
  if (!vals.is_array()) throw ParseError("parameter must be an array of fractions");
  Theta t;
  for (const auto& v : vals) {
    if (v.is_string()) t.values.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer()) t.values.emplace_back(v.get<std::int64_t>());
    else throw ParseError("parameter entries must be integers or \"p/q\" strings");
  }
  return t;
}

/// "-1,3,3/2" -> θ.
inline Theta parse_theta_list(const std::string& text) {
  Theta t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      t.values.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  return t;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// e1, e2, e3 or v_i with v_i = (i, ai mod r, (-ai) mod r)/r.
inline std::string ray_name(const GroupType& g, const IntVec3& w) {
  for (int i = 0; i < 3; ++i)
    if (w == unit_ray(g, i)) return "e" + std::to_string(i + 1);
  if (w[0] > 0 && w[0] < g.r && w == exceptional_ray(g, w[0].convert_to<int>())) return "v" + w[0].str();
  std::ostringstream os;
  os << w << '/' << g.r;
  return os.str();
}

inline std::string cone_name(const Cone& c) {
  return ray_name(c.group, c.rays[0]) + "," + ray_name(c.group, c.rays[1]) + "," + ray_name(c.group, c.rays[2]);
}

inline std::string join_monomials(const std::vector<Monomial>& ms, const std::string& sep = ",") {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : sep) + format_monomial(m);
  return out;
}

inline std::string format_theta(const Theta& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + to_string(t[i]);
  return out + ")";
}

inline std::string format_row(const std::vector<BigInt>& row, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? sep : "") + row[i].str();
  return out;
}

}  // namespace econres
