#include "classpoly/json_io.hpp"

#include <stdexcept>

namespace classpoly {

namespace {

Integer parse_integer(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw std::invalid_argument("expected an integer or decimal string");
}

}  // namespace

nlohmann::json to_json(const XYPoly& p) {
  auto out = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back({it->first.x, it->first.y, it->second.str()});
  return out;
}

nlohmann::json to_json(const XPoly& p) {
  auto out = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out.push_back({it->first, 0, it->second.str()});
  return out;
}

XYPoly xypoly_from_json(const nlohmann::json& j) {
  XYPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3) throw std::invalid_argument("polynomial term must be [x, y, c]");
    p.add_term(term[0].get<int>(), term[1].get<int>(), parse_integer(term[2]));
  }
  return p;
}

XPoly xpoly_from_json(const nlohmann::json& j) {
  XPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || term[1].get<int>() != 0) {
      throw std::invalid_argument("univariate term must be [x, 0, c]");
    }
    p.add_term(term[0].get<int>(), parse_integer(term[2]));
  }
  return p;
}

nlohmann::json to_json(const ClassHistogram& h) {
  auto out = nlohmann::json::array();
  for (const auto& [size, count] : h.entries()) out.push_back({{"size", size.str()}, {"count", count.str()}});
  return out;
}

ClassHistogram histogram_from_json(const nlohmann::json& j) {
  ClassHistogram h;
  for (const auto& entry : j) h.add(parse_integer(entry.at("size")), parse_integer(entry.at("count")));
  return h;
}

nlohmann::json to_json(const DirichletPoly& z) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : z.terms) out.push_back({{"e", e.str()}, {"cc", c.str()}});
  return out;
}

nlohmann::json to_json(const FiniteField& f) {
  return {{"q", f.order()}, {"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
}

nlohmann::json to_json(const GraphPolyReport& r) {
  return {{"schema", kJsonSchemaVersion},
          {"graph6", r.graph6},
          {"n", r.n},
          {"m", r.m},
          {"C", to_json(r.C)},
          {"F", to_json(r.F)},
          {"f", to_json(r.f)},
          {"eta", r.eta},
          {"deg_f", r.deg_f},
          {"rank", r.rank},
          {"isolated", r.isolated}};
}

}  // namespace classpoly
