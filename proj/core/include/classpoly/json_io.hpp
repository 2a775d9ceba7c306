#ifndef CLASSPOLY_JSON_IO_HPP
#define CLASSPOLY_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "classpoly/csp.hpp"
#include "classpoly/finite_field.hpp"
#include "classpoly/histogram.hpp"
#include "classpoly/poly.hpp"

namespace classpoly {

inline constexpr int kJsonSchemaVersion = 1;

// Polynomials: array of [exp_x, exp_y, "coefficient"], descending Y then
// descending X. XPoly uses exp_y = 0.
nlohmann::json to_json(const XYPoly& p);
nlohmann::json to_json(const XPoly& p);
XYPoly xypoly_from_json(const nlohmann::json& j);
XPoly xpoly_from_json(const nlohmann::json& j);

/// Sorted list of {"size": "...", "count": "..."}.
nlohmann::json to_json(const ClassHistogram& h);
ClassHistogram histogram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DirichletPoly& z);

/// {"q", "p", "e", "modulus"}.
nlohmann::json to_json(const FiniteField& f);

nlohmann::json to_json(const GraphPolyReport& r);

}  // namespace classpoly

#endif  // CLASSPOLY_JSON_IO_HPP
