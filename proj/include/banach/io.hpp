// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Space-description files:
//
//   {"model": {"n": 3, "weights": [1, 1, 1]},
//    "space": {"kind": "Mult", "E": {"kind": "explicit", "name": "E_ex"},
//                              "F": {"kind": "Lp", "p": 2}}}
//
// Kinds (aliases in parentheses): Lp (lp) with p (number, "inf" or null)
// and optional w (scale); Linf (linf) with optional w; DSpace (d) and
// GSpace (g) with a and p; ExplicitNorm (explicit) with a preset name or an
// expr built from atom indices (0-based), {"max": [...]}, {"sum": [...]} and
// {"scale": c, "of": ...}; MatrixDomain (matrix_domain) with row-major T and
// p; Associate with of; Mult, Product, Rho with E and F; Calderon with E, F,
// theta; Convexify, Concavify with of and p; Scaled with of and s.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "banach/explicit_norm.hpp"
#include "banach/space.hpp"

namespace banach {

/// Raised for malformed files (as opposed to structurally invalid spaces).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpaceFile {
  WeightedModel model;
  Space space;
};

namespace detail {

using json = nlohmann::json;

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline double number(const json& j, const char* what) {
  if (j.is_null()) return kInf;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity" || s == "infinity") return kInf;
    throw ParseError(std::string(what) + ": expected a number, got '" + s + "'");
  }
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

inline Vec vector_of(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  Vec v;
  for (const auto& e : j) v.push_back(number(e, what));
  return v;
}

inline ExplicitExpr parse_expr(const json& j) {
  if (j.is_number_integer()) {
    const auto i = j.get<long long>();
    if (i < 0) throw ParseError("explicit expr: negative atom index");
    return ExplicitExpr::abs(static_cast<std::size_t>(i));
  }
  if (!j.is_object()) throw ParseError("explicit expr: expected an index or an object");
  auto list = [&](const json& a) {
    if (!a.is_array() || a.empty()) throw ParseError("explicit expr: expected a nonempty array");
    std::vector<ExplicitExpr> v;
    for (const auto& e : a) v.push_back(parse_expr(e));
    return v;
  };
  if (j.contains("max")) return ExplicitExpr::max(list(j.at("max")));
  if (j.contains("sum")) return ExplicitExpr::sum(list(j.at("sum")));
  if (j.contains("scale")) {
    const double c = number(j.at("scale"), "scale");
    if (!(c > 0.0) || !std::isfinite(c)) throw StructureError("explicit expr: scale must be positive");
    return ExplicitExpr::scale(c, parse_expr(field(j, "of")));
  }
  throw ParseError("explicit expr: expected max, sum or scale");
}

inline Space parse_space(const json& j, std::size_t n) {
  const auto kind = field(j, "kind").get<std::string>();
  auto sub = [&](const char* key) { return parse_space(field(j, key), n); };
  auto scale = [&]() -> Vec {
    for (const char* k : {"w", "scale"})
      if (j.contains(k) && !j.at(k).is_null()) return vector_of(j.at(k), k);
    return {};
  };
  if (kind == "Lp" || kind == "lp") return lp(number(field(j, "p"), "p"), scale());
  if (kind == "Linf" || kind == "linf") return lp(kInf, scale());
  if (kind == "DSpace" || kind == "d") return dspace(vector_of(field(j, "a"), "a"), number(field(j, "p"), "p"));
  if (kind == "GSpace" || kind == "g") return gspace(vector_of(field(j, "a"), "a"), number(field(j, "p"), "p"));
  if (kind == "ExplicitNorm" || kind == "explicit") {
    if (j.contains("expr"))
      return explicit_space(make_explicit(j.value("name", std::string()), parse_expr(j.at("expr")), n));
    return explicit_space(explicit_preset(field(j, "name").get<std::string>()));
  }
  if (kind == "MatrixDomain" || kind == "matrix_domain") {
    std::vector<Vec> T;
    const auto& t = field(j, "T");
    if (!t.is_array()) throw ParseError("T: expected an array of rows");
    for (const auto& r : t) T.push_back(vector_of(r, "T"));
    return matrix_domain(std::move(T), number(field(j, "p"), "p"));
  }
  if (kind == "Associate") return associate(sub("of"));
  if (kind == "Mult") return mult(sub("E"), sub("F"));
  if (kind == "Product") return product(sub("E"), sub("F"));
  if (kind == "Rho") return rho(sub("E"), sub("F"));
  if (kind == "Calderon") return calderon(sub("E"), sub("F"), number(field(j, "theta"), "theta"));
  if (kind == "Convexify") return convexify(sub("of"), number(field(j, "p"), "p"));
  if (kind == "Concavify") return concavify(sub("of"), number(field(j, "p"), "p"));
  if (kind == "Scaled") return scaled(sub("of"), vector_of(field(j, "s"), "s"));
  throw ParseError("unknown space kind '" + kind + "'");
}

}  // namespace detail

/// Parses a space description; ParseError for malformed JSON or missing
/// fields, StructureError (DimensionError) for inadmissible content.
inline SpaceFile parse_space_file(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto& m = detail::field(j, "model");
    Vec w;
    if (m.contains("weights")) w = detail::vector_of(m.at("weights"), "weights");
    std::size_t n = w.size();
    if (m.contains("n")) {
      const auto& jn = m.at("n");
      if (!jn.is_number_integer() || jn.get<long long>() < 1) throw ParseError("model.n must be a positive integer");
      n = static_cast<std::size_t>(jn.get<long long>());
      if (!w.empty() && w.size() != n) throw DimensionError("model.weights does not have n entries");
    }
    if (n == 0) throw ParseError("model needs n or weights");
    if (w.empty()) w.assign(n, 1.0);
    WeightedModel model(std::move(w));
    Space space = detail::parse_space(detail::field(j, "space"), n);
    check_dimensions(space, model);
    return {std::move(model), std::move(space)};
  } catch (const detail::json::exception& e) {
    throw ParseError(std::string("malformed space file: ") + e.what());
  }
}

inline SpaceFile load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_space_file(ss.str());
}

/// Comma-separated coordinates, e.g. "3,4".
inline Vec parse_vector(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double x;
    try {
      x = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("invalid vector entry '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size() || !std::isfinite(x)) throw ParseError("invalid vector entry '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw ParseError("empty vector");
  return v;
}

}  // namespace banach
