// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "banach/model.hpp"

namespace banach {

/// max/sum composition of absolute values of coordinates.
struct ExplicitExpr {
  enum class Op { Abs, Sum, Max, Scale };
  Op op = Op::Abs;
  std::size_t index = 0;  // Abs
  double factor = 1.0;    // Scale
  std::vector<ExplicitExpr> args;

  static ExplicitExpr abs(std::size_t i) { return {Op::Abs, i, 1.0, {}}; }
  static ExplicitExpr sum(std::vector<ExplicitExpr> a) { return {Op::Sum, 0, 1.0, std::move(a)}; }
  static ExplicitExpr max(std::vector<ExplicitExpr> a) { return {Op::Max, 0, 1.0, std::move(a)}; }
  static ExplicitExpr scale(double c, ExplicitExpr e) { return {Op::Scale, 0, c, {std::move(e)}}; }

  double eval(std::span<const double> x) const {
    switch (op) {
      case Op::Abs:
        return std::abs(x[index]);
      case Op::Scale:
        return factor * args.front().eval(x);
      case Op::Sum: {
        double s = 0.0;
        for (const auto& a : args) s += a.eval(x);
        return s;
      }
      case Op::Max: {
        double m = 0.0;
        for (const auto& a : args) m = std::max(m, a.eval(x));
        return m;
      }
    }
    return 0.0;
  }

  std::size_t max_index() const {
    std::size_t m = op == Op::Abs ? index : 0;
    for (const auto& a : args) m = std::max(m, a.max_index());
    return m;
  }

  /// Rewrites the expression as max_r <rows[r], |x|>, distributing sums over maxes.
  std::vector<Vec> rows(std::size_t n) const {
    switch (op) {
      case Op::Abs: {
        Vec r(n, 0.0);
        r[index] = 1.0;
        return {r};
      }
      case Op::Scale: {
        auto rs = args.front().rows(n);
        for (auto& r : rs)
          for (double& v : r) v *= factor;
        return rs;
      }
      case Op::Max: {
        std::vector<Vec> out;
        for (const auto& a : args) {
          auto rs = a.rows(n);
          out.insert(out.end(), rs.begin(), rs.end());
        }
        return out;
      }
      case Op::Sum: {
        std::vector<Vec> acc{Vec(n, 0.0)};
        for (const auto& a : args) {
          auto rs = a.rows(n);
          std::vector<Vec> next;
          next.reserve(acc.size() * rs.size());
          for (const auto& x : acc)
            for (const auto& y : rs) {
              Vec z(n);
              for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + y[i];
              next.push_back(std::move(z));
            }
          acc = std::move(next);
        }
        return acc;
      }
    }
    return {};
  }
};

/// A polyhedral lattice norm ||x|| = max_r <rows[r], |x|> with nonnegative rows.
struct ExplicitNorm {
  std::string name;
  ExplicitExpr expr;     // source form; empty args with Op::Abs when built from rows
  std::vector<Vec> rows; // expanded form used for evaluation
  bool from_rows = false;

  double eval(std::span<const double> x) const {
    double m = 0.0;
    for (const auto& r : rows) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * std::abs(x[i]);
      m = std::max(m, s);
    }
    return m;
  }
};

inline void prune_rows(std::vector<Vec>& rows) {
  // drop exact duplicates and rows dominated coordinatewise by another row
  std::vector<Vec> kept;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < rows.size() && !dominated; ++b) {
      if (a == b) continue;
      bool ge = true, strict = false;
      for (std::size_t i = 0; i < rows[a].size(); ++i) {
        if (rows[b][i] < rows[a][i]) ge = false;
        if (rows[b][i] > rows[a][i]) strict = true;
      }
      if (ge && (strict || b < a)) dominated = true;
    }
    if (!dominated) kept.push_back(rows[a]);
  }
  rows = std::move(kept);
}

inline ExplicitNorm make_explicit(std::string name, ExplicitExpr expr, std::size_t n) {
  if (expr.max_index() >= n) throw StructureError("explicit norm references atom beyond model");
  ExplicitNorm e{std::move(name), expr, expr.rows(n), false};
  for (const auto& r : e.rows)
    for (double v : r)
      if (!(v >= 0.0) || !std::isfinite(v))
        throw StructureError("explicit norm coefficients must be finite and nonnegative");
  prune_rows(e.rows);
  for (std::size_t i = 0; i < n; ++i) {
    bool seen = false;
    for (const auto& r : e.rows) seen = seen || r[i] > 0.0;
    if (!seen) throw StructureError("explicit norm ignores atom " + std::to_string(i));
  }
  return e;
}

inline ExplicitNorm explicit_from_rows(std::string name, std::vector<Vec> rows) {
  ExplicitNorm e;
  e.name = std::move(name);
  e.rows = std::move(rows);
  e.from_rows = true;
  prune_rows(e.rows);
  return e;
}

/// The three norms on R^3 of the non-convex product example.
/// ||x||_E = max{|x1|+|x2|, |x3|}
inline ExplicitNorm example_E() {
  using X = ExplicitExpr;
  return make_explicit("E_ex", X::max({X::sum({X::abs(0), X::abs(1)}), X::abs(2)}), 3);
}
/// ||y||_F = max{|y1|+|y3|, |y2|}, the multiplier norm M(E_ex, G_ex)
inline ExplicitNorm example_F() {
  using X = ExplicitExpr;
  return make_explicit("F_ex", X::max({X::sum({X::abs(0), X::abs(2)}), X::abs(1)}), 3);
}
/// ||z||_G = |z1| + max{|z2|, |z3|}
inline ExplicitNorm example_G() {
  using X = ExplicitExpr;
  return make_explicit("G_ex", X::sum({X::abs(0), X::max({X::abs(1), X::abs(2)})}), 3);
}

inline ExplicitNorm explicit_preset(const std::string& name) {
  if (name == "E_ex") return example_E();
  if (name == "F_ex") return example_F();
  if (name == "G_ex") return example_G();
  throw StructureError("unknown explicit norm preset: " + name);
}

}  // namespace banach
