// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Truncated weighted sequence spaces d(a,p) (weighted tail suprema) and
// g(a,p) (maximal weighted averages), evaluated directly from the formulas.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "banach/model.hpp"

namespace banach {

struct WeightSeq {
  Vec a;
  Vec A;  // partial sums

  explicit WeightSeq(Vec weights) : a(std::move(weights)) {
    if (a.empty() || !(a[0] > 0.0)) throw StructureError("weight sequence needs a_1 > 0");
    double s = 0.0;
    for (double v : a) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw StructureError("weights must be finite and nonnegative");
      s += v;
      A.push_back(s);
    }
  }
  std::size_t size() const { return a.size(); }
};

inline void check_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw StructureError("exponent must be finite and at least 1");
}

/// (sum_n a_n max_{k>=n} |x_k|^p)^(1/p), one backward pass.
inline double d_norm(const WeightSeq& a, double p, std::span<const double> x) {
  check_exponent(p);
  if (x.size() != a.size()) throw DimensionError("weight sequence and vector differ in length");
  double tail = 0.0, s = 0.0;
  for (std::size_t k = x.size(); k-- > 0;) {
    tail = std::max(tail, std::abs(x[k]));
    s += a.a[k] * std::pow(tail, p);
  }
  return std::pow(s, 1.0 / p);
}

/// max_n ((1/A_n) sum_{k<=n} |x_k|^p)^(1/p), one forward pass.
inline double g_norm(const WeightSeq& a, double p, std::span<const double> x) {
  check_exponent(p);
  if (x.size() != a.size()) throw DimensionError("weight sequence and vector differ in length");
  double s = 0.0, best = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    s += std::pow(std::abs(x[k]), p);
    best = std::max(best, s / a.A[k]);
  }
  return std::pow(best, 1.0 / p);
}

}  // namespace banach
