// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace banach {

using Vec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised for structurally invalid input: bad expressions, mismatched
/// dimensions, inadmissible parameters. Numeric trouble is never an error;
/// it surfaces as a low-confidence flag on the result instead.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public StructureError {
 public:
  using StructureError::StructureError;
};

/// n atoms with strictly positive measure; integration is the weighted sum.
class WeightedModel {
 public:
  explicit WeightedModel(Vec weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw StructureError("model needs at least one atom");
    for (double w : weights_)
      if (!(w > 0.0) || !std::isfinite(w))
        throw StructureError("atom weights must be finite and strictly positive");
  }

  static WeightedModel unit(std::size_t n) { return WeightedModel(Vec(n, 1.0)); }

  std::size_t n() const { return weights_.size(); }
  const Vec& weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }

  bool is_unit() const {
    for (double w : weights_)
      if (w != 1.0) return false;
    return true;
  }

  double integrate(std::span<const double> f) const {
    check_dim(f.size());
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * weights_[i];
    return s;
  }

  /// <|f|,|g|> under the atomic measure.
  double pairing(std::span<const double> f, std::span<const double> g) const {
    check_dim(f.size());
    check_dim(g.size());
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(f[i] * g[i]) * weights_[i];
    return s;
  }

  double l1(std::span<const double> f) const {
    check_dim(f.size());
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(f[i]) * weights_[i];
    return s;
  }

  void check_dim(std::size_t m) const {
    if (m != n())
      throw DimensionError("dimension mismatch: expected " + std::to_string(n()) + ", got " +
                           std::to_string(m));
  }

  bool operator==(const WeightedModel&) const = default;

 private:
  Vec weights_;
};

/// Knobs shared by every optimization and sampling routine.
struct SolverConfig {
  double tol = 1e-3;
  int grid = 41;
  int starts = 8;
  int max_iter = 500;
  std::uint64_t seed = 1;
  int samples = 100;
  bool closed_forms = true;  // false forces numeric duals and interpolation

  void validate() const {
    if (!(tol > 0.0)) throw StructureError("tol must be positive");
    if (grid < 3) throw StructureError("grid must be at least 3");
    if (starts < 1) throw StructureError("starts must be at least 1");
    if (max_iter < 1) throw StructureError("max_iter must be at least 1");
    if (samples < 1) throw StructureError("samples must be at least 1");
  }
};

/// A numerically computed value plus whether the optimizer converged.
struct Estimate {
  double value = 0.0;
  bool confident = true;
};

inline Vec abs_of(std::span<const double> f) {
  Vec r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = std::abs(f[i]);
  return r;
}

inline Vec log_of(std::span<const double> f) {
  Vec r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] == 0.0 ? -kInf : std::log(std::abs(f[i]));
  return r;
}

inline Vec exp_of(std::span<const double> z) {
  Vec r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) r[i] = std::exp(z[i]);
  return r;
}

inline std::vector<std::size_t> support_indices(std::span<const double> f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0.0 && std::isfinite(f[i])) s.push_back(i);
  return s;
}

inline double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

}  // namespace banach
