// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "banach/explicit_norm.hpp"
#include "banach/model.hpp"

namespace banach {

class Space;

namespace space {

/// Weighted L_p: ||f|| = ||scale * f||_{L_p(mu)}; p may be +inf.
struct Lp {
  double p = 2.0;
  Vec scale;  // empty means all ones
};
/// Bennett's d(a,p), truncated to the model's atoms.
struct D {
  Vec a;
  double p = 1.0;
};
/// Bennett's g(a,p), truncated to the model's atoms.
struct G {
  Vec a;
  double p = 1.0;
};
struct Explicit {
  ExplicitNorm norm;
};
/// ||f|| = ||T|f| ||_{L_p(mu)}.
struct MatrixDomain {
  std::vector<Vec> T;
  double p = 2.0;
};
/// ||f|| = ||s f||_E.
struct Scaled {
  std::shared_ptr<const Space> of;
  Vec s;
};
struct Associate {
  std::shared_ptr<const Space> of;
};
/// Multiplication operators from E into F with the operator norm.
struct Mult {
  std::shared_ptr<const Space> E, F;
};
/// Pointwise product normed by the gauge of conv(B_E * B_F).
struct Product {
  std::shared_ptr<const Space> E, F;
};
/// Pointwise product with the factorization quasi-norm inf ||g||_E ||h||_F.
struct Rho {
  std::shared_ptr<const Space> E, F;
};
/// E^theta F^(1-theta).
struct Calderon {
  std::shared_ptr<const Space> E, F;
  double theta = 0.5;
};
/// ||f|| = || |f|^p ||_E^(1/p).
struct Convexify {
  std::shared_ptr<const Space> of;
  double p = 2.0;
};
/// ||f|| = || |f|^(1/p) ||_E^p.
struct Concavify {
  std::shared_ptr<const Space> of;
  double p = 2.0;
};

using Node = std::variant<Lp, D, G, Explicit, MatrixDomain, Scaled, Associate, Mult, Product, Rho,
                          Calderon, Convexify, Concavify>;

}  // namespace space

/// Immutable expression describing a lattice norm on the atoms of a model.
class Space {
 public:
  explicit Space(space::Node node) : node_(std::make_shared<const space::Node>(std::move(node))) {}

  const space::Node& node() const { return *node_; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(*node_);
  }

 private:
  std::shared_ptr<const space::Node> node_;
};

namespace detail {
inline std::shared_ptr<const Space> share(const Space& s) { return std::make_shared<const Space>(s); }

inline void require(bool ok, const std::string& what) {
  if (!ok) throw StructureError(what);
}

inline bool is_exponent(double p) { return p >= 1.0 && (std::isfinite(p) || p == kInf); }
}  // namespace detail

inline Space lp(double p, Vec scale = {}) {
  detail::require(detail::is_exponent(p), "Lp exponent must lie in [1, inf]");
  for (double s : scale) detail::require(s > 0.0 && std::isfinite(s), "Lp scale factors must be positive");
  return Space(space::Lp{p, std::move(scale)});
}
inline Space linf() { return lp(kInf); }

inline Space dspace(Vec a, double p) {
  detail::require(!a.empty() && a[0] > 0.0, "d(a,p) needs a_1 > 0");
  for (double v : a) detail::require(v >= 0.0 && std::isfinite(v), "d(a,p) weights must be nonnegative");
  detail::require(p >= 1.0 && std::isfinite(p), "d(a,p) needs finite p >= 1");
  return Space(space::D{std::move(a), p});
}
inline Space gspace(Vec a, double p) {
  detail::require(!a.empty() && a[0] > 0.0, "g(a,p) needs a_1 > 0");
  for (double v : a) detail::require(v >= 0.0 && std::isfinite(v), "g(a,p) weights must be nonnegative");
  detail::require(p >= 1.0 && std::isfinite(p), "g(a,p) needs finite p >= 1");
  return Space(space::G{std::move(a), p});
}
inline Space explicit_space(ExplicitNorm norm) { return Space(space::Explicit{std::move(norm)}); }

inline Space matrix_domain(std::vector<Vec> T, double p) {
  detail::require(!T.empty(), "matrix domain needs a nonempty matrix");
  const std::size_t n = T.size();
  for (const auto& row : T) {
    detail::require(row.size() == n, "matrix domain needs a square matrix");
    for (double v : row) detail::require(v >= 0.0 && std::isfinite(v), "matrix entries must be nonnegative");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool nz = false;
    for (std::size_t i = 0; i < n; ++i) nz = nz || T[i][j] > 0.0;
    detail::require(nz, "matrix domain operator has a zero column (not strictly positive)");
  }
  detail::require(p > 1.0 && std::isfinite(p), "matrix domain needs 1 < p < inf");
  return Space(space::MatrixDomain{std::move(T), p});
}

inline Space scaled(const Space& E, Vec s) {
  for (double v : s) detail::require(v > 0.0 && std::isfinite(v), "scale factors must be positive");
  return Space(space::Scaled{detail::share(E), std::move(s)});
}
inline Space associate(const Space& E) { return Space(space::Associate{detail::share(E)}); }
inline Space mult(const Space& E, const Space& F) {
  return Space(space::Mult{detail::share(E), detail::share(F)});
}
inline Space product(const Space& E, const Space& F) {
  return Space(space::Product{detail::share(E), detail::share(F)});
}
inline Space rho(const Space& E, const Space& F) {
  return Space(space::Rho{detail::share(E), detail::share(F)});
}
inline Space calderon(const Space& E, const Space& F, double theta) {
  detail::require(theta > 0.0 && theta < 1.0, "Calderon parameter must lie in (0,1)");
  return Space(space::Calderon{detail::share(E), detail::share(F), theta});
}
inline Space convexify(const Space& E, double p) {
  detail::require(std::isfinite(p) && p > 1.0, "convexification needs finite p > 1");
  return Space(space::Convexify{detail::share(E), p});
}
inline Space concavify(const Space& E, double p) {
  detail::require(std::isfinite(p) && p > 1.0, "concavification needs finite p > 1");
  return Space(space::Concavify{detail::share(E), p});
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string format_exponent(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

inline std::string describe(const Space& E) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const space::Lp& s) {
                   os << (std::isinf(s.p) ? "Linf" : "Lp(" + format_exponent(s.p) + ")");
                   if (!s.scale.empty()) os << "[scaled]";
                 },
                 [&](const space::D& s) { os << "d(a," << format_exponent(s.p) << ")"; },
                 [&](const space::G& s) { os << "g(a," << format_exponent(s.p) << ")"; },
                 [&](const space::Explicit& s) { os << (s.norm.name.empty() ? "explicit" : s.norm.name); },
                 [&](const space::MatrixDomain& s) { os << "D_" << format_exponent(s.p) << "(T)"; },
                 [&](const space::Scaled& s) { os << "Scaled(" << describe(*s.of) << ")"; },
                 [&](const space::Associate& s) { os << "(" << describe(*s.of) << ")'"; },
                 [&](const space::Mult& s) { os << "M(" << describe(*s.E) << ", " << describe(*s.F) << ")"; },
                 [&](const space::Product& s) { os << describe(*s.E) << "." << describe(*s.F); },
                 [&](const space::Rho& s) { os << "rho(" << describe(*s.E) << ", " << describe(*s.F) << ")"; },
                 [&](const space::Calderon& s) {
                   os << "Calderon(" << describe(*s.E) << ", " << describe(*s.F) << ", " << s.theta << ")";
                 },
                 [&](const space::Convexify& s) { os << "(" << describe(*s.of) << ")^(1/" << s.p << ")"; },
                 [&](const space::Concavify& s) { os << "(" << describe(*s.of) << ")^" << s.p; },
             },
             E.node());
  return os.str();
}

/// Number of atoms a leaf pins down, if any.
inline std::optional<std::size_t> intrinsic_dimension(const Space& E);

/// Throws DimensionError unless every leaf agrees with the model size.
inline void check_dimensions(const Space& E, const WeightedModel& model) {
  const std::size_t n = model.n();
  auto need = [&](std::size_t m, const char* what) {
    if (m != n)
      throw DimensionError(std::string(what) + " has " + std::to_string(m) + " atoms, model has " +
                           std::to_string(n));
  };
  std::visit(overloaded{
                 [&](const space::Lp& s) {
                   if (!s.scale.empty()) need(s.scale.size(), "Lp scale");
                 },
                 [&](const space::D& s) { need(s.a.size(), "d(a,p) weight sequence"); },
                 [&](const space::G& s) { need(s.a.size(), "g(a,p) weight sequence"); },
                 [&](const space::Explicit& s) {
                   for (const auto& r : s.norm.rows) need(r.size(), "explicit norm");
                 },
                 [&](const space::MatrixDomain& s) { need(s.T.size(), "matrix domain"); },
                 [&](const space::Scaled& s) {
                   need(s.s.size(), "scale vector");
                   check_dimensions(*s.of, model);
                 },
                 [&](const space::Associate& s) { check_dimensions(*s.of, model); },
                 [&](const space::Mult& s) {
                   check_dimensions(*s.E, model);
                   check_dimensions(*s.F, model);
                 },
                 [&](const space::Product& s) {
                   check_dimensions(*s.E, model);
                   check_dimensions(*s.F, model);
                 },
                 [&](const space::Rho& s) {
                   check_dimensions(*s.E, model);
                   check_dimensions(*s.F, model);
                 },
                 [&](const space::Calderon& s) {
                   check_dimensions(*s.E, model);
                   check_dimensions(*s.F, model);
                 },
                 [&](const space::Convexify& s) { check_dimensions(*s.of, model); },
                 [&](const space::Concavify& s) { check_dimensions(*s.of, model); },
             },
             E.node());
}

inline std::optional<std::size_t> intrinsic_dimension(const Space& E) {
  return std::visit(
      overloaded{
          [](const space::Lp& s) -> std::optional<std::size_t> {
            if (s.scale.empty()) return std::nullopt;
            return s.scale.size();
          },
          [](const space::D& s) -> std::optional<std::size_t> { return s.a.size(); },
          [](const space::G& s) -> std::optional<std::size_t> { return s.a.size(); },
          [](const space::Explicit& s) -> std::optional<std::size_t> {
            if (s.norm.rows.empty()) return std::nullopt;
            return s.norm.rows.front().size();
          },
          [](const space::MatrixDomain& s) -> std::optional<std::size_t> { return s.T.size(); },
          [](const space::Scaled& s) -> std::optional<std::size_t> { return s.s.size(); },
          [](const space::Associate& s) { return intrinsic_dimension(*s.of); },
          [](const space::Mult& s) {
            auto d = intrinsic_dimension(*s.E);
            return d ? d : intrinsic_dimension(*s.F);
          },
          [](const space::Product& s) {
            auto d = intrinsic_dimension(*s.E);
            return d ? d : intrinsic_dimension(*s.F);
          },
          [](const space::Rho& s) {
            auto d = intrinsic_dimension(*s.E);
            return d ? d : intrinsic_dimension(*s.F);
          },
          [](const space::Calderon& s) {
            auto d = intrinsic_dimension(*s.E);
            return d ? d : intrinsic_dimension(*s.F);
          },
          [](const space::Convexify& s) { return intrinsic_dimension(*s.of); },
          [](const space::Concavify& s) { return intrinsic_dimension(*s.of); },
      },
      E.node());
}

}  // namespace banach
