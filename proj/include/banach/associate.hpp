// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>

#include "banach/polytope.hpp"
#include "banach/space.hpp"

namespace banach {

namespace detail {
inline Vec reciprocal(const Vec& s) {
  Vec r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = 1.0 / s[i];
  return r;
}

inline Space scaled_by_measure(const Space& E, const WeightedModel& model) {
  if (model.is_unit()) return E;
  return scaled(E, model.weights());
}
}  // namespace detail

/// Known closed forms for the associate space, taken with respect to the
/// pairing <f,g> = sum f_i g_i mu_i. Returns nullopt when only the numeric
/// route applies.
inline std::optional<Space> closed_form_associate(const Space& E, const WeightedModel& model);

/// closed_form_associate(E), or Associate(E) left for the solver.
inline Space associate_simplified(const Space& E, const WeightedModel& model) {
  if (auto r = closed_form_associate(E, model)) return *r;
  return associate(E);
}

/// Closed form for Calderon spaces of weighted L_p spaces or with an L_inf side.
inline std::optional<Space> calderon_closed_form(const space::Calderon& c) {
  const auto* a = c.E->as<space::Lp>();
  const auto* b = c.F->as<space::Lp>();
  const double th = c.theta;
  if (a && b) {
    const double inv = th / a->p + (1.0 - th) / b->p;  // 1/inf == 0
    Vec s;
    if (!a->scale.empty() || !b->scale.empty()) {
      const std::size_t n = std::max(a->scale.size(), b->scale.size());
      s.assign(n, 1.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double sa = a->scale.empty() ? 1.0 : a->scale[i];
        const double sb = b->scale.empty() ? 1.0 : b->scale[i];
        s[i] = std::pow(sa, th) * std::pow(sb, 1.0 - th);
      }
    }
    return lp(inv == 0.0 ? kInf : 1.0 / inv, std::move(s));
  }
  // E^theta (L_inf[s])^(1-theta): the optimal L_inf factor is 1/s
  auto with_linf = [](const Space& other, const space::Lp& inf_side, double t) -> Space {
    Space conv = convexify(other, 1.0 / t);
    if (inf_side.scale.empty()) return conv;
    Vec s(inf_side.scale.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::pow(inf_side.scale[i], 1.0 - t);
    return scaled(conv, std::move(s));
  };
  if (b && std::isinf(b->p)) return with_linf(*c.E, *b, th);
  if (a && std::isinf(a->p)) return with_linf(*c.F, *a, 1.0 - th);
  return std::nullopt;
}

/// E as a single weighted L_p space, when its expression reduces to one.
inline std::optional<space::Lp> lp_form(const Space& E) {
  auto powered = [](space::Lp l, double p_mult, double s_pow) {
    l.p *= p_mult;
    for (double& v : l.scale) v = std::pow(v, s_pow);
    return l;
  };
  if (auto s = E.as<space::Lp>()) return *s;
  if (auto s = E.as<space::Convexify>()) {
    if (auto l = lp_form(*s->of)) return powered(*l, s->p, 1.0 / s->p);
  } else if (auto s = E.as<space::Concavify>()) {
    if (auto l = lp_form(*s->of); l && l->p / s->p >= 1.0) return powered(*l, 1.0 / s->p, s->p);
  } else if (auto s = E.as<space::Calderon>()) {
    if (auto c = calderon_closed_form(*s)) return lp_form(*c);
  } else if (auto s = E.as<space::MatrixDomain>()) {
    // a diagonal operator only rescales coordinates
    const std::size_t n = s->T.size();
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && s->T[i][j] != 0.0) return std::nullopt;
        if (i == j) d[i] = s->T[i][i];
      }
    return space::Lp{s->p, std::move(d)};
  } else if (auto s = E.as<space::Scaled>()) {
    if (auto l = lp_form(*s->of)) {
      if (l->scale.empty()) l->scale.assign(s->s.size(), 1.0);
      for (std::size_t i = 0; i < s->s.size(); ++i) l->scale[i] *= s->s[i];
      return l;
    }
  }
  return std::nullopt;
}

/// M(L_p[s], L_q[t]) for the weighted measure: Hoelder when p >= q, a
/// weighted L_inf when p < q (the supremum sits on single atoms).
inline std::optional<Space> closed_form_mult(const Space& E, const Space& F, const WeightedModel& model) {
  const auto a = lp_form(E);
  const auto b = lp_form(F);
  if (!a || !b) return std::nullopt;
  const std::size_t n = model.n();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = (b->scale.empty() ? 1.0 : b->scale[i]) / (a->scale.empty() ? 1.0 : a->scale[i]);
  const double inv = 1.0 / b->p - 1.0 / a->p;  // 1/inf == 0
  if (inv <= 0.0) {
    if (inv < 0.0)
      for (std::size_t i = 0; i < n; ++i) r[i] *= std::pow(model.weight(i), inv);
    return lp(kInf, std::move(r));
  }
  return lp(1.0 / inv, std::move(r));
}

inline std::optional<Space> closed_form_associate(const Space& E, const WeightedModel& model) {
  if (auto l = lp_form(E); l && !E.is<space::Lp>()) return closed_form_associate(Space(*l), model);
  if (auto s = E.as<space::Lp>()) {
    return lp(conjugate_exponent(s->p), s->scale.empty() ? Vec{} : detail::reciprocal(s->scale));
  }
  if (auto s = E.as<space::Scaled>()) {
    if (auto inner = closed_form_associate(*s->of, model)) return scaled(*inner, detail::reciprocal(s->s));
    return std::nullopt;
  }
  if (auto s = E.as<space::D>()) {
    // d(a,1)' = g(a,1) for the counting pairing; the measure rescales it
    if (s->p == 1.0) return detail::scaled_by_measure(gspace(s->a, 1.0), model);
    return closed_form_associate(convexify(dspace(s->a, 1.0), s->p), model);
  }
  if (auto s = E.as<space::G>()) {
    if (s->p == 1.0) return detail::scaled_by_measure(dspace(s->a, 1.0), model);
    return closed_form_associate(convexify(gspace(s->a, 1.0), s->p), model);
  }
  if (auto s = E.as<space::Explicit>()) {
    // polar of a polytope: max over the ball's vertices of the pairing
    const std::size_t n = model.n();
    auto verts = polytope_vertices(s->norm.rows, n);
    for (auto& v : verts)
      for (std::size_t i = 0; i < n; ++i) v[i] *= model.weight(i);
    return explicit_space(explicit_from_rows(s->norm.name.empty() ? "" : s->norm.name + "'", std::move(verts)));
  }
  if (auto s = E.as<space::Convexify>()) {
    // (F^{1/p})' = (F')^{1/p} . L_{p'}, a product Banach function space
    return rho(convexify(associate_simplified(*s->of, model), s->p), lp(conjugate_exponent(s->p)));
  }
  if (auto s = E.as<space::Calderon>()) {
    return calderon(associate_simplified(*s->E, model), associate_simplified(*s->F, model), s->theta);
  }
  if (auto s = E.as<space::Associate>()) return *s->of;
  auto product_like = [&](const Space& A, const Space& B) -> std::optional<Space> {
    // a linear functional has the same supremum over B_A.B_B and its hull
    if (auto Bd = closed_form_associate(B, model)) return mult(A, *Bd);
    if (auto Ad = closed_form_associate(A, model)) return mult(B, *Ad);
    return std::nullopt;
  };
  if (auto s = E.as<space::Product>()) return product_like(*s->E, *s->F);
  if (auto s = E.as<space::Rho>()) return product_like(*s->E, *s->F);
  return std::nullopt;
}

}  // namespace banach
