// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// Log-coordinate programs for implicitly defined norms.
//
// A norm given by an infimum (Calderon spaces, factorization quasi-norms) or
// a supremum (multipliers, associates) is compiled into one optimization over
// auxiliary blocks of log-variables. Nested infima inside a minimization (and
// suprema inside a maximization) are merged into the same program rather than
// solved recursively; anything else becomes an opaque term evaluated by a
// nested solve. Objectives are sums of closed-form log-norms, convex in every
// block, so inf-programs are convex and sup-programs are multistarted.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <variant>

#include "banach/associate.hpp"
#include "banach/lbfgs.hpp"
#include "banach/lognorm.hpp"
#include "banach/model.hpp"
#include "banach/space.hpp"

namespace banach {

struct LogNormResult {
  double value = -kInf;  // log of the norm
  Vec grad;              // d value / d log|f|, full length, zero off support
  bool confident = true;
};

/// log ||exp(z)||_E with its log-gradient; z may hold -inf for zero entries.
inline LogNormResult log_norm(const Space& E, const WeightedModel& model, const Vec& z, const SolverConfig& cfg,
                              bool want_grad = false);

enum class Goal { Minimize, Maximize };
enum class BlockKind { Inf, Sup };

/// An affine map of the blocks and the input: sum coef_b * X_b + input * z + offset.
struct Affine {
  std::vector<std::pair<std::size_t, double>> blocks;
  double input = 0.0;
  Vec offset;

  Affine scaled(double c) const {
    Affine r = *this;
    for (auto& b : r.blocks) b.second *= c;
    r.input *= c;
    for (double& v : r.offset) v *= c;
    return r;
  }
  Affine plus(const Affine& o, double c = 1.0) const {
    Affine r = *this;
    for (const auto& b : o.blocks) r.blocks.emplace_back(b.first, c * b.second);
    r.input += c * o.input;
    for (std::size_t i = 0; i < r.offset.size(); ++i) r.offset[i] += c * o.offset[i];
    return r;
  }
  static Affine block(std::size_t b, std::size_t m, double c = 1.0) {
    Affine r;
    r.blocks.emplace_back(b, c);
    r.offset.assign(m, 0.0);
    return r;
  }
  static Affine zero(std::size_t m) {
    Affine r;
    r.offset.assign(m, 0.0);
    return r;
  }
};

struct OpaqueTerm {
  Space space;
};

struct Term {
  double coef = 1.0;
  Affine arg;
  std::variant<Leaf, OpaqueTerm> fn;
};

struct Block {
  BlockKind kind = BlockKind::Inf;
  Affine seed;
};

struct Program {
  WeightedModel model;
  std::vector<std::size_t> support;
  Goal goal = Goal::Minimize;
  SolverConfig cfg;
  std::vector<Block> blocks;
  std::vector<Term> terms;

  std::size_t m() const { return support.size(); }

  bool has_sup_blocks() const {
    return std::any_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.kind == BlockKind::Sup; });
  }
  bool needs_smoothing() const {
    for (const auto& t : terms)
      if (const auto* l = std::get_if<Leaf>(&t.fn); l && !leaf_is_smooth(*l)) return true;
    return false;
  }
};

namespace detail {

enum class NodeType { Closed, Inf, Sup, Hull };

inline NodeType node_type(const Space& E, const WeightedModel& model, bool closed_forms) {
  if (is_leaf_space(E)) return NodeType::Closed;
  if (auto s = E.as<space::Scaled>()) return node_type(*s->of, model, closed_forms);
  if (auto s = E.as<space::Convexify>()) return node_type(*s->of, model, closed_forms);
  if (auto s = E.as<space::Concavify>()) return node_type(*s->of, model, closed_forms);
  if (auto s = E.as<space::Calderon>()) {
    if (closed_forms)
      if (auto c = calderon_closed_form(*s)) return node_type(*c, model, closed_forms);
    return NodeType::Inf;
  }
  if (E.is<space::Rho>()) return NodeType::Inf;
  if (auto s = E.as<space::Mult>()) {
    if (closed_forms)
      if (auto c = closed_form_mult(*s->E, *s->F, model)) return node_type(*c, model, closed_forms);
    return NodeType::Sup;
  }
  if (E.is<space::Product>()) return NodeType::Hull;
  if (auto s = E.as<space::Associate>()) {
    if (closed_forms)
      if (auto c = closed_form_associate(*s->of, model)) return node_type(*c, model, closed_forms);
    return NodeType::Sup;
  }
  return NodeType::Closed;
}

inline bool can_merge(NodeType t, Goal goal, double coef) {
  const bool same = (goal == Goal::Minimize) == (coef > 0.0);
  if (t == NodeType::Inf) return same;
  if (t == NodeType::Sup) return !same;
  return false;
}

inline std::size_t add_block(Program& P, BlockKind kind, Affine seed) {
  P.blocks.push_back({kind, std::move(seed)});
  return P.blocks.size() - 1;
}

inline void emit(Program& P, const Space& E, const Affine& arg, double coef) {
  const std::size_t m = P.m();
  auto opaque = [&] { P.terms.push_back({coef, arg, OpaqueTerm{E}}); };

  if (is_leaf_space(E)) {
    P.terms.push_back({coef, arg, make_leaf(E, P.model)});
    return;
  }
  if (auto s = E.as<space::Scaled>()) {
    Affine a = arg;
    for (std::size_t k = 0; k < m; ++k) a.offset[k] += std::log(s->s[P.support[k]]);
    emit(P, *s->of, a, coef);
    return;
  }
  if (auto s = E.as<space::Convexify>()) {
    emit(P, *s->of, arg.scaled(s->p), coef / s->p);
    return;
  }
  if (auto s = E.as<space::Concavify>()) {
    emit(P, *s->of, arg.scaled(1.0 / s->p), coef * s->p);
    return;
  }
  if (auto s = E.as<space::Calderon>()) {
    if (P.cfg.closed_forms)
      if (auto c = calderon_closed_form(*s)) {
        emit(P, *c, arg, coef);
        return;
      }
    if (!can_merge(NodeType::Inf, P.goal, coef)) return opaque();
    // |f| = g^theta h^(1-theta), log g = V
    const std::size_t b = add_block(P, BlockKind::Inf, arg);
    const double th = s->theta;
    emit(P, *s->E, Affine::block(b, m), coef * th);
    emit(P, *s->F, arg.plus(Affine::block(b, m), -th).scaled(1.0 / (1.0 - th)), coef * (1.0 - th));
    return;
  }
  if (auto s = E.as<space::Rho>()) {
    if (!can_merge(NodeType::Inf, P.goal, coef)) return opaque();
    const std::size_t b = add_block(P, BlockKind::Inf, arg.scaled(0.5));
    emit(P, *s->E, Affine::block(b, m), coef);
    emit(P, *s->F, arg.plus(Affine::block(b, m), -1.0), coef);
    return;
  }
  if (auto s = E.as<space::Mult>()) {
    if (P.cfg.closed_forms)
      if (auto c = closed_form_mult(*s->E, *s->F, P.model)) {
        emit(P, *c, arg, coef);
        return;
      }
    if (!can_merge(NodeType::Sup, P.goal, coef)) return opaque();
    // sup over x = exp(Y) of ||x g||_F / ||x||_E
    const std::size_t b = add_block(P, BlockKind::Sup, Affine::zero(m));
    emit(P, *s->F, Affine::block(b, m).plus(arg), coef);
    emit(P, *s->E, Affine::block(b, m), -coef);
    return;
  }
  if (auto s = E.as<space::Associate>()) {
    if (P.cfg.closed_forms)
      if (auto c = closed_form_associate(*s->of, P.model)) {
        emit(P, *c, arg, coef);
        return;
      }
    if (!can_merge(NodeType::Sup, P.goal, coef)) return opaque();
    // the support function of a set equals that of its convex hull
    Space inner = *s->of;
    if (auto pr = inner.as<space::Product>()) inner = rho(*pr->E, *pr->F);
    const std::size_t b = add_block(P, BlockKind::Sup, Affine::zero(m));
    emit(P, lp(1.0), Affine::block(b, m).plus(arg), coef);
    emit(P, inner, Affine::block(b, m), -coef);
    return;
  }
  opaque();
}

}  // namespace detail

/// Compiles ||.||_E at the (restricted) support into a program whose input is log|f|.
inline Program compile(const Space& E, const WeightedModel& model, std::vector<std::size_t> support,
                       const SolverConfig& cfg) {
  Program P{model, std::move(support), Goal::Minimize, cfg, {}, {}};
  const auto t = detail::node_type(E, model, cfg.closed_forms);
  P.goal = t == detail::NodeType::Sup ? Goal::Maximize : Goal::Minimize;
  Affine in = Affine::zero(P.m());
  in.input = 1.0;
  detail::emit(P, E, in, 1.0);
  return P;
}

namespace detail {

inline Vec expand(const Program& P, const Affine& a, const Vec& x, const Vec& z) {
  const std::size_t m = P.m();
  Vec full(P.model.n(), -kInf);
  for (std::size_t k = 0; k < m; ++k) {
    double v = a.offset[k] + (a.input != 0.0 ? a.input * z[k] : 0.0);
    for (const auto& [b, c] : a.blocks) v += c * x[b * m + k];
    full[P.support[k]] = v;
  }
  return full;
}

/// Objective value at blocks x for input z; gradients w.r.t. x and z if requested.
inline double evaluate(const Program& P, const Vec& x, const Vec& z, double tau, Vec* gx, Vec* gz) {
  const std::size_t m = P.m();
  if (gx) gx->assign(x.size(), 0.0);
  if (gz) gz->assign(m, 0.0);
  double total = 0.0;
  Vec g;
  const bool want = gx || gz;
  for (const auto& t : P.terms) {
    const Vec arg = expand(P, t.arg, x, z);
    double v;
    if (const auto* l = std::get_if<Leaf>(&t.fn)) {
      v = leaf_log_norm(*l, arg, tau, want ? &g : nullptr);
    } else {
      auto r = log_norm(std::get<OpaqueTerm>(t.fn).space, P.model, arg, P.cfg, want);
      v = r.value;
      g = std::move(r.grad);
    }
    if (!std::isfinite(v)) return P.goal == Goal::Minimize ? kInf : -kInf;
    total += t.coef * v;
    if (!want) continue;
    for (std::size_t k = 0; k < m; ++k) {
      const double gk = t.coef * g[P.support[k]];
      if (gk == 0.0) continue;
      if (gx)
        for (const auto& [b, c] : t.arg.blocks) (*gx)[b * m + k] += c * gk;
      if (gz) (*gz)[k] += t.arg.input * gk;
    }
  }
  return total;
}

inline Vec seeded_blocks(const Program& P, const Vec& z, const std::vector<Vec>& fixed) {
  const std::size_t m = P.m();
  Vec x(P.blocks.size() * m, 0.0);
  for (std::size_t b = 0; b < P.blocks.size(); ++b) {
    if (b < fixed.size() && !fixed[b].empty()) {
      std::copy(fixed[b].begin(), fixed[b].end(), x.begin() + static_cast<std::ptrdiff_t>(b * m));
      continue;
    }
    const Affine& s = P.blocks[b].seed;
    for (std::size_t k = 0; k < m; ++k) {
      double v = s.offset[k] + (s.input != 0.0 ? s.input * z[k] : 0.0);
      for (const auto& [bb, c] : s.blocks) v += c * x[bb * m + k];
      x[b * m + k] = v;
    }
  }
  return x;
}

}  // namespace detail

struct ProgramSolution {
  double value = kInf;
  Vec x;
  Vec input_grad;
  bool confident = false;
};

/// Minimizes (or maximizes) the program at input z (restricted to the support).
///
/// `hints` are partial starting points: hints[i][b] fixes block b, empty
/// vectors fall back to the block's seed.
inline ProgramSolution solve(const Program& P, const Vec& z, const std::vector<std::vector<Vec>>& hints = {}) {
  const std::size_t m = P.m();
  const std::size_t nb = P.blocks.size();
  const double sign = P.goal == Goal::Minimize ? 1.0 : -1.0;
  ProgramSolution best;
  best.value = sign * kInf;

  auto better = [&](double a, double b) { return P.goal == Goal::Minimize ? a < b : a > b; };

  if (nb == 0) {
    best.x = {};
    best.value = detail::evaluate(P, best.x, z, 0.0, nullptr, &best.input_grad);
    best.confident = true;
    return best;
  }

  std::vector<std::vector<Vec>> starts;
  starts.push_back({});
  for (const auto& h : hints) starts.push_back(h);
  if (P.has_sup_blocks()) {
    std::mt19937_64 rng(P.cfg.seed * 0x9E3779B97F4A7C15ULL + m * 131 + nb);
    std::normal_distribution<double> nd(0.0, 1.5);
    auto sup_start = [&](auto&& fill) {
      std::vector<Vec> s(nb);
      for (std::size_t b = 0; b < nb; ++b)
        if (P.blocks[b].kind == BlockKind::Sup) {
          s[b].assign(m, 0.0);
          fill(s[b]);
        }
      starts.push_back(std::move(s));
    };
    if (m > 1)
      for (std::size_t k = 0; k < m; ++k)
        sup_start([&](Vec& v) {
          std::fill(v.begin(), v.end(), -25.0);
          v[k] = 0.0;
        });
    for (int r = 1; r < P.cfg.starts; ++r)
      sup_start([&](Vec& v) {
        for (double& e : v) e = nd(rng);
      });
  }

  static constexpr double kSchedule[] = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const bool smooth = !P.needs_smoothing();
  LbfgsOptions opt;
  opt.max_iter = P.cfg.max_iter;

  for (const auto& s : starts) {
    Vec x = detail::seeded_blocks(P, z, s);
    double prev_exact = detail::evaluate(P, x, z, 0.0, nullptr, nullptr);
    Vec best_x = x;
    double best_exact = prev_exact;
    bool conv = false;
    bool settled = false;
    auto run = [&](double tau) {
      auto fg = [&](const Vec& xx, Vec& gg) {
        Vec gx;
        const double v = detail::evaluate(P, xx, z, tau, &gx, nullptr);
        gg.resize(gx.size());
        for (std::size_t i = 0; i < gx.size(); ++i) gg[i] = sign * gx[i];
        return sign * v;
      };
      auto r = lbfgs_minimize(fg, x, opt);
      x = r.x;
      const double exact = detail::evaluate(P, x, z, 0.0, nullptr, nullptr);
      if (std::isfinite(exact) && better(exact, best_exact)) {
        best_exact = exact;
        best_x = x;
      }
      conv = r.converged;
      settled = std::abs(exact - prev_exact) <= 1e-2 * P.cfg.tol;
      prev_exact = exact;
    };
    if (smooth) {
      run(0.0);
    } else {
      // heavy smoothing flattens narrow maxima of sup programs
      const std::size_t first = P.has_sup_blocks() ? 2 : 0;
      for (std::size_t i = first; i < std::size(kSchedule); ++i) run(kSchedule[i]);
    }
    if (better(best_exact, best.value) || best.x.empty()) {
      best.value = best_exact;
      best.x = best_x;
      best.confident = conv || settled;
    }
  }
  detail::evaluate(P, best.x, z, 0.0, nullptr, &best.input_grad);
  return best;
}

}  // namespace banach

#include "banach/norms.hpp"
