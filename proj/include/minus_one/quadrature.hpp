#ifndef MINUS_ONE_QUADRATURE_HPP
#define MINUS_ONE_QUADRATURE_HPP

// Double-exponential quadrature over WeightSpec components.
//   finite [a,b]       tanh-sinh, endpoint distances passed to the density exactly
//   [a,inf), (-inf,b]  exp-sinh
//   (-inf,inf)         sinh-sinh
// Step halving reuses the previous nodes; the abscissa range is fixed on the
// first level by scanning outward until the weighted envelope is negligible.

#include <functional>
#include <vector>

#include "minus_one/family.hpp"

namespace minus_one {

struct QuadratureResult {
  Real value;
  Real error;
  long nodes = 0;
  bool converged = false;
};

struct QuadratureNode {
  Real x;
  Real weight;  // density times Jacobian, without the step
};

class ComponentRule {
 public:
  // `degree` bounds the polynomial factor so truncation accounts for its growth.
  ComponentRule(WeightComponent c, int degree, const PrecisionContext& ctx)
      : c_(std::move(c)), degree_(degree), ctx_(ctx), half_pi_(ctx.pi() / 2) {
    const Real threshold = ctx.tolerance(-15);
    t_hi_ = scan(+1, threshold);
    t_lo_ = scan(-1, threshold);
  }

  // Nodes at step 2^-level that are not on any coarser grid.
  std::vector<QuadratureNode> level_nodes(int level) const {
    std::vector<QuadratureNode> out;
    const Real h = step(level);
    const long stride = level == 0 ? 1 : 2;
    const long first = level == 0 ? 0 : 1;
    for (long sign : {+1L, -1L}) {
      const Real& limit = sign > 0 ? t_hi_ : t_lo_;
      for (long k = first;; k += stride) {
        if (sign < 0 && k == 0) continue;
        Real t = h * k;
        if (t > limit) break;
        if (auto node = evaluate(t * sign)) out.push_back(std::move(*node));
      }
    }
    return out;
  }

  Real step(int level) const { return pow(ctx_.integer(2), -static_cast<long>(level)) * base_step(); }

 private:
  Real base_step() const { return ctx_.ratio(1, 2); }

  // Outward scan on the level-0 grid until the envelope falls below threshold.
  Real scan(int sign, const Real& threshold) const {
    Real peak = ctx_.zero();
    const Real h = base_step();
    int quiet = 0;
    for (long k = 0; k < 40; ++k) {
      Real t = h * (k * sign);
      Real env = ctx_.zero();
      if (auto node = evaluate(t)) env = abs(node->weight) * growth(node->x);
      peak = max(peak, env);
      if (k >= 2 && env <= threshold * peak) {
        if (++quiet == 2) return abs(t);
      } else {
        quiet = 0;
      }
    }
    return h * 40;
  }

  Real growth(const Real& x) const { return pow(1 + abs(x), static_cast<long>(degree_)); }

  std::optional<QuadratureNode> evaluate(const Real& t) const {
    const bool lo_finite = c_.lo.has_value(), hi_finite = c_.hi.has_value();
    Real x, dlo, dhi, jac;
    if (lo_finite && hi_finite) {
      const Real width = *c_.hi - *c_.lo;
      const Real u = half_pi_ * sinh(t);
      const Real e2 = exp(2 * u);
      dlo = width * e2 / (1 + e2);
      dhi = width / (1 + e2);
      if (dlo.is_zero() || dhi.is_zero()) return std::nullopt;
      x = dlo <= dhi ? *c_.lo + dlo : *c_.hi - dhi;
      const Real ch = cosh(u);
      jac = width / 2 * half_pi_ * cosh(t) / (ch * ch);
    } else if (lo_finite || hi_finite) {
      const Real u = half_pi_ * sinh(t);
      const Real d = exp(u);
      if (d.is_zero()) return std::nullopt;
      jac = half_pi_ * cosh(t) * d;
      if (lo_finite) {
        x = *c_.lo + d;
        dlo = d;
        dhi = ctx_.zero();
      } else {
        x = *c_.hi - d;
        dhi = d;
        dlo = ctx_.zero();
      }
    } else {
      const Real u = half_pi_ * sinh(t);
      x = sinh(u);
      jac = half_pi_ * cosh(t) * cosh(u);
      dlo = ctx_.zero();
      dhi = ctx_.zero();
    }
    Real w = c_.density(x, dlo, dhi) * jac;
    if (!w.is_finite()) return std::nullopt;
    return QuadratureNode{std::move(x), std::move(w)};
  }

  WeightComponent c_;
  int degree_;
  PrecisionContext ctx_;
  Real half_pi_;
  Real t_lo_, t_hi_;
};

// Integrates a vector of functions against the weight. `accumulate(x, w, sums)`
// adds w * f_k(x) into sums[k]. Convergence: every entry changes by at most
// tol * scale[k] between successive levels.
class WeightedQuadrature {
 public:
  WeightedQuadrature(const WeightSpec& w, int degree, const PrecisionContext& ctx) : ctx_(ctx) {
    for (const auto& c : w.components) rules_.emplace_back(c, degree, ctx);
  }

  using Accumulate = std::function<void(const Real& x, const Real& w, std::vector<Real>& sums)>;

  struct Result {
    std::vector<Real> values;
    std::vector<Real> errors;
    long nodes = 0;
    int level = 0;
    bool converged = false;
  };

  Result run(std::size_t dim, const Accumulate& accumulate, const Real& tol, const std::vector<Real>& scale,
             int max_level = 12, long node_cap = 1L << 20) const {
    Result r;
    std::vector<std::vector<Real>> raw(rules_.size(), std::vector<Real>(dim, ctx_.zero()));
    std::vector<Real> previous;
    for (int level = 0; level <= max_level; ++level) {
      std::vector<Real> total(dim, ctx_.zero());
      for (std::size_t c = 0; c < rules_.size(); ++c) {
        for (const auto& node : rules_[c].level_nodes(level)) {
          accumulate(node.x, node.weight, raw[c]);
          ++r.nodes;
        }
        const Real h = rules_[c].step(level);
        for (std::size_t k = 0; k < dim; ++k) total[k] += raw[c][k] * h;
      }
      r.level = level;
      if (!previous.empty()) {
        bool ok = level >= 3;
        r.errors.assign(dim, ctx_.zero());
        for (std::size_t k = 0; k < dim; ++k) {
          r.errors[k] = abs(total[k] - previous[k]);
          if (r.errors[k] > tol * scale[k]) ok = false;
        }
        if (ok) {
          r.values = std::move(total);
          r.converged = true;
          return r;
        }
      }
      previous = total;
      r.values = std::move(total);
      if (r.nodes * 2 > node_cap) break;
    }
    if (r.errors.empty()) r.errors.assign(dim, ctx_.integer(1));
    return r;
  }

 private:
  PrecisionContext ctx_;
  std::vector<ComponentRule> rules_;
};

inline QuadratureResult integrate(const WeightSpec& w, const std::function<Real(const Real&)>& f, const Real& tol,
                                  const PrecisionContext& ctx, int degree = 0) {
  WeightedQuadrature q(w, degree, ctx);
  auto acc = [&](const Real& x, const Real& wt, std::vector<Real>& sums) { sums[0] += wt * f(x); };
  // scale from a coarse pass so tol is relative
  auto coarse = q.run(1, acc, ctx.integer(1), {ctx.integer(1)}, 3);
  Real scale = max(abs(coarse.values[0]), ctx.tolerance(0));
  auto r = q.run(1, acc, tol, {scale});
  return QuadratureResult{r.values[0], r.errors[0], r.nodes, r.converged};
}

}  // namespace minus_one

#endif
