#ifndef MINUS_ONE_HERMITE_HPP
#define MINUS_ONE_HERMITE_HPP

// -1 Meixner-Pollaczek, generalized Hermite and Hermite.

#include <string>

#include "minus_one/family_kit.hpp"
#include "minus_one/fixtures.hpp"

namespace minus_one::families {

using namespace kit;

inline RecurrencePair meixner_recurrence(const CNum& al, const CNum& ga, long n, const PrecisionContext& ctx) {
  const long m = n / 2;
  CNum u = even(n) ? CNum(ctx.integer(m)) : al + num(ctx, 1, 2) + m;
  return RecurrencePair{even(n) ? ga : -ga, std::move(u), std::nullopt, std::nullopt};
}

// (-1)^m (alpha+1/2)_m 1F1(-m; alpha+1/2; x^2-gamma^2), times (x-gamma) with alpha+3/2 for odd n.
inline Polynomial meixner_closed_form(const CNum& al, const CNum& ga, long n, const PrecisionContext& ctx) {
  const long m = n / 2;
  const CNum low = al + (even(n) ? num(ctx, 1, 2) : num(ctx, 3, 2));
  const CNum sign(ctx.integer(m % 2 == 0 ? 1 : -1));
  Polynomial p = hyp({constant(CNum(ctx.integer(-m)))}, {low}, x_squared_minus(ctx, ga * ga)) * (sign * pochhammer(low, m));
  return even(n) ? p : (x(ctx) - ga) * p;
}

inline Real meixner_norm(const Real& al, const Real& ga, long n, const PrecisionContext& ctx) {
  const long m = n / 2;
  const Real shift = even(n) ? ctx.ratio(1, 2) : ctx.ratio(3, 2);
  return gamma(ctx.integer(m + 1), ctx) * exp(-ga * ga) * gamma(al + m + shift, ctx);
}

// sgn(x) (x+gamma) (x^2-gamma^2)^(alpha-1/2) exp(-x^2) on (-inf,-|gamma|] U [|gamma|,inf).
inline WeightSpec meixner_weight(const Real& al, const Real& ga, const PrecisionContext& ctx) {
  const Real g = abs(ga), e = al - ctx.ratio(1, 2);
  const bool up = ga.sign() >= 0;
  Density left = [e, g, up](const Real& x, const Real&, const Real& dhi) {
    Real lin = up ? dhi : g - x;
    return lin * pow(dhi * (g - x), e) * exp(-x * x);
  };
  Density right = [e, g, up](const Real& x, const Real& dlo, const Real&) {
    Real lin = up ? x + g : dlo;
    return lin * pow(dlo * (x + g), e) * exp(-x * x);
  };
  WeightComponent lo;
  lo.hi = -g;
  lo.lo_exponent = ctx.zero();
  lo.hi_exponent = up ? e + 1 : e;
  lo.lo_decay = Decay::gaussian;
  lo.density = std::move(left);
  WeightComponent hi;
  hi.lo = g;
  hi.lo_exponent = up ? e : e + 1;
  hi.hi_exponent = ctx.zero();
  hi.hi_decay = Decay::gaussian;
  hi.density = std::move(right);
  WeightSpec w;
  w.components = {std::move(lo), std::move(hi)};
  w.description = "sgn(x) (x+gamma) (x^2-gamma^2)^(alpha-1/2) exp(-x^2) on |x| >= |gamma|";
  return w;
}

inline std::function<CNum(long)> meixner_eigenvalue(const CNum& eps, const PrecisionContext& ctx) {
  return [eps, ctx](long n) {
    CNum m(ctx.integer(n / 2));
    return even(n) ? m : m + eps;
  };
}

inline DunklOperator meixner_operator(const CNum& al, const CNum& ga, const CNum& eps, const PrecisionContext& ctx) {
  const Polynomial X = x(ctx);
  const CNum g2 = ga * ga, four = num(ctx, 4), two = num(ctx, 2);
  RationalFunction S = over_power(constant(g2) - X * X, four, 2, ctx);
  RationalFunction T = over_power((X - ga) * (-ga), four, 3, ctx);
  RationalFunction U = add({rational(X / two), over_power(constant(ga), four, 2, ctx),
                            over_power(constant(-g2), two, 3, ctx), over_power(constant(-(al + g2)), two, 1, ctx)},
                           ctx);
  RationalFunction V = add({over_power(constant(g2 * 3), num(ctx, 8), 4, ctx), over_power(constant(-ga), four, 3, ctx),
                            over_power(constant(al + g2), four, 2, ctx), over_power((X - ga) * eps, two, 1, ctx),
                            rational(constant(num(ctx, -1, 4)))},
                           ctx);
  return sutv_operator(std::move(S), std::move(T), std::move(U), std::move(V), ctx);
}

inline FamilySpec minus1_meixner_pollaczek() {
  FamilySpec f;
  f.id = FamilyId::minus1_meixner_pollaczek;
  f.role = Role::scheme;
  f.title = "-1 Meixner-Pollaczek";
  f.parameters = {"alpha", "gamma"};
  f.admissible_region = "alpha > -1/2, gamma real";
  f.anchor = "-1 Meixner Pollaczek";
  f.row = 2;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return meixner_recurrence(p["alpha"], p["gamma"], n, ctx);
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return meixner_closed_form(p["alpha"], p["gamma"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return meixner_weight(p.real("alpha"), p.real("gamma"), ctx);
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return meixner_norm(p.real("alpha"), p.real("gamma"), n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum& eps, const PrecisionContext& ctx) {
    return EigenSystem{meixner_operator(p["alpha"], p["gamma"], eps, ctx), meixner_eigenvalue(eps, ctx)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    return real_above(p, "alpha", -ctx.ratio(1, 2)) && p["gamma"].is_real() ? "" : clause;
  };
  return f;
}

inline FamilySpec generalized_hermite() {
  FamilySpec f;
  f.id = FamilyId::generalized_hermite;
  f.role = Role::scheme;
  f.title = "Generalized Hermite";
  f.parameters = {"alpha"};
  f.admissible_region = "alpha > -1/2";
  f.anchor = "Generalized Hermite";
  f.row = 1;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return meixner_recurrence(p["alpha"], CNum(ctx.zero()), n, ctx);
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return meixner_closed_form(p["alpha"], CNum(ctx.zero()), n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    const Real e = 2 * p.real("alpha");
    Density left = [e](const Real& x, const Real&, const Real& dhi) { return pow(dhi, e) * exp(-x * x); };
    Density right = [e](const Real& x, const Real& dlo, const Real&) { return pow(dlo, e) * exp(-x * x); };
    WeightComponent lo = half_line(false, Decay::gaussian, std::move(left), ctx);
    lo.hi_exponent = e;
    WeightComponent hi = half_line(true, Decay::gaussian, std::move(right), ctx);
    hi.lo_exponent = e;
    WeightSpec w;
    w.components = {std::move(lo), std::move(hi)};
    w.description = "|x|^(2 alpha) exp(-x^2) on the real line";
    return w;
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return meixner_norm(p.real("alpha"), ctx.zero(), n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum& eps, const PrecisionContext& ctx) {
    const CNum& al = p["alpha"];
    const Polynomial X = x(ctx);
    RationalFunction S = rational(constant(num(ctx, -1, 4)));
    RationalFunction U = add({rational(X / num(ctx, 2)), over_power(constant(-al), num(ctx, 2), 1, ctx)}, ctx);
    RationalFunction V = add({over_power(constant(al), num(ctx, 4), 2, ctx), rational(constant(eps / 2 - num(ctx, 1, 4)))}, ctx);
    return EigenSystem{sutv_operator(std::move(S), std::nullopt, std::move(U), std::move(V), ctx),
                       meixner_eigenvalue(eps, ctx)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    return real_above(p, "alpha", -ctx.ratio(1, 2)) ? "" : clause;
  };
  return f;
}

inline FamilySpec hermite() {
  FamilySpec f;
  f.id = FamilyId::hermite;
  f.role = Role::scheme;
  f.title = "Hermite";
  f.parameters = {};
  f.admissible_region = "no parameters";
  f.anchor = "Hermite";
  f.row = 0;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector&, long n, const PrecisionContext& ctx) {
    return RecurrencePair{CNum(ctx.zero()), CNum(ctx.ratio(n, 2)), std::nullopt, std::nullopt};
  };
  f.closed_form = [](const ParameterVector&, long n, const PrecisionContext& ctx) {
    return meixner_closed_form(CNum(ctx.zero()), CNum(ctx.zero()), n, ctx);
  };
  f.weight = [](const ParameterVector&, const PrecisionContext& ctx) {
    WeightComponent line;
    line.lo_exponent = ctx.zero();
    line.hi_exponent = ctx.zero();
    line.lo_decay = Decay::gaussian;
    line.hi_decay = Decay::gaussian;
    line.density = [](const Real& x, const Real&, const Real&) { return exp(-x * x); };
    WeightSpec w;
    w.components = {std::move(line)};
    w.description = "exp(-x^2) on the real line";
    return w;
  };
  f.norm = [](const ParameterVector&, long n, const PrecisionContext& ctx) {
    return meixner_norm(ctx.zero(), ctx.zero(), n, ctx);
  };
  f.eigen = [](const ParameterVector&, const CNum& eps, const PrecisionContext& ctx) {
    RationalFunction S = rational(constant(num(ctx, -1, 4)));
    RationalFunction U = rational(x(ctx) / num(ctx, 2));
    RationalFunction V = rational(constant(eps / 2 - num(ctx, 1, 4)));
    return EigenSystem{sutv_operator(std::move(S), std::nullopt, std::move(U), std::move(V), ctx),
                       meixner_eigenvalue(eps, ctx)};
  };
  f.admissible = [](const ParameterVector&, const PrecisionContext&) -> std::string { return ""; };
  return f;
}

}  // namespace minus_one::families

#endif
