#ifndef MINUS_ONE_JACOBI_HPP
#define MINUS_ONE_JACOBI_HPP

// Big and little -1 Jacobi, Chihara, generalized Gegenbauer, special little
// -1 Jacobi and Gegenbauer.

#include <string>

#include "minus_one/family_kit.hpp"
#include "minus_one/fixtures.hpp"

namespace minus_one::families {

using namespace kit;

// 2F1(-m, a; c; z(x)); the empty series for m < 0.
inline Polynomial gauss(long m, const CNum& a, const CNum& c, const Polynomial& z, const PrecisionContext& ctx) {
  if (m < 0) return Polynomial();
  return hyp({constant(CNum(ctx.integer(-m))), constant(a)}, {c}, z);
}

inline CNum half_of(const CNum& v) { return v / 2; }

// ---- big -1 Jacobi

inline RecurrencePair big_jacobi_recurrence(const CNum& al, const CNum& be, const CNum& c, long n,
                                            const PrecisionContext& ctx) {
  auto A = [&](long k) {
    CNum num = even(k) ? (c + 1) * (al + (k + 1)) : (1 - c) * (al + be + (k + 1));
    return checked_div(num, al + be + (2 * k + 2), ctx, "big -1 Jacobi A_n");
  };
  auto C = [&](long k) {
    if (k == 0) return CNum(ctx.zero());
    CNum num = even(k) ? (1 - c) * k : (c + 1) * (be + k);
    return checked_div(num, al + be + 2 * k, ctx, "big -1 Jacobi C_n");
  };
  return from_ac(n, A, C, ctx);
}

inline Polynomial big_jacobi_closed_form(const CNum& al, const CNum& be, const CNum& c, long n,
                                         const PrecisionContext& ctx) {
  const CNum one = num(ctx, 1);
  const CNum w = one - c * c;
  const Polynomial z = (constant(one) - x(ctx) * x(ctx)) / w;
  const Polynomial one_minus_x = constant(one) - x(ctx);
  const long m = n / 2;
  const CNum top = half_of(al + be + (2 * m + 2));
  const CNum lower = half_of(al + 1), upper = half_of(al + 3);
  const CNum scale = checked_div(one, (c + 1) * (al + 1), ctx, "big -1 Jacobi");
  if (even(n)) {
    CNum eta = pow(w, m) * checked_div(pochhammer(lower, m), pochhammer(top, m), ctx, "big -1 Jacobi");
    Polynomial p = gauss(m, top, lower, z, ctx);
    if (m > 0) p += one_minus_x * gauss(m - 1, top, upper, z, ctx) * (scale * (2 * m));
    return p * eta;
  }
  CNum eta = (c + 1) * pow(w, m) * checked_div(pochhammer(lower, m + 1), pochhammer(top, m + 1), ctx, "big -1 Jacobi");
  Polynomial p = gauss(m, top, lower, z, ctx) -
                 one_minus_x * gauss(m, top + 1, upper, z, ctx) * (scale * (al + be + (2 * m + 2)));
  return p * eta;
}

// Weight pieces in terms of endpoint distances on [-1, -c] and [c, 1].
inline WeightSpec big_jacobi_weight(const Real& al, const Real& be, const Real& c, const PrecisionContext& ctx) {
  const Real ea = (al - 1) / 2, eb = (be + 1) / 2;
  Density left = [ea, eb, c](const Real& x, const Real& dlo, const Real& dhi) {
    return dlo / dhi * pow(dlo * (1 - x), ea) * pow(dhi * (c - x), eb);
  };
  Density right = [ea, eb, c](const Real& x, const Real& dlo, const Real& dhi) {
    return (1 + x) / (c + x) * pow(dhi * (1 + x), ea) * pow(dlo * (x + c), eb);
  };
  WeightSpec w;
  w.components = {interval(ctx.integer(-1), -c, (al + 1) / 2, (be - 1) / 2, left),
                  interval(c, ctx.integer(1), eb, ea, right)};
  w.description = "sgn(x) (1+x)/(c+x) (1-x^2)^((alpha-1)/2) (x^2-c^2)^((beta+1)/2) on [-1,-c] U [c,1]";
  return w;
}

// m! ((alpha+1)/2)_j ((beta+1)/2)_j / ((1+s)_n (m+1+s)_j), s = (alpha+beta)/2, j = n - m
inline Real jacobi_kappa(const Real& al, const Real& be, long n, const PrecisionContext& ctx) {
  const long m = n / 2, j = n - m;
  const Real s = (al + be) / 2;
  return gamma(ctx.integer(m + 1), ctx) * pochhammer((al + 1) / 2, j) * pochhammer((be + 1) / 2, j) /
         (pochhammer(s + 1, n) * pochhammer(s + (m + 1), j));
}

inline Real big_jacobi_norm(const Real& al, const Real& be, const Real& c, long n, const PrecisionContext& ctx) {
  const Real w = 1 - c * c;
  const Real pref = (1 - c) * pow(w, (al + be) / 2) * gamma((al + 1) / 2, ctx) * gamma((be + 1) / 2, ctx) /
                    gamma(al / 2 + be / 2 + 1, ctx);
  Real kappa = jacobi_kappa(al, be, n, ctx) * pow(w, 2 * (n / 2));
  if (!even(n)) kappa *= (1 + c) * (1 + c);
  return pref * kappa;
}

// F (I - R) + G dxR with dxR f = d/dx[f(-x)]; the bracket reads R - I when dxR f = f'(-x) and G flips.
inline DunklOperator reflection_first_order(RationalFunction f, RationalFunction g, const PrecisionContext& ctx) {
  std::vector<DunklTerm> terms{{negate(f), Symbol::reflection}, {f, Symbol::identity}, {std::move(g), Symbol::derivative_reflection}};
  return DunklOperator(std::move(terms), CNum(ctx.integer(1)));
}

// -2n for even n, 2(n + shift) for odd n.
inline std::function<CNum(long)> jacobi_eigenvalue(const CNum& odd_shift, const PrecisionContext& ctx) {
  return [odd_shift, ctx](long n) { return even(n) ? CNum(ctx.integer(-2 * n)) : (odd_shift + n) * 2; };
}

inline FamilySpec big_minus1_jacobi() {
  FamilySpec f;
  f.id = FamilyId::big_minus1_jacobi;
  f.role = Role::scheme;
  f.title = "Big -1 Jacobi";
  f.parameters = {"alpha", "beta", "c"};
  f.admissible_region = "alpha > 0, beta > 0, 0 <= c < 1";
  f.anchor = "Big -1 Jacobi";
  f.row = 3;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return big_jacobi_recurrence(p["alpha"], p["beta"], p["c"], n, ctx);
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return big_jacobi_closed_form(p["alpha"], p["beta"], p["c"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return big_jacobi_weight(p.real("alpha"), p.real("beta"), p.real("c"), ctx);
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return big_jacobi_norm(p.real("alpha"), p.real("beta"), p.real("c"), n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum&, const PrecisionContext& ctx) {
    const CNum &al = p["alpha"], &be = p["beta"], &c = p["c"];
    const Polynomial X = x(ctx);
    RationalFunction F = over_power(X * X * (al + be + 1) + X * (c * al - be) + c, num(ctx, 1), 2, ctx);
    RationalFunction G = over_power((constant(num(ctx, 1)) - X) * (X + c) * num(ctx, 2), num(ctx, 1), 1, ctx);
    return EigenSystem{reflection_first_order(F, G, ctx), jacobi_eigenvalue(al + be + 1, ctx)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    bool ok = positive(p, "alpha") && positive(p, "beta") && p["c"].is_real() && p["c"].re.sign() >= 0 &&
              p["c"].re < ctx.integer(1);
    return ok ? "" : clause;
  };
  return f;
}

// ---- Chihara and generalized Gegenbauer

inline CNum chihara_sigma(const CNum& al, const CNum& be, long n, const PrecisionContext& ctx) {
  if (n == 0) return CNum(ctx.zero());
  const long m = n / 2;
  const CNum s = al + be;
  if (even(n)) return checked_div((be + m) * m, (s + 2 * m) * (s + (2 * m + 1)), ctx, "Chihara sigma_n");
  return checked_div((al + (m + 1)) * (s + (m + 1)), (s + (2 * m + 1)) * (s + (2 * m + 2)), ctx, "Chihara sigma_n");
}

inline Polynomial chihara_closed_form(const CNum& al, const CNum& be, const CNum& ga, long n,
                                      const PrecisionContext& ctx) {
  const long m = n / 2;
  const Polynomial z = x_squared_minus(ctx, ga * ga);
  const CNum sign(ctx.integer(m % 2 == 0 ? 1 : -1));
  if (even(n)) {
    CNum k = sign * checked_div(pochhammer(al + 1, m), pochhammer(al + be + (m + 1), m), ctx, "Chihara");
    return gauss(m, al + be + (m + 1), al + 1, z, ctx) * k;
  }
  CNum k = sign * checked_div(pochhammer(al + 2, m), pochhammer(al + be + (m + 2), m), ctx, "Chihara");
  return (x(ctx) - ga) * gauss(m, al + be + (m + 2), al + 2, z, ctx) * k;
}

inline Real chihara_norm(const Real& al, const Real& be, long n, const PrecisionContext& ctx) {
  const long m = n / 2;
  const long j = even(n) ? 1 : 2;
  const Real top = al + be + (m + j);
  const Real poch = pochhammer(top, m);
  return gamma(al + (m + j), ctx) * gamma(be + (m + 1), ctx) / gamma(al + be + (m + j), ctx) *
         gamma(ctx.integer(m + 1), ctx) / ((al + be + (2 * m + j)) * poch * poch);
}

// sgn(x) (x + gamma) (x^2 - gamma^2)^alpha (1 + gamma^2 - x^2)^beta on both components.
inline WeightSpec chihara_weight(const Real& al, const Real& be, const Real& ga, const PrecisionContext&) {
  const Real g = abs(ga), r = sqrt(1 + ga * ga);
  const bool up = ga.sign() >= 0;
  Density left = [al, be, g, r, up](const Real& x, const Real& dlo, const Real& dhi) {
    Real lin = up ? dhi : g - x;
    return lin * pow(dhi * (g - x), al) * pow(dlo * (r - x), be);
  };
  Density right = [al, be, g, r, up](const Real& x, const Real& dlo, const Real& dhi) {
    Real lin = up ? x + g : dlo;
    return lin * pow(dlo * (x + g), al) * pow(dhi * (r + x), be);
  };
  WeightSpec w;
  w.components = {interval(-r, -g, be, up ? al + 1 : al, left), interval(g, r, up ? al : al + 1, be, right)};
  w.description = "sgn(x) (x+gamma) (x^2-gamma^2)^alpha (1+gamma^2-x^2)^beta on [-r,-|gamma|] U [|gamma|,r]";
  return w;
}

inline std::function<CNum(long)> chihara_eigenvalue(const CNum& s, const CNum& eps) {
  return [s, eps](long n) {
    const long m = n / 2;
    CNum base = s * m + m * m;
    return even(n) ? base + m : base + 2 * m + eps;
  };
}

inline DunklOperator chihara_operator(const CNum& al, const CNum& be, const CNum& ga, const CNum& eps,
                                      const PrecisionContext& ctx) {
  const Polynomial X = x(ctx), X2 = X * X;
  const CNum g2 = ga * ga, big = al + be + num(ctx, 3, 2), small = al + num(ctx, 1, 2);
  const CNum four = num(ctx, 4), two = num(ctx, 2);
  const Polynomial q1 = X2 - g2 - num(ctx, 1);  // x^2 - gamma^2 - 1
  const Polynomial q0 = X2 - g2;                // x^2 - gamma^2
  RationalFunction S = over_power(q0 * q1, four, 2, ctx);
  RationalFunction T = over_power((X - ga) * q1 * ga, four, 3, ctx);
  RationalFunction U = add({over_power(q1 * (constant(ga * 2) - X) * ga, four, 3, ctx),
                            over_power(q0 * big, two, 1, ctx), over_power(constant(-small), two, 1, ctx)},
                           ctx);
  RationalFunction V = add({over_power(q1 * (X - ga * num(ctx, 3, 2)) * ga, four, 4, ctx),
                            over_power(q0 * (-big), four, 2, ctx), over_power(constant(small), four, 2, ctx),
                            over_power((X - ga) * eps, two, 1, ctx)},
                           ctx);
  return sutv_operator(std::move(S), std::move(T), std::move(U), std::move(V), ctx);
}

inline FamilySpec chihara() {
  FamilySpec f;
  f.id = FamilyId::chihara;
  f.role = Role::scheme;
  f.title = "Chihara";
  f.parameters = {"alpha", "beta", "gamma"};
  f.admissible_region = "alpha > -1, beta > 0, gamma real";
  f.anchor = "Chihara";
  f.row = 3;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum& ga = p["gamma"];
    return RecurrencePair{even(n) ? ga : -ga, chihara_sigma(p["alpha"], p["beta"], n, ctx), std::nullopt,
                          std::nullopt};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return chihara_closed_form(p["alpha"], p["beta"], p["gamma"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return chihara_weight(p.real("alpha"), p.real("beta"), p.real("gamma"), ctx);
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return chihara_norm(p.real("alpha"), p.real("beta"), n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum& eps, const PrecisionContext& ctx) {
    return EigenSystem{chihara_operator(p["alpha"], p["beta"], p["gamma"], eps, ctx),
                       chihara_eigenvalue(p["alpha"] + p["beta"], eps)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    bool ok = real_above(p, "alpha", ctx.integer(-1)) && positive(p, "beta") && p["gamma"].is_real();
    return ok ? "" : clause;
  };
  return f;
}

inline WeightSpec generalized_gegenbauer_weight(const Real& al, const Real& be, const PrecisionContext& ctx) {
  const Real e = 2 * al + 1;
  Density left = [e, be](const Real& x, const Real& dlo, const Real& dhi) { return pow(dhi, e) * pow(dlo * (1 - x), be); };
  Density right = [e, be](const Real& x, const Real& dlo, const Real& dhi) { return pow(dlo, e) * pow(dhi * (1 + x), be); };
  WeightSpec w;
  w.components = {interval(ctx.integer(-1), ctx.zero(), be, e, left), interval(ctx.zero(), ctx.integer(1), e, be, right)};
  w.description = "|x|^(2 alpha + 1) (1-x^2)^beta on [-1,1]";
  return w;
}

inline FamilySpec generalized_gegenbauer() {
  FamilySpec f;
  f.id = FamilyId::generalized_gegenbauer;
  f.role = Role::scheme;
  f.title = "Generalized Gegenbauer";
  f.parameters = {"alpha", "beta"};
  f.admissible_region = "alpha > -1, beta > 0";
  f.anchor = "Generalized Gegenbauer";
  f.row = 2;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return RecurrencePair{CNum(ctx.zero()), chihara_sigma(p["alpha"], p["beta"], n, ctx), std::nullopt, std::nullopt};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return chihara_closed_form(p["alpha"], p["beta"], CNum(ctx.zero()), n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return generalized_gegenbauer_weight(p.real("alpha"), p.real("beta"), ctx);
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return chihara_norm(p.real("alpha"), p.real("beta"), n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum& eps, const PrecisionContext& ctx) {
    const CNum &al = p["alpha"], &be = p["beta"];
    const Polynomial X = x(ctx);
    const CNum big = al + be + num(ctx, 3, 2), small = al + num(ctx, 1, 2);
    RationalFunction S = rational((X * X - num(ctx, 1)) / num(ctx, 4));
    RationalFunction U = add({rational(X * big / num(ctx, 2)), over_power(constant(-small), num(ctx, 2), 1, ctx)}, ctx);
    RationalFunction V =
        add({rational(constant(-big / 4 + eps / 2)), over_power(constant(small), num(ctx, 4), 2, ctx)}, ctx);
    return EigenSystem{sutv_operator(std::move(S), std::nullopt, std::move(U), std::move(V), ctx),
                       chihara_eigenvalue(al + be, eps)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    return real_above(p, "alpha", ctx.integer(-1)) && positive(p, "beta") ? "" : clause;
  };
  return f;
}

// ---- little -1 Jacobi

inline RecurrencePair little_jacobi_recurrence(const CNum& al, const CNum& be, long n, const PrecisionContext& ctx) {
  auto A = [&](long k) {
    CNum num = even(k) ? be + (k + 1) : al + be + (k + 1);
    return checked_div(num, al + be + (2 * k + 2), ctx, "little -1 Jacobi A_n");
  };
  auto C = [&](long k) {
    if (k == 0) return CNum(ctx.zero());
    CNum num = even(k) ? CNum(ctx.integer(k)) : al + k;
    return checked_div(num, al + be + 2 * k, ctx, "little -1 Jacobi C_n");
  };
  return from_ac(n, A, C, ctx);
}

inline Polynomial little_jacobi_closed_form(const CNum& al, const CNum& be, long n, const PrecisionContext& ctx) {
  const Polynomial X = x(ctx), z = X * X;
  const long m = n / 2;
  const CNum top = half_of(al + be + (2 * m + 2));
  const CNum lower = half_of(al + 1), upper = half_of(al + 3);
  const CNum scale = checked_div(num(ctx, 1), al + 1, ctx, "little -1 Jacobi");
  if (even(n)) {
    CNum eta = checked_div(pochhammer(lower, m), pochhammer(top, m), ctx, "little -1 Jacobi");
    Polynomial p = gauss(m, top, lower, z, ctx);
    if (m > 0) p += X * gauss(m - 1, top, upper, z, ctx) * (scale * (2 * m));
    return p * eta;
  }
  CNum eta = checked_div(pochhammer(lower, m + 1), pochhammer(top, m + 1), ctx, "little -1 Jacobi");
  Polynomial p = gauss(m, top, lower, z, ctx) - X * gauss(m, top + 1, upper, z, ctx) * (scale * (al + be + (2 * m + 2)));
  return p * eta;
}

inline FamilySpec little_minus1_jacobi() {
  FamilySpec f;
  f.id = FamilyId::little_minus1_jacobi;
  f.role = Role::scheme;
  f.title = "Little -1 Jacobi";
  f.parameters = {"alpha", "beta"};
  f.admissible_region = "alpha > 0, beta > 0";
  f.anchor = "Little -1 Jacobi";
  f.row = 2;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return little_jacobi_recurrence(p["alpha"], p["beta"], n, ctx);
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return little_jacobi_closed_form(p["alpha"], p["beta"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    const Real al = p.real("alpha"), e = (p.real("beta") - 1) / 2;
    Density left = [al, e](const Real& x, const Real& dlo, const Real& dhi) {
      return pow(dhi, al) * pow(dlo * (1 - x), e) * dlo;
    };
    Density right = [al, e](const Real& x, const Real& dlo, const Real& dhi) {
      return pow(dlo, al) * pow(dhi * (1 + x), e) * (1 + x);
    };
    WeightSpec w;
    w.components = {interval(ctx.integer(-1), ctx.zero(), e + 1, al, left),
                    interval(ctx.zero(), ctx.integer(1), al, e, right)};
    w.description = "|x|^alpha (1-x^2)^((beta-1)/2) (1+x) on [-1,1]";
    return w;
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real al = p.real("alpha"), be = p.real("beta");
    return gamma((al + 1) / 2, ctx) * gamma((be + 1) / 2, ctx) / gamma(al / 2 + be / 2 + 1, ctx) *
           jacobi_kappa(al, be, n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum&, const PrecisionContext& ctx) {
    const CNum &al = p["alpha"], &be = p["beta"];
    const Polynomial X = x(ctx);
    RationalFunction F = over_power(X * X * (al + be + 1) - X * al, num(ctx, 1), 2, ctx);
    RationalFunction G = rational((constant(num(ctx, 1)) - X) * num(ctx, 2));
    return EigenSystem{reflection_first_order(F, G, ctx), jacobi_eigenvalue(al + be + 1, ctx)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext&) -> std::string {
    return positive(p, "alpha") && positive(p, "beta") ? "" : clause;
  };
  return f;
}

// ---- special little -1 Jacobi

inline Polynomial special_jacobi_closed_form(const CNum& al, long n, const PrecisionContext& ctx) {
  const Polynomial X = x(ctx), z = X * X;
  const long m = n / 2;
  const CNum half = num(ctx, 1, 2), three_halves = num(ctx, 3, 2);
  const CNum top = half_of(al + (2 * m + 2));
  if (even(n)) {
    CNum k = checked_div(pochhammer(half, m), pochhammer(top, m), ctx, "special little -1 Jacobi");
    Polynomial p = gauss(m, top, half, z, ctx);
    if (m > 0) p += X * gauss(m - 1, top, three_halves, z, ctx) * CNum(ctx.integer(2 * m));
    return p * k;
  }
  CNum k = checked_div(pochhammer(half, m + 1), pochhammer(top, m + 1), ctx, "special little -1 Jacobi");
  Polynomial p = gauss(m, top, half, z, ctx) - X * gauss(m, top + 1, three_halves, z, ctx) * (al + (2 * m + 2));
  return p * k;
}

inline FamilySpec special_little_minus1_jacobi() {
  FamilySpec f;
  f.id = FamilyId::special_little_minus1_jacobi;
  f.role = Role::scheme;
  f.title = "Special Little -1 Jacobi";
  f.parameters = {"alpha"};
  f.admissible_region = "alpha > 0";
  f.anchor = "Special Little -1 Jacobi";
  f.row = 1;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum& al = p["alpha"];
    auto A = [&](long k) { return checked_div(al + (k + 1), al + (2 * k + 2), ctx, "special little -1 Jacobi A_n"); };
    auto C = [&](long k) {
      if (k == 0) return CNum(ctx.zero());
      return checked_div(CNum(ctx.integer(k)), al + 2 * k, ctx, "special little -1 Jacobi C_n");
    };
    return from_ac(n, A, C, ctx);
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return special_jacobi_closed_form(p["alpha"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    const Real e = (p.real("alpha") - 1) / 2;
    Density d = [e](const Real&, const Real& dlo, const Real& dhi) { return pow(dlo * dhi, e) * dlo; };
    WeightSpec w;
    w.components = {interval(ctx.integer(-1), ctx.integer(1), e + 1, e, d)};
    w.description = "(1-x^2)^((alpha-1)/2) (1+x) on [-1,1]";
    return w;
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real al = p.real("alpha");
    const Real g = gamma(al / 2 + (n + 1), ctx);
    return sqrt(ctx.pi()) * gamma((al + 1) / 2, ctx) / pow(ctx.integer(4), n) * gamma(ctx.integer(n + 1), ctx) *
           gamma(al + (n + 1), ctx) / (g * g) * gamma(al / 2 + 1, ctx) / gamma(al + 1, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum&, const PrecisionContext& ctx) {
    const CNum& al = p["alpha"];
    RationalFunction F = rational(constant(al + 1));
    RationalFunction G = rational((constant(num(ctx, 1)) - x(ctx)) * num(ctx, 2));
    return EigenSystem{reflection_first_order(F, G, ctx), jacobi_eigenvalue(al + 1, ctx)};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext&) -> std::string {
    return positive(p, "alpha") ? "" : clause;
  };
  return f;
}

// ---- Gegenbauer

inline FamilySpec gegenbauer() {
  FamilySpec f;
  f.id = FamilyId::gegenbauer;
  f.role = Role::scheme;
  f.title = "Gegenbauer";
  f.parameters = {"alpha"};
  f.admissible_region = "alpha > -1/2, alpha != 0";
  f.anchor = "Gegenbauer";
  f.row = 1;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum& al = p["alpha"];
    CNum u = n == 0 ? CNum(ctx.zero())
                    : checked_div((al * 2 + (n - 1)) * n, (al * 2 + (2 * n - 2)) * (al * 2 + 2 * n), ctx,
                                  "Gegenbauer u_n");
    return RecurrencePair{CNum(ctx.zero()), std::move(u), std::nullopt, std::nullopt};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum& al = p["alpha"];
    const Polynomial X = x(ctx), z = X * X;
    const long m = n / 2;
    const CNum sign(ctx.integer(m % 2 == 0 ? 1 : -1));
    if (even(n)) {
      CNum k = sign * checked_div(pochhammer(num(ctx, 1, 2), m), pochhammer(al + m, m), ctx, "Gegenbauer");
      return gauss(m, al + m, num(ctx, 1, 2), z, ctx) * k;
    }
    CNum k = sign * checked_div(pochhammer(num(ctx, 3, 2), m), pochhammer(al + (m + 1), m), ctx, "Gegenbauer");
    return X * gauss(m, al + (m + 1), num(ctx, 3, 2), z, ctx) * k;
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    const Real e = p.real("alpha") - ctx.ratio(1, 2);
    Density d = [e](const Real&, const Real& dlo, const Real& dhi) { return pow(dlo * dhi, e); };
    WeightSpec w;
    w.components = {interval(ctx.integer(-1), ctx.integer(1), e, e, d)};
    w.description = "(1-x^2)^(alpha-1/2) on [-1,1]";
    return w;
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real al = p.real("alpha");
    const long m = n / 2;
    const long j = even(n) ? 0 : 1;
    const Real poch = pochhammer(al + (m + j), m);
    return gamma(ctx.ratio(2 * (m + j) + 1, 2), ctx) * gamma(al + m + ctx.ratio(1, 2), ctx) / gamma(al + (m + j), ctx) *
           gamma(ctx.integer(m + 1), ctx) / ((al + (2 * m + j)) * poch * poch);
  };
  f.eigen = [](const ParameterVector& p, const CNum& eps, const PrecisionContext& ctx) {
    const CNum& al = p["alpha"];
    const Polynomial X = x(ctx);
    const CNum small = al + num(ctx, 1, 2);
    RationalFunction S = rational((X * X - num(ctx, 1)) / num(ctx, 4));
    RationalFunction U = rational(X * small / num(ctx, 2));
    RationalFunction V = rational(constant(-small / 4 + eps / 2));
    return EigenSystem{sutv_operator(std::move(S), std::nullopt, std::move(U), std::move(V), ctx),
                       [al, eps](long n) {
                         const long m = n / 2;
                         CNum base = al * m + m * m;
                         return even(n) ? base : base + m + eps;
                       }};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    return real_above(p, "alpha", -ctx.ratio(1, 2)) && !p["alpha"].is_zero() ? "" : clause;
  };
  return f;
}

}  // namespace minus_one::families

#endif
