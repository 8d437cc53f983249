#ifndef MINUS_ONE_BANNAI_ITO_HPP
#define MINUS_ONE_BANNAI_ITO_HPP

// Continuous Bannai-Ito, the two continuous -1 Hahn types, generalized and
// plain symmetric Bannai-Ito, and the complementary quasi-family.

#include <string>
#include <vector>

#include "minus_one/auxiliary.hpp"
#include "minus_one/fixtures.hpp"

namespace minus_one::families {

using namespace kit;

// Bannai-Ito type parameters a = d* = alpha + i beta, b = c* = gamma + i delta.
struct BannaiItoParameters {
  CNum a, b, c, d;
};

inline BannaiItoParameters bannai_ito_parameters(const Real& alpha, const Real& beta, const Real& gamma,
                                                 const Real& delta) {
  return {CNum(alpha, beta), CNum(gamma, delta), CNum(gamma, -delta), CNum(alpha, -beta)};
}

// Two-block 4F3 representation in the complex parameters; not normalized.
inline Polynomial cbi_closed_form(long n, const BannaiItoParameters& q, const PrecisionContext& ctx) {
  const CNum i = imag(ctx), half = num(ctx, 1, 2), one = num(ctx, 1);
  const CNum &fa = q.a, &fb = q.b, &fc = q.c, &fd = q.d;
  const CNum g = fa + fb + fc + fd + 1;
  auto kappa1 = [&](long m) {
    return checked_div(pochhammer(half * 3 + fa + fb, m) * pochhammer(fb + fc + 1, m) * pochhammer(fb + fd + 1, m),
                       pochhammer(g + (m + 1), m), ctx, "continuous Bannai-Ito kappa1");
  };
  auto kappa2 = [&](long m) {
    return checked_div(pochhammer(half * 5 + fa + fb, m) * pochhammer(fb + fc + 2, m) * pochhammer(fb + fd + 2, m),
                       pochhammer(g + (m + 2), m), ctx, "continuous Bannai-Ito kappa2");
  };
  const Polynomial lin = linear(-fb - half, i * half);
  auto block2 = [&](long m) {
    return hyp({constant(CNum(ctx.integer(-m))), constant(g + (m + 2)), linear(fb + 1, i * half),
                linear(fb + half * 3, -(i * half))},
               {half * 5 + fa + fb, fb + fc + 2, fb + fd + 2}, constant(one));
  };
  auto block1 = [&](long m) {
    return hyp({constant(CNum(ctx.integer(-m))), constant(g + (m + 1)), linear(fb, i * half),
                linear(fb + half, -(i * half))},
               {half * 3 + fa + fb, fb + fc + 1, fb + fd + 1}, constant(one));
  };
  const long m = n / 2;
  Polynomial p;
  if (even(n)) {
    p = block1(m) * kappa1(m);
    if (m > 0) {
      CNum xi = checked_div(CNum(ctx.integer(m)) * (fc + fd + half + m), g + 2 * m, ctx, "continuous Bannai-Ito xi");
      p += lin * block2(m - 1) * (xi * kappa2(m - 1));
    }
  } else {
    CNum eta = checked_div((fb + fc + (m + 1)) * (fb + fd + (m + 1)), g + (2 * m + 1), ctx, "continuous Bannai-Ito eta");
    p = lin * block2(m) * kappa2(m) + block1(m) * (eta * kappa1(m));
  }
  return p * pow(CNum(ctx.zero(), ctx.integer(-2)), n);
}

inline RecurrencePair cbi_recurrence(const Real& al, const Real& be, const Real& ga, const Real& de, long n,
                                     const PrecisionContext& ctx) {
  const Real s = 2 * al + 2 * ga;
  auto div = [&](const Real& a, const Real& b) { return checked_div(CNum(a), CNum(b), ctx, "continuous Bannai-Ito").re; };
  Real b, u;
  if (even(n)) {
    b = 2 * be - div((n + 4 * al + 2) * (be - de), n + s + 2) - div(n * (be + de), n + s + 1);
    u = div(n * (n + 2 * s + 2) * abs2(CNum(n + s + 1, 2 * (be + de))), 4 * (n + s + 1) * (n + s + 1));
  } else {
    b = 2 * be - div((n + 2 * s + 3) * (be + de), n + s + 2) - div((n + 4 * ga + 1) * (be - de), n + s + 1);
    u = div((n + 4 * al + 1) * (n + 4 * ga + 1) * abs2(CNum(n + s + 1, 2 * (be - de))), 4 * (n + s + 1) * (n + s + 1));
  }
  if (n == 0) u = ctx.zero();
  return RecurrencePair{CNum(b), CNum(u), std::nullopt, std::nullopt};
}

// |Gamma(a + ix/2 + 1) Gamma(b + ix/2 + 1) Gamma(c + ix/2 + 1/2) Gamma(d + ix/2 + 1/2) / Gamma(1/2 + ix)|^2
inline WeightSpec cbi_weight(const BannaiItoParameters& q, const PrecisionContext& ctx) {
  Density density = [q, ctx](const Real& x, const Real&, const Real&) {
    const CNum half(ctx.ratio(1, 2));
    const CNum ix2(ctx.zero(), x / 2), ix(ctx.zero(), x);
    return gamma_modulus_product(
        {{q.a + ix2 + 1, 2}, {q.b + ix2 + 1, 2}, {q.c + ix2 + half, 2}, {q.d + ix2 + half, 2}, {half + ix, -2}}, ctx);
  };
  WeightSpec w;
  w.components = {half_line(false, Decay::gamma_modulus, density, ctx),
                  half_line(true, Decay::gamma_modulus, density, ctx)};
  w.description = "W(x) = |G(a+ix/2+1) G(b+ix/2+1) G(c+ix/2+1/2) G(d+ix/2+1/2) / G(1/2+ix)|^2 on the real line";
  return w;
}

// 4 pi h0 kappa_n
inline Real cbi_norm(const Real& al, const Real& be, const Real& ga, const Real& de, long n,
                     const PrecisionContext& ctx) {
  const BannaiItoParameters q = bannai_ito_parameters(al, be, ga, de);
  const CNum half(ctx.ratio(1, 2));
  CNum h0 = gamma(q.a + q.b + half * 3, ctx) * gamma(q.a + q.c + 1, ctx) * gamma(q.b + q.c + 1, ctx) *
            gamma(q.a + q.d + 1, ctx) * gamma(q.b + q.d + 1, ctx) * gamma(q.c + q.d + half * 3, ctx) /
            gamma(q.a + q.b + q.c + q.d + 2, ctx);
  const long m = n / 2;
  const Real s = 2 * al + 2 * ga;
  Real p1 = ctx.integer(1), p2 = ctx.integer(1);
  const long top1 = even(n) ? m : m + 1;
  for (long k = 1; k <= top1; ++k) p1 *= abs2(CNum(k + al + ga, be - de));
  for (long k = 1; k <= m; ++k) p2 *= abs2(CNum(k + al + ga + ctx.ratio(1, 2), be + de));
  const long j = even(n) ? m : m + 1;
  Real kappa = pow(ctx.integer(4), n) * gamma(ctx.integer(m + 1), ctx) * pochhammer(2 * al + 1, j) *
               pochhammer(2 * ga + 1, j) / (pochhammer(s + 2, n) * pochhammer(s + (m + 2), j)) * p1 * p2;
  return 4 * ctx.pi() * h0.re * kappa;
}

enum class CoefficientForm { corrected, printed };

// L = A (S+R - I) + conj(A) (S-R - I) + (2 alpha + 2 gamma + 3/2) I with shift step i.
inline DunklOperator cbi_operator(const Real& al, const Real& be, const Real& ga, const Real& de,
                                  const PrecisionContext& ctx, CoefficientForm form = CoefficientForm::corrected,
                                  ShiftReflectOrder order = ShiftReflectOrder::reflect_then_shift) {
  const CNum i = imag(ctx);
  const long k = form == CoefficientForm::corrected ? 2 : 1;
  Polynomial top = linear(CNum(2 * al + 1, k * be), -i) * linear(CNum(2 * ga + 1, k * de), -i);
  RationalFunction a(top, linear(num(ctx, 1), i * -2));
  RationalFunction a_bar = conj(a);
  const CNum c(2 * al + 2 * ga + ctx.ratio(3, 2));
  std::vector<DunklTerm> terms{{a, Symbol::shift_plus_reflection},
                               {a_bar, Symbol::shift_minus_reflection},
                               {negate(a), Symbol::identity},
                               {negate(a_bar), Symbol::identity},
                               {rational(constant(c)), Symbol::identity}};
  return DunklOperator(std::move(terms), i, order);
}

inline EigenSystem cbi_eigen(const Real& al, const Real& be, const Real& ga, const Real& de,
                             const PrecisionContext& ctx) {
  const Real shift = 2 * al + 2 * ga + ctx.ratio(3, 2);
  return EigenSystem{cbi_operator(al, be, ga, de, ctx),
                     [shift](long n) { return CNum(even(n) ? n + shift : -(n + shift)); }};
}

inline std::string all_positive(const ParameterVector& p, const std::vector<std::string>& names,
                                std::string_view clause) {
  for (const auto& n : names) {
    if (!positive(p, n)) return std::string(clause);
  }
  return "";
}

inline FamilySpec continuous_bannai_ito() {
  FamilySpec f;
  f.id = FamilyId::continuous_bannai_ito;
  f.role = Role::scheme;
  f.title = "Continuous Bannai-Ito";
  f.parameters = {"alpha", "beta", "gamma", "delta"};
  f.admissible_region = "alpha, beta, gamma, delta real and positive";
  f.anchor = "Continuous Bannai-Ito";
  f.row = 4;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return cbi_recurrence(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta"), n, ctx);
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return cbi_closed_form(n, bannai_ito_parameters(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta")),
                           ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return cbi_weight(bannai_ito_parameters(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta")), ctx);
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return cbi_norm(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta"), n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum&, const PrecisionContext& ctx) {
    return cbi_eigen(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta"), ctx);
  };
  f.admissible = [names = f.parameters, clause = f.admissible_region](const ParameterVector& p,
                                                                      const PrecisionContext&) {
    return all_positive(p, names, clause);
  };
  return f;
}

// Type 1 sets delta = beta, type 2 sets delta = -beta.
inline RecurrencePair hahn_recurrence(int type, const Real& al, const Real& be, const Real& ga, long n,
                                      const PrecisionContext& ctx) {
  const Real s = 2 * al + 2 * ga;
  auto div = [&](const Real& a, const Real& b) { return checked_div(CNum(a), CNum(b), ctx, "continuous -1 Hahn").re; };
  const Real wide = abs2(CNum(n + s + 1, 4 * be));
  const Real narrow = (n + s + 1) * (n + s + 1);
  const Real den = 4 * (n + s + 1) * (n + s + 1);
  Real b, u;
  if (even(n)) {
    b = type == 1 ? 2 * be - div(2 * be * n, n + s + 1) : 2 * be - div(2 * be * (n + 4 * al + 2), n + s + 2);
    u = div(n * (n + 2 * s + 2) * (type == 1 ? wide : narrow), den);
  } else {
    b = type == 1 ? 2 * be - div(2 * be * (n + 2 * s + 3), n + s + 2) : 2 * be - div(2 * be * (n + 4 * ga + 1), n + s + 1);
    u = div((n + 4 * al + 1) * (n + 4 * ga + 1) * (type == 1 ? narrow : wide), den);
  }
  if (n == 0) u = ctx.zero();
  return RecurrencePair{CNum(b), CNum(u), std::nullopt, std::nullopt};
}

inline FamilySpec continuous_minus1_hahn(int type) {
  FamilySpec f;
  f.id = type == 1 ? FamilyId::continuous_minus1_hahn_1 : FamilyId::continuous_minus1_hahn_2;
  f.role = Role::scheme;
  f.title = type == 1 ? "Continuous -1 Hahn type 1" : "Continuous -1 Hahn type 2";
  f.parameters = {"alpha", "beta", "gamma"};
  f.admissible_region = "alpha, beta, gamma real and positive";
  f.anchor = f.title;
  f.row = 3;
  f.fixtures = fixture_points(f.id);
  const int sign = type == 1 ? 1 : -1;
  f.recurrence = [type](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return hahn_recurrence(type, p.real("alpha"), p.real("beta"), p.real("gamma"), n, ctx);
  };
  f.closed_form = [sign](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real be = p.real("beta");
    return cbi_closed_form(n, bannai_ito_parameters(p.real("alpha"), be, p.real("gamma"), be * sign), ctx);
  };
  f.weight = [sign](const ParameterVector& p, const PrecisionContext& ctx) {
    const Real be = p.real("beta");
    return cbi_weight(bannai_ito_parameters(p.real("alpha"), be, p.real("gamma"), be * sign), ctx);
  };
  f.norm = [sign](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real be = p.real("beta");
    return cbi_norm(p.real("alpha"), be, p.real("gamma"), be * sign, n, ctx);
  };
  f.eigen = [sign](const ParameterVector& p, const CNum&, const PrecisionContext& ctx) {
    const Real be = p.real("beta");
    return cbi_eigen(p.real("alpha"), be, p.real("gamma"), be * sign, ctx);
  };
  f.admissible = [names = f.parameters, clause = f.admissible_region](const ParameterVector& p,
                                                                      const PrecisionContext&) {
    return all_positive(p, names, clause);
  };
  return f;
}

// Non-real entries must pair off with their conjugates.
inline bool conjugate_pairs(std::vector<CNum> v, const PrecisionContext& ctx) {
  const Real tol = ctx.tolerance(4);
  while (!v.empty()) {
    CNum z = v.back();
    v.pop_back();
    if (abs(z.im) <= tol) continue;
    auto it = std::find_if(v.begin(), v.end(), [&](const CNum& w) { return abs(w - conj(z)) <= tol; });
    if (it == v.end()) return false;
    v.erase(it);
  }
  return true;
}

inline CNum gsbi_tau(const CNum& a, const CNum& b, const CNum& c, long n, const PrecisionContext& ctx) {
  const long m = n / 2;
  const CNum s = a + b + c;
  if (n == 0) return CNum(ctx.zero());
  if (even(n)) {
    return checked_div(CNum(ctx.integer(m)) * (a + b + (m - 1)) * (a + c + (m - 1)) * (b + c + (m - 1)),
                       (s + (2 * m - 2)) * (s + (2 * m - 1)), ctx, "generalized symmetric Bannai-Ito tau");
  }
  return checked_div((s + (m - 1)) * (a + m) * (b + m) * (c + m), (s + (2 * m - 1)) * (s + 2 * m), ctx,
                     "generalized symmetric Bannai-Ito tau");
}

inline Polynomial gsbi_closed_form(const CNum& a, const CNum& b, const CNum& c, long n, const PrecisionContext& ctx) {
  const CNum i = imag(ctx), one = num(ctx, 1);
  const long m = n / 2;
  const CNum s = a + b + c;
  const CNum sign(ctx.integer(m % 2 == 0 ? 1 : -1));
  const CNum zero(ctx.zero());
  if (even(n)) {
    CNum eta = sign * checked_div(pochhammer(a, m) * pochhammer(b, m) * pochhammer(c, m), pochhammer(s + (m - 1), m),
                                  ctx, "generalized symmetric Bannai-Ito prefactor");
    return hyp({constant(CNum(ctx.integer(-m))), constant(s + (m - 1)), linear(zero, i), linear(zero, -i)}, {a, b, c},
               constant(one)) *
           eta;
  }
  CNum eta = sign * checked_div(pochhammer(a + 1, m) * pochhammer(b + 1, m) * pochhammer(c + 1, m),
                                pochhammer(s + m, m), ctx, "generalized symmetric Bannai-Ito prefactor");
  return x(ctx) *
         hyp({constant(CNum(ctx.integer(-m))), constant(s + m), linear(one, i), linear(one, -i)}, {a + 1, b + 1, c + 1},
             constant(one)) *
         eta;
}

// |Gamma(ix)/Gamma(2ix)|^2 written as 4|Gamma(1+ix)/Gamma(1+2ix)|^2, regular at 0.
inline std::vector<std::pair<CNum, int>> symmetric_kernel(const Real& x, const PrecisionContext& ctx) {
  return {{CNum(ctx.integer(1), x), 2}, {CNum(ctx.integer(1), 2 * x), -2}};
}

inline WeightSpec symmetric_weight(std::vector<CNum> params, const PrecisionContext& ctx, std::string description) {
  Density density = [params, ctx](const Real& x, const Real&, const Real&) {
    auto factors = symmetric_kernel(x, ctx);
    for (const auto& a : params) factors.push_back({a + CNum(ctx.zero(), x), 2});
    return gamma_modulus_product(factors, ctx) * 4 / (4 * ctx.pi());
  };
  WeightSpec w;
  w.components = {half_line(false, Decay::gamma_modulus, density, ctx),
                  half_line(true, Decay::gamma_modulus, density, ctx)};
  w.description = std::move(description);
  return w;
}

inline Real gsbi_norm(const CNum& a, const CNum& b, const CNum& c, long n, const PrecisionContext& ctx) {
  const long m = n / 2;
  const CNum s = a + b + c;
  CNum kappa = gamma(a + b + m, ctx) * gamma(a + c + m, ctx) * gamma(b + c + m, ctx) * gamma(a + m, ctx) *
               gamma(b + m, ctx) * gamma(c + m, ctx) * gamma(ctx.integer(m + 1), ctx) /
               (gamma(s + 2 * m, ctx) * pochhammer(s + (m - 1), m));
  if (!even(n)) kappa *= gsbi_tau(a, b, c, n, ctx);
  return kappa.re;
}

// D_sigma = B S+ + A S- + (C - sigma/2) R + (sigma/2 - (ab+ac+bc-x^2)/2) I, shift step i.
inline DunklOperator gsbi_operator(const CNum& a, const CNum& b, const CNum& c, const CNum& sigma,
                                   const PrecisionContext& ctx) {
  const CNum i = imag(ctx);
  const CNum e2 = (a * b + a * c + b * c) / 2;
  RationalFunction A(linear(a, i) * linear(b, i) * linear(c, i), linear(num(ctx, 2), i * 4));
  RationalFunction B(linear(-a, i) * linear(-b, i) * linear(-c, i), linear(num(ctx, -2), i * 4));
  Polynomial total = constant(e2) - x(ctx) * x(ctx) * num(ctx, 1, 2);
  RationalFunction C = add({rational(total), negate(A), negate(B)}, ctx);
  RationalFunction reflect_coeff = add({C, rational(constant(-sigma / 2))}, ctx);
  std::vector<DunklTerm> terms{{B, Symbol::shift_plus},
                               {A, Symbol::shift_minus},
                               {reflect_coeff, Symbol::reflection},
                               {rational(constant(sigma / 2) - total), Symbol::identity}};
  return DunklOperator(std::move(terms), i);
}

inline FamilySpec generalized_symmetric_bannai_ito() {
  FamilySpec f;
  f.id = FamilyId::generalized_symmetric_bannai_ito;
  f.role = Role::scheme;
  f.title = "Generalized Symmetric Bannai-Ito";
  f.parameters = {"a", "b", "c"};
  f.admissible_region = "Re(a, b, c) > 0, a + b + c > 1, non-real parameters in conjugate pairs";
  f.anchor = "Generalized Symmetric Bannai-Ito";
  f.row = 3;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return RecurrencePair{CNum(ctx.zero()), gsbi_tau(p["a"], p["b"], p["c"], n, ctx), std::nullopt, std::nullopt};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return gsbi_closed_form(p["a"], p["b"], p["c"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return symmetric_weight({p["a"], p["b"], p["c"]}, ctx,
                            "|G(ix) G(a+ix) G(b+ix) G(c+ix) / G(2ix)|^2 / (4 pi) on the real line");
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return gsbi_norm(p["a"], p["b"], p["c"], n, ctx);
  };
  f.eigen = [](const ParameterVector& p, const CNum& sigma, const PrecisionContext& ctx) {
    const CNum s = p["a"] + p["b"] + p["c"];
    return EigenSystem{gsbi_operator(p["a"], p["b"], p["c"], sigma, ctx), [s, sigma](long n) {
                         const long m = n / 2;
                         CNum base = s * m + m * m;
                         return even(n) ? base - m : base + sigma;
                       }};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    const CNum &a = p["a"], &b = p["b"], &c = p["c"];
    CNum s = a + b + c;
    bool ok = a.re.sign() > 0 && b.re.sign() > 0 && c.re.sign() > 0 && abs(s.im) <= ctx.tolerance(4) && s.re > 1 &&
              conjugate_pairs({a, b, c}, ctx);
    return ok ? "" : clause;
  };
  return f;
}

inline Polynomial sbi_closed_form(const CNum& a, const CNum& b, long n, const PrecisionContext& ctx) {
  const CNum i = imag(ctx), one = num(ctx, 1), zero(ctx.zero());
  const long m = n / 2;
  const CNum sign(ctx.integer(m % 2 == 0 ? 1 : -1));
  if (even(n)) {
    return hyp({constant(CNum(ctx.integer(-m))), linear(zero, i), linear(zero, -i)}, {a, b}, constant(one)) *
           (sign * pochhammer(a, m) * pochhammer(b, m));
  }
  return x(ctx) * hyp({constant(CNum(ctx.integer(-m))), linear(one, i), linear(one, -i)}, {a + 1, b + 1}, constant(one)) *
         (sign * pochhammer(a + 1, m) * pochhammer(b + 1, m));
}

inline DunklOperator sbi_operator(const CNum& a, const CNum& b, const CNum& sigma, const PrecisionContext& ctx) {
  const CNum i = imag(ctx);
  RationalFunction A(linear(a, i) * linear(b, i), linear(num(ctx, 2), i * 4));
  RationalFunction B(linear(-a, i) * linear(-b, i), linear(num(ctx, 2), i * -4));
  const CNum total = (a + b) / 2;
  RationalFunction C = add({rational(constant(total)), negate(A), negate(B)}, ctx);
  RationalFunction reflect_coeff = add({C, rational(constant(-sigma / 2))}, ctx);
  std::vector<DunklTerm> terms{{B, Symbol::shift_plus},
                               {A, Symbol::shift_minus},
                               {reflect_coeff, Symbol::reflection},
                               {rational(constant(sigma / 2 - total)), Symbol::identity}};
  return DunklOperator(std::move(terms), i);
}

inline FamilySpec symmetric_bannai_ito() {
  FamilySpec f;
  f.id = FamilyId::symmetric_bannai_ito;
  f.role = Role::scheme;
  f.title = "Symmetric Bannai-Ito";
  f.parameters = {"a", "b"};
  f.admissible_region = "Re(a, b) > 0, non-real parameters in conjugate pairs";
  f.anchor = "Symmetric Bannai-Ito";
  f.row = 2;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum &a = p["a"], &b = p["b"];
    const long m = n / 2;
    CNum u = n == 0 ? CNum(ctx.zero()) : even(n) ? (a + b + (m - 1)) * m : (a + m) * (b + m);
    return RecurrencePair{CNum(ctx.zero()), std::move(u), std::nullopt, std::nullopt};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return sbi_closed_form(p["a"], p["b"], n, ctx);
  };
  f.weight = [](const ParameterVector& p, const PrecisionContext& ctx) {
    return symmetric_weight({p["a"], p["b"]}, ctx, "|G(ix) G(a+ix) G(b+ix) / G(2ix)|^2 / (4 pi) on the real line");
  };
  f.norm = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum &a = p["a"], &b = p["b"];
    const long m = n / 2;
    CNum kappa = gamma(a + b + m, ctx) * gamma(a + m, ctx) * gamma(b + m, ctx) * gamma(ctx.integer(m + 1), ctx);
    if (!even(n)) kappa *= (a + m) * (b + m);
    return kappa.re;
  };
  f.eigen = [](const ParameterVector& p, const CNum& sigma, const PrecisionContext& ctx) {
    return EigenSystem{sbi_operator(p["a"], p["b"], sigma, ctx), [sigma, ctx](long n) {
                         CNum m(ctx.integer(n / 2));
                         return even(n) ? m : m + sigma;
                       }};
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    const CNum &a = p["a"], &b = p["b"];
    bool ok = a.re.sign() > 0 && b.re.sign() > 0 && conjugate_pairs({a, b}, ctx);
    return ok ? "" : clause;
  };
  return f;
}

// Complementary quasi-family in (a1, b1, a2, b2): b_n = (-1)^n b2 and complex tau_n.
inline CNum ccbi_tau(const CNum& a1, const CNum& b1, const CNum& a2, const CNum& b2, long n,
                     const PrecisionContext& ctx) {
  if (n == 0) return CNum(ctx.zero());
  const CNum i = imag(ctx);
  const long m = n / 2;
  const CNum g = a1 * 2 + a2;
  if (even(n)) {
    return checked_div(CNum(ctx.integer(m)) * (a1 * 2 + (m - 1)) * (a1 + a2 + (m - 1) + i * (b1 - b2)) *
                           (a1 + a2 + (m - 1) - i * (b1 + b2)),
                       (g + (2 * m - 2)) * (g + (2 * m - 1)), ctx, "complementary Bannai-Ito tau");
  }
  return checked_div((g + (m - 1)) * (a2 + m) * (a1 + m + i * (b1 + b2)) * (a1 + m - i * (b1 - b2)),
                     (g + (2 * m - 1)) * (g + 2 * m), ctx, "complementary Bannai-Ito tau");
}

// Even index: W_m(x; i b2, a1 + i b1, a1 - i b1, a2 - i b2); odd index: (x - b2) W_m with first parameter 1 + i b2.
inline Polynomial ccbi_closed_form(const CNum& a1, const CNum& b1, const CNum& a2, const CNum& b2, long n,
                                   const PrecisionContext& ctx) {
  const CNum i = imag(ctx);
  const long m = n / 2;
  const CNum first = even(n) ? i * b2 : i * b2 + 1;
  Polynomial w = wilson_in_x(m, first, a1 + i * b1, a1 - i * b1, a2 - i * b2, ctx);
  return even(n) ? w : (x(ctx) - b2) * w;
}

inline FamilySpec continuous_complementary_bannai_ito() {
  FamilySpec f;
  f.id = FamilyId::continuous_complementary_bannai_ito;
  f.role = Role::quasi;
  f.title = "Continuous Complementary Bannai-Ito";
  f.parameters = {"a1", "b1", "a2", "b2"};
  f.admissible_region = "positive definite only for b2 = 0 (the generalized symmetric Bannai-Ito reduction)";
  f.anchor = "Continuous Complementary Bannai-Ito and specialization";
  f.row = 4;
  f.fixtures = fixture_points(f.id);
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum& b2 = p["b2"];
    return RecurrencePair{even(n) ? b2 : -b2, ccbi_tau(p["a1"], p["b1"], p["a2"], b2, n, ctx), std::nullopt,
                          std::nullopt};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return ccbi_closed_form(p["a1"], p["b1"], p["a2"], p["b2"], n, ctx);
  };
  f.admissible = [clause = f.admissible_region](const ParameterVector& p, const PrecisionContext& ctx) -> std::string {
    return abs(p["b2"]) <= ctx.tolerance(4) ? "" : clause;
  };
  return f;
}

// Raw eight-parameter form: rho1 = a1 + i b1 - 1, rho2 = i b2,
// -r1 = a3 + i b3 - 1/2, -r2 = a4 + i b4 - 1/2.
struct ComplementaryRawParameters {
  Real a1, b1, a2, b2, a3, b3, a4, b4;
};

inline ComplementaryRawParameters complementary_raw(const Real& a1, const Real& b1, const Real& a2, const Real& b2) {
  return {a1, b1, a2, b2, a1, -b1, a2, -b2};
}

inline CNum ccbi_raw_tau(const ComplementaryRawParameters& r, long n, const PrecisionContext& ctx) {
  if (n == 0) return CNum(ctx.zero());
  const CNum half(ctx.ratio(1, 2));
  const CNum rho1(r.a1 - 1, r.b1), rho2(ctx.zero(), r.b2);
  const CNum r1 = -(CNum(r.a3, r.b3) - half), r2 = -(CNum(r.a4, r.b4) - half);
  const CNum g = rho1 + rho2 - r1 - r2;
  const long m = n / 2;
  if (even(n)) {
    return checked_div(CNum(ctx.integer(m)) * (rho1 - r1 + half + m) * (rho1 - r2 + half + m) * (-r1 - r2 + m),
                       (g + 2 * m) * (g + (2 * m + 1)), ctx, "complementary Bannai-Ito raw tau");
  }
  return checked_div((g + (m + 1)) * (rho1 + rho2 + (m + 1)) * (rho2 - r1 + half + m) * (rho2 - r2 + half + m),
                     (g + (2 * m + 1)) * (g + (2 * m + 2)), ctx, "complementary Bannai-Ito raw tau");
}

struct PositivityReport {
  Real condition1;                        // b1 + b2 + b3 + b4
  std::vector<Real> condition2_printed;   // Im of the product, n = 0..N
  std::vector<Real> condition2_derived;
  std::vector<Real> condition3;
  std::vector<CNum> tau;                  // raw tau_1..tau_N
  bool condition1_holds = false;
  bool condition2_printed_holds = false;
  bool condition2_derived_holds = false;
  bool condition3_holds = false;
  bool all_real_positive = false;
};

inline PositivityReport positivity_conditions_ccbi(const ComplementaryRawParameters& r, long max_n,
                                                   const PrecisionContext& ctx) {
  const Real tol = ctx.tolerance(10);
  PositivityReport out;
  out.condition1 = r.b1 + r.b2 + r.b3 + r.b4;
  out.condition1_holds = abs(out.condition1) <= tol;
  auto im3 = [](const CNum& x1, const CNum& x2, const CNum& x3) { return (x1 * x2 * x3).im; };
  out.condition2_printed_holds = out.condition2_derived_holds = out.condition3_holds = true;
  for (long n = 0; n <= max_n; ++n) {
    Real p2 = im3(CNum(n + r.a1 + r.a3, r.b1 + r.b3), CNum(n + r.a1 + r.a4, r.b1 + r.b4),
                  CNum(n + r.a3 + r.a4 - 1, r.b3 + r.b4));
    Real d2 = im3(CNum(n + r.a1 + r.a3 - 1, r.b1 + r.b3), CNum(n + r.a1 + r.a4 - 1, r.b1 + r.b4),
                  CNum(n + r.a3 + r.a4 - 1, r.b3 + r.b4));
    Real c3 = im3(CNum(n + r.a3, r.b2 + r.b3), CNum(n + r.a4, r.b2 + r.b4), CNum(n + r.a1, r.b1 + r.b2));
    out.condition2_printed_holds = out.condition2_printed_holds && abs(p2) <= tol;
    out.condition2_derived_holds = out.condition2_derived_holds && abs(d2) <= tol;
    out.condition3_holds = out.condition3_holds && abs(c3) <= tol;
    out.condition2_printed.push_back(std::move(p2));
    out.condition2_derived.push_back(std::move(d2));
    out.condition3.push_back(std::move(c3));
  }
  out.all_real_positive = true;
  for (long n = 1; n <= max_n; ++n) {
    CNum t = ccbi_raw_tau(r, n, ctx);
    out.all_real_positive = out.all_real_positive && abs(t.im) <= tol * max(abs(t), ctx.integer(1)) && t.re.sign() > 0;
    out.tau.push_back(std::move(t));
  }
  return out;
}

}  // namespace minus_one::families

#endif
