#ifndef MINUS_ONE_AUXILIARY_HPP
#define MINUS_ONE_AUXILIARY_HPP

// Helper and q-deformed families used by the scheme edges. Wilson, continuous
// dual Hahn and big q-Jacobi follow the standard monic normalizations
// (Koekoek-Lesky-Swarttouw); the others are the q-families quoted in the text.

#include "minus_one/family_kit.hpp"
#include "minus_one/fixtures.hpp"

namespace minus_one::families {

using namespace kit;

// Wilson polynomial (a+b)_n (a+c)_n (a+d)_n 4F3(-n, n+s-1, a+ix, a-ix; a+b, a+c, a+d; 1)
// as an even polynomial in x.
inline Polynomial wilson_in_x(long n, const CNum& a, const CNum& b, const CNum& c, const CNum& d,
                              const PrecisionContext& ctx) {
  const CNum i = imag(ctx);
  CNum s = a + b + c + d;
  Polynomial f = hyp({constant(CNum(ctx.integer(-n))), constant(s + (n - 1)), linear(a, i), linear(a, -i)},
                     {a + b, a + c, a + d}, constant(ctx, 1));
  return f * (pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n));
}

inline Polynomial dual_hahn_in_x(long n, const CNum& a, const CNum& b, const CNum& c, const PrecisionContext& ctx) {
  const CNum i = imag(ctx);
  Polynomial f = hyp({constant(CNum(ctx.integer(-n))), linear(a, i), linear(a, -i)}, {a + b, a + c}, constant(ctx, 1));
  return f * (pochhammer(a + b, n) * pochhammer(a + c, n));
}

// Even coefficients of an even polynomial in x, read as a polynomial in y = x^2.
inline Polynomial even_part_in_square(const Polynomial& p) {
  std::vector<CNum> c;
  for (int k = 0; k <= p.degree(); k += 2) c.push_back(p[static_cast<std::size_t>(k)]);
  return Polynomial(std::move(c));
}

inline FamilySpec wilson() {
  FamilySpec f;
  f.id = FamilyId::wilson;
  f.fixtures = fixture_points(f.id);
  f.role = Role::helper;
  f.title = "Wilson";
  f.parameters = {"a", "b", "c", "d"};
  f.admissible_region = "Re(a, b, c, d) > 0, non-real parameters in conjugate pairs";
  f.anchor = "Continuous Complementary Bannai-Ito and specialization";
  f.external_reference = true;
  f.squared_variable = true;
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
    CNum s = a + b + c + d;
    auto A = [&](long k) {
      return checked_div((s + (k - 1)) * (a + b + k) * (a + c + k) * (a + d + k), (s + (2 * k - 1)) * (s + 2 * k), ctx,
                         "Wilson A_n");
    };
    auto C = [&](long k) {
      if (k == 0) return CNum(ctx.zero());
      return checked_div(CNum(ctx.integer(k)) * (b + c + (k - 1)) * (b + d + (k - 1)) * (c + d + (k - 1)),
                         (s + (2 * k - 2)) * (s + (2 * k - 1)), ctx, "Wilson C_n");
    };
    CNum an = A(n), cn = C(n);
    CNum u = n > 0 ? A(n - 1) * cn : CNum(ctx.zero());
    return RecurrencePair{an + cn - a * a, std::move(u), an, cn};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return even_part_in_square(wilson_in_x(n, p["a"], p["b"], p["c"], p["d"], ctx));
  };
  return f;
}

inline FamilySpec continuous_dual_hahn() {
  FamilySpec f;
  f.id = FamilyId::continuous_dual_hahn;
  f.fixtures = fixture_points(f.id);
  f.role = Role::helper;
  f.title = "Continuous dual Hahn";
  f.parameters = {"a", "b", "c"};
  f.admissible_region = "Re(a, b, c) > 0, non-real parameters in conjugate pairs";
  f.anchor = "Symmetric Bannai-Ito";
  f.external_reference = true;
  f.squared_variable = true;
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const CNum &a = p["a"], &b = p["b"], &c = p["c"];
    auto A = [&](long k) { return (a + b + k) * (a + c + k); };
    auto C = [&](long k) { return CNum(ctx.integer(k)) * (b + c + (k - 1)); };
    CNum an = A(n), cn = C(n);
    CNum u = n > 0 ? A(n - 1) * cn : CNum(ctx.zero());
    return RecurrencePair{an + cn - a * a, std::move(u), an, cn};
  };
  f.closed_form = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    return even_part_in_square(dual_hahn_in_x(n, p["a"], p["b"], p["c"], ctx));
  };
  return f;
}

// Little q-Jacobi in the dilated form used for the q -> -1 limit. `sign`
// selects b_n = 1 - A_n + sign * C_n; the printed recurrence has sign = +1.
inline FamilySpec little_q_jacobi_dilated() {
  FamilySpec f;
  f.id = FamilyId::little_q_jacobi_dilated;
  f.fixtures = fixture_points(f.id);
  f.role = Role::aux;
  f.title = "Little q-Jacobi (dilated)";
  f.parameters = {"a", "b", "q", "sign"};
  f.admissible_region = "q != 0, ab q^k != 1";
  f.anchor = "Little -1 Jacobi / Limit Relations";
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real a = p.real("a"), b = p.real("b"), q = p.real("q"), sign = p.real("sign");
    auto qp = [&](long k) { return pow(q, k); };
    auto A = [&](long k) {
      return checked_div(CNum((1 - b * qp(k + 1)) * (1 - a * b * qp(k + 1))),
                         CNum((1 - a * b * qp(2 * k + 1)) * (1 - a * b * qp(2 * k + 2))), ctx, "little q-Jacobi A_n");
    };
    auto C = [&](long k) {
      if (k == 0) return CNum(ctx.zero());
      return checked_div(CNum(a * b * b * qp(2 * k + 1) * (1 - qp(k)) * (1 - a * qp(k))),
                         CNum((1 - a * b * qp(2 * k)) * (1 - a * b * qp(2 * k + 1))), ctx, "little q-Jacobi C_n");
    };
    CNum an = A(n), cn = C(n);
    CNum u = n > 0 ? A(n - 1) * cn : CNum(ctx.zero());
    return RecurrencePair{1 - an + cn * sign, std::move(u), an, cn};
  };
  return f;
}

// Big q-Jacobi, monic form of Koekoek-Lesky-Swarttouw; c = 0 is taken analytically.
inline FamilySpec big_q_jacobi() {
  FamilySpec f;
  f.id = FamilyId::big_q_jacobi;
  f.fixtures = fixture_points(f.id);
  f.role = Role::aux;
  f.title = "Big q-Jacobi";
  f.parameters = {"a", "b", "c", "q"};
  f.admissible_region = "q != 0, ab q^k != 1";
  f.anchor = "Big -1 Jacobi / Limit Relations";
  f.external_reference = true;
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real a = p.real("a"), b = p.real("b"), c = p.real("c"), q = p.real("q");
    auto qp = [&](long k) { return pow(q, k); };
    auto A = [&](long k) {
      return checked_div(CNum((1 - a * qp(k + 1)) * (1 - a * b * qp(k + 1)) * (1 - c * qp(k + 1))),
                         CNum((1 - a * b * qp(2 * k + 1)) * (1 - a * b * qp(2 * k + 2))), ctx, "big q-Jacobi A_n");
    };
    auto C = [&](long k) {
      if (k == 0) return CNum(ctx.zero());
      Real num = c.is_zero() ? a * a * b * qp(2 * k + 1) * (1 - qp(k)) * (1 - b * qp(k))
                             : -a * c * qp(k + 1) * (1 - qp(k)) * (1 - b * qp(k)) * (1 - a * b * qp(k) / c);
      return checked_div(CNum(num), CNum((1 - a * b * qp(2 * k)) * (1 - a * b * qp(2 * k + 1))), ctx,
                         "big q-Jacobi C_n");
    };
    return from_ac(n, A, C, ctx);
  };
  return f;
}

// Continuous q-Hahn with a = c, b = d; x already rescaled by 1/2.
inline FamilySpec continuous_q_hahn() {
  FamilySpec f;
  f.id = FamilyId::continuous_q_hahn;
  f.fixtures = fixture_points(f.id);
  f.role = Role::aux;
  f.title = "Continuous q-Hahn";
  f.parameters = {"a", "b", "phi", "q"};
  f.admissible_region = "q != 0, a^2 b^2 q^k != 1";
  f.anchor = "Continuous -1 Hahn type 1 / Limit Relations";
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real a = p.real("a"), b = p.real("b"), phi = p.real("phi"), q = p.real("q");
    const CNum e(cos(phi), sin(phi));
    const CNum ae = e * a;
    auto qp = [&](long k) { return pow(q, k); };
    const Real ab = a * b, a2b2 = a * a * b * b;
    auto A = [&](long k) {
      CNum num = (1 - ab * e * e * qp(k)) * (1 - a * a * qp(k)) * (1 - ab * qp(k)) * (1 - a2b2 * qp(k - 1));
      CNum den = ae * (1 + q) * (1 - a2b2 * qp(2 * k - 1)) * (1 - a2b2 * qp(2 * k));
      return checked_div(num, den, ctx, "continuous q-Hahn A_n");
    };
    auto C = [&](long k) {
      if (k == 0) return CNum(ctx.zero());
      CNum num = ae * (1 - qp(k)) * (1 - ab * qp(k - 1)) * (1 - b * b * qp(k - 1)) * (1 - ab * qp(k - 1) / (e * e));
      CNum den = CNum((1 + q) * (1 - a2b2 * qp(2 * k - 2)) * (1 - a2b2 * qp(2 * k - 1)));
      return checked_div(num, den, ctx, "continuous q-Hahn C_n");
    };
    CNum an = A(n), cn = C(n);
    CNum b_n = ((ae + 1 / ae) / (1 + q) - (an + cn)) / 2;
    CNum u = n > 0 ? A(n - 1) * cn / 4 : CNum(ctx.zero());
    return RecurrencePair{std::move(b_n), std::move(u), an, cn};
  };
  return f;
}

inline FamilySpec q_meixner_pollaczek() {
  FamilySpec f;
  f.id = FamilyId::q_meixner_pollaczek;
  f.fixtures = fixture_points(f.id);
  f.role = Role::aux;
  f.title = "q-Meixner-Pollaczek";
  f.parameters = {"a", "phi", "q"};
  f.admissible_region = "q != 0";
  f.anchor = "-1 Meixner Pollaczek / Limit Relations";
  f.recurrence = [](const ParameterVector& p, long n, const PrecisionContext& ctx) {
    const Real a = p.real("a"), phi = p.real("phi"), q = p.real("q");
    CNum b(a * pow(q, n) * cos(phi));
    CNum u = n > 0 ? CNum((1 - pow(q, n)) * (1 - a * a * pow(q, n - 1)) / 4) : CNum(ctx.zero());
    return RecurrencePair{std::move(b), std::move(u), std::nullopt, std::nullopt};
  };
  return f;
}

}  // namespace minus_one::families

#endif
