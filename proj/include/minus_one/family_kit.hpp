#ifndef MINUS_ONE_FAMILY_KIT_HPP
#define MINUS_ONE_FAMILY_KIT_HPP

// Small builders shared by the family definitions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minus_one/family.hpp"

namespace minus_one::kit {

inline bool even(long n) { return n % 2 == 0; }

inline CNum num(const PrecisionContext& ctx, long p, long q = 1) { return CNum(ctx.ratio(p, q)); }
inline CNum imag(const PrecisionContext& ctx) { return CNum(ctx.zero(), ctx.integer(1)); }

inline Polynomial constant(const CNum& c) { return Polynomial::constant(c); }
inline Polynomial constant(const PrecisionContext& ctx, long p, long q = 1) { return constant(num(ctx, p, q)); }
inline Polynomial linear(const CNum& c0, const CNum& c1) { return Polynomial::linear(c0, c1); }
inline Polynomial x(const PrecisionContext& ctx) { return Polynomial::identity(ctx.bits()); }
inline Polynomial x_squared_minus(const PrecisionContext& ctx, const CNum& shift) {
  return x(ctx) * x(ctx) - constant(shift);
}

inline Polynomial monomial(const PrecisionContext& ctx, int k, const CNum& c) {
  std::vector<CNum> coeffs(static_cast<std::size_t>(k) + 1, CNum(ctx.zero()));
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

inline RationalFunction rational(Polynomial n, Polynomial d) { return RationalFunction(std::move(n), std::move(d)); }
inline RationalFunction rational(Polynomial n) { return RationalFunction(std::move(n)); }

// num / (scale * x^power)
inline RationalFunction over_power(Polynomial num, const CNum& scale, int power, const PrecisionContext& ctx) {
  return RationalFunction(std::move(num), monomial(ctx, power, scale));
}

inline RationalFunction negate(const RationalFunction& r) { return RationalFunction(-r.numerator(), r.denominator()); }

inline RationalFunction add(std::vector<RationalFunction> parts, const PrecisionContext& ctx) {
  return rational_reduce(sum(parts, ctx), ctx);
}

inline CNum checked_div(const CNum& n, const CNum& d, const PrecisionContext& ctx, std::string_view where) {
  if (abs(d) <= ctx.epsilon() * max(abs(n), ctx.integer(1))) {
    throw ParameterSingularityError(std::string(where) + ": denominator vanishes");
  }
  return n / d;
}

// Polynomial view of a pFq numerator parameter c0 + c1 x.
inline Polynomial param(const CNum& c0) { return constant(c0); }

// Terminating pFq with argument z(x).
inline Polynomial hyp(std::vector<Polynomial> nums, std::vector<CNum> dens, const Polynomial& z) {
  return hyp_pfq_polynomial(nums, dens, z);
}

// Monic recurrence data from an (A_n, C_n) pair with b_n = 1 - A_n - C_n, u_n = A_{n-1} C_n.
template <class A, class C>
RecurrencePair from_ac(long n, A&& a_of, C&& c_of, const PrecisionContext& ctx) {
  CNum an = a_of(n), cn = c_of(n);
  CNum b = 1 - an - cn;
  CNum u = n > 0 ? a_of(n - 1) * cn : CNum(ctx.zero());
  return RecurrencePair{std::move(b), std::move(u), std::move(an), std::move(cn)};
}

inline Real sgn(const Real& x) { return Real(x.sign(), x.precision()); }

// exp of a sum of log-moduli of gamma values, sign +1 for numerator entries.
inline Real gamma_modulus_product(const std::vector<std::pair<CNum, int>>& factors, const PrecisionContext& ctx) {
  Real acc = ctx.zero();
  for (const auto& [z, power] : factors) acc += power * log_abs_gamma(z, ctx);
  return exp(acc);
}

// Density on the real line of the given shape; both ends decay as specified.
inline WeightComponent half_line(bool positive, Decay decay, Density density, const PrecisionContext& ctx) {
  WeightComponent w;
  if (positive) {
    w.lo = ctx.zero();
    w.hi_decay = decay;
  } else {
    w.hi = ctx.zero();
    w.lo_decay = decay;
  }
  w.lo_exponent = ctx.zero();
  w.hi_exponent = ctx.zero();
  w.density = std::move(density);
  return w;
}

inline WeightComponent interval(Real lo, Real hi, Real lo_exp, Real hi_exp, Density density) {
  WeightComponent w;
  w.lo = std::move(lo);
  w.hi = std::move(hi);
  w.lo_exponent = std::move(lo_exp);
  w.hi_exponent = std::move(hi_exp);
  w.density = std::move(density);
  return w;
}

// S dx^2 + T dxR + U dx + V (I - R); T may be absent.
inline DunklOperator sutv_operator(RationalFunction s, std::optional<RationalFunction> t, RationalFunction u,
                                   RationalFunction v, const PrecisionContext& ctx) {
  std::vector<DunklTerm> terms{{std::move(s), Symbol::second_derivative}};
  if (t) terms.push_back({std::move(*t), Symbol::derivative_reflection});
  terms.push_back({std::move(u), Symbol::derivative});
  terms.push_back({negate(v), Symbol::reflection});
  terms.push_back({std::move(v), Symbol::identity});
  return DunklOperator(std::move(terms), CNum(ctx.integer(1)));
}

// Real parameter check used by admissibility clauses.
inline bool positive(const ParameterVector& p, std::string_view name) {
  const CNum& v = p.at(name);
  return v.is_real() && v.re.sign() > 0;
}
inline bool real_above(const ParameterVector& p, std::string_view name, const Real& bound) {
  const CNum& v = p.at(name);
  return v.is_real() && v.re > bound;
}

inline void require(bool ok, std::string_view clause) {
  if (!ok) throw InadmissibleParameterError(std::string(clause));
}

}  // namespace minus_one::kit

#endif
