#ifndef MINUS_ONE_CATALOG_HPP
#define MINUS_ONE_CATALOG_HPP

// The family catalog and the operations that dispatch on it.

#include <optional>
#include <string>
#include <vector>

#include "minus_one/auxiliary.hpp"
#include "minus_one/bannai_ito.hpp"
#include "minus_one/hermite.hpp"
#include "minus_one/jacobi.hpp"

namespace minus_one {

// Built once; entries follow all_family_ids.
inline const std::vector<FamilySpec>& catalog() {
  static const std::vector<FamilySpec> entries = [] {
    using namespace families;
    std::vector<FamilySpec> v{
        continuous_bannai_ito(),
        big_minus1_jacobi(),
        chihara(),
        continuous_minus1_hahn(1),
        continuous_minus1_hahn(2),
        generalized_symmetric_bannai_ito(),
        little_minus1_jacobi(),
        generalized_gegenbauer(),
        minus1_meixner_pollaczek(),
        symmetric_bannai_ito(),
        special_little_minus1_jacobi(),
        gegenbauer(),
        generalized_hermite(),
        hermite(),
        continuous_complementary_bannai_ito(),
        wilson(),
        continuous_dual_hahn(),
        little_q_jacobi_dilated(),
        continuous_q_hahn(),
        q_meixner_pollaczek(),
        big_q_jacobi(),
    };
    return v;
  }();
  return entries;
}

inline const FamilySpec& spec(FamilyId id) {
  for (const auto& f : catalog()) {
    if (f.id == id) return f;
  }
  throw UnknownIdError("unknown family id");
}

inline ParameterVector parameters(FamilyId id, std::string_view text, const PrecisionContext& ctx) {
  return parse_parameters(text, spec(id).parameters, ParameterVector{}, ctx);
}

// The first fixture point.
inline ParameterVector default_parameters(FamilyId id, const PrecisionContext& ctx) {
  const FamilySpec& f = spec(id);
  return parameters(id, f.fixtures.empty() ? "" : f.fixtures.front(), ctx);
}

// Every schema name present; missing ones filled from the default point.
inline ParameterVector complete(FamilyId id, const ParameterVector& p, const PrecisionContext& ctx) {
  ParameterVector out = default_parameters(id, ctx);
  for (const auto& [k, v] : p.entries()) out.set(k, v);
  return out;
}

// Empty when admissible, otherwise the violated clause.
inline std::string admissibility(FamilyId id, const ParameterVector& p, const PrecisionContext& ctx) {
  const FamilySpec& f = spec(id);
  return f.admissible ? f.admissible(p, ctx) : std::string();
}

inline RecurrencePair recurrence(FamilyId id, const ParameterVector& p, long n, const PrecisionContext& ctx) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return spec(id).recurrence(p, n, ctx);
}

// P_0 .. P_N from P_{n+1} = (x - b_n) P_n - u_n P_{n-1}.
inline std::vector<MonicPolynomial> generate(FamilyId id, const ParameterVector& p, long N, const PrecisionContext& ctx) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  const FamilySpec& f = spec(id);
  const Polynomial X = kit::x(ctx);
  std::vector<Polynomial> P{Polynomial::constant(CNum(ctx.integer(1)))};
  Polynomial prev;
  for (long n = 0; n < N; ++n) {
    RecurrencePair r = f.recurrence(p, n, ctx);
    Polynomial next = (X - r.b) * P.back();
    if (n > 0) next -= P[static_cast<std::size_t>(n - 1)] * r.u;
    P.push_back(std::move(next));
  }
  std::vector<MonicPolynomial> out;
  out.reserve(P.size());
  for (auto& q : P) out.emplace_back(std::move(q));
  return out;
}

// The printed hypergeometric expression before monic renormalization.
inline Polynomial printed_closed_form(FamilyId id, const ParameterVector& p, long n, const PrecisionContext& ctx) {
  const FamilySpec& f = spec(id);
  if (!f.closed_form) throw NoClosedFormError(std::string(to_string(id)) + " has no closed form");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return f.closed_form(p, n, ctx);
}

inline MonicPolynomial closed_form(FamilyId id, const ParameterVector& p, long n, const PrecisionContext& ctx) {
  Polynomial raw = printed_closed_form(id, p, n, ctx);
  if (raw.degree() != n) throw ParameterSingularityError("closed form degenerates at n = " + std::to_string(n));
  return MonicPolynomial(std::move(raw));
}

// Leading coefficient of the printed expression; 1 when the printed prefactors are monic.
inline CNum printed_leading(FamilyId id, const ParameterVector& p, long n, const PrecisionContext& ctx) {
  return printed_closed_form(id, p, n, ctx).leading();
}

inline WeightSpec weight_spec(FamilyId id, const ParameterVector& p, const PrecisionContext& ctx) {
  const FamilySpec& f = spec(id);
  if (!f.weight) throw InadmissibleParameterError(std::string(to_string(id)) + " has no positive weight");
  if (std::string clause = admissibility(id, p, ctx); !clause.empty()) {
    throw InadmissibleParameterError(std::string(to_string(id)) + " requires " + clause);
  }
  return f.weight(p, ctx);
}

inline Real norm(FamilyId id, const ParameterVector& p, long n, const PrecisionContext& ctx) {
  const FamilySpec& f = spec(id);
  if (!f.norm) throw InadmissibleParameterError(std::string(to_string(id)) + " has no norm formula");
  return f.norm(p, n, ctx);
}

// The free parameter (sigma or epsilon) defaults to 1/2.
inline EigenSystem eigen_system(FamilyId id, const ParameterVector& p, std::optional<Real> free,
                                const PrecisionContext& ctx) {
  const FamilySpec& f = spec(id);
  if (!f.eigen) throw NoEigenSystemError(std::string(to_string(id)) + " has no eigen equation");
  CNum value(free ? *free : ctx.ratio(1, 2));
  return f.eigen(p, value, ctx);
}

}  // namespace minus_one

#endif
