#ifndef MINUS_ONE_VERIFY_HPP
#define MINUS_ONE_VERIFY_HPP

// Check suites per family, per edge, and for the whole catalog.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "minus_one/orthogonality.hpp"
#include "minus_one/scheme.hpp"

namespace minus_one {

enum class FamilyCheck { closed_form, orthogonality, eigen, favard };

inline std::string_view to_string(FamilyCheck c) {
  switch (c) {
    case FamilyCheck::closed_form: return "closed-form";
    case FamilyCheck::orthogonality: return "orthogonality";
    case FamilyCheck::eigen: return "eigen";
    case FamilyCheck::favard: return "favard";
  }
  return "?";
}

inline std::optional<FamilyCheck> parse_family_check(std::string_view s) {
  for (FamilyCheck c : {FamilyCheck::closed_form, FamilyCheck::orthogonality, FamilyCheck::eigen, FamilyCheck::favard}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

inline const std::set<FamilyCheck>& all_family_checks() {
  static const std::set<FamilyCheck> all{FamilyCheck::closed_form, FamilyCheck::orthogonality, FamilyCheck::eigen,
                                         FamilyCheck::favard};
  return all;
}

enum class EdgeCheck { exact, limit, ct_gt, square };

inline std::string_view to_string(EdgeCheck c) {
  switch (c) {
    case EdgeCheck::exact: return "exact";
    case EdgeCheck::limit: return "limit";
    case EdgeCheck::ct_gt: return "ct-gt";
    case EdgeCheck::square: return "square";
  }
  return "?";
}

inline std::optional<EdgeCheck> parse_edge_check(std::string_view s) {
  for (EdgeCheck c : {EdgeCheck::exact, EdgeCheck::limit, EdgeCheck::ct_gt, EdgeCheck::square}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

inline const std::set<EdgeCheck>& all_edge_checks() {
  static const std::set<EdgeCheck> all{EdgeCheck::exact, EdgeCheck::limit, EdgeCheck::ct_gt, EdgeCheck::square};
  return all;
}

inline EdgeCheck edge_check_for(EdgeKind k) {
  switch (k) {
    case EdgeKind::specialization: return EdgeCheck::exact;
    case EdgeKind::limit:
    case EdgeKind::q_limit: return EdgeCheck::limit;
    case EdgeKind::christoffel:
    case EdgeKind::geronimus: return EdgeCheck::ct_gt;
  }
  return EdgeCheck::exact;
}

// Squares hang off the q-limit edges they start from.
inline bool starts_square(const SchemeEdge& e) {
  return e.kind == EdgeKind::q_limit &&
         (e.source == FamilyId::big_q_jacobi || e.source == FamilyId::little_q_jacobi_dilated);
}

struct SuiteLimits {
  std::optional<Real> tolerance;  // overrides closed-form and eigen tolerances
  long closed_form_n = 12;
  long gram_n = 8;
  long eigen_n = 10;
  long diagonal_n = 8;
  long favard_n = 200;
};

inline CheckResult verify_closed_form(FamilyId id, const ParameterVector& p, long N, const PrecisionContext& ctx,
                                      std::optional<Real> tolerance = std::nullopt) {
  const Real tol = tolerance ? *tolerance : ctx.tolerance(10);
  const std::string anchor = spec(id).anchor + " / Hypergeometric Representation";
  const std::string where = p.str().empty() ? "no parameters" : "params " + p.str();
  const auto P = generate(id, p, N, ctx);
  Real worst = ctx.zero();
  try {
    for (long n = 0; n <= N; ++n) worst = max(worst, relative_difference(P[n].poly(), closed_form(id, p, n, ctx).poly()));
  } catch (const std::exception& e) {
    return {std::string(to_string(id)), "recurrence vs closed form n<=" + std::to_string(N), Status::fail, 1,
            to_report(tol), anchor, where + ": " + e.what()};
  }
  return make_result(std::string(to_string(id)), "recurrence vs closed form n<=" + std::to_string(N), worst, tol,
                     anchor, where);
}

// CCBI: some tau_n with n <= 5 is non-real when b2 != 0; b2 = 0 is the
// generalized symmetric Bannai-Ito recurrence with a = a1 + i b1, b = a1 - i b1, c = a2.
inline std::vector<CheckResult> verify_complementary_classification(const PrecisionContext& ctx, long N = 12) {
  const FamilyId id = FamilyId::continuous_complementary_bannai_ito;
  const std::string name(to_string(id));
  const std::string anchor = spec(id).anchor;
  std::vector<CheckResult> out;
  for (const auto& text : spec(id).fixtures) {
    const ParameterVector p = parameters(id, text, ctx);
    if (abs(p["b2"]).is_zero()) continue;
    const FavardReport f = favard(id, p, 5, ctx);
    out.push_back({name, "non-real tau_n for n<=5 when b2 != 0", f.first_nonreal >= 0 ? Status::pass : Status::fail,
                   to_report(f.max_imag_u), to_report(ctx.tolerance(10)), anchor,
                   "params " + p.str() + (f.first_nonreal >= 0 ? ", first at n=" + std::to_string(f.first_nonreal)
                                                                : ", all real")});
  }
  const ParameterVector p = parameters(id, "a1=3/4,b1=1/2,a2=1,b2=0", ctx);
  const CNum i(ctx.zero(), ctx.integer(1));
  ParameterVector g;
  g.set("a", p["a1"] + i * p["b1"]).set("b", p["a1"] - i * p["b1"]).set("c", p["a2"]);
  Real worst = ctx.zero();
  for (long n = 0; n <= N; ++n) {
    const RecurrencePair r = recurrence(id, p, n, ctx), s = recurrence(FamilyId::generalized_symmetric_bannai_ito, g, n, ctx);
    worst = max(worst, max(abs(r.b - s.b), abs(r.u - s.u)));
  }
  out.push_back(make_result(name, "b2=0 reduction to generalized symmetric Bannai-Ito", worst, ctx.tolerance(10),
                            "Specialization to Generalized Symmetric Bannai-Ito", "params " + p.str()));
  return out;
}

inline bool orthogonal_family(FamilyId id) { return spec(id).role == Role::scheme; }

inline std::vector<CheckResult> verify_family(FamilyId id, const std::set<FamilyCheck>& checks,
                                              const PrecisionContext& ctx,
                                              std::optional<ParameterVector> params = std::nullopt,
                                              const SuiteLimits& lim = {}) {
  const FamilySpec& f = spec(id);
  std::vector<ParameterVector> points;
  if (params) {
    points.push_back(complete(id, *params, ctx));
  } else {
    for (const auto& text : f.fixtures) points.push_back(parameters(id, text, ctx));
  }
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  if (checks.contains(FamilyCheck::closed_form) && f.closed_form) {
    for (const auto& p : points) out.push_back(verify_closed_form(id, p, lim.closed_form_n, ctx, lim.tolerance));
  }
  if (checks.contains(FamilyCheck::orthogonality) && f.weight && orthogonal_family(id)) {
    append(verify_gram(id, points.front(), lim.gram_n, ctx));
  }
  if (checks.contains(FamilyCheck::eigen) && f.eigen) {
    const ParameterVector& p = points.front();
    for (const Real& free : {ctx.ratio(1, 2), ctx.integer(2)}) {
      for (long n = 0; n <= lim.eigen_n; ++n) {
        out.push_back(verify_eigen(id, p, n, free, ctx, lim.tolerance ? lim.tolerance : ctx.tolerance(15)));
      }
      out.push_back(verify_diagonal(id, p, lim.diagonal_n, free, ctx, lim.tolerance));
    }
  }
  if (checks.contains(FamilyCheck::favard)) {
    if (id == FamilyId::continuous_complementary_bannai_ito) {
      append(verify_complementary_classification(ctx));
    } else if (orthogonal_family(id)) {
      for (const auto& p : points) {
        CheckResult r = favard_scan(id, p, lim.favard_n, ctx);
        if (const std::string why = admissibility(id, p, ctx); !why.empty()) r.notes += "; inadmissible: " + why;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

inline const std::vector<std::string>& commuting_squares() {
  static const std::vector<std::string> names{"jacobi", "chihara"};
  return names;
}

// The edge's own check, plus the squares when the edge starts one.
inline std::vector<CheckResult> verify_edge_suite(const SchemeEdge& e, const PrecisionContext& ctx,
                                                  const std::set<EdgeCheck>& checks = all_edge_checks(),
                                                  bool with_squares = false) {
  std::vector<CheckResult> out;
  if (checks.contains(edge_check_for(e.kind))) {
    out = verify_edge(e, ctx);
    if (e.kind == EdgeKind::christoffel) out.push_back(verify_kernel_recurrence_map(e, ctx));
  }
  if (with_squares && checks.contains(EdgeCheck::square) && starts_square(e)) {
    for (const auto& s : commuting_squares()) {
      for (auto& r : verify_commuting_square(s, ctx)) out.push_back(std::move(r));
    }
  }
  return out;
}

struct CatalogRun {
  std::vector<CheckResult> results;
  std::size_t families = 0;
  std::size_t edges = 0;
};

// Every scheme family and CCBI, every edge, both squares and the open questions.
inline CatalogRun verify_all(const std::set<FamilyCheck>& checks, const std::set<EdgeCheck>& edge_checks,
                             const PrecisionContext& ctx, const SuiteLimits& lim = {}) {
  CatalogRun run;
  for (const auto& f : catalog()) {
    if (f.role != Role::scheme && f.role != Role::quasi) continue;
    ++run.families;
    for (auto& r : verify_family(f.id, checks, ctx, std::nullopt, lim)) run.results.push_back(std::move(r));
  }
  for (const auto& e : edge_catalog()) {
    ++run.edges;
    for (auto& r : verify_edge_suite(e, ctx, edge_checks)) run.results.push_back(std::move(r));
  }
  if (edge_checks.contains(EdgeCheck::square)) {
    for (const auto& s : commuting_squares()) {
      for (auto& r : verify_commuting_square(s, ctx)) run.results.push_back(std::move(r));
    }
  }
  for (auto& r : open_questions(ctx)) run.results.push_back(std::move(r));
  return run;
}

// Canonical order: by id, then by insertion.
inline void sort_results(std::vector<CheckResult>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

}  // namespace minus_one

#endif
