#ifndef MINUS_ONE_ORTHOGONALITY_HPP
#define MINUS_ONE_ORTHOGONALITY_HPP

// Gram matrices against the printed weights, Favard scans and moment checks.

#include <optional>
#include <string>
#include <vector>

#include "minus_one/catalog.hpp"
#include "minus_one/operators.hpp"
#include "minus_one/quadrature.hpp"
#include "minus_one/report.hpp"

namespace minus_one {

// Horner on the real parts; orthogonal families have real coefficients.
inline Real evaluate_real(const Polynomial& p, const Real& x) {
  Real acc(0, x.precision());
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p[static_cast<std::size_t>(k)].re;
  return acc;
}

struct GramReport {
  FamilyId family;
  std::string params;
  long N = 0;
  std::vector<std::vector<Real>> entries;  // symmetric, <P_n, P_m>
  std::vector<Real> norms;                 // printed h_n
  Real off_diagonal;                       // max |<P_n,P_m>| / sqrt(h_n h_m), n != m
  Real diagonal;                           // max |<P_n,P_n> - h_n| / h_n
  long nodes = 0;
  int level = 0;
  bool converged = false;
};

inline std::size_t triangle_index(long n, long m) { return static_cast<std::size_t>(n * (n + 1) / 2 + m); }

inline GramReport gram(FamilyId id, const ParameterVector& p, long N, const PrecisionContext& ctx,
                       std::optional<Real> tolerance = std::nullopt) {
  GramReport g;
  g.family = id;
  g.params = p.str();
  g.N = N;
  const WeightSpec w = weight_spec(id, p, ctx);
  const auto basis = generate(id, p, N, ctx);
  for (long n = 0; n <= N; ++n) g.norms.push_back(norm(id, p, n, ctx));
  const std::size_t dim = triangle_index(N, N) + 1;
  std::vector<Real> scale(dim);
  for (long n = 0; n <= N; ++n) {
    for (long m = 0; m <= n; ++m) scale[triangle_index(n, m)] = sqrt(g.norms[n] * g.norms[m]);
  }
  const Real tol = tolerance ? *tolerance : ctx.tolerance(ctx.digits() / 2 - 4);
  WeightedQuadrature q(w, static_cast<int>(2 * N), ctx);
  auto acc = [&](const Real& x, const Real& wt, std::vector<Real>& sums) {
    std::vector<Real> v;
    v.reserve(basis.size());
    for (const auto& b : basis) v.push_back(evaluate_real(b.poly(), x));
    for (long n = 0; n <= N; ++n) {
      Real wn = wt * v[n];
      for (long m = 0; m <= n; ++m) sums[triangle_index(n, m)] += wn * v[m];
    }
  };
  auto r = q.run(dim, acc, tol, scale);
  g.nodes = r.nodes;
  g.level = r.level;
  g.converged = r.converged;
  g.entries.assign(N + 1, std::vector<Real>(N + 1));
  g.off_diagonal = ctx.zero();
  g.diagonal = ctx.zero();
  for (long n = 0; n <= N; ++n) {
    for (long m = 0; m <= n; ++m) {
      const Real& v = r.values[triangle_index(n, m)];
      g.entries[n][m] = v;
      g.entries[m][n] = v;
      if (n == m) {
        g.diagonal = max(g.diagonal, abs(v - g.norms[n]) / g.norms[n]);
      } else {
        g.off_diagonal = max(g.off_diagonal, abs(v) / scale[triangle_index(n, m)]);
      }
    }
  }
  return g;
}

struct GramTolerances {
  Real off_diagonal;
  Real diagonal;
};

inline GramTolerances default_gram_tolerances(const PrecisionContext& ctx) {
  return {ctx.tolerance(ctx.digits() / 2), ctx.tolerance(ctx.digits() / 2 + 8)};
}

inline std::vector<CheckResult> verify_gram(FamilyId id, const ParameterVector& p, long N, const PrecisionContext& ctx,
                                            std::optional<GramTolerances> tolerances = std::nullopt) {
  const GramTolerances tol = tolerances ? *tolerances : default_gram_tolerances(ctx);
  const std::string anchor = spec(id).anchor + " / Orthogonality Relation";
  const std::string name(to_string(id));
  try {
    GramReport g = gram(id, p, N, ctx);
    std::string notes = std::to_string(g.nodes) + " nodes, level " + std::to_string(g.level);
    if (!g.converged) notes += ", quadrature did not converge";
    auto off = make_result(name, "gram off-diagonal N=" + std::to_string(N), g.off_diagonal, tol.off_diagonal, anchor,
                           notes);
    auto diag = make_result(name, "gram diagonal vs norm N=" + std::to_string(N), g.diagonal, tol.diagonal, anchor, notes);
    if (!g.converged) {
      if (off.status == Status::pass) off.status = Status::inconclusive;
      if (diag.status == Status::pass) diag.status = Status::inconclusive;
    }
    return {off, diag};
  } catch (const InadmissibleParameterError& e) {
    return {{name, "gram N=" + std::to_string(N), Status::fail, 1, to_report(tol.off_diagonal), anchor, e.what()}};
  }
}

// ---- Favard

struct FavardReport {
  Real min_u;
  long argmin = 0;
  Real max_imag_b;
  Real max_imag_u;
  long first_nonreal = -1;
  bool positive = false;
};

inline FavardReport favard(FamilyId id, const ParameterVector& p, long N, const PrecisionContext& ctx) {
  FavardReport f{ctx.zero(), 0, ctx.zero(), ctx.zero(), -1, false};
  const Real tol = ctx.tolerance(10);
  bool first = true;
  for (long n = 0; n <= N; ++n) {
    RecurrencePair r = recurrence(id, p, n, ctx);
    f.max_imag_b = max(f.max_imag_b, abs(r.b.im));
    bool nonreal = abs(r.b.im) > tol * max(abs(r.b), ctx.integer(1));
    if (n >= 1) {
      f.max_imag_u = max(f.max_imag_u, abs(r.u.im));
      nonreal = nonreal || abs(r.u.im) > tol * max(abs(r.u), ctx.integer(1));
      if (first || r.u.re < f.min_u) {
        f.min_u = r.u.re;
        f.argmin = n;
        first = false;
      }
    }
    if (nonreal && f.first_nonreal < 0) f.first_nonreal = n;
  }
  f.positive = f.first_nonreal < 0 && f.min_u.sign() > 0;
  return f;
}

inline CheckResult favard_scan(FamilyId id, const ParameterVector& p, long N, const PrecisionContext& ctx) {
  FavardReport f = favard(id, p, N, ctx);
  std::string notes = "min u_n " + f.min_u.str(6) + " at n=" + std::to_string(f.argmin) + ", max |Im b_n| " +
                      f.max_imag_b.str(3) + ", max |Im u_n| " + f.max_imag_u.str(3);
  if (f.first_nonreal >= 0) notes += ", first non-real coefficient at n=" + std::to_string(f.first_nonreal);
  return CheckResult{std::string(to_string(id)),
                     "favard n<=" + std::to_string(N),
                     f.positive ? Status::pass : Status::fail,
                     to_report(max(f.max_imag_b, f.max_imag_u)),
                     to_report(ctx.tolerance(10)),
                     spec(id).anchor + " / Orthogonality Relation",
                     notes};
}

// ---- moments

// mu_k = h_0 times the P_0 coefficient of x^k in the monic basis.
inline std::vector<Real> recurrence_moments(FamilyId id, const ParameterVector& p, long kmax,
                                            const PrecisionContext& ctx) {
  const auto basis = generate(id, p, kmax, ctx);
  const Real h0 = norm(id, p, 0, ctx);
  std::vector<Real> out;
  for (long k = 0; k <= kmax; ++k) {
    auto c = expand_in_basis(kit::monomial(ctx, static_cast<int>(k), CNum(ctx.integer(1))), basis, ctx);
    out.push_back(h0 * (*c)[0].re);
  }
  return out;
}

inline CheckResult verify_moments(FamilyId id, const ParameterVector& p, long kmax, const PrecisionContext& ctx) {
  const std::vector<Real> expected = recurrence_moments(id, p, kmax, ctx);
  const std::size_t dim = static_cast<std::size_t>(kmax + 1);
  std::vector<Real> scale;
  for (const auto& m : expected) scale.push_back(max(abs(m), expected[0]));
  WeightedQuadrature q(weight_spec(id, p, ctx), static_cast<int>(kmax), ctx);
  auto acc = [&](const Real& x, const Real& wt, std::vector<Real>& sums) {
    Real v = wt;
    for (std::size_t k = 0; k < dim; ++k) {
      sums[k] += v;
      v *= x;
    }
  };
  const Real tol = ctx.tolerance(ctx.digits() / 2 - 4);
  auto r = q.run(dim, acc, tol, scale);
  Real worst = ctx.zero();
  for (std::size_t k = 0; k < dim; ++k) worst = max(worst, abs(r.values[k] - expected[k]) / scale[k]);
  return make_result(std::string(to_string(id)), "moments k<=" + std::to_string(kmax), worst,
                     ctx.tolerance(ctx.digits() / 2), spec(id).anchor + " / Orthogonality Relation",
                     "quadrature vs recurrence moments");
}

}  // namespace minus_one

#endif
