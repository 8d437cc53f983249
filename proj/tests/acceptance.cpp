// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [report.json]

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "minus_one/verify.hpp"

using namespace minus_one;

namespace {

constexpr int digits = 50;
constexpr double closed_form_tol = 1e-40;
constexpr double gram_off_tol = 1e-25;
constexpr double gram_diag_tol = 1e-17;
constexpr double spot_tol = 1e-40;
constexpr double gsbi_mass_tol = 1e-15;
constexpr double eigen_tol = 1e-35;
constexpr long favard_n = 200;

const PrecisionContext ctx(digits);

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  double worst = 0;
  std::string first_failure;

  // Passes when the row passed under its own tolerance and under the pinned one.
  void add(const CheckResult& r, double pinned) {
    ++checks;
    if (r.residual <= r.tolerance) worst = std::max(worst, r.residual);
    if (r.status != Status::pass || r.residual > pinned) {
      if (failed++ == 0) first_failure = r.id + " | " + r.check + " | " + r.notes;
    }
  }
  void add(const std::vector<CheckResult>& rs, double pinned) {
    for (const auto& r : rs) add(r, pinned);
  }
  // Only the status; some rows report a witness size rather than an error.
  void add_status(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) add(r, std::numeric_limits<double>::infinity());
  }
};

bool report(int n, const std::string& title, const Tally& t, const std::string& extra = "") {
  const bool ok = t.checks > 0 && t.failed == 0;
  std::printf("AC%d %s %s: %zu checks, %zu failed, worst residual %.3g%s%s\n", n, ok ? "PASS" : "FAIL", title.c_str(),
              t.checks, t.failed, t.worst, extra.empty() ? "" : "; ", extra.c_str());
  if (!ok && !t.first_failure.empty()) std::printf("    first failure: %s\n", t.first_failure.c_str());
  std::fflush(stdout);
  return ok;
}

std::vector<const FamilySpec*> catalog_families(bool with_quasi) {
  std::vector<const FamilySpec*> out;
  for (const auto& f : catalog()) {
    if (f.role == Role::scheme || (with_quasi && f.role == Role::quasi)) out.push_back(&f);
  }
  return out;
}

ParameterVector first_fixture(const FamilySpec& f) {
  return f.fixtures.empty() ? ParameterVector{} : parameters(f.id, f.fixtures.front(), ctx);
}

std::vector<ParameterVector> fixtures(const FamilySpec& f) {
  std::vector<ParameterVector> out;
  for (const auto& t : f.fixtures) out.push_back(parameters(f.id, t, ctx));
  if (out.empty()) out.emplace_back();
  return out;
}

CheckResult spot(const std::string& id, const std::string& what, FamilyId fam, const ParameterVector& p,
                 const Real& expected, double tol, const std::string& anchor) {
  const QuadratureResult q = integrate(weight_spec(fam, p, ctx), [](const Real& x) { return Real(1, x.precision()); },
                                       ctx.tolerance(10), ctx);
  const Real err = abs(q.value - expected) / abs(expected);
  CheckResult r = make_result(id, what, err, ctx.from_double(tol), anchor,
                              "value " + q.value.str(20) + ", " + std::to_string(q.nodes) + " nodes");
  if (!q.converged && r.status == Status::pass) r.status = Status::inconclusive;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string report_path = argc > 1 ? argv[1] : "acceptance_report.json";
  bool all = true;

  {
    Tally t;
    for (const auto* f : catalog_families(true)) {
      for (const auto& p : fixtures(*f)) t.add(verify_closed_form(f->id, p, 12, ctx), closed_form_tol);
    }
    all &= report(1, "recurrence vs closed form (15 families x 3 fixtures, n<=12, rel 1e-40)", t);
  }
  {
    Tally t;
    for (const auto* f : catalog_families(false)) {
      for (const auto& r : verify_gram(f->id, first_fixture(*f), 8, ctx)) {
        t.add(r, r.check.find("off-diagonal") != std::string::npos ? gram_off_tol : gram_diag_tol);
      }
    }
    all &= report(2, "Gram N=8 (14 families, off-diagonal 1e-25, diagonal 1e-17)", t);
  }
  {
    Tally t;
    t.add(spot("hermite", "integral of exp(-x^2) = sqrt(pi)", FamilyId::hermite, {}, sqrt(ctx.pi()), spot_tol,
               "Hermite / Orthogonality Relation"),
          spot_tol);
    const FamilyId geg = FamilyId::gegenbauer;
    t.add(spot("gegenbauer", "alpha=1/2 mass = 2", geg, parameters(geg, "alpha=1/2", ctx), ctx.integer(2), spot_tol,
               "Gegenbauer / Orthogonality Relation"),
          spot_tol);
    const FamilyId gsbi = FamilyId::generalized_symmetric_bannai_ito;
    const ParameterVector one = parameters(gsbi, "a=1,b=1,c=1", ctx);
    const Real kappa0 = norm(gsbi, one, 0, ctx);
    t.add(spot("generalized-symmetric-bannai-ito", "a=b=c=1 normalized mass = kappa_0", gsbi, one, kappa0,
               gsbi_mass_tol, "Generalized Symmetric Bannai-Ito / Orthogonality Relation"),
          gsbi_mass_tol);
    const double k0 = abs(kappa0 - ctx.ratio(1, 2)).to_double();
    all &= report(3, "spot integrals (sqrt(pi), 2 to 1e-40; kappa_0 = 1/2 to 1e-15)", t,
                  "|kappa_0 - 1/2| = " + abs(kappa0 - ctx.ratio(1, 2)).str(3)) &&
           k0 < 1e-40;
  }
  {
    Tally t;
    for (const auto* f : catalog_families(false)) {
      const ParameterVector p = first_fixture(*f);
      for (const Real& free : {ctx.ratio(1, 2), ctx.integer(2)}) {
        for (long n = 0; n <= 10; ++n) t.add(verify_eigen(f->id, p, n, free, ctx, ctx.tolerance(15)), eigen_tol);
        t.add(verify_diagonal(f->id, p, 8, free, ctx), eigen_tol);
      }
    }
    all &= report(4, "eigen equations n<=10 at sigma=1/2 and 2 (1e-35) plus operator diagonality N=8", t);
  }
  {
    Tally t;
    for (const auto& e : edge_catalog()) {
      if (e.kind == EdgeKind::specialization) t.add_status(verify_edge(e, ctx, 10));
    }
    all &= report(5, "exact specializations n<=10", t);
  }
  {
    Tally t;
    std::size_t edges = 0;
    for (const auto& e : edge_catalog()) {
      if (e.kind != EdgeKind::limit && e.kind != EdgeKind::q_limit) continue;
      ++edges;
      t.add_status(verify_edge(e, ctx));
    }
    for (const auto& s : commuting_squares()) t.add_status(verify_commuting_square(s, ctx));
    all &= report(6, "limit ladders (order >= 0.95, extrapolated <= 1e-8) and commuting squares", t,
                  std::to_string(edges) + " limit edges, 2 squares");
  }
  {
    Tally t;
    for (const auto& e : edge_catalog()) {
      if (e.kind != EdgeKind::christoffel && e.kind != EdgeKind::geronimus) continue;
      t.add_status(verify_edge(e, ctx, 10));
      if (e.kind == EdgeKind::christoffel) t.add_status(std::vector<CheckResult>{verify_kernel_recurrence_map(e, ctx, 20)});
    }
    all &= report(7, "Christoffel/Geronimus pairs both directions and recurrence map at 20 points", t);
  }
  {
    Tally t;
    for (const auto* f : catalog_families(false)) {
      for (const auto& p : fixtures(*f)) t.add_status(std::vector<CheckResult>{favard_scan(f->id, p, favard_n, ctx)});
    }
    t.add_status(verify_complementary_classification(ctx));
    all &= report(8, "Favard u_n > 0 for n<=200; complementary non-real tau_n and b2=0 reduction", t);
  }
  {
    Tally t;
    const std::vector<CheckResult> rs = open_questions(ctx);
    nlohmann::json config{{"digits", digits}, {"suite", "acceptance"}};
    {
      std::ofstream out(report_path);
      out << report_json("acceptance", config, rs).dump(2) << "\n";
    }
    std::ifstream in(report_path);
    const auto j = nlohmann::json::parse(in, nullptr, false);
    std::size_t recorded = 0;
    if (!j.is_discarded()) {
      for (const auto& row : j["results"]) {
        const std::string check = row.value("check", "");
        const std::string notes = row.value("notes", "");
        if (check.rfind("open question", 0) == 0 && notes.find("adopted") != std::string::npos) ++recorded;
      }
    }
    t.add_status(rs);
    if (recorded != rs.size() || rs.size() < 3) {
      ++t.failed;
      t.first_failure = "report " + report_path + " records " + std::to_string(recorded) + " open questions";
    }
    all &= report(9, "open questions (b_n sign, beta scaling, S+R order) recorded in the JSON report", t,
                  std::to_string(recorded) + " rows in " + report_path);
  }
  return all ? 0 : 1;
}
