#include <gtest/gtest.h>

#include <vector>

#include "minus_one/catalog.hpp"
#include "minus_one/verify.hpp"

using namespace minus_one;

namespace {

const PrecisionContext ctx(50);

Real q(long p, long r = 1) { return ctx.ratio(p, r); }

bool near(const CNum& got, const Real& want, int shift = 10) {
  return abs(got - CNum(want)) <= ctx.tolerance(shift) * max(abs(want), ctx.integer(1));
}

Polynomial poly(std::vector<Real> c) {
  std::vector<CNum> v;
  for (auto& r : c) v.emplace_back(std::move(r));
  return Polynomial(std::move(v));
}

std::vector<FamilyId> scheme_and_quasi() {
  std::vector<FamilyId> out;
  for (const auto& f : catalog()) {
    if (f.role == Role::scheme || f.role == Role::quasi) out.push_back(f.id);
  }
  return out;
}

}  // namespace

TEST(Catalog, Counts) {
  EXPECT_EQ(catalog().size(), 21u);
  EXPECT_EQ(scheme_and_quasi().size(), 15u);
}

TEST(Catalog, IdsAndAliases) {
  EXPECT_EQ(family_id("cbi"), FamilyId::continuous_bannai_ito);
  EXPECT_EQ(family_id("hermite"), FamilyId::hermite);
  EXPECT_EQ(family_id("b1j"), FamilyId::big_minus1_jacobi);
  EXPECT_THROW(family_id("laguerre"), UnknownIdError);
  for (const auto& f : catalog()) EXPECT_EQ(family_id(to_string(f.id)), f.id);
}

TEST(Catalog, ThreeFixturesPerFamily) {
  for (FamilyId id : scheme_and_quasi()) {
    const FamilySpec& f = spec(id);
    if (f.parameters.empty()) continue;
    EXPECT_EQ(f.fixtures.size(), 3u) << to_string(id);
  }
}

TEST(Parameters, ParsedAsExactDecimals) {
  const ParameterVector p = parameters(FamilyId::chihara, "alpha=0.5,beta=1.5,gamma=0.25", ctx);
  EXPECT_EQ(p.real("gamma"), q(1, 4));
  const ParameterVector r = parameters(FamilyId::gegenbauer, "alpha=1/3", ctx);
  EXPECT_EQ(r.real("alpha") * 3, q(1));
}

TEST(Parameters, RejectsUnknownName) {
  EXPECT_ANY_THROW(parameters(FamilyId::gegenbauer, "beta=1", ctx));
}

TEST(Recurrence, HermiteCoefficients) {
  for (long n = 1; n <= 6; ++n) {
    const RecurrencePair r = recurrence(FamilyId::hermite, {}, n, ctx);
    EXPECT_TRUE(near(r.b, q(0)));
    EXPECT_TRUE(near(r.u, q(n, 2))) << n;
  }
}

TEST(Recurrence, ContinuousBannaiItoHandValues) {
  const ParameterVector p = parameters(FamilyId::continuous_bannai_ito, "alpha=0,beta=1,gamma=0,delta=0", ctx);
  EXPECT_TRUE(near(recurrence(FamilyId::continuous_bannai_ito, p, 0, ctx).b, q(1)));
  EXPECT_TRUE(near(recurrence(FamilyId::continuous_bannai_ito, p, 1, ctx).u, q(2)));
}

TEST(Recurrence, GeneralizedGegenbauerFirstStep) {
  const ParameterVector p = parameters(FamilyId::generalized_gegenbauer, "alpha=0,beta=1", ctx);
  EXPECT_TRUE(near(recurrence(FamilyId::generalized_gegenbauer, p, 1, ctx).u, q(1, 3)));
}

TEST(Recurrence, ChiharaFirstPolynomial) {
  const ParameterVector p = parameters(FamilyId::chihara, "alpha=0.5,beta=1.5,gamma=0.25", ctx);
  const auto P = generate(FamilyId::chihara, p, 1, ctx);
  EXPECT_LE(relative_difference(P[1].poly(), poly({-q(1, 4), q(1)})), ctx.tolerance(10));
}

TEST(Recurrence, MeixnerPollaczekSecondPolynomial) {
  const ParameterVector p = parameters(FamilyId::minus1_meixner_pollaczek, "alpha=3/4,gamma=2/3", ctx);
  const Real a = p.real("alpha"), g = p.real("gamma");
  const auto P = generate(FamilyId::minus1_meixner_pollaczek, p, 2, ctx);
  EXPECT_LE(relative_difference(P[2].poly(), poly({-(g * g) - a - q(1, 2), q(0), q(1)})), ctx.tolerance(10));
}

TEST(ClosedForm, LegendreAndHermite) {
  const ParameterVector p = parameters(FamilyId::gegenbauer, "alpha=1/2", ctx);
  EXPECT_LE(relative_difference(closed_form(FamilyId::gegenbauer, p, 2, ctx).poly(), poly({-q(1, 3), q(0), q(1)})),
            ctx.tolerance(10));
  EXPECT_LE(relative_difference(closed_form(FamilyId::hermite, {}, 2, ctx).poly(), poly({-q(1, 2), q(0), q(1)})),
            ctx.tolerance(10));
}

// Hypergeometric Representation: every family, every fixture, n <= 12.
TEST(ClosedForm, MatchesRecurrenceAtAllFixtures) {
  for (FamilyId id : scheme_and_quasi()) {
    if (!spec(id).closed_form) continue;
    for (const auto& text : spec(id).fixtures) {
      const CheckResult r = verify_closed_form(id, parameters(id, text, ctx), 12, ctx);
      EXPECT_EQ(r.status, Status::pass) << r.id << " " << r.notes << " residual " << r.residual;
    }
  }
}

TEST(Weights, ChiharaSupport) {
  const ParameterVector p = parameters(FamilyId::chihara, "alpha=0.5,beta=1.5,gamma=0.25", ctx);
  const WeightSpec w = weight_spec(FamilyId::chihara, p, ctx);
  ASSERT_EQ(w.components.size(), 2u);
  const Real edge = sqrt(q(17)) / 4;
  std::vector<Real> ends;
  for (const auto& c : w.components) {
    ASSERT_TRUE(c.lo && c.hi);
    ends.push_back(*c.lo);
    ends.push_back(*c.hi);
  }
  std::sort(ends.begin(), ends.end());
  EXPECT_LE(abs(ends[0] + edge), ctx.tolerance(10));
  EXPECT_LE(abs(ends[1] + q(1, 4)), ctx.tolerance(10));
  EXPECT_LE(abs(ends[2] - q(1, 4)), ctx.tolerance(10));
  EXPECT_LE(abs(ends[3] - edge), ctx.tolerance(10));
}

TEST(Norms, HandValues) {
  EXPECT_LE(abs(norm(FamilyId::hermite, {}, 1, ctx) - sqrt(ctx.pi()) / 2), ctx.tolerance(10));
  EXPECT_LE(abs(norm(FamilyId::gegenbauer, parameters(FamilyId::gegenbauer, "alpha=1/2", ctx), 0, ctx) - 2),
            ctx.tolerance(10));
  const ParameterVector g = parameters(FamilyId::generalized_symmetric_bannai_ito, "a=1,b=1,c=1", ctx);
  EXPECT_LE(abs(norm(FamilyId::generalized_symmetric_bannai_ito, g, 0, ctx) - q(1, 2)), ctx.tolerance(10));
}

TEST(Admissibility, FlagsOutsideRegion) {
  const FamilyId id = FamilyId::generalized_gegenbauer;
  EXPECT_TRUE(admissibility(id, parameters(id, "alpha=0,beta=1", ctx), ctx).empty());
  EXPECT_FALSE(admissibility(id, parameters(id, "alpha=-2,beta=1", ctx), ctx).empty());
}
