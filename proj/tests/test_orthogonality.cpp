#include <gtest/gtest.h>

#include "minus_one/verify.hpp"

using namespace minus_one;

namespace {

const PrecisionContext ctx(50);

ParameterVector first_fixture(FamilyId id) {
  const FamilySpec& f = spec(id);
  return f.fixtures.empty() ? ParameterVector{} : parameters(id, f.fixtures.front(), ctx);
}

Real relative(const Real& got, const Real& want) { return abs(got - want) / abs(want); }

}  // namespace

TEST(Quadrature, GaussianIntegral) {
  const WeightSpec w = weight_spec(FamilyId::hermite, {}, ctx);
  const QuadratureResult r = integrate(w, [](const Real& x) { return Real(1, x.precision()); }, ctx.tolerance(10), ctx);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(relative(r.value, sqrt(ctx.pi())), ctx.tolerance(10));
}

TEST(Quadrature, LegendreMass) {
  const FamilyId id = FamilyId::gegenbauer;
  const QuadratureResult r = integrate(weight_spec(id, parameters(id, "alpha=1/2", ctx), ctx),
                                       [](const Real& x) { return Real(1, x.precision()); }, ctx.tolerance(10), ctx);
  EXPECT_LE(relative(r.value, ctx.integer(2)), ctx.tolerance(10));
}

// Generalized Symmetric Bannai-Ito / Orthogonality Relation at a = b = c = 1.
TEST(Quadrature, GammaModulusMass) {
  const FamilyId id = FamilyId::generalized_symmetric_bannai_ito;
  const QuadratureResult r = integrate(weight_spec(id, parameters(id, "a=1,b=1,c=1", ctx), ctx),
                                       [](const Real& x) { return Real(1, x.precision()); }, ctx.tolerance(30), ctx);
  EXPECT_LE(relative(r.value, ctx.ratio(1, 2)), PrecisionContext(15).tolerance(0));
}

TEST(Gram, HermiteNormOne) {
  const GramReport g = gram(FamilyId::hermite, {}, 3, ctx);
  EXPECT_TRUE(g.converged);
  EXPECT_LE(relative(g.entries[1][1], sqrt(ctx.pi()) / 2), ctx.tolerance(20));
  EXPECT_LE(abs(g.entries[1][0]), ctx.tolerance(20));
}

TEST(Gram, AllOrthogonalFamilies) {
  for (const auto& f : catalog()) {
    if (f.role != Role::scheme) continue;
    for (const CheckResult& r : verify_gram(f.id, first_fixture(f.id), 8, ctx)) {
      EXPECT_EQ(r.status, Status::pass) << r.id << " " << r.check << " residual " << r.residual << " " << r.notes;
      EXPECT_LE(r.residual, r.check.find("off") != std::string::npos ? 1e-25 : 1e-17) << r.id;
    }
  }
}

TEST(Moments, MatchRecurrence) {
  const FamilyId id = FamilyId::little_minus1_jacobi;
  const CheckResult r = verify_moments(id, first_fixture(id), 8, ctx);
  EXPECT_EQ(r.status, Status::pass) << r.residual;
}

TEST(Favard, PositiveUpTo200) {
  for (const auto& f : catalog()) {
    if (f.role != Role::scheme) continue;
    for (const auto& text : f.fixtures) {
      const ParameterVector p = parameters(f.id, text, ctx);
      if (!admissibility(f.id, p, ctx).empty()) continue;
      const CheckResult r = favard_scan(f.id, p, 200, ctx);
      EXPECT_EQ(r.status, Status::pass) << r.id << " " << r.notes;
    }
  }
  const FamilyId gg = FamilyId::generalized_gegenbauer;
  EXPECT_EQ(favard_scan(gg, parameters(gg, "alpha=0,beta=1", ctx), 200, ctx).status, Status::pass);
}

TEST(Favard, ComplementaryIsNotPositive) {
  const FamilyId id = FamilyId::continuous_complementary_bannai_ito;
  const CheckResult r = favard_scan(id, parameters(id, "a1=1/2,b1=1/3,a2=3/4,b2=1", ctx), 10, ctx);
  EXPECT_EQ(r.status, Status::fail);
  for (const CheckResult& c : verify_complementary_classification(ctx)) {
    EXPECT_EQ(c.status, Status::pass) << c.check << " " << c.notes;
  }
}
