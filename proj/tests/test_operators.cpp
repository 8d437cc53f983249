#include <gtest/gtest.h>

#include "minus_one/operators.hpp"

using namespace minus_one;

namespace {

const PrecisionContext ctx(50);

std::vector<FamilyId> with_operator() {
  std::vector<FamilyId> out;
  for (const auto& f : catalog()) {
    if (f.role == Role::scheme && f.eigen) out.push_back(f.id);
  }
  return out;
}

ParameterVector first_fixture(FamilyId id) {
  const FamilySpec& f = spec(id);
  return f.fixtures.empty() ? ParameterVector{} : parameters(id, f.fixtures.front(), ctx);
}

}  // namespace

TEST(Operators, EveryOrthogonalFamilyHasOne) { EXPECT_EQ(with_operator().size(), 14u); }

// Hermite L applied to x gives eps x.
TEST(Operators, HermiteOnLinear) {
  const Real eps = ctx.ratio(1, 2);
  const EigenSystem sys = eigen_system(FamilyId::hermite, {}, eps, ctx);
  const Polynomial x = Polynomial::identity(ctx.bits());
  const auto image = is_polynomial(apply_unreduced(sys.op, x, ctx), ctx);
  ASSERT_TRUE(image);
  EXPECT_LE((*image - x * CNum(eps)).norm(), ctx.tolerance(10));
  EXPECT_LE(abs(sys.eigenvalue(1) - CNum(eps)), ctx.tolerance(10));
}

TEST(Operators, GeneralizedSymmetricBannaiItoFirstEigenvalue) {
  const FamilyId id = FamilyId::generalized_symmetric_bannai_ito;
  const EigenSystem sys = eigen_system(id, parameters(id, "a=1,b=1,c=1", ctx), ctx.ratio(1, 2), ctx);
  EXPECT_LE(abs(sys.eigenvalue(1) - CNum(ctx.ratio(1, 2))), ctx.tolerance(10));
}

TEST(Operators, GegenbauerEigenvalueSplit) {
  const FamilyId id = FamilyId::gegenbauer;
  const Real al = ctx.ratio(1, 2), eps = ctx.ratio(1, 2);
  const EigenSystem sys = eigen_system(id, parameters(id, "alpha=1/2", ctx), eps, ctx);
  for (long n = 0; n <= 4; ++n) {
    EXPECT_LE(abs(sys.eigenvalue(2 * n) - CNum(al * n + n * n)), ctx.tolerance(10));
    EXPECT_LE(abs(sys.eigenvalue(2 * n + 1) - CNum((al + 1) * n + n * n + eps)), ctx.tolerance(10));
  }
}

// Difference Equation: n <= 10 at both free-parameter values, plus diagonality.
TEST(Operators, EigenEquationsHold) {
  for (FamilyId id : with_operator()) {
    const ParameterVector p = first_fixture(id);
    for (const Real& free : {ctx.ratio(1, 2), ctx.integer(2)}) {
      for (long n = 0; n <= 10; ++n) {
        const CheckResult r = verify_eigen(id, p, n, free, ctx, ctx.tolerance(15));
        EXPECT_EQ(r.status, Status::pass) << r.id << " n=" << n << " residual " << r.residual << " " << r.notes;
      }
      const CheckResult d = verify_diagonal(id, p, 8, free, ctx);
      EXPECT_EQ(d.status, Status::pass) << d.id << " " << d.notes;
    }
  }
}

TEST(Operators, WrongEigenvalueFails) {
  const FamilyId id = FamilyId::hermite;
  const EigenSystem sys = eigen_system(id, {}, ctx.ratio(1, 2), ctx);
  const Polynomial p3 = generate(id, {}, 3, ctx).back().poly();
  const EigenResidual r = eigen_residual(sys.op, sys.eigenvalue(3) + CNum(ctx.ratio(1, 1000)), p3, ctx.tolerance(10), ctx);
  EXPECT_EQ(r.status, Status::fail);
}

TEST(Convention, ExactlyOneShiftReflectionOrder) {
  for (FamilyId id : {FamilyId::continuous_bannai_ito, FamilyId::continuous_minus1_hahn_1,
                      FamilyId::continuous_minus1_hahn_2}) {
    const ConventionReport c = resolve_composition_convention(id, first_fixture(id), ctx);
    ASSERT_TRUE(c.adopted.has_value()) << to_string(id);
    EXPECT_EQ(*c.adopted, ShiftReflectOrder::reflect_then_shift);
    EXPECT_FALSE(c.printed_coefficient_passes);
  }
}

TEST(Operators, SigmaShiftIsLinear) {
  const FamilyId id = FamilyId::generalized_symmetric_bannai_ito;
  const ParameterVector p = first_fixture(id);
  for (long n = 1; n <= 4; ++n) {
    const CheckResult r = verify_sigma_shift(id, p, n, ctx.integer(3), ctx);
    EXPECT_EQ(r.status, Status::pass) << n << " " << r.residual;
  }
}

TEST(Operators, ConjugateShiftCoefficients) {
  const FamilyId id = FamilyId::continuous_bannai_ito;
  const CheckResult r = verify_conjugate_coefficients(id, first_fixture(id), ctx);
  EXPECT_EQ(r.status, Status::pass) << r.residual;
}
