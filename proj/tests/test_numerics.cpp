#include <gtest/gtest.h>

#include <complex>
#include <random>
#include <vector>

#include "minus_one/numerics.hpp"

using namespace minus_one;

namespace {

const PrecisionContext ctx(50);

CNum cnum(double re, double im = 0) { return CNum(ctx.from_double(re), ctx.from_double(im)); }

Real rel_err(const CNum& got, const CNum& want) { return abs(got - want) / abs(want); }

}  // namespace

TEST(Precision, RejectsTooFewDigits) { EXPECT_THROW(PrecisionContext(10), std::invalid_argument); }

TEST(Precision, ToleranceScale) {
  EXPECT_EQ(ctx.tolerance(10), ctx.pow10(-40));
  EXPECT_GE(ctx.bits(), 166);
}

TEST(Real, ParsesDecimalAndRatio) {
  Real third = ctx.parse("1/3");
  EXPECT_LT(abs(third * 3 - 1), ctx.epsilon());
  EXPECT_EQ(ctx.parse("0.25"), ctx.ratio(1, 4));
  EXPECT_THROW(ctx.parse("abc"), std::invalid_argument);
}

TEST(Real, ValueSemanticsKeepPrecision) {
  Real a = ctx.ratio(1, 3);
  Real b = a;
  Real c = std::move(a);
  EXPECT_EQ(b, c);
  EXPECT_EQ(b.precision(), ctx.bits());
  Real low(1, 64);
  EXPECT_EQ((low + c).precision(), ctx.bits());
}

TEST(Gamma, FactorialIdentity) {
  EXPECT_LT(rel_err(gamma(cnum(5), ctx), cnum(24)), ctx.tolerance(2));
  EXPECT_LT(rel_err(log_gamma(cnum(5), ctx), log(cnum(24))), ctx.tolerance(4));
}

TEST(Gamma, HalfIsSqrtPi) {
  CNum want(sqrt(ctx.pi()));
  EXPECT_LT(rel_err(gamma(cnum(0.5), ctx), want), ctx.tolerance(2));
  EXPECT_LT(rel_err(exp(log_gamma(CNum(ctx.ratio(1, 2)), ctx)), want), ctx.tolerance(4));
}

TEST(Gamma, ModulusOnePlusI) {
  // Gamma(z) Gamma(1 - z) = pi / sin(pi z) at z = i gives |Gamma(1+i)|^2 = pi / sinh(pi).
  CNum g = gamma(cnum(1, 1), ctx);
  Real want = ctx.pi() / sinh(ctx.pi());
  EXPECT_LT(abs(abs2(g) / want - 1), ctx.tolerance(4));
}

TEST(Gamma, PolesThrow) {
  EXPECT_THROW(gamma(cnum(0), ctx), PoleError);
  EXPECT_THROW(gamma(cnum(-3), ctx), PoleError);
  EXPECT_THROW(log_abs_gamma(cnum(-2), ctx), PoleError);
  EXPECT_NO_THROW(gamma(cnum(-3, 1e-3), ctx));
}

TEST(Gamma, RecurrenceOnStrip) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-8.5, 8.5);
  for (int i = 0; i < 100; ++i) {
    CNum z = cnum(re(rng), im(rng));
    CNum g1 = gamma(z + 1, ctx);
    EXPECT_LT(abs(g1 - z * gamma(z, ctx)), ctx.tolerance(4) * abs(g1));
  }
}

TEST(Gamma, ReflectionAwayFromPoles) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-4.0, 4.0);
  for (int i = 0; i < 60; ++i) {
    CNum z = cnum(re(rng), im(rng));
    CNum lhs = gamma(z, ctx) * gamma(1 - z, ctx) * sin(z * ctx.pi()) / ctx.pi();
    EXPECT_LT(abs(lhs - 1), ctx.tolerance(4));
  }
}

TEST(Gamma, ConjugationSymmetry) {
  CNum z = cnum(0.3, 2.7);
  CNum a = gamma(conj(z), ctx);
  CNum b = conj(gamma(z, ctx));
  EXPECT_LT(abs(a - b), ctx.tolerance(4) * abs(a));
}

TEST(Gamma, LargeImaginaryPart) {
  // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
  for (double y : {10.0, 40.0, 150.0}) {
    Real want = ctx.pi() / cosh(ctx.from_double(y) * ctx.pi());
    Real got = exp(2 * log_abs_gamma(cnum(0.5, y), ctx));
    EXPECT_LT(abs(got / want - 1), ctx.tolerance(4)) << y;
  }
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(cnum(2.5, 1), 0), cnum(1));
  EXPECT_EQ(pochhammer(cnum(3), 2), cnum(12));
  EXPECT_EQ(pochhammer(ctx.ratio(1, 2), 3), ctx.ratio(15, 8));
}

TEST(Pochhammer, SplitsAtAnyIndex) {
  CNum a = cnum(0.75, -1.25);
  for (long m = 0; m <= 5; ++m) {
    for (long n = 0; n <= 5; ++n) {
      CNum lhs = pochhammer(a, m + n);
      CNum rhs = pochhammer(a, m) * pochhammer(a + m, n);
      EXPECT_LT(abs(lhs - rhs), ctx.tolerance(2) * abs(lhs));
    }
  }
}

TEST(HypPfq, SingleTerm) {
  std::vector<CNum> num{cnum(0), cnum(2.5), cnum(1, 1), cnum(-0.5)};
  std::vector<CNum> den{cnum(1.5), cnum(3), cnum(0.25)};
  EXPECT_EQ(hyp_pfq_terminating(num, den, cnum(1)), cnum(1));
}

TEST(HypPfq, TwoTerms) {
  CNum b = cnum(2.5), c = cnum(0.75), z = cnum(0.3, 0.1);
  std::vector<CNum> num{cnum(-1), b}, den{c};
  CNum want = 1 - b * z / c;
  EXPECT_LT(abs(hyp_pfq_terminating(num, den, z) - want), ctx.tolerance(2));
  std::vector<CNum> n1{cnum(-1)}, d1{CNum(ctx.ratio(1, 2))};
  EXPECT_LT(abs(hyp_pfq_terminating(n1, d1, cnum(1)) + 1), ctx.tolerance(2));
}

TEST(HypPfq, MatchesDoubleBruteForce) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  for (int n = 0; n <= 10; ++n) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng), z = u(rng) / 3;
    std::vector<CNum> num{cnum(-n), cnum(a), cnum(b)}, den{cnum(c), cnum(d)};
    double term = 1, total = 1;
    for (int k = 0; k < n; ++k) {
      term *= (-n + k) * (a + k) * (b + k) / ((c + k) * (d + k)) * z / (k + 1);
      total += term;
    }
    double got = hyp_pfq_terminating(num, den, cnum(z)).re.to_double();
    EXPECT_NEAR(got, total, 1e-12 * std::max(1.0, std::abs(total))) << n;
  }
}

TEST(HypPfq, Errors) {
  std::vector<CNum> num{cnum(-3), cnum(1)}, bad{cnum(-1)}, ok{cnum(-3)};
  EXPECT_THROW(hyp_pfq_terminating(num, bad, cnum(1)), ZeroDenominatorError);
  EXPECT_NO_THROW(hyp_pfq_terminating(num, ok, cnum(1)));
  std::vector<CNum> nonterm{cnum(0.5)};
  EXPECT_THROW(hyp_pfq_terminating(nonterm, ok, cnum(1)), std::invalid_argument);
}
