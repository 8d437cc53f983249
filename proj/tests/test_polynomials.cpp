#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "minus_one/polynomials.hpp"

using namespace minus_one;

namespace {

const PrecisionContext ctx(50);

CNum cnum(double re, double im = 0) { return CNum(ctx.from_double(re), ctx.from_double(im)); }

Polynomial poly(std::initializer_list<double> c) {
  std::vector<CNum> v;
  for (double x : c) v.push_back(cnum(x));
  return Polynomial(std::move(v));
}

Polynomial random_poly(std::mt19937& rng, int degree) {
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<CNum> v;
  for (int k = 0; k <= degree; ++k) v.push_back(cnum(u(rng), u(rng)));
  return Polynomial(std::move(v));
}

const Polynomial x = Polynomial::identity(ctx.bits());

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(x * x, poly({0, 0, 1}));
  EXPECT_EQ(poly({-1, 1}) + poly({1, 1}), poly({0, 2}));
  EXPECT_EQ(scale(poly({1, 0, 1}), cnum(2)), poly({2, 0, 2}));
  EXPECT_EQ((poly({1, 1}) - poly({1, 1})).degree(), -1);
}

TEST(Polynomial, Evaluate) {
  Polynomial h2 = poly({-0.5, 0, 1});
  EXPECT_EQ(evaluate(h2, cnum(0)), cnum(-0.5));
  EXPECT_EQ(evaluate(x, cnum(0, 1)), cnum(0, 1));
  EXPECT_EQ(evaluate(h2, cnum(1)), cnum(0.5));
}

TEST(Polynomial, Reflect) {
  EXPECT_EQ(reflect(poly({0, 1, 1})), poly({0, -1, 1}));
  EXPECT_EQ(reflect(poly({3, 0, 1})), poly({3, 0, 1}));
  std::mt19937 rng(1);
  Polynomial p = random_poly(rng, 5), q = random_poly(rng, 4);
  EXPECT_EQ(reflect(reflect(p)), p);
  EXPECT_TRUE(approx_equal(reflect(p * q), reflect(p) * reflect(q), ctx));
}

TEST(Polynomial, Differentiate) {
  EXPECT_EQ(differentiate(poly({0, 0, 0, 1})), poly({0, 0, 3}));
  EXPECT_TRUE(differentiate(poly({7})).is_zero());
  EXPECT_EQ(differentiate(poly({-0.5, 0, 1})), poly({0, 2}));
  std::mt19937 rng(2);
  Polynomial p = random_poly(rng, 6), q = random_poly(rng, 3);
  EXPECT_TRUE(approx_equal(differentiate(p * q), differentiate(p) * q + p * differentiate(q), ctx));
}

TEST(Polynomial, Shift) {
  EXPECT_EQ(shift(x, cnum(0, 1)), Polynomial::linear(cnum(0, 1), cnum(1)));
  EXPECT_EQ(shift(x * x, cnum(1)), poly({1, 2, 1}));
  std::mt19937 rng(3);
  Polynomial p = random_poly(rng, 7);
  EXPECT_TRUE(approx_equal(shift(shift(p, cnum(0, 1)), cnum(0, -1)), p, ctx));
}

TEST(Polynomial, ShiftCommutesWithEvaluation) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(rng, 1 + i % 9);
    CNum d = cnum(u(rng), u(rng)), z = cnum(u(rng), u(rng));
    CNum a = evaluate(shift(p, d), z), b = evaluate(p, z + d);
    EXPECT_LE(abs(a - b), ctx.tolerance(6) * max(abs(b), Real(1, ctx.bits())));
  }
}

TEST(Polynomial, DivMod) {
  auto [q, r] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(q, poly({1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(Polynomial, MonicNormalizesExactly) {
  MonicPolynomial m(poly({1, 2, 3}));
  EXPECT_EQ(m[2], cnum(1));
  EXPECT_EQ(m.degree(), 2);
  EXPECT_THROW(MonicPolynomial{Polynomial{}}, std::domain_error);
}

TEST(Rational, ReduceExamples) {
  RationalFunction a(poly({-1, 0, 1}), poly({-1, 1}));
  auto pa = is_polynomial(a, ctx);
  ASSERT_TRUE(pa);
  EXPECT_TRUE(approx_equal(*pa, poly({1, 1}), ctx));

  RationalFunction b(x, x * x);
  RationalFunction rb = rational_reduce(b, ctx);
  EXPECT_EQ(rb.denominator().degree(), 1);
  EXPECT_EQ(rb.numerator().degree(), 0);
  EXPECT_FALSE(is_polynomial(b, ctx));

  RationalFunction c(poly({-0.0625, 0, 1}), poly({0.25, 1}));
  auto pc = is_polynomial(c, ctx);
  ASSERT_TRUE(pc);
  EXPECT_TRUE(approx_equal(*pc, poly({-0.25, 1}), ctx));
}

TEST(Rational, ReduceIsIdempotent) {
  RationalFunction r(poly({2, -3, 1}) * poly({0, 1}), poly({-1, 1}) * poly({0, 0, 1}) * poly({5, 1}));
  RationalFunction once = rational_reduce(r, ctx);
  RationalFunction twice = rational_reduce(once, ctx);
  EXPECT_TRUE(approx_equal(once.numerator(), twice.numerator(), ctx));
  EXPECT_TRUE(approx_equal(once.denominator(), twice.denominator(), ctx));
  EXPECT_EQ(once.denominator().degree(), 2);
}

TEST(Rational, RecoversProductOverFactor) {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Polynomial p = random_poly(rng, 1 + i % 8), q = random_poly(rng, 1 + i % 4);
    auto back = is_polynomial(RationalFunction(p * q, q), ctx);
    ASSERT_TRUE(back);
    EXPECT_LE(relative_difference(*back, p), ctx.tolerance(6));
  }
}

TEST(Rational, AmbiguousRemainderThrows) {
  // remainder of relative size 10^-42 sits between the two thresholds
  Polynomial num = poly({-1, 0, 1}) + Polynomial::constant(CNum(ctx.pow10(-42)));
  EXPECT_THROW(is_polynomial(RationalFunction(num, poly({-1, 1})), ctx), ReductionAmbiguityError);
  Polynomial tiny = poly({-1, 0, 1}) + Polynomial::constant(CNum(ctx.pow10(-47)));
  EXPECT_TRUE(is_polynomial(RationalFunction(tiny, poly({-1, 1})), ctx));
}

TEST(Rational, SumOverCommonDenominator) {
  std::vector<RationalFunction> terms{RationalFunction(poly({1}), poly({0, 0, 1})),
                                      RationalFunction(poly({0, 2}), poly({0, 0, 0, 1})),
                                      RationalFunction(poly({3}), poly({1, 2}))};
  RationalFunction s = sum(terms, ctx);
  EXPECT_EQ(s.denominator().degree(), 4);
  CNum z = cnum(0.7, 0.2);
  CNum want = 1 / (z * z) + 2 * z / (z * z * z) + 3 / (1 + 2 * z);
  EXPECT_LT(abs(s.evaluate(z) - want), ctx.tolerance(4));
}

TEST(Polynomial, HypergeometricInX) {
  // 1F1(-1; 1/2; x^2) = 1 - 2x^2
  std::vector<Polynomial> num{Polynomial::constant(cnum(-1))};
  std::vector<CNum> den{cnum(0.5)};
  EXPECT_TRUE(approx_equal(hyp_pfq_polynomial(num, den, x * x), poly({1, 0, -2}), ctx));
}
