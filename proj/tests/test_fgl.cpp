#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test;

TEST(Fgl, ModeNames) {
	EXPECT_EQ(parse_mode("additive"), FglMode::additive);
	EXPECT_EQ(mode_name(FglMode::multiplicative), "multiplicative");
	EXPECT_THROW(parse_mode("elliptic"), InvalidInput);
}

TEST(Fgl, Preconditions) {
	EXPECT_THROW(FormalGroupLaw(context(1, 0, 0, 3), FglMode::universal), InvalidInput);
	EXPECT_THROW(FormalGroupLaw(context(1, 0, 0, 3), FglMode::multiplicative), InvalidInput);
	EXPECT_THROW(FormalGroupLaw(context(1, 0, 0, 3), FglMode::additive, {{1, 1}}), InvalidInput);
}

TEST(Fgl, AdditiveAndMultiplicativeLaws) {
	auto ctx = context(2, 0, 0, 4, false, true);
	Series u = gen(ctx, "x1", 4), v = gen(ctx, "x2", 4);
	FormalGroupLaw add(ctx, FglMode::additive);
	EXPECT_EQ(add.formal_sum(u, v), u + v);
	EXPECT_EQ(add.formal_inverse(u), -u);
	EXPECT_EQ(add.n_series(3, u), Rational(3) * u);
	FormalGroupLaw mult(ctx, FglMode::multiplicative);
	Series beta = gen(ctx, "beta");
	EXPECT_EQ(mult.formal_sum(u, v), u + v + beta * u * v);
	EXPECT_EQ(mult.n_series(2, u), Rational(2) * u + beta * u * u);
	EXPECT_EQ(mult.formal_sum(u, mult.formal_inverse(u)), Series(ctx, 4));
}

// Low coefficients of the universal law, from l(F(u,v)) = l(u) + l(v) with
// l(x) = x + m1 x^2 + m2 x^3 + m3 x^4 solved by hand.
TEST(Fgl, UniversalLowCoefficients) {
	auto ctx = context(2, 0, 3, 4);
	FormalGroupLaw F(ctx, FglMode::universal);
	Series m1 = gen(ctx, "m1"), m2 = gen(ctx, "m2");
	EXPECT_EQ(F.a_coefficient(1, 1), Rational(-2) * m1);
	EXPECT_EQ(F.a_coefficient(1, 2), Rational(4) * m1 * m1 - Rational(3) * m2);
	EXPECT_EQ(F.a_coefficient(1, 2), F.a_coefficient(2, 1));
	Series u = gen(ctx, "x1", 4);
	EXPECT_TRUE(F.formal_sum(u, F.formal_inverse(u)).is_zero());
}

TEST(Fgl, LogarithmAndExponentialAreInverse) {
	auto ctx = context(2, 0, 3, 5);
	FormalGroupLaw F(ctx, FglMode::universal);
	Series u = gen(ctx, "x1", 5), v = gen(ctx, "x2", 5);
	EXPECT_EQ(F.exponential(F.logarithm(u)), u);
	EXPECT_EQ(F.logarithm(F.formal_sum(u, v)), F.logarithm(u) + F.logarithm(v));
}

TEST(Fgl, NSeriesRecursion) {
	auto ctx = context(1, 0, 2, 5);
	FormalGroupLaw F(ctx, FglMode::universal);
	Series u = gen(ctx, "x1", 5);
	for (int n = 1; n <= 5; ++n)
		EXPECT_EQ(F.n_series(n, u), F.formal_sum(F.n_series(n - 1, u), u));
	EXPECT_EQ(F.n_series(-1, u), F.formal_inverse(u));
}

TEST(Fgl, TSeriesSpecializes) {
	auto ctx = context(1, 0, 2, 4, true);
	FormalGroupLaw F(ctx, FglMode::universal);
	Series u = gen(ctx, "x1", 4);
	Series tu = F.t_series(u);
	for (int t : {-1, 0, 1, 2})
		EXPECT_EQ(specialize(tu, {{ctx->t(), num(ctx, t)}}), F.n_series(t, u));
}

TEST(Fgl, CustomModeMatchesSpecializedUniversal) {
	auto ctx = context(2, 0, 2, 4);
	FormalGroupLaw U(ctx, FglMode::universal);
	FormalGroupLaw C(ctx, FglMode::custom, {{1, q(1, 2)}, {2, q(-3)}});
	Series u = gen(ctx, "x1", 4), v = gen(ctx, "x2", 4);
	Series spec = specialize(U.formal_sum(u, v), {{ctx->m(1), Series::constant(ctx, q(1, 2), kExactBound)},
												  {ctx->m(2), num(ctx, -3)}});
	EXPECT_EQ(C.formal_sum(u, v), spec);
}

TEST(Fgl, ModeAssignmentRealizesTheMode) {
	auto ctx = context(2, 0, 3, 4, false, true);
	FormalGroupLaw U(ctx, FglMode::universal);
	FormalGroupLaw M(ctx, FglMode::multiplicative);
	Series u = gen(ctx, "x1", 4), v = gen(ctx, "x2", 4);
	EXPECT_EQ(specialize(U.formal_sum(u, v), M.mode_assignment()), M.formal_sum(u, v));
}

TEST(Fgl, InvariantDifferentialDenominator) {
	auto ctx = context(1, 0, 2, 3);
	FormalGroupLaw F(ctx, FglMode::universal);
	auto omega = F.omega_coeffs(3);
	EXPECT_EQ(omega[0], num(ctx, 1));
	for (int i = 1; i <= 3; ++i)
		EXPECT_EQ(omega[i], F.a_coefficient(i, 1));
}
