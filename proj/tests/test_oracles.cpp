#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test;

TEST(Oracles, DeterminantMatchesTableaux) {
	for (int n = 1; n <= 3; ++n)
		for (int w = 0; w <= 4; ++w)
			for (const auto& lam : partitions_of(w, n)) {
				auto ctx = context(n, w + n, 0, 6);
				EXPECT_EQ(classical_schur(ctx, lam), schur_by_tableaux(ctx, lam)) << lam.str();
				auto b = b_values(ctx, w + n);
				EXPECT_EQ(factorial_schur(ctx, lam, b), factorial_schur_by_tableaux(ctx, lam, b)) << lam.str();
			}
}

TEST(Oracles, SmallSchurValues) {
	auto ctx = context(3, 0, 0, 5);
	EXPECT_EQ(classical_schur(ctx, Partition({2, 1}, 3)).size(), 7u);
	EXPECT_EQ(classical_schur(ctx, Partition({1, 1}, 3)), elementary_symmetric(ctx, {0, 1, 2}, 2));
	EXPECT_EQ(classical_schur(ctx, Partition({3}, 3)), complete_symmetric(ctx, {0, 1, 2}, 3));
	EXPECT_EQ(classical_schur(ctx, Partition({}, 3)), num(ctx, 1));
}

TEST(Oracles, FactorialSchurOneVariable) {
	auto ctx = context(1, 2, 0, 5);
	// (x1 | b)^2 = (x1 + b1)(x1 + b2).
	Series expect = (gen(ctx, "x1") + gen(ctx, "b1")) * (gen(ctx, "x1") + gen(ctx, "b2"));
	EXPECT_EQ(factorial_schur(ctx, Partition({2}, 1), b_values(ctx, 2)), expect);
}

TEST(Oracles, HallLittlewoodSpecializations) {
	auto ctx = context(3, 0, 0, 5, true);
	for (const char* s : {"1", "2,1", "1,1", "3"}) {
		Partition lam = Partition::parse(s, 3);
		Series p = classical_hall_littlewood(ctx, lam);
		EXPECT_EQ(specialize(p, {{ctx->t(), num(ctx, 0)}}), classical_schur(ctx, lam)) << s;
		EXPECT_EQ(specialize(p, {{ctx->t(), num(ctx, 1)}}), monomial_symmetric(ctx, lam)) << s;
	}
}

TEST(Oracles, SchurQIsAPowerOfTwoTimesP) {
	auto ctx = context(3, 0, 0, 5);
	for (const char* s : {"1", "2,1", "3,1"}) {
		Partition nu = Partition::parse(s, 3);
		EXPECT_EQ(classical_schur_q(ctx, nu), Rational(1 << nu.length()) * classical_schur_p(ctx, nu)) << s;
	}
	EXPECT_THROW(classical_schur_p(ctx, Partition({1, 1}, 3)), InvalidInput);
}

TEST(Oracles, GrothendieckDegenerations) {
	auto ctx = context(2, 3, 0, 6, false, true);
	auto b = b_values(ctx, 3);
	EXPECT_EQ(factorial_grothendieck(ctx, Partition({}, 2), b), num(ctx, 1));
	for (const char* s : {"1", "2", "1,1", "2,1"}) {
		Partition lam = Partition::parse(s, 2);
		Series g = factorial_grothendieck(ctx, lam, b);
		EXPECT_EQ(specialize(g, {{ctx->beta(), num(ctx, 0)}}), factorial_schur(ctx, lam, b)) << s;
	}
}

TEST(Oracles, MonomialSymmetric) {
	auto ctx = context(3, 0, 0, 5);
	EXPECT_EQ(monomial_symmetric(ctx, Partition({1, 1}, 3)), elementary_symmetric(ctx, {0, 1, 2}, 2));
	EXPECT_EQ(monomial_symmetric(ctx, Partition({2, 1}, 3)).size(), 6u);
}

TEST(Oracles, ThomPorteousDeterminant) {
	auto ctx = context(2, 2, 0, 6);
	Series x1 = gen(ctx, "x1"), x2 = gen(ctx, "x2"), b1 = gen(ctx, "b1"), b2 = gen(ctx, "b2");
	// The matrix has size e - r; an empty one gives 1.
	EXPECT_EQ(thom_porteous_determinant(ctx, 0, 1, 0), num(ctx, 1));
	EXPECT_EQ(thom_porteous_determinant(ctx, 1, 2, 1), num(ctx, 1));
	// e = 1, f = 2, r = 0: c_2(F - E) with c(F - E) = (1 + x1)(1 + x2) / (1 + b1).
	EXPECT_EQ(thom_porteous_determinant(ctx, 1, 2, 0), x1 * x2 - b1 * (x1 + x2) + b1 * b1);
	// e = 2, f = 1, r = 0: c_1^2 - c_2 with c(F - E) = (1 + x1) / ((1 + b1)(1 + b2)).
	Series c1 = x1 - b1 - b2;
	Series c2 = b1 * b1 + b1 * b2 + b2 * b2 - x1 * (b1 + b2);
	EXPECT_EQ(thom_porteous_determinant(ctx, 2, 1, 0), c1 * c1 - c2);
}

TEST(Oracles, ExactUnivariateDivision) {
	auto ctx = context(1, 0, 0, 6);
	Series x = gen(ctx, "x1");
	Series f = x * x - num(ctx, 1);
	EXPECT_EQ(divide_by_univariate(f, ctx->x(0), {q(-1), q(1)}), x + num(ctx, 1));
	EXPECT_THROW(divide_by_univariate(f + x, ctx->x(0), {q(-1), q(1)}), AssertionFailure);
}
