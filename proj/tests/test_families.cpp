#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test;

TEST(Families, EmptyNewSchurIsOne) {
	for (int n = 1; n <= 3; ++n) {
		auto ctx = context(n, n, 2, 4);
		FormalGroupLaw F(ctx, FglMode::universal);
		EXPECT_EQ(new_universal_schur(F, Partition({}, n), Params::generators(ctx, n)), num(ctx, 1).truncated(4));
	}
}

// The universal empty Schur function is not 1: its x1 x2 coefficient is a12.
// The b1 x1 x2 coefficient was computed independently by expanding the
// symmetrizer with truncated polynomial arithmetic in a computer algebra
// system: -32 m1^3 + 36 m1 m2 - 8 m3 = 2 a11 a12 + 2 a13.
TEST(Families, EmptySchurExpansion) {
	auto ctx = context(2, 1, 3, 4);
	FormalGroupLaw F(ctx, FglMode::universal);
	Series s = universal_schur_s(F, Partition({}, 2), Params::generators(ctx, 1));
	EXPECT_EQ(coefficient_of(s, Monomial()), num(ctx, 1));
	EXPECT_EQ(coefficient_of(s, mono(ctx, {{"x1", 1}, {"x2", 1}})), F.a_coefficient(1, 2));
	Series m1 = gen(ctx, "m1"), m2 = gen(ctx, "m2"), m3 = gen(ctx, "m3");
	Series frozen = Rational(-32) * m1 * m1 * m1 + Rational(36) * m1 * m2 - Rational(8) * m3;
	Series b1x1x2 = coefficient_of(s, mono(ctx, {{"b1", 1}, {"x1", 1}, {"x2", 1}}));
	EXPECT_EQ(b1x1x2, frozen);
	EXPECT_EQ(b1x1x2, Rational(2) * F.a_coefficient(1, 1) * F.a_coefficient(1, 2) +
						  Rational(2) * F.a_coefficient(1, 3));
	EXPECT_NE(b1x1x2, F.a_coefficient(1, 1) * F.a_coefficient(1, 2));
	EXPECT_EQ(coefficient_of(s, mono(ctx, {{"b1", 2}})), F.a_coefficient(1, 2));
}

TEST(Families, AdditiveModeGivesClassicalSchur) {
	for (int n = 1; n <= 3; ++n)
		for (int w = 0; w <= 3; ++w)
			for (const auto& lam : partitions_of(w, n)) {
				auto ctx = context(n, 0, 0, w);
				FormalGroupLaw F(ctx, FglMode::additive);
				EXPECT_EQ(universal_schur_s(F, lam, Params()), classical_schur(ctx, lam).truncated(w)) << lam.str();
				EXPECT_EQ(new_universal_schur(F, lam, Params()), classical_schur(ctx, lam).truncated(w))
					<< lam.str();
			}
}

TEST(Families, AdditiveFactorialSchur) {
	auto ctx = context(2, 3, 0, 3);
	FormalGroupLaw F(ctx, FglMode::additive);
	Partition lam({2, 1}, 2);
	Series expect = factorial_schur(ctx, lam, b_values(ctx, 3)).truncated(3);
	EXPECT_EQ(universal_schur_s(F, lam, Params::generators(ctx, required_b(lam))), expect);
	EXPECT_EQ(universal_schur_kl(F, lam, Params::generators(ctx, required_b(lam))), expect);
}

TEST(Families, BBudgetIsChecked) {
	auto ctx = context(5, 3, 1, 3);
	Partition lam({2, 1}, 5);
	EXPECT_EQ(required_b(lam), 6);
	try {
		Params::generators(ctx, required_b(lam));
		FAIL();
	} catch (const InvalidInput& e) {
		EXPECT_NE(std::string(e.what()).find("n_b >= 6"), std::string::npos);
	}
}

TEST(Families, StrictnessIsValidatedForPQ) {
	auto ctx = context(2, 0, 1, 3);
	FormalGroupLaw F(ctx, FglMode::universal);
	EXPECT_THROW(universal_schur_p(F, Partition({1, 1}, 2), Params()), InvalidInput);
	EXPECT_THROW(universal_schur_q(F, Partition({1, 1}, 2), Params()), InvalidInput);
}

TEST(Families, AdditivePAndQ) {
	auto ctx = context(3, 0, 0, 4);
	FormalGroupLaw F(ctx, FglMode::additive);
	for (const char* s : {"1", "2", "2,1", "3,1"}) {
		Partition nu = Partition::parse(s, 3);
		int w = nu.weight();
		EXPECT_EQ(universal_schur_p(F, nu, Params()), classical_schur_p(ctx, nu).truncated(4)) << s;
		EXPECT_EQ(universal_schur_q(F, nu, Params()), classical_schur_q(ctx, nu).truncated(4)) << s;
		EXPECT_TRUE(is_homogeneous(universal_schur_q(F, nu, Params()), w));
	}
}

TEST(Families, HallLittlewoodCollapses) {
	auto ctx = context(3, 0, 2, 4, true);
	FormalGroupLaw F(ctx, FglMode::universal);
	for (const char* s : {"1", "2", "1,1", "2,1", "1,1,1"}) {
		Partition lam = Partition::parse(s, 3);
		Series h = universal_hall_littlewood(F, lam);
		auto at = [&](int t) { return specialize(h, {{ctx->t(), num(ctx, t)}}); };
		EXPECT_EQ(at(1), monomial_symmetric(ctx, lam).truncated(4)) << s;
		EXPECT_EQ(at(0), new_universal_schur(F, lam, Params())) << s;
		if (lam.strict())
			EXPECT_EQ(at(-1), universal_schur_p(F, lam, Params())) << s;
		EXPECT_TRUE(is_symmetric(h, {0, 1, 2}));
		EXPECT_TRUE(is_homogeneous(h, lam.weight()));
	}
}

TEST(Families, HallLittlewoodNeedsT) {
	auto ctx = context(2, 0, 1, 3);
	FormalGroupLaw F(ctx, FglMode::universal);
	EXPECT_THROW(universal_hall_littlewood(F, Partition({1}, 2)), InvalidInput);
}

TEST(Families, MultiplicativeMatchesGrothendieck) {
	auto ctx = context(2, 3, 0, 4, false, true);
	FormalGroupLaw F(ctx, FglMode::multiplicative);
	for (const char* s : {"1", "2", "1,1"}) {
		Partition lam = Partition::parse(s, 2);
		Series g = factorial_grothendieck(ctx, lam, b_values(ctx, 3)).truncated(4);
		EXPECT_EQ(universal_schur_s(F, lam, Params::generators(ctx, required_b(lam))), g) << s;
		EXPECT_EQ(new_universal_schur(F, lam, Params::generators(ctx, required_b(lam))), g) << s;
	}
}

TEST(Families, OutputsAreSymmetricAndHomogeneous) {
	auto ctx = context(3, 4, 2, 4);
	FormalGroupLaw F(ctx, FglMode::universal);
	Partition lam({2, 1}, 3);
	Params b = Params::generators(ctx, required_b(lam));
	for (const Series& s : {universal_schur_s(F, lam, b), new_universal_schur(F, lam, b), universal_schur_kl(F, lam, b)}) {
		EXPECT_TRUE(is_symmetric(s, {0, 1, 2}));
		EXPECT_TRUE(is_homogeneous(s, 3));
	}
}

TEST(Families, SchurSequenceStraightening) {
	// Swapping adjacent entries with I_{i+1} = I_i + 1 kills the additive function.
	auto ctx = context(2, 0, 0, 3);
	FormalGroupLaw F(ctx, FglMode::additive);
	EXPECT_TRUE(universal_schur_seq(F, {0, 1}, {0, 1}, Params()).is_zero());
	EXPECT_EQ(universal_schur_seq(F, {2, 1}, {0, 1}, Params()), classical_schur(ctx, Partition({2, 1}, 2)));
}
