#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace test;

TEST(Partition, ParseAndPad) {
	Partition p = Partition::parse("2,2,1", 5);
	EXPECT_EQ(p.parts(), (std::vector<int>{2, 2, 1, 0, 0}));
	EXPECT_EQ(p.length(), 3);
	EXPECT_EQ(p.weight(), 5);
	EXPECT_EQ(p.str(), "(2,2,1)");
	EXPECT_EQ(Partition::parse("0", 2).weight(), 0);
	EXPECT_EQ(Partition::parse("", 2).n(), 2);
}

TEST(Partition, Rejects) {
	EXPECT_THROW(Partition::parse("1,2", 3), InvalidInput);
	EXPECT_THROW(Partition::parse("3,2,1", 2), InvalidInput);
	EXPECT_THROW(Partition::parse("2,x", 3), InvalidInput);
	EXPECT_THROW(Partition::parse("-1", 3), InvalidInput);
}

TEST(Partition, Blocks) {
	Partition p({3, 3, 1, 0}, 5);
	EXPECT_EQ(p.block_sizes(), (std::vector<int>{2, 1, 2}));
	EXPECT_EQ(p.block_value(0), 3);
	EXPECT_EQ(p.block_value(2), 0);
	EXPECT_EQ(p.nu(0), 0);
	EXPECT_EQ(p.nu(2), 3);
	EXPECT_EQ(p.block_of(4), 2);
	EXPECT_FALSE(p.strict());
	EXPECT_TRUE(Partition({3, 1}, 4).strict());
}

TEST(Partition, Enumeration) {
	EXPECT_EQ(partitions_of(4, 4).size(), 5u);
	EXPECT_EQ(partitions_of(4, 2).size(), 3u);
	EXPECT_EQ(partitions_of(0, 3).size(), 1u);
	EXPECT_EQ(strict_partitions_of(6, 3).size(), 4u);
	EXPECT_EQ(partitions_of(4, 4).front().str(), "(4)");
}

TEST(Permutations, CosetRepresentatives) {
	auto reps = coset_reps(4, {2, 1, 1});
	EXPECT_EQ(reps.size(), 12u);
	for (const auto& w : reps)
		EXPECT_LT(w(0), w(1));
	EXPECT_EQ(coset_reps(4, {2, 2}).size(), 6u);
	EXPECT_EQ(block_group({2, 2}).size(), 4u);
	EXPECT_EQ(all_permutations(4).size(), 24u);
	// Every permutation factors uniquely as a representative times a block element.
	std::set<std::vector<int>> seen;
	for (const auto& w : coset_reps(4, {2, 2}))
		for (const auto& v : block_group({2, 2}))
			seen.insert(compose(w, v).images);
	EXPECT_EQ(seen.size(), 24u);
}

TEST(Permutations, Embed) {
	Permutation swap{{1, 0}};
	Permutation e = embed(swap, {1, 3}, 4);
	EXPECT_EQ(e.images, (std::vector<int>{0, 3, 2, 1}));
}
