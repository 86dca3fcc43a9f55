#pragma once

#include <string>
#include <vector>

#include "cobschur/series.hpp"

namespace cobschur {

// A partition padded with zeros to length n, with its decomposition into
// maximal blocks of equal parts.
class Partition {
public:
	Partition() = default;
	// Parts must be weakly decreasing and non-negative, at most n of them.
	Partition(std::vector<int> parts, int n);

	// "2,2,1"; an empty string or "0" is the empty partition.
	static Partition parse(const std::string& s, int n);

	int n() const { return static_cast<int>(parts_.size()); }
	int operator[](int i) const { return parts_[i]; }  // 0-based
	const std::vector<int>& parts() const { return parts_; }
	int length() const;
	int weight() const;
	// Positive parts strictly decreasing.
	bool strict() const;

	int num_blocks() const { return static_cast<int>(sizes_.size()); }
	const std::vector<int>& block_sizes() const { return sizes_; }
	// Common part value of block r (0-based).
	int block_value(int r) const { return values_[r]; }
	// Prefix sums: nu(0) = 0, nu(r) = m_1 + ... + m_r.
	int nu(int r) const { return prefix_[r]; }
	// Block containing position i (0-based).
	int block_of(int i) const { return block_of_[i]; }

	std::string str() const;
	bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
	std::vector<int> parts_;
	std::vector<int> sizes_;
	std::vector<int> values_;
	std::vector<int> prefix_;
	std::vector<int> block_of_;
};

// All partitions of weight w with at most n parts, in reverse lex order.
std::vector<Partition> partitions_of(int w, int n);
// Strict partitions of weight w with at most n parts.
std::vector<Partition> strict_partitions_of(int w, int n);

// Minimal-length representatives of S_n / (S_{m_1} x ... x S_{m_d}): the
// permutations increasing on each block, in lexicographic order of images.
std::vector<Permutation> coset_reps(int n, const std::vector<int>& blocks);
// Every element of S_{m_1} x ... x S_{m_d} acting block-wise on 0..n-1.
std::vector<Permutation> block_group(const std::vector<int>& blocks);
std::vector<Permutation> all_permutations(int n);

// Moves a permutation of 0..k-1 onto the listed positions of 0..size-1.
Permutation embed(const Permutation& w, const std::vector<int>& positions, int size);

}  // namespace cobschur
