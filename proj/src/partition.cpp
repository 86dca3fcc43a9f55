#include "cobschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cobschur {

Partition::Partition(std::vector<int> parts, int n) : parts_(std::move(parts)) {
	if (n < 0)
		throw InvalidInput("partition: negative n");
	while (!parts_.empty() && parts_.back() == 0 && static_cast<int>(parts_.size()) > n)
		parts_.pop_back();
	if (static_cast<int>(parts_.size()) > n)
		throw InvalidInput("partition: more than n = " + std::to_string(n) + " parts");
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (parts_[i] < 0)
			throw InvalidInput("partition: negative part");
		if (i > 0 && parts_[i] > parts_[i - 1])
			throw InvalidInput("partition: parts must be weakly decreasing");
	}
	parts_.resize(n, 0);
	prefix_.push_back(0);
	for (int i = 0; i < n; ++i) {
		if (i == 0 || parts_[i] != parts_[i - 1]) {
			sizes_.push_back(0);
			values_.push_back(parts_[i]);
		}
		++sizes_.back();
		block_of_.push_back(static_cast<int>(sizes_.size()) - 1);
	}
	for (int m : sizes_)
		prefix_.push_back(prefix_.back() + m);
}

Partition Partition::parse(const std::string& s, int n) {
	std::vector<int> parts;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (item.empty())
			continue;
		std::size_t used = 0;
		int v = 0;
		try {
			v = std::stoi(item, &used);
		} catch (const std::exception&) {
			throw InvalidInput("partition: cannot parse '" + item + "'");
		}
		if (used != item.size())
			throw InvalidInput("partition: cannot parse '" + item + "'");
		parts.push_back(v);
	}
	while (!parts.empty() && parts.back() == 0)
		parts.pop_back();
	return Partition(parts, n);
}

int Partition::length() const {
	return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::weight() const {
	return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::strict() const {
	for (int i = 1; i < n(); ++i)
		if (parts_[i] > 0 && parts_[i] >= parts_[i - 1])
			return false;
	return true;
}

std::string Partition::str() const {
	std::string s = "(";
	for (int i = 0; i < length(); ++i)
		s += (i ? "," : "") + std::to_string(parts_[i]);
	return s + ")";
}

namespace {

void partitions_rec(int rest, int max_part, int slots, std::vector<int>& cur, int n, std::vector<Partition>& out) {
	if (rest == 0) {
		out.emplace_back(cur, n);
		return;
	}
	if (slots == 0)
		return;
	for (int p = std::min(rest, max_part); p >= 1; --p) {
		cur.push_back(p);
		partitions_rec(rest - p, p, slots - 1, cur, n, out);
		cur.pop_back();
	}
}

}  // namespace

std::vector<Partition> partitions_of(int w, int n) {
	std::vector<Partition> out;
	std::vector<int> cur;
	partitions_rec(w, w, n, cur, n, out);
	return out;
}

std::vector<Partition> strict_partitions_of(int w, int n) {
	std::vector<Partition> out;
	for (auto& p : partitions_of(w, n))
		if (p.strict())
			out.push_back(p);
	return out;
}

std::vector<Permutation> coset_reps(int n, const std::vector<int>& blocks) {
	if (std::accumulate(blocks.begin(), blocks.end(), 0) != n)
		throw InvalidInput("coset_reps: block sizes must sum to n");
	std::vector<int> block_of;
	for (std::size_t r = 0; r < blocks.size(); ++r)
		block_of.insert(block_of.end(), blocks[r], static_cast<int>(r));
	std::vector<Permutation> out;
	std::vector<int> images(n);
	std::vector<bool> used(n, false);
	// Depth-first over positions with increasing choices gives lex order.
	auto rec = [&](auto&& self, int pos) -> void {
		if (pos == n) {
			out.push_back(Permutation{images});
			return;
		}
		int lo = 0;
		if (pos > 0 && block_of[pos - 1] == block_of[pos])
			lo = images[pos - 1] + 1;
		for (int v = lo; v < n; ++v) {
			if (used[v])
				continue;
			used[v] = true;
			images[pos] = v;
			self(self, pos + 1);
			used[v] = false;
		}
	};
	rec(rec, 0);
	return out;
}

std::vector<Permutation> all_permutations(int n) {
	std::vector<Permutation> out;
	std::vector<int> images(n);
	std::iota(images.begin(), images.end(), 0);
	do
		out.push_back(Permutation{images});
	while (std::next_permutation(images.begin(), images.end()));
	return out;
}

std::vector<Permutation> block_group(const std::vector<int>& blocks) {
	int n = std::accumulate(blocks.begin(), blocks.end(), 0);
	std::vector<Permutation> out{Permutation::identity(n)};
	int start = 0;
	for (int m : blocks) {
		std::vector<int> pos(m);
		std::iota(pos.begin(), pos.end(), start);
		std::vector<Permutation> next;
		for (const auto& local : all_permutations(m)) {
			Permutation e = embed(local, pos, n);
			for (const auto& w : out)
				next.push_back(compose(e, w));
		}
		out = std::move(next);
		start += m;
	}
	return out;
}

Permutation embed(const Permutation& w, const std::vector<int>& positions, int size) {
	if (w.size() != static_cast<int>(positions.size()))
		throw InvalidInput("embed: size mismatch");
	Permutation r = Permutation::identity(size);
	for (int i = 0; i < w.size(); ++i)
		r.images[positions[i]] = positions[w.images[i]];
	return r;
}

}  // namespace cobschur
