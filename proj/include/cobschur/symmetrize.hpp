#pragma once

#include <utility>
#include <vector>

#include "cobschur/fgl.hpp"

namespace cobschur {

// sum_{w in reps} w . [ numerator / prod_{(i,j) in pairs} (x_i +_L xbar_j) ],
// times prefactor. Indices are 0-based x-indices.
struct SymmetrizerSpec {
	std::vector<std::pair<int, int>> pairs;
	std::vector<Permutation> reps;
	Rational prefactor = 1;
};

// The result is trusted to numerator.bound() - |pairs|. Numerator and unit
// expansions carry the extra margin needed by the Vandermonde divisions.
// Throws AssertionFailure when a division leaves a remainder.
Series symmetrize(const FormalGroupLaw& fgl, const Series& numerator, const SymmetrizerSpec& spec);

// Unordered pairs {w(i), w(j)} over all reps and pairs, closed under the reps;
// each returned pair is (min, max).
std::vector<std::pair<int, int>> pair_closure(const SymmetrizerSpec& spec);

}  // namespace cobschur
