#include "cobschur/symmetrize.hpp"

#include <algorithm>
#include <set>

#include "cobschur/parallel.hpp"

namespace cobschur {

namespace {

std::pair<int, int> normalized(int a, int b) {
	return {std::min(a, b), std::max(a, b)};
}

void validate(const FormalGroupLaw& fgl, const SymmetrizerSpec& spec) {
	int nx = fgl.context()->n_x();
	std::set<std::pair<int, int>> seen;
	for (auto [i, j] : spec.pairs) {
		if (i == j || i < 0 || j < 0 || i >= nx || j >= nx)
			throw InvalidInput("symmetrize: pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
							   ") is not a pair of distinct x-variables");
		if (!seen.insert(normalized(i, j)).second)
			throw InvalidInput("symmetrize: repeated pair in the denominator");
	}
	if (spec.reps.empty())
		throw InvalidInput("symmetrize: no coset representatives");
	for (const auto& w : spec.reps)
		if (w.size() > nx)
			throw InvalidInput("symmetrize: permutation larger than the x-variable count");
}

}  // namespace

std::vector<std::pair<int, int>> pair_closure(const SymmetrizerSpec& spec) {
	std::set<std::pair<int, int>> c;
	for (auto [i, j] : spec.pairs)
		c.insert(normalized(i, j));
	bool grew = true;
	while (grew) {
		grew = false;
		std::vector<std::pair<int, int>> add;
		for (const auto& w : spec.reps)
			for (auto [a, b] : c) {
				auto p = normalized(w(a), w(b));
				if (!c.count(p))
					add.push_back(p);
			}
		for (auto& p : add)
			grew |= c.insert(p).second;
	}
	return {c.begin(), c.end()};
}

Series symmetrize(const FormalGroupLaw& fgl, const Series& numerator, const SymmetrizerSpec& spec) {
	validate(fgl, spec);
	const ContextPtr& ctx = fgl.context();
	if (!same_context(ctx, numerator.context()))
		throw InvalidInput("symmetrize: numerator context differs from the formal group law's");
	int npairs = static_cast<int>(spec.pairs.size());
	int out_bound = numerator.bound() - npairs;
	if (out_bound < 0)
		throw InvalidInput("symmetrize: numerator bound below the number of denominator pairs");
	if (numerator.is_zero())
		return Series(ctx, out_bound);

	auto closure = pair_closure(spec);
	std::set<std::pair<int, int>> in_p;
	int sigma = 1;
	for (auto [i, j] : spec.pairs) {
		in_p.insert(normalized(i, j));
		if (i > j)
			sigma = -sigma;
	}

	// Every denominator factor is (x_i - x_j) times a unit; invert the units.
	int rel = numerator.bound() - numerator.min_degree();
	Series m = numerator;
	for (auto [i, j] : spec.pairs)
		m = mul_sharp(m, fgl.pair_unit_inverse(i, j, rel));

	// Complete the linear part to the Vandermonde over the closure.
	Series lin = Series::constant(ctx, 1, kExactBound);
	for (auto [a, b] : closure)
		if (!in_p.count({a, b}))
			lin = mul_sharp(lin, Series::generator_to(ctx, ctx->x(a), kExactBound) -
									 Series::generator_to(ctx, ctx->x(b), kExactBound));
	m = mul_sharp(m, lin);

	int count = static_cast<int>(spec.reps.size());
	std::vector<Series> partial(std::max(1, std::min(worker_count(), count)), Series(ctx, m.bound()));
	parallel_slices(count, [&](int worker, int begin, int end) {
		Accumulator acc;
		for (int r = begin; r < end; ++r) {
			const Permutation& w = spec.reps[r];
			int inversions = 0;
			for (auto [a, b] : closure)
				if (w(a) > w(b))
					++inversions;
			Rational sign = inversions % 2 ? -1 : 1;
			for (const auto& t : m.terms())
				acc.add_product(t.mono.permuted_prefix(w.images.data(), w.size()), t.coef, sign);
		}
		partial[worker] = acc.finish(ctx, m.bound());
	});
	Series sum = partial[0];
	for (std::size_t k = 1; k < partial.size(); ++k)
		sum = add(sum, partial[k]);

	for (auto [a, b] : closure)
		sum = exact_divide_linear(sum, a, b);
	Rational scale = spec.prefactor * sigma;
	if (scale != 1)
		sum = scale * sum;
	return sum.truncated(out_bound);
}

}  // namespace cobschur
