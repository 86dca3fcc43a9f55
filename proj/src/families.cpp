#include "cobschur/families.hpp"

#include <numeric>

namespace cobschur {

Params Params::generators(const ContextPtr& ctx, int needed) {
	if (ctx->n_b() < needed)
		throw InvalidInput("b-budget too small: need n_b >= " + std::to_string(needed) + ", context has " +
						   std::to_string(ctx->n_b()));
	return first_generators(ctx, ctx->n_b());
}

Params Params::first_generators(const ContextPtr& ctx, int count) {
	if (count > ctx->n_b())
		throw InvalidInput("b-budget too small: need n_b >= " + std::to_string(count));
	std::vector<Series> b;
	for (int k = 0; k < count; ++k)
		b.push_back(Series::generator_to(ctx, ctx->b(k), kExactBound));
	return Params(std::move(b));
}

const Series* Params::at(int k) const {
	if (k < 1 || k > static_cast<int>(b_.size()) || b_[k - 1].is_zero())
		return nullptr;
	return &b_[k - 1];
}

Params Params::shifted(int m) const {
	if (m >= static_cast<int>(b_.size()))
		return Params();
	return Params(std::vector<Series>(b_.begin() + m, b_.end()));
}

Params Params::mapped(const std::function<Series(const Series&)>& f) const {
	std::vector<Series> b;
	for (const auto& s : b_)
		b.push_back(f(s));
	return Params(std::move(b));
}

bool Params::zero() const {
	for (const auto& s : b_)
		if (!s.is_zero())
			return false;
	return true;
}

void FactorProduct::monomial(int g, int e) {
	if (e == 0)
		return;
	mono_.set_exp(g, mono_.exp(g) + e, true);
	mono_degree_ += e;
}

void FactorProduct::factor(std::function<Series(int)> make) {
	factors_.push_back(std::move(make));
}

Series FactorProduct::build(int bound) const {
	int k = static_cast<int>(factors_.size());
	if (k + mono_degree_ > bound)
		return Series(ctx_, bound);
	Series m = Series::monomial(ctx_, mono_, 1, kExactBound);
	if (k == 0)
		return m.truncated(bound);
	int each = bound - (k - 1) - mono_degree_;
	Series p = factors_[0](each);
	for (int f = 1; f < k; ++f)
		p = mul_sharp(p, factors_[f](each));
	return mul_sharp(p, m).truncated(bound);
}

namespace {

int resolve(const FormalGroupLaw& fgl, int bound) {
	return bound < 0 ? fgl.context()->deg_bound() : bound;
}

Series xgen(const FormalGroupLaw& fgl, int i, int bound) {
	return Series::generator_to(fgl.context(), fgl.context()->x(i), bound);
}

void add_double(FactorProduct& p, const FormalGroupLaw& fgl, int i) {
	p.factor([&fgl, i](int bound) { return fgl.formal_sum(xgen(fgl, i, bound), xgen(fgl, i, bound)); });
}

Rational factorial(int k) {
	Rational r = 1;
	for (int i = 2; i <= k; ++i)
		r *= i;
	return r;
}

void check_vars(const FormalGroupLaw& fgl, int n) {
	if (n > fgl.context()->n_x())
		throw InvalidInput("need " + std::to_string(n) + " x-variables, context has " +
						   std::to_string(fgl.context()->n_x()));
}

}  // namespace

void add_factorial_power(FactorProduct& p, const FormalGroupLaw& fgl, int i, int k, const Params& b, int shift) {
	for (int s = 1; s <= k; ++s) {
		const Series* bs = b.at(shift + s);
		if (!bs) {
			p.monomial(fgl.context()->x(i), 1);
			continue;
		}
		Series param = *bs;
		p.factor([&fgl, i, param](int bound) { return fgl.formal_sum(xgen(fgl, i, bound), param.truncated(bound)); });
	}
}

Series factorial_power(const FormalGroupLaw& fgl, int i, int k, const Params& b, int shift, int bound) {
	if (k < 0 || shift < 0)
		throw InvalidInput("factorial_power: negative exponent or shift");
	check_vars(fgl, i + 1);
	FactorProduct p(fgl.context());
	add_factorial_power(p, fgl, i, k, b, shift);
	return p.build(bound);
}

Series double_factorial_power(const FormalGroupLaw& fgl, int i, int k, const Params& b, int bound) {
	if (k < 0)
		throw InvalidInput("double_factorial_power: negative exponent");
	check_vars(fgl, i + 1);
	if (k == 0)
		return Series::constant(fgl.context(), 1, bound);
	FactorProduct p(fgl.context());
	add_double(p, fgl, i);
	add_factorial_power(p, fgl, i, k - 1, b);
	return p.build(bound);
}

namespace {

void add_bracket(FactorProduct& p, const FormalGroupLaw& fgl, const Partition& lambda, const Params& b) {
	int n = lambda.n();
	for (int r = 0; r < lambda.num_blocks(); ++r) {
		int e = lambda.block_value(r) + n - lambda.nu(r + 1);
		for (int i = lambda.nu(r); i < lambda.nu(r + 1); ++i)
			add_factorial_power(p, fgl, i, e, b);
	}
}

}  // namespace

Series bracket_monomial(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound) {
	check_vars(fgl, lambda.n());
	FactorProduct p(fgl.context());
	add_bracket(p, fgl, lambda, b);
	return p.build(bound);
}

SymmetrizerSpec full_flag_spec(const std::vector<int>& vars, int n_x) {
	SymmetrizerSpec spec;
	int k = static_cast<int>(vars.size());
	for (int p = 0; p < k; ++p)
		for (int q = p + 1; q < k; ++q)
			spec.pairs.emplace_back(vars[p], vars[q]);
	for (const auto& w : all_permutations(k))
		spec.reps.push_back(embed(w, vars, n_x));
	return spec;
}

SymmetrizerSpec partial_flag_spec(const std::vector<int>& blocks, int n_x) {
	SymmetrizerSpec spec;
	int n = std::accumulate(blocks.begin(), blocks.end(), 0);
	if (n > n_x)
		throw InvalidInput("flag type larger than the x-variable count");
	std::vector<int> block_of;
	for (std::size_t r = 0; r < blocks.size(); ++r)
		block_of.insert(block_of.end(), blocks[r], static_cast<int>(r));
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (block_of[i] != block_of[j])
				spec.pairs.emplace_back(i, j);
	spec.reps = coset_reps(n, blocks);
	return spec;
}

SymmetrizerSpec between_flags_spec(const std::vector<int>& blocks, int n_x) {
	SymmetrizerSpec spec;
	int n = std::accumulate(blocks.begin(), blocks.end(), 0);
	if (n > n_x)
		throw InvalidInput("flag type larger than the x-variable count");
	int start = 0;
	for (int m : blocks) {
		for (int i = start; i < start + m; ++i)
			for (int j = i + 1; j < start + m; ++j)
				spec.pairs.emplace_back(i, j);
		start += m;
	}
	spec.reps = block_group(blocks);
	return spec;
}

int required_b(const Partition& lambda) {
	return lambda.n() == 0 ? 0 : lambda[0] + lambda.n() - 1;
}

Series universal_schur_seq(const FormalGroupLaw& fgl, const std::vector<int>& seq, const std::vector<int>& vars,
						   const Params& b, int bound) {
	bound = resolve(fgl, bound);
	int k = static_cast<int>(vars.size());
	if (static_cast<int>(seq.size()) > k)
		throw InvalidInput("sequence longer than the variable list");
	for (int v : vars)
		check_vars(fgl, v + 1);
	FactorProduct p(fgl.context());
	for (int q = 0; q < k; ++q) {
		int e = (q < static_cast<int>(seq.size()) ? seq[q] : 0) + (k - 1 - q);
		if (e < 0)
			throw InvalidInput("sequence entries must be non-negative");
		add_factorial_power(p, fgl, vars[q], e, b);
	}
	SymmetrizerSpec spec = full_flag_spec(vars, fgl.context()->n_x());
	return symmetrize(fgl, p.build(bound + static_cast<int>(spec.pairs.size())), spec);
}

Series universal_schur_s(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound) {
	std::vector<int> vars(lambda.n());
	std::iota(vars.begin(), vars.end(), 0);
	return universal_schur_seq(fgl, lambda.parts(), vars, b, bound);
}

namespace {

Series schur_pq(const FormalGroupLaw& fgl, const Partition& nu, const Params& b, int bound, bool q_variant) {
	if (!nu.strict())
		throw InvalidInput("P/Q functions need a strict partition, got " + nu.str());
	bound = resolve(fgl, bound);
	int n = nu.n(), k = nu.length();
	check_vars(fgl, n);
	FactorProduct p(fgl.context());
	SymmetrizerSpec spec;
	for (int i = 0; i < k; ++i) {
		if (q_variant) {
			add_double(p, fgl, i);
			add_factorial_power(p, fgl, i, nu[i] - 1, b);
		} else {
			add_factorial_power(p, fgl, i, nu[i], b);
		}
		for (int j = i + 1; j < n; ++j) {
			p.factor([&fgl, i, j](int t) { return fgl.formal_sum(xgen(fgl, i, t), xgen(fgl, j, t)); });
			spec.pairs.emplace_back(i, j);
		}
	}
	spec.reps = all_permutations(n);
	spec.prefactor = 1 / factorial(n - k);
	return symmetrize(fgl, p.build(bound + static_cast<int>(spec.pairs.size())), spec);
}

}  // namespace

Series universal_schur_p(const FormalGroupLaw& fgl, const Partition& nu, const Params& b, int bound) {
	return schur_pq(fgl, nu, b, bound, false);
}

Series universal_schur_q(const FormalGroupLaw& fgl, const Partition& nu, const Params& b, int bound) {
	return schur_pq(fgl, nu, b, bound, true);
}

Series universal_hall_littlewood(const FormalGroupLaw& fgl, const Partition& lambda, int bound) {
	if (!fgl.context()->has_t())
		throw InvalidInput("Hall-Littlewood functions need the t generator");
	bound = resolve(fgl, bound);
	int n = lambda.n();
	check_vars(fgl, n);
	SymmetrizerSpec spec = partial_flag_spec(lambda.block_sizes(), fgl.context()->n_x());
	FactorProduct p(fgl.context());
	for (int i = 0; i < n; ++i)
		p.monomial(fgl.context()->x(i), lambda[i]);
	for (auto [i, j] : spec.pairs)
		p.factor([&fgl, i, j](int t) {
			return fgl.formal_sum(xgen(fgl, i, t), fgl.t_series(fgl.formal_inverse(xgen(fgl, j, t))));
		});
	return symmetrize(fgl, p.build(bound + static_cast<int>(spec.pairs.size())), spec);
}

Series new_universal_schur(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound) {
	bound = resolve(fgl, bound);
	check_vars(fgl, lambda.n());
	SymmetrizerSpec spec = partial_flag_spec(lambda.block_sizes(), fgl.context()->n_x());
	FactorProduct p(fgl.context());
	add_bracket(p, fgl, lambda, b);
	return symmetrize(fgl, p.build(bound + static_cast<int>(spec.pairs.size())), spec);
}

Series universal_schur_kl(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound) {
	bound = resolve(fgl, bound);
	int n = lambda.n(), r = lambda.length();
	check_vars(fgl, n);
	std::vector<int> blocks(r, 1);
	if (n > r)
		blocks.push_back(n - r);
	SymmetrizerSpec spec = partial_flag_spec(blocks, fgl.context()->n_x());
	FactorProduct p(fgl.context());
	for (int i = 0; i < r; ++i)
		add_factorial_power(p, fgl, i, lambda[i] - (i + 1) + n, b);
	return symmetrize(fgl, p.build(bound + static_cast<int>(spec.pairs.size())), spec);
}

}  // namespace cobschur
