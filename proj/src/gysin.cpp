#include "cobschur/gysin.hpp"

#include <algorithm>
#include <numeric>

namespace cobschur {

const Series& LaurentWindow::at(int k) const {
	auto it = coeffs.find(k);
	if (it == coeffs.end())
		throw InvalidInput("Laurent window: k = " + std::to_string(k) + " outside [" + std::to_string(k_min) + ", " +
						   std::to_string(k_max) + "]");
	return it->second;
}

bool LaurentWindow::operator==(const LaurentWindow& o) const {
	if (variable != o.variable || k_min != o.k_min || k_max != o.k_max || coeffs.size() != o.coeffs.size())
		return false;
	for (const auto& [k, s] : coeffs) {
		auto it = o.coeffs.find(k);
		if (it == o.coeffs.end() || !(it->second == s))
			return false;
	}
	return true;
}

namespace {

void require_invariant(const Series& f, const std::vector<int>& blocks) {
	int start = 0;
	for (int m : blocks) {
		for (int i = start; i + 1 < start + m; ++i) {
			Permutation w = Permutation::identity(start + m);
			std::swap(w.images[i], w.images[i + 1]);
			if (act_permutation(f, w) != f)
				throw InvalidInput("pushforward: input is not invariant under swapping x" + std::to_string(i + 1) +
								   " and x" + std::to_string(i + 2));
		}
		start += m;
	}
}

void require_vars(const FormalGroupLaw& fgl, const Series& f, int n) {
	if (!same_context(fgl.context(), f.context()))
		throw InvalidInput("pushforward: series context differs from the formal group law's");
	if (n < 0 || n > fgl.context()->n_x())
		throw InvalidInput("pushforward: n = " + std::to_string(n) + " outside the x-variable count");
}

}  // namespace

Series pushforward_full_flag(const FormalGroupLaw& fgl, const Series& f, int n) {
	require_vars(fgl, f, n);
	std::vector<int> vars(n);
	std::iota(vars.begin(), vars.end(), 0);
	return symmetrize(fgl, f, full_flag_spec(vars, fgl.context()->n_x()));
}

Series pushforward_partial_flag(const FormalGroupLaw& fgl, const Series& f, const std::vector<int>& blocks) {
	int n = std::accumulate(blocks.begin(), blocks.end(), 0);
	require_vars(fgl, f, n);
	require_invariant(f, blocks);
	return symmetrize(fgl, f, partial_flag_spec(blocks, fgl.context()->n_x()));
}

Series pushforward_partial_flag(const FormalGroupLaw& fgl, const Series& f, const Partition& lambda) {
	return pushforward_partial_flag(fgl, f, lambda.block_sizes());
}

Series pushforward_between_flags(const FormalGroupLaw& fgl, const Series& f, const Partition& lambda) {
	require_vars(fgl, f, lambda.n());
	return symmetrize(fgl, f, between_flags_spec(lambda.block_sizes(), fgl.context()->n_x()));
}

Series grassmannian_pushforward(const FormalGroupLaw& fgl, const Series& f, int q, int n) {
	if (q < 0 || q > n)
		throw InvalidInput("grassmannian_pushforward: need 0 <= q <= n");
	std::vector<int> blocks;
	if (q > 0)
		blocks.push_back(q);
	if (n - q > 0)
		blocks.push_back(n - q);
	if (blocks.size() < 2) {
		require_vars(fgl, f, n);
		require_invariant(f, blocks);
		return f;
	}
	return pushforward_partial_flag(fgl, f, blocks);
}

namespace {

// Laurent polynomial in t with Series coefficients, keeping only terms with
// truncated degree <= dmax and (t-exponent + truncated degree) <= smax. Every
// factor used below has that sum non-negative, so the cut is exact.
class Laurent {
public:
	Laurent(ContextPtr ctx, int dmax, int smax) : ctx_(std::move(ctx)), dmax_(dmax), smax_(smax) {}

	int slot_bound(int e) const { return std::min(dmax_, smax_ - e); }

	void add(int e, const Series& s) {
		int bd = slot_bound(e);
		if (bd < 0 || s.is_zero())
			return;
		Series t = s.truncated(bd);
		if (t.is_zero())
			return;
		auto it = c_.find(e);
		if (it == c_.end())
			c_.emplace(e, Series(ctx_, bd) + t);
		else
			it->second = it->second + t;
	}

	Laurent operator*(const Laurent& o) const {
		Laurent r(ctx_, dmax_, smax_);
		for (const auto& [e1, s1] : c_)
			for (const auto& [e2, s2] : o.c_) {
				int bd = slot_bound(e1 + e2);
				if (bd < 0 || s1.min_degree() + s2.min_degree() > bd)
					continue;
				r.add(e1 + e2, mul_to(s1, s2, bd));
			}
		r.prune();
		return r;
	}

	// (1 + rho)^{-1} for rho whose terms all raise degree or t-exponent sum.
	Laurent inverse_one_plus() const {
		Laurent one(ctx_, dmax_, smax_);
		one.add(0, Series::constant(ctx_, 1, kExactBound));
		Laurent result = one;
		Laurent p = one;
		Laurent neg(ctx_, dmax_, smax_);
		for (const auto& [e, s] : c_)
			neg.add(e, -s);
		while (true) {
			p = p * neg;
			if (p.c_.empty())
				break;
			for (const auto& [e, s] : p.c_)
				result.add(e, s);
		}
		result.prune();
		return result;
	}

	Series coefficient(int e, int bound) const {
		auto it = c_.find(e);
		if (it == c_.end())
			return Series(ctx_, bound);
		return it->second.truncated(bound);
	}

private:
	void prune() {
		for (auto it = c_.begin(); it != c_.end();)
			it = it->second.is_zero() ? c_.erase(it) : std::next(it);
	}

	ContextPtr ctx_;
	int dmax_, smax_;
	std::map<int, Series> c_;
};

// 1 / (omega(t) prod_i (1 + rho_i)) where t +_L xbar_i = t (1 + rho_i).
Laurent segre_kernel(const FormalGroupLaw& fgl, int n, int dmax, int smax) {
	const ContextPtr& ctx = fgl.context();
	if (n < 1 || n > ctx->n_x())
		throw InvalidInput("segre: n = " + std::to_string(n) + " outside the x-variable count");
	if (smax + 1 > FormalGroupLaw::kMaxOrder)
		throw InvalidInput("window exhaustion: the expansion needs formal group law order " + std::to_string(smax + 1) +
						   ", limit " + std::to_string(FormalGroupLaw::kMaxOrder));
	auto sum = fgl.sum_coeffs(std::max(2, smax + 1));

	Laurent omega_rest(ctx, dmax, smax);
	for (int i = 1; i <= smax; ++i)
		omega_rest.add(i, sum[i][1]);
	Laurent w = omega_rest.inverse_one_plus();

	for (int i = 0; i < n; ++i) {
		Series xbar = fgl.formal_inverse(Series::generator_to(ctx, ctx->x(i), dmax));
		std::vector<Series> pw{Series::constant(ctx, 1, kExactBound), xbar};
		for (int k = 2; k <= dmax; ++k)
			pw.push_back(mul_to(pw.back(), xbar, dmax));
		Laurent rho(ctx, dmax, smax);
		for (int e = -1; e < smax; ++e) {
			int bd = rho.slot_bound(e);
			if (bd < 1)
				continue;
			Accumulator acc;
			for (int k = 1; k <= bd && e + 1 + k <= smax + 1; ++k)
				if (!sum[e + 1][k].is_zero())
					acc.add_series(mul_to(sum[e + 1][k], pw[k], bd));
			rho.add(e, acc.finish(ctx, bd));
		}
		w = w * rho.inverse_one_plus();
	}
	return w;
}

}  // namespace

LaurentWindow segre_series(const FormalGroupLaw& fgl, int n, int k_min, int k_max, int bound) {
	if (k_min > k_max)
		throw InvalidInput("segre: empty window, k_min > k_max");
	int d = bound < 0 ? fgl.context()->deg_bound() : bound;
	// S_k is the t^{-k} coefficient; it needs exponent sums up to d - k.
	Laurent w = segre_kernel(fgl, n, d, d - k_min);
	LaurentWindow out;
	out.k_min = k_min;
	out.k_max = k_max;
	for (int k = k_min; k <= k_max; ++k)
		out.coeffs.emplace(k, w.coefficient(-k, d));
	return out;
}

Series projective_residue(const FormalGroupLaw& fgl, const Series& f, int s, int n, int bound) {
	const ContextPtr& ctx = fgl.context();
	if (!same_context(ctx, f.context()))
		throw InvalidInput("residue: series context differs from the formal group law's");
	if (s < 0 || s >= ctx->num_generators() || ctx->kind(s) != GenKind::aux)
		throw InvalidInput("residue: the residue variable must be an auxiliary generator");
	int d = bound < 0 ? ctx->deg_bound() : bound;
	int smax = n - 1 + d;
	if (f.bound() < smax)
		throw InvalidInput("residue: input trusted to degree " + std::to_string(f.bound()) + ", need " +
						   std::to_string(smax));
	Laurent num(ctx, d, smax);
	std::map<int, std::vector<Term>> by_power;
	for (const auto& t : f.terms()) {
		for (int i = 0; i < ctx->n_x(); ++i)
			if (t.mono.exp(ctx->x(i)))
				throw InvalidInput("residue: coefficients of the input must be free of x-variables");
		Monomial m = t.mono;
		int p = m.exp(s);
		m.set_exp(s, 0, true);
		by_power[p].push_back({m, t.coef});
	}
	for (auto& [p, terms] : by_power)
		num.add(p, Series::from_terms(ctx, std::move(terms), kExactBound));
	Laurent w = num * segre_kernel(fgl, n, d, smax);
	return w.coefficient(n - 1, d);
}

ClassReport thom_porteous_class(const FormalGroupLaw& fgl, int e, int f, int r, bool strict) {
	const ContextPtr& ctx = fgl.context();
	if (e < 0 || f < 1 || r < 0 || r > std::min(e, f))
		throw InvalidInput("thom-porteous: need 0 <= r <= min(e, f) and f >= 1");
	if (ctx->n_x() < f || ctx->n_b() < e)
		throw InvalidInput("thom-porteous: context needs n_x >= f and n_b >= e");
	int d = ctx->deg_bound();
	int q = f - r;
	int margin = d + q * r;
	Params bbar = Params::first_generators(ctx, e).mapped([&](const Series& b) {
		return fgl.formal_inverse(b.truncated(margin));
	});
	FactorProduct p(ctx);
	for (int i = 0; i < q; ++i)
		add_factorial_power(p, fgl, i, e, bbar);
	ClassReport rep;
	rep.label = "e=" + std::to_string(e) + " f=" + std::to_string(f) + " r=" + std::to_string(r);
	rep.value = grassmannian_pushforward(fgl, p.build(margin), q, f).truncated(d);
	rep.expected = new_universal_schur(fgl, Partition(std::vector<int>(q, e - r), f), bbar, d);
	rep.difference = rep.value - rep.expected;
	rep.agree = rep.difference.is_zero();
	if (strict && !rep.agree)
		throw AssertionFailure("thom-porteous: pushforward differs from the rectangular function at " + rep.label);
	return rep;
}

KempfLaksovReport kempf_laksov_class(const FormalGroupLaw& fgl, const Partition& lambda, int d, int n, bool strict) {
	const ContextPtr& ctx = fgl.context();
	int r = lambda.length();
	if (r > d || d > n)
		throw InvalidInput("kempf-laksov: need length(lambda) <= d <= n");
	if (ctx->n_x() < d || ctx->n_b() < n)
		throw InvalidInput("kempf-laksov: context needs n_x >= d and n_b >= n");
	int deg = ctx->deg_bound();
	Partition lam(std::vector<int>(lambda.parts().begin(), lambda.parts().begin() + r), d);
	Params b = Params::first_generators(ctx, n);
	KempfLaksovReport rep;
	std::string label = lam.str() + " d=" + std::to_string(d) + " n=" + std::to_string(n);

	std::vector<int> blocks(r, 1);
	if (d > r)
		blocks.push_back(d - r);
	int kl_pairs = static_cast<int>(partial_flag_spec(blocks, ctx->n_x()).pairs.size());
	FactorProduct p(ctx);
	for (int i = 0; i < r; ++i)
		add_factorial_power(p, fgl, i, lam[i] + d - (i + 1), b);
	auto& kl = rep.kempf_laksov;
	kl.label = "kempf-laksov " + label;
	kl.value = pushforward_partial_flag(fgl, p.build(deg + kl_pairs), blocks);
	kl.expected = universal_schur_kl(fgl, lam, b, deg);
	kl.difference = kl.value - kl.expected;
	kl.agree = kl.difference.is_zero();

	int damon_pairs = static_cast<int>(partial_flag_spec(lam.block_sizes(), ctx->n_x()).pairs.size());
	auto& dm = rep.damon;
	dm.label = "damon " + label;
	dm.value = pushforward_partial_flag(fgl, bracket_monomial(fgl, lam, b, deg + damon_pairs), lam);
	dm.expected = new_universal_schur(fgl, lam, b, deg);
	dm.difference = dm.value - dm.expected;
	dm.agree = dm.difference.is_zero();

	if (strict && !(kl.agree && dm.agree))
		throw AssertionFailure("kempf-laksov: the two evaluations differ at " + label);
	return rep;
}

Series darondeau_pragacz_pushforward(const FormalGroupLaw& fgl, const Series& f, const std::vector<int>& ts, int n,
									 int bound) {
	const ContextPtr& ctx = fgl.context();
	if (!same_context(ctx, f.context()))
		throw InvalidInput("darondeau-pragacz: series context differs from the formal group law's");
	int r = static_cast<int>(ts.size());
	if (r < 1 || r > n)
		throw InvalidInput("darondeau-pragacz: need 1 <= r <= n");
	for (int i = 0; i < r; ++i) {
		if (ts[i] < 0 || ts[i] >= ctx->num_generators() || ctx->kind(ts[i]) != GenKind::aux)
			throw InvalidInput("darondeau-pragacz: the t-variables must be auxiliary generators");
		for (int j = 0; j < i; ++j)
			if (ts[i] == ts[j])
				throw InvalidInput("darondeau-pragacz: repeated t-variable");
	}
	for (const auto& t : f.terms())
		for (int i = 0; i < ctx->n_x(); ++i)
			if (t.mono.exp(ctx->x(i)))
				throw InvalidInput("darondeau-pragacz: coefficients of the input must be free of x-variables");
	int d = bound < 0 ? ctx->deg_bound() : bound;
	int bg = d + r * (n - 1);
	int gdeg = r * (r - 1) / 2;
	if (f.is_zero())
		return Series(ctx, d);
	if (f.bound() + gdeg < bg)
		throw InvalidInput("darondeau-pragacz: input trusted to degree " + std::to_string(f.bound()) + ", need " +
						   std::to_string(bg - gdeg));

	FactorProduct gp(ctx);
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j) {
			int ti = ts[i], tj = ts[j];
			gp.factor([&fgl, &ctx, ti, tj](int b) {
				return fgl.formal_sum(Series::generator_to(ctx, tj, b),
									  fgl.formal_inverse(Series::generator_to(ctx, ti, b)));
			});
		}
	Series g = mul_sharp(f, gp.build(std::max(0, bg - f.min_degree()))).truncated(bg);

	LaurentWindow segre = segre_series(fgl, n, 1 - n, d, d);
	std::map<std::vector<int>, std::vector<Term>> groups;
	for (const auto& t : g.terms()) {
		std::vector<int> p(r);
		Monomial m = t.mono;
		for (int i = 0; i < r; ++i) {
			p[i] = m.exp(ts[i]);
			m.set_exp(ts[i], 0, true);
		}
		groups[p].push_back({m, t.coef});
	}
	Accumulator acc;
	for (auto& [p, terms] : groups) {
		Series term = Series::from_terms(ctx, std::move(terms), d);
		for (int i = 0; i < r && !term.is_zero(); ++i) {
			int k = p[i] - n + 1;
			if (k > d) {
				term = Series(ctx, d);
				break;
			}
			term = mul_to(term, segre.at(k), d);
		}
		acc.add_series(term);
	}
	return acc.finish(ctx, d);
}

}  // namespace cobschur
