#include "cobschur/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace cobschur {

namespace {

Series one(const ContextPtr& ctx) {
	return Series::constant(ctx, 1, kExactBound);
}

Series gen(const ContextPtr& ctx, int g) {
	return Series::generator_to(ctx, g, kExactBound);
}

Series exact(const Series& s) {
	return Series::from_terms(s.context(), s.terms(), kExactBound);
}

Series param(const ContextPtr& ctx, const std::vector<Series>& b, int k) {
	if (k >= 1 && k <= static_cast<int>(b.size()))
		return exact(rebase(b[k - 1], ctx));
	return Series(ctx, kExactBound);
}

// (x_i|b)^k = prod_{s=1..k} (x_i + b_s).
Series rising(const ContextPtr& ctx, int i, int k, const std::vector<Series>& b) {
	Series p = one(ctx);
	for (int s = 1; s <= k; ++s)
		p = p * (gen(ctx, ctx->x(i)) + param(ctx, b, s));
	return p;
}

Series antisymmetrize(const Series& f, int n) {
	Accumulator acc;
	for (const auto& w : all_permutations(n)) {
		Rational sign = w.sign();
		for (const auto& t : f.terms())
			acc.add_product(t.mono.permuted_prefix(w.images.data(), n), t.coef, sign);
	}
	return acc.finish(f.context(), f.bound());
}

Series divide_vandermonde(Series f, int n) {
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			f = exact_divide_linear(f, i, j);
	return exact(f);
}

void require_n(const ContextPtr& ctx, int n) {
	if (n > ctx->n_x())
		throw InvalidInput("oracle: need " + std::to_string(n) + " x-variables");
}

struct Cell {
	int row, col;
};

std::vector<Cell> cells_of(const Partition& lambda) {
	std::vector<Cell> cells;
	for (int i = 0; i < lambda.n(); ++i)
		for (int j = 0; j < lambda[i]; ++j)
			cells.push_back({i, j});
	return cells;
}

}  // namespace

Series elementary_symmetric(const ContextPtr& ctx, const std::vector<int>& gens, int k) {
	// Coefficient of z^k in prod (1 + g z).
	std::vector<Series> e(k + 1, Series(ctx, kExactBound));
	if (k < 0)
		return Series(ctx, kExactBound);
	e[0] = one(ctx);
	for (int g : gens)
		for (int p = k; p >= 1; --p)
			e[p] = e[p] + e[p - 1] * gen(ctx, g);
	return e[k];
}

Series complete_symmetric(const ContextPtr& ctx, const std::vector<int>& gens, int k) {
	if (k < 0)
		return Series(ctx, kExactBound);
	std::vector<Series> h(k + 1, Series(ctx, kExactBound));
	h[0] = one(ctx);
	for (int g : gens)
		for (int p = 1; p <= k; ++p)
			h[p] = h[p] + h[p - 1] * gen(ctx, g);
	return h[k];
}

Series classical_schur(const ContextPtr& ctx, const Partition& lambda) {
	int n = lambda.n();
	require_n(ctx, n);
	Monomial m;
	for (int j = 0; j < n; ++j)
		m.set_exp(ctx->x(j), lambda[j] + n - 1 - j, true);
	return divide_vandermonde(antisymmetrize(Series::monomial(ctx, m, 1, kExactBound), n), n);
}

Series factorial_schur(const ContextPtr& ctx, const Partition& lambda, const std::vector<Series>& b) {
	int n = lambda.n();
	require_n(ctx, n);
	Series p = one(ctx);
	for (int j = 0; j < n; ++j)
		p = p * rising(ctx, j, lambda[j] + n - 1 - j, b);
	return divide_vandermonde(antisymmetrize(p, n), n);
}

namespace {

Series tableau_sum(const ContextPtr& ctx, const Partition& lambda, const std::function<Series(const Cell&, int)>& w) {
	int n = lambda.n();
	require_n(ctx, n);
	auto cells = cells_of(lambda);
	std::vector<std::vector<int>> fill(n, std::vector<int>(n > 0 ? lambda[0] : 0, 0));
	Accumulator acc;
	std::function<void(std::size_t, const Series&)> rec = [&](std::size_t k, const Series& weight) {
		if (k == cells.size()) {
			acc.add_series(weight);
			return;
		}
		auto [i, j] = cells[k];
		int lo = 1;
		if (j > 0)
			lo = std::max(lo, fill[i][j - 1]);
		if (i > 0)
			lo = std::max(lo, fill[i - 1][j] + 1);
		for (int v = lo; v <= n; ++v) {
			fill[i][j] = v;
			rec(k + 1, weight * w(cells[k], v));
		}
	};
	rec(0, one(ctx));
	return acc.finish(ctx, kExactBound);
}

}  // namespace

Series schur_by_tableaux(const ContextPtr& ctx, const Partition& lambda) {
	return tableau_sum(ctx, lambda, [&](const Cell&, int v) { return gen(ctx, ctx->x(v - 1)); });
}

Series factorial_schur_by_tableaux(const ContextPtr& ctx, const Partition& lambda, const std::vector<Series>& b) {
	return tableau_sum(ctx, lambda, [&](const Cell& c, int v) {
		return gen(ctx, ctx->x(v - 1)) + param(ctx, b, v + c.col - c.row);
	});
}

Series divide_by_univariate(const Series& f, int g, const std::vector<Rational>& poly) {
	int d = static_cast<int>(poly.size()) - 1;
	while (d >= 0 && poly[d] == 0)
		--d;
	if (d < 0)
		throw InvalidInput("divide_by_univariate: zero divisor");
	const ContextPtr& ctx = f.context();
	bool trunc = ctx->truncated(g);
	std::map<std::vector<std::uint8_t>, std::map<int, Rational>> groups;
	std::map<std::vector<std::uint8_t>, Monomial> rest_of;
	for (const auto& t : f.terms()) {
		Monomial m = t.mono;
		int e = m.exp(g);
		m.set_exp(g, 0, trunc);
		std::vector<std::uint8_t> key(m.bytes(), m.bytes() + Monomial::kBytes);
		groups[key][e] += t.coef;
		rest_of.emplace(key, m);
	}
	std::vector<Term> out;
	for (auto& [key, c] : groups) {
		int top = c.rbegin()->first;
		for (int e = top; e >= d; --e) {
			auto it = c.find(e);
			if (it == c.end() || it->second == 0)
				continue;
			Rational q = it->second / poly[d];
			for (int k = 0; k <= d; ++k)
				c[e - d + k] -= q * poly[k];
			Monomial m = rest_of[key];
			m.set_exp(g, e - d, trunc);
			out.push_back({m, q});
		}
		for (auto& [e, v] : c)
			if (v != 0)
				throw AssertionFailure("divide_by_univariate: nonzero remainder");
	}
	return Series::from_terms(ctx, std::move(out), f.bound());
}

Series classical_hall_littlewood(const ContextPtr& ctx, const Partition& lambda) {
	if (!ctx->has_t())
		throw InvalidInput("Hall-Littlewood oracle needs the t generator");
	int n = lambda.n();
	require_n(ctx, n);
	Monomial m;
	for (int i = 0; i < n; ++i)
		m.set_exp(ctx->x(i), lambda[i], true);
	Series p = Series::monomial(ctx, m, 1, kExactBound);
	Series t = gen(ctx, ctx->t());
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			p = p * (gen(ctx, ctx->x(i)) - t * gen(ctx, ctx->x(j)));
	Series s = divide_vandermonde(antisymmetrize(p, n), n);
	// v_lambda(t) = prod over multiplicities m of prod_{j<=m} (1 + t + ... + t^{j-1}).
	std::vector<Rational> v{1};
	for (int r = 0; r < lambda.num_blocks(); ++r)
		for (int j = 1; j <= lambda.block_sizes()[r]; ++j) {
			std::vector<Rational> next(v.size() + j - 1, 0);
			for (std::size_t a = 0; a < v.size(); ++a)
				for (int k = 0; k < j; ++k)
					next[a + k] += v[a];
			v = std::move(next);
		}
	return divide_by_univariate(s, ctx->t(), v);
}

Series classical_schur_p(const ContextPtr& ctx, const Partition& nu) {
	if (!nu.strict())
		throw InvalidInput("Schur P oracle needs a strict partition");
	RingContext::Options o = ctx->options();
	o.with_t = true;
	ContextPtr tctx = ctx->has_t() ? ctx : RingContext::make(o);
	Series hl = classical_hall_littlewood(tctx, nu);
	Series p = specialize(hl, {{tctx->t(), Series::constant(tctx, -1, kExactBound)}});
	return exact(rebase(p, ctx));
}

Series classical_schur_q(const ContextPtr& ctx, const Partition& nu) {
	if (!nu.strict())
		throw InvalidInput("Schur Q oracle needs a strict partition");
	int n = nu.n(), k = nu.length();
	require_n(ctx, n);
	Monomial m;
	for (int i = 0; i < k; ++i)
		m.set_exp(ctx->x(i), nu[i], true);
	Series p = Series::monomial(ctx, m, Rational(1 << k), kExactBound);
	// Numerator over the full Vandermonde: pairs with i < k carry (x_i + x_j),
	// the others the missing (x_i - x_j).
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			Series xi = gen(ctx, ctx->x(i)), xj = gen(ctx, ctx->x(j));
			p = p * (i < k ? xi + xj : xi - xj);
		}
	Series s = divide_vandermonde(antisymmetrize(p, n), n);
	Rational fact = 1;
	for (int i = 2; i <= n - k; ++i)
		fact *= i;
	return exact(Rational(1) / fact * s);
}

Series factorial_grothendieck(const ContextPtr& ctx, const Partition& lambda, const std::vector<Series>& b) {
	if (!ctx->has_beta())
		throw InvalidInput("Grothendieck oracle needs the beta generator");
	int n = lambda.n();
	require_n(ctx, n);
	if (n > 8 || lambda.weight() > 10)
		throw InvalidInput("Grothendieck oracle: instance too large for tableau enumeration");
	Series beta = gen(ctx, ctx->beta());
	auto cells = cells_of(lambda);
	std::vector<std::vector<unsigned>> fill(n, std::vector<unsigned>(n > 0 ? lambda[0] : 0, 0));
	auto oplus = [&](int e, int content) {
		Series x = gen(ctx, ctx->x(e - 1));
		Series bb = param(ctx, b, e + content);
		return x + bb + beta * x * bb;
	};
	Accumulator acc;
	std::function<void(std::size_t, const Series&)> rec = [&](std::size_t k, const Series& weight) {
		if (k == cells.size()) {
			acc.add_series(weight);
			return;
		}
		auto [i, j] = cells[k];
		int lo = 1;
		if (j > 0)
			lo = std::max(lo, 32 - std::countl_zero(fill[i][j - 1]));
		if (i > 0)
			lo = std::max(lo, 32 - std::countl_zero(fill[i - 1][j]) + 1);
		for (unsigned set = 1; set < (1u << n); ++set) {
			int mn = std::countr_zero(set) + 1;
			if (mn < lo)
				continue;
			Series w = weight;
			int count = 0;
			for (int e = 1; e <= n; ++e)
				if (set & (1u << (e - 1))) {
					w = w * oplus(e, j - i);
					if (count++)
						w = w * beta;
				}
			fill[i][j] = set;
			rec(k + 1, w);
		}
		fill[i][j] = 0;
	};
	rec(0, one(ctx));
	return acc.finish(ctx, kExactBound);
}

Series monomial_symmetric(const ContextPtr& ctx, const Partition& lambda) {
	int n = lambda.n();
	require_n(ctx, n);
	std::vector<int> e = lambda.parts();
	std::sort(e.begin(), e.end());
	Accumulator acc;
	do {
		Monomial m;
		for (int i = 0; i < n; ++i)
			m.set_exp(ctx->x(i), e[i], true);
		acc.add(m, 1);
	} while (std::next_permutation(e.begin(), e.end()));
	return acc.finish(ctx, kExactBound);
}

Series thom_porteous_determinant(const ContextPtr& ctx, int e, int f, int r, int bound) {
	if (r < 0 || r > std::min(e, f))
		throw InvalidInput("thom-porteous determinant: need 0 <= r <= min(e, f)");
	require_n(ctx, f);
	if (ctx->n_b() < e)
		throw InvalidInput("thom-porteous determinant: need n_b >= e");
	std::vector<int> xs, bs;
	for (int i = 0; i < f; ++i)
		xs.push_back(ctx->x(i));
	for (int j = 0; j < e; ++j)
		bs.push_back(ctx->b(j));
	auto c = [&](int k) {
		Series s(ctx, bound);
		if (k > bound)
			return s;
		for (int p = 0; p <= k; ++p) {
			Series h = complete_symmetric(ctx, bs, k - p);
			s = s + elementary_symmetric(ctx, xs, p) * ((k - p) % 2 ? -h : h);
		}
		return s.truncated(bound);
	};
	int size = e - r;
	std::vector<std::vector<Series>> mat(size);
	for (int i = 0; i < size; ++i)
		for (int j = 0; j < size; ++j)
			mat[i].push_back(c(f - r - i + j));
	// Laplace expansion along the top row, memoized on the remaining columns.
	std::map<unsigned, Series> minors;
	std::function<Series(int, unsigned)> minor = [&](int row, unsigned cols) -> Series {
		if (row == size)
			return Series::constant(ctx, 1, bound);
		if (auto it = minors.find(cols); it != minors.end())
			return it->second;
		Series acc(ctx, bound);
		int sign = 1;
		for (int j = 0; j < size; ++j)
			if (cols & (1u << j)) {
				if (!mat[row][j].is_zero()) {
					Series t = mat[row][j] * minor(row + 1, cols & ~(1u << j));
					acc = sign > 0 ? acc + t : acc - t;
				}
				sign = -sign;
			}
		minors.emplace(cols, acc);
		return acc;
	};
	return minor(0, (1u << size) - 1);
}

}  // namespace cobschur
