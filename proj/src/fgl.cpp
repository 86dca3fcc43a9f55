#include "cobschur/fgl.hpp"

#include <algorithm>

namespace cobschur {

FglMode parse_mode(const std::string& s) {
	if (s == "universal")
		return FglMode::universal;
	if (s == "additive")
		return FglMode::additive;
	if (s == "multiplicative")
		return FglMode::multiplicative;
	if (s == "custom")
		return FglMode::custom;
	throw InvalidInput("unknown mode '" + s + "'");
}

std::string mode_name(FglMode m) {
	switch (m) {
	case FglMode::universal:
		return "universal";
	case FglMode::additive:
		return "additive";
	case FglMode::multiplicative:
		return "multiplicative";
	case FglMode::custom:
		return "custom";
	}
	return "?";
}

namespace {

Series cmul(const Series& a, const Series& b) {
	if (a.is_zero() || b.is_zero())
		return Series(a.context(), kExactBound);
	return mul_to(a, b, kExactBound);
}

Rational binomial(int n, int k) {
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Rational(r);
}

void require_no_constant(const Series& a, const char* what) {
	if (a.min_degree() == 0)
		throw InvalidInput(std::string(what) + ": argument has a nonzero constant term");
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(ContextPtr ctx, FglMode mode, std::map<int, Rational> custom_log)
	: ctx_(std::move(ctx)), mode_(mode), custom_(std::move(custom_log)) {
	if (mode_ == FglMode::multiplicative && !ctx_->has_beta())
		throw InvalidInput("multiplicative mode needs the beta generator");
	if (mode_ == FglMode::universal && ctx_->m_bound() == 0)
		throw InvalidInput("universal mode needs m_bound A >= 1");
	for (const auto& [i, c] : custom_)
		if (i < 1)
			throw InvalidInput("custom logarithm coefficient index must be positive");
	if (mode_ != FglMode::custom && !custom_.empty())
		throw InvalidInput("logarithm coefficients are only accepted in custom mode");
}

Series FormalGroupLaw::coef(const Rational& c) const {
	return Series::constant(ctx_, c, kExactBound);
}

Series FormalGroupLaw::log_coefficient(int i) const {
	switch (mode_) {
	case FglMode::universal:
		if (i <= ctx_->m_bound())
			return Series::generator_to(ctx_, ctx_->m(i), kExactBound);
		return coef(0);
	case FglMode::additive:
		return coef(0);
	case FglMode::multiplicative: {
		// beta^{-1} log(1 + beta x) = sum_i (-beta)^i x^{i+1} / (i+1)
		Rational c(i % 2 ? -1 : 1, i + 1);
		return c * Series::generator_to(ctx_, ctx_->beta(), kExactBound, i);
	}
	case FglMode::custom: {
		auto it = custom_.find(i);
		return coef(it == custom_.end() ? Rational(0) : it->second);
	}
	}
	return coef(0);
}

std::shared_ptr<const FormalGroupLaw::Tables> FormalGroupLaw::tables(int order) const {
	if (order > kMaxOrder)
		throw InvalidInput("formal group law: order " + std::to_string(order) + " beyond the supported range");
	std::lock_guard<std::mutex> lock(mu_);
	if (!tables_ || tables_->order < order) {
		int target = std::max(order, tables_ ? std::min(tables_->order + 4, int(kMaxOrder)) : order);
		tables_ = build(std::max(target, 2));
	}
	return tables_;
}

std::shared_ptr<const FormalGroupLaw::Tables> FormalGroupLaw::build(int n) const {
	auto tb = std::make_shared<Tables>();
	tb->order = n;
	Series zero = coef(0);

	tb->log.assign(n + 1, zero);
	tb->log[1] = coef(1);
	for (int i = 1; i + 1 <= n; ++i)
		tb->log[i + 1] = log_coefficient(i);

	// Powers of l, used for the sum and the [t]-series.
	tb->log_pow.assign(n + 1, std::vector<Series>(n + 1, zero));
	tb->log_pow[0][0] = coef(1);
	for (int p = 1; p <= n; ++p)
		for (int i = p; i <= n; ++i) {
			Accumulator acc;
			for (int k = 1; k <= i - (p - 1); ++k)
				if (!tb->log[k].is_zero() && !tb->log_pow[p - 1][i - k].is_zero())
					acc.add_series(cmul(tb->log[k], tb->log_pow[p - 1][i - k]));
			tb->log_pow[p][i] = acc.finish(ctx_, kExactBound);
		}

	// l(E(y)) = y solved order by order; pw[p][m] = [y^m] E^p.
	tb->exp.assign(n + 1, zero);
	tb->exp[1] = coef(1);
	std::vector<std::vector<Series>> pw(n + 1, std::vector<Series>(n + 1, zero));
	pw[1][1] = coef(1);
	for (int k = 2; k <= n; ++k) {
		for (int p = 2; p <= k; ++p) {
			Accumulator acc;
			for (int j = 1; j <= k - p + 1; ++j)
				if (!tb->exp[j].is_zero() && !pw[p - 1][k - j].is_zero())
					acc.add_series(cmul(tb->exp[j], pw[p - 1][k - j]));
			pw[p][k] = acc.finish(ctx_, kExactBound);
		}
		Accumulator acc;
		for (int p = 2; p <= k; ++p)
			if (!tb->log[p].is_zero() && !pw[p][k].is_zero())
				acc.add_series(cmul(tb->log[p], pw[p][k]), -1);
		tb->exp[k] = acc.finish(ctx_, kExactBound);
		pw[1][k] = tb->exp[k];
	}

	// a_{i,j} = sum_k E_k sum_p C(k,p) [u^i] l^p [v^j] l^{k-p}.
	tb->sum.assign(n + 1, std::vector<Series>(n + 1, zero));
	tb->sum[1][0] = coef(1);
	tb->sum[0][1] = coef(1);
	for (int i = 1; i <= n; ++i)
		for (int j = i; i + j <= n; ++j) {
			Accumulator acc;
			for (int k = 2; k <= i + j; ++k) {
				if (tb->exp[k].is_zero())
					continue;
				Accumulator inner;
				for (int p = std::max(1, k - j); p <= std::min(i, k - 1); ++p) {
					const Series& lu = tb->log_pow[p][i];
					const Series& lv = tb->log_pow[k - p][j];
					if (lu.is_zero() || lv.is_zero())
						continue;
					inner.add_series(cmul(lu, lv), binomial(k, p));
				}
				Series s = inner.finish(ctx_, kExactBound);
				if (!s.is_zero())
					acc.add_series(cmul(tb->exp[k], s));
			}
			tb->sum[i][j] = acc.finish(ctx_, kExactBound);
			tb->sum[j][i] = tb->sum[i][j];
		}

	// F(x, ibar(x)) = 0 solved order by order; q[j][m] = [x^m] ibar^j.
	tb->inv.assign(n + 1, zero);
	tb->inv[1] = coef(-1);
	std::vector<std::vector<Series>> q(n + 1, std::vector<Series>(n + 1, zero));
	q[1][1] = tb->inv[1];
	for (int k = 2; k <= n; ++k) {
		int m = k - 1;
		q[1][m] = tb->inv[m];
		for (int j = 2; j <= m; ++j) {
			Accumulator acc;
			for (int p = 1; p <= m - (j - 1); ++p)
				if (!tb->inv[p].is_zero() && !q[j - 1][m - p].is_zero())
					acc.add_series(cmul(tb->inv[p], q[j - 1][m - p]));
			q[j][m] = acc.finish(ctx_, kExactBound);
		}
		Accumulator acc;
		for (int i = 1; i < k; ++i)
			for (int j = 1; i + j <= k; ++j)
				if (!tb->sum[i][j].is_zero() && !q[j][k - i].is_zero())
					acc.add_series(cmul(tb->sum[i][j], q[j][k - i]), -1);
		tb->inv[k] = acc.finish(ctx_, kExactBound);
	}

	if (ctx_->has_t()) {
		tb->tser.assign(n + 1, zero);
		std::vector<Series> tk(n + 1, zero);
		for (int k = 1; k <= n; ++k)
			tk[k] = cmul(tb->exp[k], Series::generator_to(ctx_, ctx_->t(), kExactBound, k));
		for (int i = 1; i <= n; ++i) {
			Accumulator acc;
			for (int k = 1; k <= i; ++k)
				if (!tk[k].is_zero() && !tb->log_pow[k][i].is_zero())
					acc.add_series(cmul(tk[k], tb->log_pow[k][i]));
			tb->tser[i] = acc.finish(ctx_, kExactBound);
		}
	}
	return tb;
}

Series FormalGroupLaw::compose(const std::vector<Series>& coeffs, const Series& a, const char* what) const {
	require_no_constant(a, what);
	int bound = a.bound();
	Accumulator acc;
	if (!coeffs.empty())
		acc.add_series(coeffs[0]);
	if (a.is_zero())
		return acc.finish(ctx_, bound);
	int da = a.min_degree();
	Series ap = a;
	for (int k = 1; k < static_cast<int>(coeffs.size()) && k * da <= bound; ++k) {
		if (!coeffs[k].is_zero())
			acc.add_series(mul_to(coeffs[k], ap, bound));
		if ((k + 1) * da <= bound)
			ap = mul_to(ap, a, bound);
	}
	return acc.finish(ctx_, bound);
}

Series FormalGroupLaw::formal_sum(const Series& a, const Series& b) const {
	require_no_constant(a, "formal_sum");
	require_no_constant(b, "formal_sum");
	int bound = std::min(a.bound(), b.bound());
	if (a.is_zero() || b.is_zero())
		return add(a, b).truncated(bound);
	int da = a.min_degree(), db = b.min_degree();
	auto tb = tables(std::max(2, bound));
	// Horner in a: sum_i a^i h_i with h_i = sum_j a_{i,j} b^j.
	int imax = (bound - db) / da;
	std::vector<Series> bp(1, b);
	for (int j = 2; j * db <= bound - da; ++j)
		bp.push_back(mul_to(bp.back(), b, bound));
	Series acc(ctx_, bound);
	for (int i = imax; i >= 1; --i) {
		Accumulator h;
		for (int j = 1; j <= static_cast<int>(bp.size()) && i * da + j * db <= bound; ++j)
			if (!tb->sum[i][j].is_zero())
				h.add_series(mul_to(tb->sum[i][j], bp[j - 1], bound - i * da));
		acc = mul_to(add(acc, h.finish(ctx_, bound)), a, bound);
	}
	return add(add(a, b), acc).truncated(bound);
}

Series FormalGroupLaw::formal_inverse(const Series& a) const {
	auto tb = tables(std::max(2, a.bound()));
	return compose(tb->inv, a, "formal_inverse");
}

Series FormalGroupLaw::logarithm(const Series& a) const {
	auto tb = tables(std::max(2, a.bound()));
	return compose(tb->log, a, "logarithm");
}

Series FormalGroupLaw::exponential(const Series& a) const {
	auto tb = tables(std::max(2, a.bound()));
	return compose(tb->exp, a, "exponential");
}

Series FormalGroupLaw::n_series(long n, const Series& a) const {
	int order = std::max(2, a.bound());
	auto tb = tables(order);
	std::vector<Series> c(order + 1, coef(0));
	Rational nk = 1;
	std::vector<Series> scaled(order + 1, coef(0));
	for (int k = 1; k <= order; ++k) {
		nk *= n;
		scaled[k] = nk * tb->exp[k];
	}
	for (int i = 1; i <= order; ++i) {
		Accumulator acc;
		for (int k = 1; k <= i; ++k)
			if (!scaled[k].is_zero() && !tb->log_pow[k][i].is_zero())
				acc.add_series(cmul(scaled[k], tb->log_pow[k][i]));
		c[i] = acc.finish(ctx_, kExactBound);
	}
	return compose(c, a, "n_series");
}

Series FormalGroupLaw::t_series(const Series& a) const {
	if (!ctx_->has_t())
		throw InvalidInput("t_series: the context does not declare t");
	auto tb = tables(std::max(2, a.bound()));
	return compose(tb->tser, a, "t_series");
}

Series FormalGroupLaw::a_coefficient(int i, int j) const {
	if (i < 0 || j < 0 || i + j > kMaxOrder)
		throw InvalidInput("a_coefficient: index out of range");
	auto tb = tables(std::max(2, i + j));
	return tb->sum[i][j];
}

Series FormalGroupLaw::invariant_differential_denominator(int s) const {
	return invariant_differential_denominator(s, ctx_->deg_bound());
}

Series FormalGroupLaw::invariant_differential_denominator(int s, int bound) const {
	if (!ctx_->truncated(s))
		throw InvalidInput("invariant differential: s must be a truncated generator");
	auto tb = tables(std::max(2, bound + 1));
	Accumulator acc;
	acc.add(Monomial{}, 1);
	for (int i = 1; i <= bound; ++i)
		if (!tb->sum[i][1].is_zero())
			acc.add_series(cmul(tb->sum[i][1], Series::generator_to(ctx_, s, bound, i)));
	return acc.finish(ctx_, bound);
}

std::vector<Series> FormalGroupLaw::log_coeffs(int order) const {
	auto tb = tables(std::max(order, 2));
	return {tb->log.begin(), tb->log.begin() + order + 1};
}

std::vector<Series> FormalGroupLaw::exp_coeffs(int order) const {
	auto tb = tables(std::max(order, 2));
	return {tb->exp.begin(), tb->exp.begin() + order + 1};
}

std::vector<Series> FormalGroupLaw::inverse_coeffs(int order) const {
	auto tb = tables(std::max(order, 2));
	return {tb->inv.begin(), tb->inv.begin() + order + 1};
}

std::vector<Series> FormalGroupLaw::omega_coeffs(int order) const {
	auto tb = tables(std::max(order + 1, 2));
	std::vector<Series> w;
	for (int i = 0; i <= order; ++i)
		w.push_back(tb->sum[i][1]);
	return w;
}

std::vector<std::vector<Series>> FormalGroupLaw::sum_coeffs(int order) const {
	auto tb = tables(std::max(order, 2));
	std::vector<std::vector<Series>> s(order + 1);
	for (int i = 0; i <= order; ++i)
		s[i].assign(tb->sum[i].begin(), tb->sum[i].begin() + (order - i) + 1);
	return s;
}

Series FormalGroupLaw::pair_unit_inverse(int i, int j, int bound) const {
	{
		std::lock_guard<std::mutex> lock(mu_);
		auto it = units_.find({i, j, bound});
		if (it != units_.end())
			return it->second;
	}
	Series xi = Series::generator_to(ctx_, ctx_->x(i), bound + 1);
	Series xj = Series::generator_to(ctx_, ctx_->x(j), bound + 1);
	Series g = formal_sum(xi, formal_inverse(xj));
	Series u = invert_unit(exact_divide_linear(g, i, j));
	std::lock_guard<std::mutex> lock(mu_);
	units_.emplace(std::make_tuple(i, j, bound), u);
	return u;
}

std::map<int, Series> FormalGroupLaw::mode_assignment() const {
	std::map<int, Series> a;
	for (int i = 1; i <= ctx_->m_bound(); ++i)
		a.emplace(ctx_->m(i), mode_ == FglMode::universal ? Series::generator_to(ctx_, ctx_->m(i), kExactBound)
														  : log_coefficient(i));
	return a;
}

}  // namespace cobschur
