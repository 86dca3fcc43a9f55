#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "cobschur/oracles.hpp"
#include "cobschur/serialize.hpp"

namespace test {

using namespace cobschur;

inline ContextPtr context(int n_x, int n_b, int A, int D, bool t = false, bool beta = false,
						  std::vector<std::string> aux = {}) {
	RingContext::Options o;
	o.n_x = n_x;
	o.n_b = n_b;
	o.m_bound = A;
	o.deg_bound = D;
	o.with_t = t;
	o.with_beta = beta;
	o.aux = std::move(aux);
	return RingContext::make(o);
}

inline Rational q(long num, long den = 1) {
	Rational r(num, den);
	r.canonicalize();
	return r;
}

inline Monomial mono(const ContextPtr& ctx, std::initializer_list<std::pair<const char*, int>> exps) {
	Monomial m;
	for (auto [name, e] : exps) {
		int g = ctx->find(name);
		m.set_exp(g, e, ctx->truncated(g));
	}
	return m;
}

// Exact polynomial from (coefficient, monomial) pairs.
inline Series poly(const ContextPtr& ctx,
				   std::initializer_list<std::pair<Rational, std::initializer_list<std::pair<const char*, int>>>> terms) {
	std::vector<Term> t;
	for (const auto& [c, exps] : terms)
		t.push_back({mono(ctx, exps), c});
	return Series::from_terms(ctx, std::move(t), kExactBound);
}

inline Series gen(const ContextPtr& ctx, const char* name, int bound = kExactBound) {
	return Series::generator_to(ctx, ctx->find(name), bound);
}

inline Series num(const ContextPtr& ctx, long v) {
	return Series::constant(ctx, v, kExactBound);
}

// Coefficient of an exact x/b/aux monomial, as a series in the untruncated generators.
inline Series coefficient_of(const Series& f, const Monomial& xb) {
	const RingContext& ctx = f.ctx();
	std::vector<Term> out;
	for (const auto& t : f.terms()) {
		bool match = true;
		Monomial rest = t.mono;
		for (int g = 0; g < ctx.num_truncated(); ++g) {
			if (t.mono.exp(g) != xb.exp(g))
				match = false;
			rest.set_exp(g, 0, true);
		}
		if (match)
			out.push_back({rest, t.coef});
	}
	return Series::from_terms(f.context(), std::move(out), kExactBound);
}

inline std::vector<Series> b_values(const ContextPtr& ctx, int count) {
	std::vector<Series> b;
	for (int i = 0; i < count; ++i)
		b.push_back(Series::generator_to(ctx, ctx->b(i), kExactBound));
	return b;
}

}  // namespace test
