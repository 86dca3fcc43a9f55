#pragma once

#include <gmpxx.h>

#include <map>
#include <unordered_map>
#include <vector>

#include "cobschur/ring.hpp"

namespace cobschur {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);

struct Term {
	Monomial mono;
	Rational coef;
};

// Sparse truncated series. Terms are kept in canonical order with nonzero
// coefficients and truncated degree at most bound().
class Series {
public:
	Series() = default;
	explicit Series(ContextPtr ctx);
	Series(ContextPtr ctx, int bound);

	static Series constant(ContextPtr ctx, const Rational& c);
	static Series constant(ContextPtr ctx, const Rational& c, int bound);
	static Series generator(ContextPtr ctx, int g, int power = 1);
	static Series generator_to(ContextPtr ctx, int g, int bound, int power = 1);
	static Series monomial(ContextPtr ctx, const Monomial& m, const Rational& c, int bound);
	// Merges duplicates, drops zeros and truncates.
	static Series from_terms(ContextPtr ctx, std::vector<Term> terms, int bound);
	// Takes terms that are already canonical: sorted, distinct, nonzero, within bound.
	static Series adopt(ContextPtr ctx, int bound, std::vector<Term> terms);

	const ContextPtr& context() const { return ctx_; }
	const RingContext& ctx() const { return *ctx_; }
	int bound() const { return bound_; }
	const std::vector<Term>& terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }

	// Smallest truncated degree; bound() + 1 for the zero series.
	int min_degree() const;
	int max_degree() const;
	Rational constant_term() const;
	Rational coefficient(const Monomial& m) const;
	bool has_generator(int g) const;

	Series truncated(int bound) const;

	// Compares contexts and terms; bounds are metadata and not compared.
	bool operator==(const Series& o) const;
	bool operator!=(const Series& o) const { return !(*this == o); }

private:
	ContextPtr ctx_;
	int bound_ = 0;
	std::vector<Term> terms_;
};

// Exact accumulation of terms keyed by monomial.
class Accumulator {
public:
	void add(const Monomial& m, const Rational& c);
	void add_product(const Monomial& m, const Rational& a, const Rational& b);
	void add_series(const Series& s, const Rational& scale = 1);
	Series finish(ContextPtr ctx, int bound);
	std::size_t size() const { return map_.size(); }

private:
	std::unordered_map<Monomial, Rational, MonomialHash> map_;
	Rational tmp_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
// Truncates at the smaller input bound.
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
// Product trusted to min(bound_a + mindeg_b, bound_b + mindeg_a), the exact
// range in which the truncated inputs determine the product.
Series mul_sharp(const Series& a, const Series& b);
// Product terms up to an explicit bound; the caller vouches for the range.
Series mul_to(const Series& a, const Series& b, int bound);
Series power(const Series& a, int k);

// f viewed as a series in the truncated generator `var`, with var replaced by g.
Series substitute(const Series& f, int var, const Series& g);
// Replaces generators by series values (m, t, beta, b or x).
Series specialize(const Series& f, const std::map<int, Series>& assignment);
Series invert_unit(const Series& f);
// Quotient q with f = (x_i - x_j) q on retained degrees; i, j are x-indices.
Series exact_divide_linear(const Series& f, int i, int j);

struct Permutation {
	std::vector<int> images;  // 0-based, images[i] = w(i)

	static Permutation identity(int n);
	int size() const { return static_cast<int>(images.size()); }
	int operator()(int i) const { return i < size() ? images[i] : i; }
	int sign() const;
	Permutation inverse() const;
	bool operator==(const Permutation& o) const = default;
};

// w1 after w2.
Permutation compose(const Permutation& w1, const Permutation& w2);
// Moves the exponent of x_i to x_{w(i)}.
Series act_permutation(const Series& f, const Permutation& w);
// Terms of graded degree d (deg m_i = -i, deg t = 0, deg beta = -1).
Series graded_component(const Series& f, int d);
int graded_degree(const RingContext& ctx, const Monomial& m);
bool is_homogeneous(const Series& f, int d);
// Invariance under every permutation of the given x-indices.
bool is_symmetric(const Series& f, const std::vector<int>& vars);
// The same series over another context, matching generators by name.
Series rebase(const Series& f, const ContextPtr& target);

}  // namespace cobschur
