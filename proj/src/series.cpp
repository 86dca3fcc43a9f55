#include "cobschur/series.hpp"

#include <algorithm>
#include <numeric>

namespace cobschur {

Rational parse_rational(const std::string& s) {
	Rational q;
	if (s.empty() || q.set_str(s, 10) != 0)
		throw InvalidInput("not a rational number: '" + s + "'");
	if (q.get_den() == 0)
		throw InvalidInput("zero denominator: '" + s + "'");
	q.canonicalize();
	return q;
}

namespace {

void sort_terms(std::vector<Term>& terms) {
	std::sort(terms.begin(), terms.end(),
			  [](const Term& a, const Term& b) { return a.mono.canonical_less(b.mono); });
}

void require_same(const Series& a, const Series& b) {
	if (!same_context(a.context(), b.context()))
		throw InvalidInput("series from different ring contexts");
}

}  // namespace

Series::Series(ContextPtr ctx) : ctx_(std::move(ctx)), bound_(ctx_->deg_bound()) {}

Series::Series(ContextPtr ctx, int bound) : ctx_(std::move(ctx)), bound_(std::min(bound, kExactBound)) {
	if (bound_ < -1)
		bound_ = -1;
}

Series Series::constant(ContextPtr ctx, const Rational& c) {
	int bound = ctx->deg_bound();
	return constant(std::move(ctx), c, bound);
}

Series Series::constant(ContextPtr ctx, const Rational& c, int bound) {
	Series s(std::move(ctx), bound);
	if (c != 0 && s.bound_ >= 0)
		s.terms_.push_back({Monomial{}, c});
	return s;
}

Series Series::generator(ContextPtr ctx, int g, int power) {
	int bound = ctx->deg_bound();
	return generator_to(std::move(ctx), g, bound, power);
}

Series Series::generator_to(ContextPtr ctx, int g, int bound, int power) {
	if (g < 0 || g >= ctx->num_generators())
		throw InvalidInput("generator id out of range");
	Monomial m;
	m.set_exp(g, power, ctx->truncated(g));
	return monomial(std::move(ctx), m, 1, bound);
}

Series Series::monomial(ContextPtr ctx, const Monomial& m, const Rational& c, int bound) {
	Series s(std::move(ctx), bound);
	if (c != 0 && m.degree() <= s.bound_)
		s.terms_.push_back({m, c});
	return s;
}

Series Series::adopt(ContextPtr ctx, int bound, std::vector<Term> terms) {
	Series s(std::move(ctx), bound);
	s.terms_ = std::move(terms);
	return s;
}

Series Series::from_terms(ContextPtr ctx, std::vector<Term> terms, int bound) {
	Accumulator acc;
	for (auto& t : terms)
		acc.add(t.mono, t.coef);
	return acc.finish(std::move(ctx), bound);
}

int Series::min_degree() const {
	return terms_.empty() ? bound_ + 1 : terms_.front().mono.degree();
}

int Series::max_degree() const {
	return terms_.empty() ? -1 : terms_.back().mono.degree();
}

Rational Series::constant_term() const {
	if (!terms_.empty() && terms_.front().mono.is_one())
		return terms_.front().coef;
	return 0;
}

Rational Series::coefficient(const Monomial& m) const {
	auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
							   [](const Term& t, const Monomial& k) { return t.mono.canonical_less(k); });
	if (it != terms_.end() && it->mono == m)
		return it->coef;
	return 0;
}

bool Series::has_generator(int g) const {
	for (const auto& t : terms_)
		if (t.mono.exp(g))
			return true;
	return false;
}

Series Series::truncated(int bound) const {
	Series r(ctx_, std::min(bound, bound_));
	for (const auto& t : terms_) {
		if (t.mono.degree() > r.bound_)
			break;
		r.terms_.push_back(t);
	}
	return r;
}

bool Series::operator==(const Series& o) const {
	if (!same_context(ctx_, o.ctx_) || terms_.size() != o.terms_.size())
		return false;
	for (std::size_t i = 0; i < terms_.size(); ++i)
		if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
			return false;
	return true;
}

void Accumulator::add(const Monomial& m, const Rational& c) {
	auto [it, inserted] = map_.try_emplace(m);
	if (inserted)
		it->second = c;
	else
		it->second += c;
}

void Accumulator::add_product(const Monomial& m, const Rational& a, const Rational& b) {
	mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
	auto [it, inserted] = map_.try_emplace(m);
	if (inserted)
		mpq_swap(it->second.get_mpq_t(), tmp_.get_mpq_t());
	else
		mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), tmp_.get_mpq_t());
}

void Accumulator::add_series(const Series& s, const Rational& scale) {
	for (const auto& t : s.terms())
		add_product(t.mono, t.coef, scale);
}

Series Accumulator::finish(ContextPtr ctx, int bound) {
	Series out(std::move(ctx), bound);
	std::vector<Term> terms;
	terms.reserve(map_.size());
	for (auto& [m, c] : map_)
		if (c != 0 && m.degree() <= out.bound())
			terms.push_back({m, std::move(c)});
	map_.clear();
	sort_terms(terms);
	return Series::adopt(out.context(), out.bound(), std::move(terms));
}

Series add(const Series& a, const Series& b) {
	require_same(a, b);
	int bound = std::min(a.bound(), b.bound());
	std::vector<Term> out;
	out.reserve(a.size() + b.size());
	auto ia = a.terms().begin(), ea = a.terms().end();
	auto ib = b.terms().begin(), eb = b.terms().end();
	while (ia != ea || ib != eb) {
		if (ib == eb || (ia != ea && ia->mono.canonical_less(ib->mono))) {
			if (ia->mono.degree() <= bound)
				out.push_back(*ia);
			++ia;
		} else if (ia == ea || ib->mono.canonical_less(ia->mono)) {
			if (ib->mono.degree() <= bound)
				out.push_back(*ib);
			++ib;
		} else {
			Rational c = ia->coef + ib->coef;
			if (c != 0 && ia->mono.degree() <= bound)
				out.push_back({ia->mono, std::move(c)});
			++ia;
			++ib;
		}
	}
	return Series::adopt(a.context(), bound, std::move(out));
}

Series operator+(const Series& a, const Series& b) {
	return add(a, b);
}

Series operator-(const Series& a) {
	std::vector<Term> out = a.terms();
	for (auto& t : out)
		t.coef = -t.coef;
	return Series::adopt(a.context(), a.bound(), std::move(out));
}

Series operator-(const Series& a, const Series& b) {
	return add(a, -b);
}

Series operator*(const Rational& c, const Series& a) {
	if (c == 0)
		return Series(a.context(), a.bound());
	std::vector<Term> out = a.terms();
	for (auto& t : out)
		t.coef *= c;
	return Series::adopt(a.context(), a.bound(), std::move(out));
}

Series mul_to(const Series& a, const Series& b, int bound) {
	require_same(a, b);
	bound = std::min(bound, kExactBound);
	const Series& outer = a.size() <= b.size() ? a : b;
	const Series& inner = a.size() <= b.size() ? b : a;
	Accumulator acc;
	int inner_min = inner.min_degree();
	for (const auto& ta : outer.terms()) {
		int room = bound - ta.mono.degree();
		if (room < inner_min)
			break;
		for (const auto& tb : inner.terms()) {
			if (tb.mono.degree() > room)
				break;
			acc.add_product(ta.mono * tb.mono, ta.coef, tb.coef);
		}
	}
	return acc.finish(a.context(), bound);
}

Series mul(const Series& a, const Series& b) {
	return mul_to(a, b, std::min(a.bound(), b.bound()));
}

Series operator*(const Series& a, const Series& b) {
	return mul(a, b);
}

Series mul_sharp(const Series& a, const Series& b) {
	long ba = static_cast<long>(a.bound()) + b.min_degree();
	long bb = static_cast<long>(b.bound()) + a.min_degree();
	long bound = std::min({ba, bb, static_cast<long>(kExactBound)});
	return mul_to(a, b, static_cast<int>(bound));
}

Series power(const Series& a, int k) {
	if (k < 0)
		throw InvalidInput("negative power");
	Series result = Series::constant(a.context(), 1, kExactBound);
	Series base = a;
	while (k) {
		if (k & 1)
			result = mul_sharp(result, base);
		k >>= 1;
		if (k)
			base = mul_sharp(base, base);
	}
	return result;
}

Series substitute(const Series& f, int var, const Series& g) {
	require_same(f, g);
	const RingContext& ctx = f.ctx();
	if (!ctx.truncated(var))
		throw InvalidInput("substitute: use specialize for coefficient generators");
	// Group f by the exponent of var.
	std::map<int, std::vector<Term>> groups;
	for (const auto& t : f.terms()) {
		int e = t.mono.exp(var);
		Monomial rest = t.mono;
		rest.set_exp(var, 0, true);
		groups[e].push_back({rest, t.coef});
	}
	bool has_var = !groups.empty() && groups.rbegin()->first > 0;
	if (has_var && g.min_degree() == 0 && f.bound() < kExactBound)
		throw InvalidInput("substitute: value has a nonzero constant term under a truncated series");
	Series result(f.context(), kExactBound);
	Series gp = Series::constant(f.context(), 1, kExactBound);
	int last = 0;
	bool first = true;
	for (auto& [e, terms] : groups) {
		for (; last < e; ++last)
			gp = mul_sharp(gp, g);
		Series coef = Series::from_terms(f.context(), std::move(terms), f.bound() - e);
		Series piece = mul_sharp(coef, gp);
		result = first ? piece : add(result, piece);
		first = false;
	}
	if (first)
		return Series(f.context(), f.bound());
	return result.truncated(f.bound());
}

Series specialize(const Series& f, const std::map<int, Series>& assignment) {
	const RingContext& ctx = f.ctx();
	for (const auto& [g, v] : assignment) {
		require_same(f, v);
		if (g < 0 || g >= ctx.num_generators())
			throw InvalidInput("specialize: generator id out of range");
		if (ctx.truncated(g) && v.min_degree() == 0 && f.bound() < kExactBound)
			throw InvalidInput("specialize: " + ctx.name(g) +
							   " needs a value without constant term on a truncated series");
	}
	// Group terms by the exponents of the assigned generators.
	struct Group {
		std::vector<std::pair<int, int>> sig;
		int sig_degree = 0;
		std::vector<Term> rest;
	};
	std::map<std::vector<std::pair<int, int>>, Group> groups;
	for (const auto& t : f.terms()) {
		std::vector<std::pair<int, int>> sig;
		Monomial rest = t.mono;
		int sd = 0;
		for (const auto& [g, v] : assignment) {
			int e = t.mono.exp(g);
			if (e) {
				sig.push_back({g, e});
				rest.set_exp(g, 0, ctx.truncated(g));
				if (ctx.truncated(g))
					sd += e;
			}
		}
		auto& grp = groups[sig];
		grp.sig = sig;
		grp.sig_degree = sd;
		grp.rest.push_back({rest, t.coef});
	}
	std::map<std::pair<int, int>, Series> powers;
	auto get_power = [&](int g, int e) -> const Series& {
		auto it = powers.find({g, e});
		if (it != powers.end())
			return it->second;
		return powers.emplace(std::make_pair(g, e), power(assignment.at(g), e)).first->second;
	};
	Accumulator acc;
	int bound = f.bound();
	for (auto& [key, grp] : groups) {
		Series value = Series::constant(f.context(), 1, kExactBound);
		for (const auto& [g, e] : grp.sig)
			value = mul_sharp(value, get_power(g, e));
		Series rest = Series::from_terms(f.context(), std::move(grp.rest), f.bound() - grp.sig_degree);
		Series piece = mul_sharp(rest, value);
		bound = std::min(bound, piece.bound());
		acc.add_series(piece);
	}
	return acc.finish(f.context(), bound);
}

Series invert_unit(const Series& f) {
	Rational c0 = f.constant_term();
	if (c0 == 0)
		throw InvalidInput("invert_unit: zero constant term");
	for (const auto& t : f.terms()) {
		if (t.mono.degree() > 0)
			break;
		if (!t.mono.is_one())
			throw InvalidInput("invert_unit: degree-zero part is not a rational constant");
	}
	Rational inv = 1 / c0;
	// f = c0 (1 + h) with h of degree >= 1.
	Series h = inv * f - Series::constant(f.context(), 1, f.bound());
	Series minus_h = -h;
	Series result = Series::constant(f.context(), 1, f.bound());
	Series p = result;
	while (true) {
		p = mul_to(p, minus_h, f.bound());
		if (p.is_zero())
			break;
		result = add(result, p);
	}
	return inv * result;
}

Series exact_divide_linear(const Series& f, int i, int j) {
	const RingContext& ctx = f.ctx();
	if (i == j || i < 0 || j < 0 || i >= ctx.n_x() || j >= ctx.n_x())
		throw InvalidInput("exact_divide_linear: bad variable indices");
	int gi = ctx.x(i), gj = ctx.x(j);
	struct Item {
		Monomial key;
		int s;
		int a;
		const Rational* c;
	};
	std::vector<Item> items;
	items.reserve(f.size());
	for (const auto& t : f.terms()) {
		Item it{t.mono, t.mono.exp(gi) + t.mono.exp(gj), t.mono.exp(gi), &t.coef};
		it.key.set_exp(gi, 0, true);
		it.key.set_exp(gj, 0, true);
		items.push_back(it);
	}
	std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
		int c = std::memcmp(x.key.bytes(), y.key.bytes(), Monomial::kBytes);
		if (c != 0)
			return c < 0;
		if (x.s != y.s)
			return x.s < y.s;
		return x.a > y.a;
	});
	std::vector<Term> out;
	out.reserve(items.size() * 2);
	Rational q;
	std::size_t p = 0;
	while (p < items.size()) {
		std::size_t e = p;
		while (e < items.size() && items[e].key == items[p].key && items[e].s == items[p].s)
			++e;
		// Synthetic division of a binary form of degree s: q_{a-1} = c_a + q_a.
		int s = items[p].s;
		q = 0;
		std::size_t k = p;
		for (int a = s; a >= 1; --a) {
			if (k < e && items[k].a == a) {
				q += *items[k].c;
				++k;
			}
			if (q != 0) {
				Monomial m = items[p].key;
				m.set_exp(gi, a - 1, true);
				m.set_exp(gj, s - a, true);
				out.push_back({m, q});
			}
		}
		Rational rem = q;
		if (k < e && items[k].a == 0)
			rem += *items[k].c;
		if (rem != 0)
			throw AssertionFailure("exact_divide_linear: nonzero remainder dividing by (" + ctx.name(gi) + " - " +
								   ctx.name(gj) + ")");
		p = e;
	}
	sort_terms(out);
	return Series::adopt(f.context(), f.bound() - 1, std::move(out));
}

Permutation Permutation::identity(int n) {
	Permutation w;
	w.images.resize(n);
	std::iota(w.images.begin(), w.images.end(), 0);
	return w;
}

int Permutation::sign() const {
	int inv = 0;
	for (int a = 0; a < size(); ++a)
		for (int b = a + 1; b < size(); ++b)
			if (images[a] > images[b])
				++inv;
	return inv % 2 ? -1 : 1;
}

Permutation Permutation::inverse() const {
	Permutation r;
	r.images.resize(images.size());
	for (int i = 0; i < size(); ++i)
		r.images[images[i]] = i;
	return r;
}

Permutation compose(const Permutation& w1, const Permutation& w2) {
	int n = std::max(w1.size(), w2.size());
	Permutation r;
	r.images.resize(n);
	for (int i = 0; i < n; ++i)
		r.images[i] = w1(w2(i));
	return r;
}

Series act_permutation(const Series& f, const Permutation& w) {
	const RingContext& ctx = f.ctx();
	if (w.size() > ctx.n_x())
		throw InvalidInput("act_permutation: permutation larger than the x-variable count");
	std::vector<bool> seen(w.size(), false);
	for (int v : w.images) {
		if (v < 0 || v >= w.size() || seen[v])
			throw InvalidInput("act_permutation: not a bijection");
		seen[v] = true;
	}
	std::vector<Term> out;
	out.reserve(f.size());
	for (const auto& t : f.terms())
		out.push_back({t.mono.permuted_prefix(w.images.data(), w.size()), t.coef});
	sort_terms(out);
	return Series::adopt(f.context(), f.bound(), std::move(out));
}

int graded_degree(const RingContext& ctx, const Monomial& m) {
	int d = m.degree();
	for (int g = ctx.num_truncated(); g < ctx.num_generators(); ++g)
		if (m.exp(g))
			d += ctx.degree(g) * m.exp(g);
	return d;
}

Series graded_component(const Series& f, int d) {
	std::vector<Term> out;
	for (const auto& t : f.terms())
		if (graded_degree(f.ctx(), t.mono) == d)
			out.push_back(t);
	return Series::adopt(f.context(), f.bound(), std::move(out));
}

bool is_homogeneous(const Series& f, int d) {
	for (const auto& t : f.terms())
		if (graded_degree(f.ctx(), t.mono) != d)
			return false;
	return true;
}

bool is_symmetric(const Series& f, const std::vector<int>& vars) {
	for (std::size_t k = 0; k + 1 < vars.size(); ++k) {
		Permutation w = Permutation::identity(f.ctx().n_x());
		std::swap(w.images[vars[k]], w.images[vars[k + 1]]);
		if (act_permutation(f, w) != f)
			return false;
	}
	return true;
}

Series rebase(const Series& f, const ContextPtr& target) {
	const RingContext& src = f.ctx();
	std::vector<int> map(src.num_generators());
	for (int g = 0; g < src.num_generators(); ++g)
		map[g] = target->find(src.name(g));
	std::vector<Term> out;
	out.reserve(f.size());
	for (const auto& t : f.terms()) {
		Monomial m;
		for (int g = 0; g < src.num_generators(); ++g) {
			int e = t.mono.exp(g);
			if (!e)
				continue;
			if (map[g] < 0)
				throw InvalidInput("rebase: generator " + src.name(g) + " missing from the target context");
			m.set_exp(map[g], e, target->truncated(map[g]));
		}
		out.push_back({m, t.coef});
	}
	return Series::from_terms(target, std::move(out), f.bound());
}

}  // namespace cobschur
