#include "cobschur/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cobschur/oracles.hpp"

namespace cobschur {

std::string VerificationEntry::label() const {
	std::string s = identity;
	if (!params.empty()) {
		s += " [";
		for (std::size_t i = 0; i < params.size(); ++i)
			s += (i ? " " : "") + params[i].first + "=" + params[i].second;
		s += "]";
	}
	return s;
}

bool VerificationReport::passed() const {
	return failures() == 0;
}

std::size_t VerificationReport::failures() const {
	std::size_t k = 0;
	for (const auto& e : entries)
		k += !e.pass;
	return k;
}

namespace {

ContextPtr make_context(int n_x, int n_b, int A, int D, bool t = false, bool beta = false,
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

std::vector<int> range(int n) {
	std::vector<int> v(n);
	for (int i = 0; i < n; ++i)
		v[i] = i;
	return v;
}

std::vector<Series> b_values(const ContextPtr& ctx, int count) {
	std::vector<Series> b;
	for (int i = 0; i < count; ++i)
		b.push_back(Series::generator_to(ctx, ctx->b(i), kExactBound));
	return b;
}

Rational ratio(const mpz_class& num, const mpz_class& den) {
	Rational q(num, den);
	q.canonicalize();
	return q;
}

Series constant(const ContextPtr& ctx, int v) {
	return Series::constant(ctx, v, kExactBound);
}

std::string seq_str(const std::vector<int>& v) {
	std::string s = "(";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? "," : "") + std::to_string(v[i]);
	return s + ")";
}

VerificationEntry entry(const std::string& identity, const Labels& params) {
	VerificationEntry e;
	e.identity = identity;
	e.params = params;
	return e;
}

class Recorder {
public:
	explicit Recorder(VerificationReport& r) : r_(r) {}

	void equal(const std::string& identity, const Labels& params, const Series& lhs, const Series& rhs) {
		VerificationEntry e = entry(identity, params);
		Series d = lhs - rhs;
		e.pass = d.is_zero();
		if (!e.pass)
			e.witness = d;
		r_.entries.push_back(std::move(e));
	}

	void truth(const std::string& identity, const Labels& params, bool ok, const std::string& message = "") {
		VerificationEntry e = entry(identity, params);
		e.pass = ok;
		if (!ok)
			e.message = message;
		r_.entries.push_back(std::move(e));
	}

	// Symmetry in `vars` and homogeneity of graded degree `degree`.
	void certify(const std::string& what, const Labels& params, const Series& out, const std::vector<int>& vars,
				 int degree) {
		VerificationEntry s = entry(what + " is symmetric", params);
		s.certificate = true;
		s.pass = is_symmetric(out, vars);
		r_.entries.push_back(std::move(s));
		VerificationEntry h = entry(what + " is homogeneous of degree " + std::to_string(degree), params);
		h.certificate = true;
		h.pass = is_homogeneous(out, degree);
		if (!h.pass)
			h.witness = out - graded_component(out, degree);
		r_.entries.push_back(std::move(h));
	}

	// Runs one evaluation; an exception becomes a failed entry. A remainder
	// in an exact division (AssertionFailure) is recorded as a certificate.
	void guard(const std::string& what, const Labels& params, const std::function<void()>& body) {
		try {
			body();
		} catch (const AssertionFailure& ex) {
			VerificationEntry e = entry(what + ": zero division remainder", params);
			e.certificate = true;
			e.message = ex.what();
			r_.entries.push_back(std::move(e));
		} catch (const std::exception& ex) {
			VerificationEntry e = entry(what, params);
			e.message = ex.what();
			r_.entries.push_back(std::move(e));
		}
	}

private:
	VerificationReport& r_;
};

Labels lam_labels(const Partition& lambda, int A, int D) {
	return {{"lambda", lambda.str()}, {"n", std::to_string(lambda.n())}, {"A", std::to_string(A)},
			{"D", std::to_string(D)}};
}

// ---------------------------------------------------------------------------

void fgl_axioms(Recorder& rec, const SuiteOptions& opt) {
	std::vector<std::pair<int, int>> sizes{{2, 4}, {3, 5}};
	if (opt.A || opt.D)
		sizes = {{opt.A.value_or(3), opt.D.value_or(5)}};
	int nmax = opt.n_max.value_or(5);
	for (auto [A, D] : sizes) {
		Labels p{{"A", std::to_string(A)}, {"D", std::to_string(D)}};
		rec.guard("formal group law tables", p, [&] {
			auto ctx = make_context(3, 0, A, D, true);
			FormalGroupLaw F(ctx, FglMode::universal);
			Series u = Series::generator_to(ctx, ctx->x(0), D);
			Series v = Series::generator_to(ctx, ctx->x(1), D);
			Series w = Series::generator_to(ctx, ctx->x(2), D);
			Series zero(ctx, D);
			Series uv = F.formal_sum(u, v);
			rec.equal("F(u,v) = F(v,u)", p, uv, F.formal_sum(v, u));
			rec.equal("F(F(u,v),w) = F(u,F(v,w))", p, F.formal_sum(uv, w), F.formal_sum(u, F.formal_sum(v, w)));
			rec.equal("F(u,0) = u", p, F.formal_sum(u, zero), u);
			rec.equal("F(u,ubar) = 0", p, F.formal_sum(u, F.formal_inverse(u)), zero);
			rec.equal("l(F(u,v)) = l(u) + l(v)", p, F.logarithm(uv), F.logarithm(u) + F.logarithm(v));
			rec.equal("exp(l(u)) = u", p, F.exponential(F.logarithm(u)), u);
			rec.equal("l(exp(u)) = u", p, F.logarithm(F.exponential(u)), u);
			Series prev = F.n_series(0, u);
			rec.equal("[0](u) = 0", p, prev, zero);
			for (int k = 1; k <= nmax; ++k) {
				Series cur = F.n_series(k, u);
				rec.equal("[" + std::to_string(k) + "](u) = F(u,[" + std::to_string(k - 1) + "](u))", p, cur,
						  F.formal_sum(u, prev));
				prev = cur;
			}
			rec.equal("[-1](u) = ubar", p, F.n_series(-1, u), F.formal_inverse(u));
			Series tu = F.t_series(u);
			auto at_t = [&](int t) { return specialize(tu, {{ctx->t(), constant(ctx, t)}}); };
			rec.equal("[t](u) at t=-1 = ubar", p, at_t(-1), F.formal_inverse(u));
			rec.equal("[t](u) at t=0 = 0", p, at_t(0), zero);
			rec.equal("[t](u) at t=1 = u", p, at_t(1), u);
			rec.equal("[t](u) at t=2 = [2](u)", p, at_t(2), F.n_series(2, u));
			// The v-linear part of F(u,v), read off the two-variable sum.
			std::vector<Term> lin;
			for (const auto& t : uv.terms())
				if (t.mono.exp(ctx->x(1)) == 1) {
					Monomial m = t.mono;
					m.set_exp(ctx->x(1), 0, true);
					lin.push_back({m, t.coef});
				}
			rec.equal("omega(u) = dF/dv(u,0)", p, F.invariant_differential_denominator(ctx->x(0), D - 1),
					  Series::from_terms(ctx, lin, D - 1));
		});
	}
}

// Part of f whose truncated monomial is exactly `xb`, as a coefficient-ring series.
Series coefficient_of(const Series& f, const Monomial& xb) {
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

void empty_partition(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(3), D = opt.D.value_or(4);
	Labels p{{"n", "2"}, {"A", std::to_string(A)}, {"D", std::to_string(D)}};
	rec.guard("s_empty(x_2|b)", p, [&] {
		auto ctx = make_context(2, 1, A, D);
		FormalGroupLaw F(ctx, FglMode::universal);
		Series s = universal_schur_s(F, Partition({}, 2), Params::generators(ctx, 1));
		Monomial one, x1x2, b1x1x2;
		x1x2.set_exp(ctx->x(0), 1, true);
		x1x2.set_exp(ctx->x(1), 1, true);
		b1x1x2 = x1x2;
		b1x1x2.set_exp(ctx->b(0), 1, true);
		Series a11 = F.a_coefficient(1, 1), a12 = F.a_coefficient(1, 2);
		rec.equal("[1] s_empty = 1", p, coefficient_of(s, one), constant(ctx, 1));
		rec.equal("[x1 x2] s_empty = a12", p, coefficient_of(s, x1x2), a12);
		rec.equal("[b1 x1 x2] s_empty = a11 a12", p, coefficient_of(s, b1x1x2), a11 * a12);
		rec.equal("a12 = a21", p, a12, F.a_coefficient(2, 1));
		rec.certify("s_empty(x_2|b)", p, s, range(2), 0);
	});
}

void hl_collapse(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(2), D = opt.D.value_or(5);
	int nmax = opt.n_max.value_or(4), wmax = opt.max_weight.value_or(4);
	for (int n = 1; n <= nmax; ++n)
		for (int w = 0; w <= wmax; ++w)
			for (const auto& lam : partitions_of(w, n)) {
				Labels p = lam_labels(lam, A, D);
				rec.guard("H(x;t)", p, [&] {
					auto ctx = make_context(n, 0, A, D, true);
					FormalGroupLaw F(ctx, FglMode::universal);
					Series h = universal_hall_littlewood(F, lam);
					rec.certify("H(x;t)", p, h, range(n), w);
					auto at = [&](int t) { return specialize(h, {{ctx->t(), constant(ctx, t)}}); };
					rec.equal("H(t=1) = m_lambda", p, at(1), monomial_symmetric(ctx, lam).truncated(D));
					Series S = new_universal_schur(F, lam, Params());
					rec.certify("S_lambda", p, S, range(n), w);
					rec.equal("H(t=0) = S_lambda", p, at(0), S);
					if (lam.strict()) {
						Series P = universal_schur_p(F, lam, Params());
						rec.certify("P_lambda", p, P, range(n), w);
						rec.equal("H(t=-1) = P_lambda", p, at(-1), P);
					}
				});
			}
}

void additive_square(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(2);
	int nmax = opt.n_max.value_or(4), wmax = opt.max_weight.value_or(4);
	for (int n = 1; n <= nmax; ++n)
		for (int w = 0; w <= wmax; ++w)
			for (const auto& lam : partitions_of(w, n)) {
				int D = opt.D.value_or(w);
				Labels p = lam_labels(lam, A, D);
				rec.guard("additive specialization", p, [&] {
					int nb = required_b(lam);
					auto ctx = make_context(n, nb, A, D, true);
					FormalGroupLaw U(ctx, FglMode::universal);
					FormalGroupLaw add(ctx, FglMode::additive);
					auto m0 = add.mode_assignment();
					Params b = Params::generators(ctx, nb);
					auto bv = b_values(ctx, nb);
					Series fs = factorial_schur(ctx, lam, bv).truncated(D);

					struct Family {
						std::string name;
						std::function<Series(const FormalGroupLaw&)> eval;
						Series oracle;
					};
					std::vector<Family> fams{
						{"s(x)", [&](const FormalGroupLaw& F) { return universal_schur_s(F, lam, Params()); },
						 classical_schur(ctx, lam).truncated(D)},
						{"s(x|b)", [&](const FormalGroupLaw& F) { return universal_schur_s(F, lam, b); }, fs},
						{"S(x|b)", [&](const FormalGroupLaw& F) { return new_universal_schur(F, lam, b); }, fs},
						{"s_KL(x|b)", [&](const FormalGroupLaw& F) { return universal_schur_kl(F, lam, b); }, fs},
						{"H(x;t)", [&](const FormalGroupLaw& F) { return universal_hall_littlewood(F, lam); },
						 classical_hall_littlewood(ctx, lam).truncated(D)},
					};
					if (lam.strict()) {
						fams.push_back({"P(x)",
										[&](const FormalGroupLaw& F) { return universal_schur_p(F, lam, Params()); },
										classical_schur_p(ctx, lam).truncated(D)});
						fams.push_back({"Q(x)",
										[&](const FormalGroupLaw& F) { return universal_schur_q(F, lam, Params()); },
										classical_schur_q(ctx, lam).truncated(D)});
					}
					for (const auto& fam : fams) {
						Series u = fam.eval(U);
						rec.certify(fam.name, p, u, range(n), w);
						rec.equal(fam.name + " with m := 0 = classical", p, specialize(u, m0), fam.oracle);
						rec.equal(fam.name + " in additive mode = classical", p, fam.eval(add), fam.oracle);
					}
				});
			}
}

void multiplicative(Recorder& rec, const SuiteOptions& opt) {
	int nmax = opt.n_max.value_or(3), wmax = opt.max_weight.value_or(3);
	for (int n = 1; n <= nmax; ++n)
		for (int w = 0; w <= wmax; ++w)
			for (const auto& lam : partitions_of(w, n)) {
				int D = opt.D.value_or(w + 2);
				// m_i with i > D - |lambda| cannot reach degree D.
				int A = opt.A.value_or(std::max(1, D - w));
				Labels p = lam_labels(lam, A, D);
				rec.guard("multiplicative specialization", p, [&] {
					int nb = required_b(lam);
					auto ctx = make_context(n, nb, A, D, false, true);
					FormalGroupLaw U(ctx, FglMode::universal);
					FormalGroupLaw mult(ctx, FglMode::multiplicative);
					auto mb = mult.mode_assignment();
					Params b = Params::generators(ctx, nb);
					Series G = factorial_grothendieck(ctx, lam, b_values(ctx, nb)).truncated(D);
					Series s = universal_schur_s(U, lam, b), S = new_universal_schur(U, lam, b);
					rec.certify("s(x|b)", p, s, range(n), w);
					rec.certify("S(x|b)", p, S, range(n), w);
					rec.equal("s(x|b) with m_i := (-beta)^i/(i+1) = G(x|b)", p, specialize(s, mb), G);
					rec.equal("S(x|b) with m_i := (-beta)^i/(i+1) = G(x|b)", p, specialize(S, mb), G);
					rec.equal("s(x|b) in multiplicative mode = G(x|b)", p, universal_schur_s(mult, lam, b), G);
					rec.equal("S(x|b) in multiplicative mode = G(x|b)", p, new_universal_schur(mult, lam, b), G);
				});
			}
}

void functoriality(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(2), D = opt.D.value_or(4);
	int nmax = opt.n_max.value_or(4), wmax = opt.max_weight.value_or(3);
	int samples = opt.samples.value_or(20);
	std::mt19937 rng(opt.seed);
	for (int n = 1; n <= nmax; ++n) {
		int full = n * (n - 1) / 2;
		auto ctx = make_context(n, 2, A, D);
		FormalGroupLaw F(ctx, FglMode::universal);
		for (int w = 0; w <= wmax; ++w)
			for (const auto& lam : partitions_of(w, n))
				for (int it = 0; it < samples; ++it) {
					Monomial m;
					do {
						m = Monomial();
						for (int i = 0; i < n; ++i)
							m.set_exp(ctx->x(i), std::uniform_int_distribution<>(0, n)(rng), true);
						if (rng() % 2)
							m.set_exp(ctx->b(rng() % 2), 1, true);
					} while (m.degree() > D + full);
					if (rng() % 2)
						m.set_exp(ctx->m(1 + rng() % A), 1, false);
					int c = std::uniform_int_distribution<>(-3, 3)(rng) | 1;
					Series f = Series::monomial(ctx, m, c, D + full);
					Labels p = lam_labels(lam, A, D);
					p.emplace_back("sample", std::to_string(it));
					rec.guard("functoriality", p, [&] {
						Series direct = pushforward_full_flag(F, f, n);
						rec.certify("full flag pushforward", p, direct, range(n), graded_degree(*ctx, m) - full);
						rec.equal("full = partial(lambda) o between(lambda)", p, direct,
								  pushforward_partial_flag(F, pushforward_between_flags(F, f, lam), lam));
					});
				}
		// lambda = (a^q c^{n-q}): the relative pushforward of [x|b]^{lambda + rho}.
		for (int q = 1; q <= n; ++q)
			for (int a = 0; a <= 3; ++a)
				for (int c = 0; c < (q < n ? a : 1); ++c) {
					std::vector<int> parts(q, a);
					parts.resize(n, c);
					Partition lam(parts, n);
					Labels p = lam_labels(lam, A, D);
					rec.guard("relative pushforward closed form", p, [&] {
						int nb = required_b(lam) + n;
						auto cb = make_context(n, nb, A, D);
						FormalGroupLaw G(cb, FglMode::universal);
						Params b = Params::generators(cb, nb);
						int inner = 0;
						for (int s : lam.block_sizes())
							inner += s * (s - 1) / 2;
						FactorProduct num(cb);
						for (int i = 0; i < n; ++i)
							add_factorial_power(num, G, i, lam[i] + n - 1 - i, b);
						Series lhs = pushforward_between_flags(G, num.build(D + inner), lam);
						Series rhs = bracket_monomial(G, lam, b, D);
						for (int r = 0; r < lam.num_blocks(); ++r) {
							std::vector<int> vars;
							for (int i = lam.nu(r); i < lam.nu(r + 1); ++i)
								vars.push_back(i);
							Series e = universal_schur_seq(G, std::vector<int>(vars.size(), 0), vars,
														   b.shifted(lam.block_value(r) + n - lam.nu(r + 1)), D);
							rhs = mul_sharp(rhs, e).truncated(D);
						}
						rec.equal("between(lambda)([x|b]^(lambda+rho)) = (x|b)^[lambda] prod s_empty(b shifted)", p,
								  lhs, rhs);
					});
				}
	}
}

void sequences(int len, int maxv, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
	if (static_cast<int>(cur.size()) == len) {
		out.push_back(cur);
		return;
	}
	for (int v = 0; v <= maxv; ++v) {
		cur.push_back(v);
		sequences(len, maxv, cur, out);
		cur.pop_back();
	}
}

void feldman(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(2), D = opt.D.value_or(4);
	int nmax = opt.n_max.value_or(4);
	int entry_max = opt.max_weight.value_or(2);
	for (int n = std::min(3, nmax); n <= nmax; ++n) {
		auto ctx = make_context(n, 0, A, D);
		FormalGroupLaw F(ctx, FglMode::universal);
		for (int q = 1; q <= std::min(2, n - 1); ++q) {
			int P = q * (n - q);
			std::vector<std::vector<int>> Is, Js;
			std::vector<int> cur;
			sequences(q, entry_max, cur, Is);
			sequences(n - q, entry_max, cur, Js);
			std::vector<int> lo = range(q), hi, all = range(n);
			for (int i = q; i < n; ++i)
				hi.push_back(i);
			for (const auto& I : Is)
				for (const auto& J : Js) {
					Labels p{{"I", seq_str(I)}, {"J", seq_str(J)}, {"n", std::to_string(n)},
							 {"q", std::to_string(q)}, {"A", std::to_string(A)}, {"D", std::to_string(D)}};
					rec.guard("Fel'dman identity", p, [&] {
						std::vector<int> shifted = I, IJ = I;
						for (int& x : shifted)
							x += n - q;
						IJ.insert(IJ.end(), J.begin(), J.end());
						Series a = universal_schur_seq(F, shifted, lo, Params(), D + P);
						Series b = universal_schur_seq(F, J, hi, Params(), D + P);
						Series lhs = grassmannian_pushforward(F, mul_sharp(a, b).truncated(D + P), q, n);
						int deg = 0;
						for (int x : IJ)
							deg += x;
						rec.certify("Grassmannian pushforward", p, lhs, all, deg);
						rec.equal("pushforward(s_{I+(n-q)^q} s_J) = s_{IJ}", p, lhs,
								  universal_schur_seq(F, IJ, all, Params(), D));
					});
				}
		}
	}
}

void residue(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(3), D = opt.D.value_or(5);
	int nmax = opt.n_max.value_or(3);
	int kmax = 4;
	for (int n = 1; n <= nmax; ++n) {
		Labels p{{"n", std::to_string(n)}, {"A", std::to_string(A)}, {"D", std::to_string(D)}};
		rec.guard("Segre series", p, [&] {
			auto ctx = make_context(n, 0, A, D, false, false, {"t"});
			FormalGroupLaw F(ctx, FglMode::universal);
			int s = ctx->aux(0);
			LaurentWindow win = segre_series(F, n, 1 - n, kmax);
			std::vector<int> blocks{1};
			if (n > 1)
				blocks.push_back(n - 1);
			for (int k = 1 - n; k <= kmax; ++k) {
				Labels pk = p;
				pk.emplace_back("k", std::to_string(k));
				Series row = pushforward_partial_flag(F, Series::generator_to(ctx, ctx->x(0), D + n - 1, k + n - 1),
													  blocks);
				rec.certify("one-row S_k", pk, row, range(n), k);
				Series res = projective_residue(F, Series::generator_to(ctx, s, n - 1 + D, k + n - 1), s, n);
				rec.equal("residue(t^(k+n-1)) = one-row S_k", pk, res, row);
				rec.equal("segre coefficient u^k = one-row S_k", pk, win.at(k), row);
			}
		});
		rec.guard("additive Segre series", p, [&] {
			auto ctx = make_context(n, 0, 0, D, false, false, {"t"});
			FormalGroupLaw F(ctx, FglMode::additive);
			int s = ctx->aux(0);
			LaurentWindow win = segre_series(F, n, -n - 2, D);
			std::vector<int> xs;
			for (int i = 0; i < n; ++i)
				xs.push_back(ctx->x(i));
			for (int k = -n - 2; k <= D; ++k) {
				Labels pk = p;
				pk[1].second = "0";
				pk.emplace_back("k", std::to_string(k));
				Series h = k < 0 ? Series(ctx, D) : complete_symmetric(ctx, xs, k).truncated(D);
				rec.equal("additive segre coefficient u^k = h_k", pk, win.at(k), h);
				if (k >= 1 - n)
					rec.equal("additive residue(t^(k+n-1)) = h_k", pk,
							  projective_residue(F, Series::generator_to(ctx, s, n - 1 + D, k + n - 1), s, n), h);
			}
		});
	}
}

void thom_porteous(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(2);
	int emin = opt.e.value_or(0), emax = opt.e.value_or(4);
	int fmin = opt.f.value_or(1), fmax = opt.f.value_or(4);
	for (int e = emin; e <= emax; ++e)
		for (int f = fmin; f <= fmax; ++f)
			for (int r = 0; r <= std::min(e, f); ++r) {
				int deg = (e - r) * (f - r);
				int D = opt.D.value_or(std::max(4, deg + 1));
				Labels p{{"e", std::to_string(e)}, {"f", std::to_string(f)}, {"r", std::to_string(r)},
						 {"A", std::to_string(A)}, {"D", std::to_string(D)}};
				rec.guard("Thom-Porteous class", p, [&] {
					auto ctx = make_context(f, std::max(e, 1), A, D);
					FormalGroupLaw F(ctx, FglMode::universal);
					ClassReport c = thom_porteous_class(F, e, f, r, false);
					rec.certify("Thom-Porteous class", p, c.value, range(f), deg);
					rec.equal("pushforward(prod [x_i|bbar]^e) = S_rectangle(x|bbar)", p, c.value, c.expected);
					FormalGroupLaw add(ctx, FglMode::additive);
					rec.equal("class with m := 0 = det c_{f-r-i+j}(F-E)", p, specialize(c.value, add.mode_assignment()),
							  thom_porteous_determinant(ctx, e, f, r, D));
				});
			}
}

void kempf_laksov(Recorder& rec, const SuiteOptions& opt) {
	int A = opt.A.value_or(2);
	int nmax = opt.n_max.value_or(4), wmax = opt.max_weight.value_or(4);
	for (int n = 1; n <= nmax; ++n)
		for (int d = 1; d <= std::min(3, n); ++d)
			for (int w = 0; w <= wmax; ++w)
				for (const auto& lam : partitions_of(w, d)) {
					int D = opt.D.value_or(w + 1);
					Labels p = lam_labels(lam, A, D);
					p[1] = {"d", std::to_string(d)};
					p.insert(p.begin() + 2, {"n", std::to_string(n)});
					rec.guard("Kempf-Laksov class", p, [&] {
						auto ctx = make_context(d, n, A, D);
						FormalGroupLaw F(ctx, FglMode::universal);
						KempfLaksovReport k = kempf_laksov_class(F, lam, d, n, false);
						rec.certify("Kempf-Laksov class", p, k.kempf_laksov.value, range(d), w);
						rec.certify("Damon class", p, k.damon.value, range(d), w);
						rec.equal("pushforward form = closed coset form", p, k.kempf_laksov.value,
								  k.kempf_laksov.expected);
						rec.equal("Damon class = S_lambda(y_d|b_n)", p, k.damon.value, k.damon.expected);
						FormalGroupLaw add(ctx, FglMode::additive);
						rec.equal("Damon class with m := 0 = factorial Schur", p,
								  specialize(k.damon.value, add.mode_assignment()),
								  factorial_schur(ctx, lam, b_values(ctx, n)).truncated(D));
					});
				}

	// Darondeau-Pragacz against the direct symmetrizer over S_n / ((S_1)^r x S_{n-r}).
	int Ddp = opt.D.value_or(4);
	int samples = std::max(1, opt.samples.value_or(20) / 4);
	std::mt19937 rng(opt.seed);
	for (int n = 1; n <= std::min(3, nmax); ++n)
		for (int r = 1; r <= std::min(2, n); ++r) {
			auto ctx = make_context(n, 1, A, Ddp, false, false, {"t1", "t2"});
			FormalGroupLaw F(ctx, FglMode::universal);
			std::vector<int> ts, blocks(r, 1);
			for (int i = 0; i < r; ++i)
				ts.push_back(ctx->aux(i));
			if (n > r)
				blocks.push_back(n - r);
			int pairs = static_cast<int>(partial_flag_spec(blocks, n).pairs.size());
			auto check = [&](const std::vector<Term>& tf, const Labels& p) {
				rec.guard("Darondeau-Pragacz", p, [&] {
					std::vector<Term> tx;
					for (const auto& t : tf) {
						Monomial m = t.mono;
						for (int i = 0; i < r; ++i) {
							m.set_exp(ctx->x(i), t.mono.exp(ts[i]), true);
							m.set_exp(ts[i], 0, true);
						}
						tx.push_back({m, t.coef});
					}
					Series f = Series::from_terms(ctx, tf, kExactBound);
					Series direct = pushforward_partial_flag(F, Series::from_terms(ctx, tx, Ddp + pairs), blocks);
					rec.equal("coefficient extraction = (tau^r)_*", p, darondeau_pragacz_pushforward(F, f, ts, n),
							  direct);
				});
			};
			for (int w = 0; w <= std::min(3, wmax); ++w)
				for (const auto& lam : partitions_of(w, r)) {
					Monomial m;
					for (int i = 0; i < r; ++i)
						m.set_exp(ts[i], lam[i] + (r - 1 - i) + (n - r), true);
					check({{m, 1}}, {{"lambda", lam.str()},
									 {"r", std::to_string(r)},
									 {"n", std::to_string(n)},
									 {"A", std::to_string(A)},
									 {"D", std::to_string(Ddp)}});
				}
			for (int it = 0; it < samples; ++it) {
				std::vector<Term> tf;
				for (int j = 0; j < 3; ++j) {
					Monomial m;
					for (int i = 0; i < r; ++i)
						m.set_exp(ts[i], std::uniform_int_distribution<>(0, n + 1)(rng), true);
					if (rng() % 2)
						m.set_exp(ctx->b(0), 1, true);
					if (rng() % 2)
						m.set_exp(ctx->m(1 + rng() % A), 1, false);
					tf.push_back({m, ratio(std::uniform_int_distribution<>(-5, 5)(rng), 1 + rng() % 3)});
				}
				check(tf, {{"sample", std::to_string(it)},
						   {"r", std::to_string(r)},
						   {"n", std::to_string(n)},
						   {"A", std::to_string(A)},
						   {"D", std::to_string(Ddp)}});
			}
		}
}

Series random_series(std::mt19937& rng, const ContextPtr& ctx) {
	int bound = ctx->deg_bound();
	std::vector<Term> terms;
	int count = std::uniform_int_distribution<>(0, 12)(rng);
	for (int k = 0; k < count; ++k) {
		Monomial m;
		int budget = std::uniform_int_distribution<>(0, bound)(rng);
		for (int g = 0; g < ctx->num_generators(); ++g) {
			bool tr = ctx->truncated(g);
			int e = std::uniform_int_distribution<>(0, 2)(rng);
			if (rng() % 3)
				continue;
			if (tr) {
				e = std::min(e, budget);
				budget -= e;
			}
			m.set_exp(g, e, tr);
		}
		mpz_class num = std::uniform_int_distribution<long>(-1000000, 1000000)(rng);
		if (rng() % 4 == 0)
			num *= mpz_class("123456789012345678901234567890");
		mpz_class den = 1 + rng() % 97;
		terms.push_back({m, ratio(num, den)});
	}
	return Series::from_terms(ctx, std::move(terms), bound);
}

void serialization(Recorder& rec, const SuiteOptions& opt) {
	int samples = opt.samples.value_or(100);
	std::mt19937 rng(opt.seed);
	for (int it = 0; it < samples; ++it) {
		Labels p{{"sample", std::to_string(it)}};
		rec.guard("serialization", p, [&] {
			std::vector<std::string> aux;
			if (rng() % 3 == 0)
				aux.push_back("s");
			auto ctx = make_context(1 + rng() % 4, rng() % 4, rng() % 4, rng() % 7, rng() % 2, rng() % 2, aux);
			Series s = random_series(rng, ctx);
			Json j = series_to_json(s);
			Series back = series_from_json(Json::parse(j.dump()));
			rec.truth("from_json(to_json(f)) = f", p, back == s && back.bound() == s.bound(), "round trip differs");
			rec.truth("to_json is canonical", p, series_to_json(back) == j, "re-serialization differs");
			rec.truth("parse into the same context", p, series_from_json(j, ctx) == s, "round trip differs");
		});
	}
	Labels p{{"window", "segre"}};
	rec.guard("window serialization", p, [&] {
		auto ctx = make_context(2, 0, 2, 3);
		FormalGroupLaw F(ctx, FglMode::universal);
		LaurentWindow w = segre_series(F, 2, -2, 3);
		rec.truth("window from_json(to_json(w)) = w", p, window_from_json(Json::parse(window_to_json(w).dump())) == w);
	});
}

using SuiteFn = void (*)(Recorder&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
	static const std::vector<std::pair<std::string, SuiteFn>> r{
		{"fgl-axioms", fgl_axioms},
		{"empty-partition", empty_partition},
		{"hl-collapse", hl_collapse},
		{"additive-square", additive_square},
		{"multiplicative", multiplicative},
		{"functoriality", functoriality},
		{"feldman", feldman},
		{"residue", residue},
		{"thom-porteous", thom_porteous},
		{"kempf-laksov", kempf_laksov},
		{"serialization", serialization},
	};
	return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto& [name, fn] : registry())
			v.push_back(name);
		return v;
	}();
	return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
	for (const auto& [n, fn] : registry())
		if (n == name) {
			VerificationReport r;
			r.suite = name;
			Recorder rec(r);
			auto t0 = std::chrono::steady_clock::now();
			fn(rec, opt);
			r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
			return r;
		}
	std::string known;
	for (const auto& n : suite_names())
		known += " " + n;
	throw InvalidInput("unknown suite '" + name + "'; known suites:" + known);
}

Json report_to_json(const VerificationReport& r) {
	Json j;
	j["suite"] = r.suite;
	j["passed"] = r.passed();
	j["total"] = r.entries.size();
	j["failures"] = r.failures();
	j["seconds"] = r.seconds;
	Json entries = Json::array();
	for (const auto& e : r.entries) {
		Json je;
		je["identity"] = e.identity;
		Json params = Json::object();
		for (const auto& [k, v] : e.params)
			params[k] = v;
		je["params"] = params;
		je["status"] = e.pass ? "pass" : "fail";
		if (e.certificate)
			je["certificate"] = true;
		if (e.witness)
			je["witness"] = series_to_json(*e.witness);
		if (!e.message.empty())
			je["message"] = e.message;
		entries.push_back(je);
	}
	j["entries"] = entries;
	return j;
}

std::string report_to_text(const VerificationReport& r, bool all) {
	std::ostringstream out;
	out << "suite " << r.suite << ": " << r.entries.size() - r.failures() << "/" << r.entries.size() << " passed in "
		<< r.seconds << " s\n";
	for (const auto& e : r.entries) {
		if (e.pass && !all)
			continue;
		out << (e.pass ? "  PASS " : "  FAIL ") << e.label() << "\n";
		if (!e.message.empty())
			out << "    " << e.message << "\n";
		if (e.witness)
			out << "    witness: " << series_to_text(*e.witness) << "\n";
	}
	return out.str();
}

}  // namespace cobschur
