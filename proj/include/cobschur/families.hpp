#pragma once

#include <functional>
#include <vector>

#include "cobschur/partition.hpp"
#include "cobschur/symmetrize.hpp"

namespace cobschur {

// The factorial parameter sequence b_1, b_2, ...; entries past the end are 0.
class Params {
public:
	Params() = default;
	explicit Params(std::vector<Series> b) : b_(std::move(b)) {}

	// b_k = the k-th b-generator, requiring n_b >= needed.
	static Params generators(const ContextPtr& ctx, int needed);
	// The first `count` b-generators, zero afterwards.
	static Params first_generators(const ContextPtr& ctx, int count);

	// 1-based; zero when k is past the stored entries.
	const Series* at(int k) const;
	// b[+m] = (b_{m+1}, b_{m+2}, ...).
	Params shifted(int m) const;
	Params mapped(const std::function<Series(const Series&)>& f) const;
	bool zero() const;
	std::size_t size() const { return b_.size(); }

private:
	std::vector<Series> b_;
};

// Products of factors of order one, each computed to the degree the product
// actually needs (the trusted range of a product of order-one factors is the
// smallest factor bound plus the count of the other factors).
class FactorProduct {
public:
	explicit FactorProduct(ContextPtr ctx) : ctx_(std::move(ctx)) {}
	// Multiplies by g^e exactly, g a truncated generator.
	void monomial(int g, int e);
	// Multiplies by a series with zero constant term, produced on demand.
	void factor(std::function<Series(int bound)> make);
	Series build(int bound) const;

private:
	ContextPtr ctx_;
	Monomial mono_;
	int mono_degree_ = 0;
	std::vector<std::function<Series(int)>> factors_;
};

// [x_i | b[+shift]]^k = prod_{s=1..k} (x_i +_L b_{shift+s}).
void add_factorial_power(FactorProduct& p, const FormalGroupLaw& fgl, int i, int k, const Params& b, int shift = 0);
Series factorial_power(const FormalGroupLaw& fgl, int i, int k, const Params& b, int shift, int bound);
// [[x_i | b]]^k = (x_i +_L x_i) [x_i | b]^{k-1}.
Series double_factorial_power(const FormalGroupLaw& fgl, int i, int k, const Params& b, int bound);
// (x|b)^{[lambda]} in x_1..x_n, n = lambda.n().
Series bracket_monomial(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound);

// Output bound -1 means the context degree bound. Variable lists are 0-based
// x-indices; the sequence is assigned to them in order.
Series universal_schur_seq(const FormalGroupLaw& fgl, const std::vector<int>& seq, const std::vector<int>& vars,
						   const Params& b, int bound = -1);
Series universal_schur_s(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound = -1);
Series universal_schur_p(const FormalGroupLaw& fgl, const Partition& nu, const Params& b, int bound = -1);
Series universal_schur_q(const FormalGroupLaw& fgl, const Partition& nu, const Params& b, int bound = -1);
// Needs the t generator.
Series universal_hall_littlewood(const FormalGroupLaw& fgl, const Partition& lambda, int bound = -1);
Series new_universal_schur(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound = -1);
Series universal_schur_kl(const FormalGroupLaw& fgl, const Partition& lambda, const Params& b, int bound = -1);

// Specs shared with the Gysin operators.
SymmetrizerSpec full_flag_spec(const std::vector<int>& vars, int n_x);
// Pairs (i,j), i<j, in different blocks; representatives of S_n / prod S_{m_r}.
SymmetrizerSpec partial_flag_spec(const std::vector<int>& blocks, int n_x);
// Pairs inside each block; the whole block group.
SymmetrizerSpec between_flags_spec(const std::vector<int>& blocks, int n_x);

// The b-budget lambda_1 + n - 1 a factorial family needs.
int required_b(const Partition& lambda);

}  // namespace cobschur
