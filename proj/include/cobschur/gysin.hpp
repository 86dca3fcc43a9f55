#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobschur/families.hpp"

namespace cobschur {

// Coefficients c_k, k_min <= k <= k_max, of a Laurent series in `variable`.
struct LaurentWindow {
	std::string variable = "u";
	int k_min = 0;
	int k_max = 0;
	std::map<int, Series> coeffs;

	const Series& at(int k) const;
	bool operator==(const LaurentWindow& o) const;
};

// Gysin maps as symmetrizers. Each output is trusted to f.bound() minus the
// number of denominator pairs, so inputs must carry that margin.
Series pushforward_full_flag(const FormalGroupLaw& fgl, const Series& f, int n);
// Requires f invariant under the stabilizer of lambda (checked).
Series pushforward_partial_flag(const FormalGroupLaw& fgl, const Series& f, const Partition& lambda);
Series pushforward_partial_flag(const FormalGroupLaw& fgl, const Series& f, const std::vector<int>& blocks);
Series pushforward_between_flags(const FormalGroupLaw& fgl, const Series& f, const Partition& lambda);
// S_n / (S_q x S_{n-q}) with pairs i <= q < j; f must be S_q x S_{n-q}-invariant.
Series grassmannian_pushforward(const FormalGroupLaw& fgl, const Series& f, int q, int n);

// Residue at t = 0 of f(t) / (omega(t) prod_i (t +_L xbar_i)), expanded with
// x_i / t small; `s` is the truncated generator standing for t. The result
// is trusted to `bound` (-1: the context degree bound) and needs
// f.bound() >= n - 1 + bound.
Series projective_residue(const FormalGroupLaw& fgl, const Series& f, int s, int n, int bound = -1);
// sum_k S_k u^k = u^{-n} / (omega(1/u) prod_i (1/u +_L xbar_i)) on [k_min, k_max].
LaurentWindow segre_series(const FormalGroupLaw& fgl, int n, int k_min, int k_max, int bound = -1);

// Two evaluations of one class and their difference.
struct ClassReport {
	std::string label;
	Series value;
	Series expected;
	Series difference;
	bool agree = false;
};

// Grassmannian pushforward of prod_{i<=f-r} [x_i | bbar_e]^e against the
// rectangular new universal Schur function; needs n_x >= f, n_b >= e.
// Throws AssertionFailure on disagreement when `strict`.
ClassReport thom_porteous_class(const FormalGroupLaw& fgl, int e, int f, int r, bool strict = true);

struct KempfLaksovReport {
	ClassReport kempf_laksov;
	ClassReport damon;
};

// On y_1..y_d = x_1..x_d with b_1..b_n (zero beyond n); needs n_b >= n.
KempfLaksovReport kempf_laksov_class(const FormalGroupLaw& fgl, const Partition& lambda, int d, int n,
									 bool strict = true);

// Coefficient of t_1^{n-1}...t_r^{n-1} in f(t) prod_{i<j} (t_j +_L tbar_i)
// prod_i S_{1/t_i}; `ts` are the truncated generators standing for t_i.
Series darondeau_pragacz_pushforward(const FormalGroupLaw& fgl, const Series& f, const std::vector<int>& ts, int n,
									 int bound = -1);

}  // namespace cobschur
