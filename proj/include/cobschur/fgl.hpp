#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "cobschur/series.hpp"

namespace cobschur {

enum class FglMode { universal, additive, multiplicative, custom };

FglMode parse_mode(const std::string& s);
std::string mode_name(FglMode m);

// A formal group law in logarithm form: l(x) = x + sum_i c_i x^{i+1}, with
// F(u,v) = l^{-1}(l(u) + l(v)). Universal mode takes c_i = m_i (i <= A), the
// specialized modes take concrete values.
class FormalGroupLaw {
public:
	static constexpr int kMaxOrder = 64;

	// `custom_log` gives c_i for custom mode (unlisted indices are zero).
	FormalGroupLaw(ContextPtr ctx, FglMode mode, std::map<int, Rational> custom_log = {});

	const ContextPtr& context() const { return ctx_; }
	FglMode mode() const { return mode_; }

	Series formal_sum(const Series& a, const Series& b) const;
	Series formal_inverse(const Series& a) const;
	Series logarithm(const Series& a) const;
	Series exponential(const Series& a) const;
	Series n_series(long n, const Series& a) const;
	Series t_series(const Series& a) const;

	// Coefficient of u^i v^j in F(u,v).
	Series a_coefficient(int i, int j) const;
	// 1 + sum_i a_{i,1} s^i in the truncated generator s.
	Series invariant_differential_denominator(int s) const;
	Series invariant_differential_denominator(int s, int bound) const;

	// Coefficient-ring tables, valid up to `order`.
	std::vector<Series> log_coeffs(int order) const;
	std::vector<Series> exp_coeffs(int order) const;
	std::vector<Series> inverse_coeffs(int order) const;
	// omega[i] = a_{i,1}, omega[0] = 1.
	std::vector<Series> omega_coeffs(int order) const;
	std::vector<std::vector<Series>> sum_coeffs(int order) const;

	// ((x_i +_L xbar_j) / (x_i - x_j))^{-1}, trusted to degree `bound`.
	Series pair_unit_inverse(int i, int j, int bound) const;

	// The m-assignment realizing this mode inside a universal context.
	std::map<int, Series> mode_assignment() const;

private:
	struct Tables {
		int order = 0;
		std::vector<Series> log;
		std::vector<Series> exp;
		std::vector<std::vector<Series>> log_pow;  // [p][i] = [u^i] l(u)^p
		std::vector<std::vector<Series>> sum;      // [i][j] = a_{i,j}
		std::vector<Series> inv;
		std::vector<Series> tser;                  // [t](x), when t is declared
	};

	std::shared_ptr<const Tables> tables(int order) const;
	std::shared_ptr<const Tables> build(int order) const;
	Series log_coefficient(int i) const;  // coefficient of x^{i+1}
	Series compose(const std::vector<Series>& coeffs, const Series& a, const char* what) const;
	Series coef(const Rational& c) const;

	ContextPtr ctx_;
	FglMode mode_;
	std::map<int, Rational> custom_;
	mutable std::mutex mu_;
	mutable std::shared_ptr<const Tables> tables_;
	mutable std::map<std::tuple<int, int, int>, Series> units_;
};

}  // namespace cobschur
