#include "cobschur/ring.hpp"

#include <string>

namespace cobschur {

RingContext::RingContext(Options o) : opt_(std::move(o)) {
	if (opt_.n_x < 0 || opt_.n_b < 0 || opt_.m_bound < 0 || opt_.deg_bound < 0)
		throw InvalidInput("ring context: counts and bounds must be non-negative");
	if (opt_.deg_bound > kExactBound)
		throw InvalidInput("ring context: degree bound above " + std::to_string(kExactBound));
	for (int i = 0; i < opt_.n_x; ++i) {
		names_.push_back("x" + std::to_string(i + 1));
		kinds_.push_back(GenKind::x);
	}
	for (int i = 0; i < opt_.n_b; ++i) {
		names_.push_back("b" + std::to_string(i + 1));
		kinds_.push_back(GenKind::b);
	}
	for (const auto& a : opt_.aux) {
		if (a.empty())
			throw InvalidInput("ring context: empty auxiliary variable name");
		names_.push_back(a);
		kinds_.push_back(GenKind::aux);
	}
	if (opt_.with_t) {
		names_.push_back("t");
		kinds_.push_back(GenKind::t);
	}
	if (opt_.with_beta) {
		names_.push_back("beta");
		kinds_.push_back(GenKind::beta);
	}
	for (int i = 1; i <= opt_.m_bound; ++i) {
		names_.push_back("m" + std::to_string(i));
		kinds_.push_back(GenKind::m);
	}
	if (num_generators() > kMaxGenerators)
		throw InvalidInput("ring context: more than " + std::to_string(kMaxGenerators) + " generators");
	for (std::size_t i = 0; i < names_.size(); ++i)
		for (std::size_t j = 0; j < i; ++j)
			if (names_[i] == names_[j])
				throw InvalidInput("ring context: duplicate generator name " + names_[i]);
}

std::shared_ptr<const RingContext> RingContext::make(Options o) {
	return std::make_shared<const RingContext>(std::move(o));
}

int RingContext::aux(std::string_view name) const {
	for (int k = 0; k < n_aux(); ++k)
		if (opt_.aux[k] == name)
			return aux(k);
	return -1;
}

int RingContext::t() const {
	return opt_.with_t ? num_truncated() : -1;
}

int RingContext::beta() const {
	return opt_.with_beta ? num_truncated() + (opt_.with_t ? 1 : 0) : -1;
}

int RingContext::m(int i) const {
	if (i < 1 || i > opt_.m_bound)
		return -1;
	return num_truncated() + (opt_.with_t ? 1 : 0) + (opt_.with_beta ? 1 : 0) + (i - 1);
}

int RingContext::degree(int g) const {
	switch (kinds_[g]) {
	case GenKind::x:
	case GenKind::b:
	case GenKind::aux:
		return 1;
	case GenKind::t:
		return 0;
	case GenKind::beta:
		return -1;
	case GenKind::m:
		return -(g - m(1) + 1);
	}
	return 0;
}

int RingContext::find(std::string_view name) const {
	for (int g = 0; g < num_generators(); ++g)
		if (names_[g] == name)
			return g;
	return -1;
}

bool RingContext::operator==(const RingContext& o) const {
	return opt_.n_x == o.opt_.n_x && opt_.n_b == o.opt_.n_b && opt_.m_bound == o.opt_.m_bound &&
		   opt_.deg_bound == o.opt_.deg_bound && opt_.with_t == o.opt_.with_t &&
		   opt_.with_beta == o.opt_.with_beta && opt_.aux == o.opt_.aux;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
	return a == b || (a && b && *a == *b);
}

void Monomial::set_exp(int g, int e, bool truncated) {
	if (e < 0 || e > 127)
		throw InvalidInput("monomial exponent out of range");
	if (truncated) {
		int d = degree() - exp(g) + e;
		if (d > 127)
			throw InvalidInput("monomial degree out of range");
		data_[0] = static_cast<std::uint8_t>(d);
	}
	data_[g + 1] = static_cast<std::uint8_t>(e);
}

bool Monomial::is_one() const {
	for (auto v : data_)
		if (v)
			return false;
	return true;
}

Monomial Monomial::permuted_prefix(const int* w, int n) const {
	Monomial r = *this;
	for (int i = 0; i < n; ++i)
		r.data_[w[i] + 1] = data_[i + 1];
	return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
	std::uint64_t a[kWords], b[kWords];
	std::memcpy(a, data_.data(), kBytes);
	std::memcpy(b, o.data_.data(), kBytes);
	std::uint64_t high = 0;
	for (int w = 0; w < kWords; ++w) {
		// Both operands below 128 per byte, so the bytewise sum cannot carry.
		high |= a[w] | b[w];
		a[w] += b[w];
		high |= a[w];
	}
	if (high & 0x8080808080808080ULL)
		throw InvalidInput("monomial exponent overflow");
	Monomial r;
	std::memcpy(r.data_.data(), a, kBytes);
	return r;
}

std::size_t Monomial::hash() const {
	std::uint64_t w[kWords];
	std::memcpy(w, data_.data(), kBytes);
	std::uint64_t h = 0x9e3779b97f4a7c15ULL;
	for (int i = 0; i < kWords; ++i) {
		h ^= w[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		h *= 0xff51afd7ed558ccdULL;
	}
	return static_cast<std::size_t>(h ^ (h >> 33));
}

bool Monomial::canonical_less(const Monomial& o) const {
	if (data_[0] != o.data_[0])
		return data_[0] < o.data_[0];
	return std::memcmp(o.data_.data() + 1, data_.data() + 1, kBytes - 1) < 0;
}

}  // namespace cobschur
